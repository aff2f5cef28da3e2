#pragma once

#include "xtrop/matrix.hpp"

#include <optional>

namespace xtrop {

/// Regular iff |A| is a real (neither a nu-value nor -inf).
bool is_regular(const Matrix& a);

/// Adj(A) = (|A_ij|)^t. Requires n >= 2.
Matrix adjoint(const Matrix& a);

enum class InverseMode { Permissive, Strict };

/**
 * A^nabla = Adj(A) (/) |A|, with the 1x1 case [a] -> [-a].
 *
 * Permissive mode also returns the formula's value for nu-singular input, so
 * that singular examples can be inspected; Strict mode throws Singular.
 * |A| = -inf always throws SingularNegInf.
 */
Matrix pseudo_inverse(const Matrix& a, InverseMode mode = InverseMode::Permissive);

enum class PseudoUnitFailure { BadDiagonal, RealOffDiagonal, Singular };

std::string_view to_string(PseudoUnitFailure f) noexcept;

struct PseudoUnitVerdict {
    bool is_pseudo_unit = false;
    bool is_idempotent = false;
    std::optional<PseudoUnitFailure> failure_reason;
};

/// Member of U_n(T): zero diagonal, off-diagonal in R^nu u {-inf}, regular.
PseudoUnitVerdict is_pseudo_unit(const Matrix& m);

bool is_idempotent(const Matrix& m);

struct InverseReport {
    Matrix inverse;
    Matrix right_unit;  // A A^nabla
    Matrix left_unit;   // A^nabla A
    bool right_ok = false;
    bool left_ok = false;
};

InverseReport invert(const Matrix& a, InverseMode mode = InverseMode::Permissive);

/// A B and B A both in U_n(T).
bool check_inverse_pair(const Matrix& a, const Matrix& b);

}  // namespace xtrop
