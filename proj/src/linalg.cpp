#include "xtrop/linalg.hpp"

#include "xtrop/error.hpp"

namespace xtrop {

namespace {

void require_square(const Matrix& a, const char* what) {
    if (!a.is_square()) {
        throw Error(ErrorKind::NotSquare, std::string(what) + " needs a square matrix, got " +
                                              std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
}

bool in_pseudo_units(const Matrix& m) { return is_pseudo_unit(m).is_pseudo_unit; }

}  // namespace

std::string_view to_string(PseudoUnitFailure f) noexcept {
    switch (f) {
    case PseudoUnitFailure::BadDiagonal: return "BadDiagonal";
    case PseudoUnitFailure::RealOffDiagonal: return "RealOffDiagonal";
    case PseudoUnitFailure::Singular: return "Singular";
    }
    return "?";
}

bool is_regular(const Matrix& a) {
    require_square(a, "is_regular");
    return det(a).is_real();
}

Matrix adjoint(const Matrix& a) {
    require_square(a, "adjoint");
    if (a.rows() < 2) throw Error(ErrorKind::TooSmall, "adjoint needs n >= 2");
    const std::size_t n = a.rows();
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out(j, i) = det(minor(a, i, j));
    }
    return out;
}

Matrix pseudo_inverse(const Matrix& a, InverseMode mode) {
    require_square(a, "pseudo_inverse");
    const Scalar d = det(a);
    if (d.is_neg_inf()) throw Error(ErrorKind::SingularNegInf, "|A| = -inf has no inverse");
    if (mode == InverseMode::Strict && !d.is_real()) {
        throw Error(ErrorKind::Singular, "|A| = " + format_scalar(d) + " is a nu-value");
    }
    if (a.rows() == 1) return Matrix(1, 1, div(Scalar::one(), a(0, 0)));

    Matrix out = adjoint(a);
    for (std::size_t i = 0; i < out.rows(); ++i) {
        for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = div(out(i, j), d);
    }
    return out;
}

PseudoUnitVerdict is_pseudo_unit(const Matrix& m) {
    require_square(m, "is_pseudo_unit");
    PseudoUnitVerdict out;
    out.is_idempotent = is_idempotent(m);

    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n && !out.failure_reason; ++i) {
        if (m(i, i) != Scalar::one()) out.failure_reason = PseudoUnitFailure::BadDiagonal;
    }
    for (std::size_t i = 0; i < n && !out.failure_reason; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && m(i, j).is_real()) {
                out.failure_reason = PseudoUnitFailure::RealOffDiagonal;
                break;
            }
        }
    }
    if (!out.failure_reason && !is_regular(m)) out.failure_reason = PseudoUnitFailure::Singular;
    out.is_pseudo_unit = !out.failure_reason;
    return out;
}

bool is_idempotent(const Matrix& m) {
    require_square(m, "is_idempotent");
    return mat_mul(m, m) == m;
}

InverseReport invert(const Matrix& a, InverseMode mode) {
    Matrix inv = pseudo_inverse(a, mode);
    Matrix right = mat_mul(a, inv);
    Matrix left = mat_mul(inv, a);
    const bool right_ok = in_pseudo_units(right);
    const bool left_ok = in_pseudo_units(left);
    return InverseReport{std::move(inv), std::move(right), std::move(left), right_ok, left_ok};
}

bool check_inverse_pair(const Matrix& a, const Matrix& b) {
    require_square(a, "check_inverse_pair");
    require_square(b, "check_inverse_pair");
    if (a.rows() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "inverse pair must share a shape");
    return in_pseudo_units(mat_mul(a, b)) && in_pseudo_units(mat_mul(b, a));
}

}  // namespace xtrop
