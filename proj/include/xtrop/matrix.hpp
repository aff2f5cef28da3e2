#pragma once

#include "xtrop/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace xtrop {

/// Dense row-major matrix over T. Rectangular shapes are allowed for the
/// semiring operations; determinant-based routines require square input.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, Scalar fill = Scalar::neg_inf());
    Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    /// Builds from literal rows, e.g. {{"1", "-1"}, {"2", "2v"}}.
    static Matrix from_literals(std::initializer_list<std::initializer_list<const char*>> rows);
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<const Scalar> entries() const noexcept { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> data_;
};

std::string format_matrix(const Matrix& a);

/// Unit matrix I: 0 on the diagonal, -inf elsewhere.
Matrix identity(std::size_t n);
/// Zero matrix Z = (-inf) I.
Matrix zero_matrix(std::size_t rows, std::size_t cols);

Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix scalar_mul(const Scalar& c, const Matrix& a);
Matrix transpose(const Matrix& a);
/// Entrywise pi-projection onto max-plus.
Matrix pi_project(const Matrix& a);

inline Matrix operator+(const Matrix& a, const Matrix& b) { return mat_add(a, b); }
inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

/// Deletes row `i` and column `j` (0-based).
Matrix minor(const Matrix& a, std::size_t i, std::size_t j);

/// Every entry in R (no nu-values, no -inf).
bool all_real(const Matrix& a);

/// Determinant together with the witness data behind its tag.
struct DetResult {
    /// Exact count for 0 and 1; 2 stands for "two or more".
    static constexpr unsigned kManyOptimal = 2;

    Scalar value = Scalar::neg_inf();
    /// Number of permutations attaining the maximal nu-value, capped at 2.
    unsigned optimal_count = 0;
    /// Some maximizing permutation passes through a nu-valued entry.
    bool uses_nu_entry = false;

    friend bool operator==(const DetResult&, const DetResult&) = default;
};

struct DetOptions {
    /// Largest n accepted by det_naive (n! permutation products).
    std::size_t naive_max_n = 10;
};

/// Default cap for det_naive, overridable through XTROP_NAIVE_MAX_N.
DetOptions det_options_from_env();

/// Enumerates all permutations. Ground-truth oracle for det_fast.
DetResult det_naive(const Matrix& a, const DetOptions& options = {});

/// Maximum-weight assignment on the nu-values plus an analysis of the tight
/// subgraph of the optimal dual; polynomial in n, same contract as det_naive.
DetResult det_fast(const Matrix& a);

/// Canonical determinant used by the higher-level routines (det_fast).
inline Scalar det(const Matrix& a) { return det_fast(a).value; }

}  // namespace xtrop
