#include "xtrop/matrix.hpp"

#include "xtrop/assignment.hpp"
#include "xtrop/error.hpp"

#include <cstdlib>
#include <optional>
#include <sstream>

namespace xtrop {

namespace {

std::string shape(const Matrix& a) {
    return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_square(const Matrix& a, const char* what) {
    if (!a.is_square()) throw Error(ErrorKind::NotSquare, std::string(what) + " needs a square matrix, got " + shape(a));
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, Scalar fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {
    if (rows == 0 || cols == 0) throw Error(ErrorKind::InvalidArgument, "matrix dimensions must be positive");
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw Error(ErrorKind::InvalidArgument, "matrix dimensions must be positive");
    if (data_.size() != rows * cols) throw Error(ErrorKind::ShapeMismatch, "entry count does not match shape");
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty() || rows.front().empty()) throw Error(ErrorKind::InvalidArgument, "matrix must be non-empty");
    const std::size_t cols = rows.front().size();
    std::vector<Scalar> data;
    data.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw Error(ErrorKind::ShapeMismatch, "ragged matrix rows");
        data.insert(data.end(), r.begin(), r.end());
    }
    return Matrix(rows.size(), cols, std::move(data));
}

Matrix Matrix::from_literals(std::initializer_list<std::initializer_list<const char*>> rows) {
    std::vector<std::vector<Scalar>> parsed;
    for (const auto& r : rows) {
        auto& out = parsed.emplace_back();
        for (const char* lit : r) out.push_back(parse_scalar(lit));
    }
    return from_rows(parsed);
}

std::string format_matrix(const Matrix& a) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < a.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? ", " : "") << a(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

Matrix identity(std::size_t n) {
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = Scalar::one();
    return out;
}

Matrix zero_matrix(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

Matrix mat_add(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::ShapeMismatch, "cannot add " + shape(a) + " and " + shape(b));
    }
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = add(a(i, j), b(i, j));
    }
    return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorKind::ShapeMismatch, "cannot multiply " + shape(a) + " by " + shape(b));
    }
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Scalar acc = Scalar::neg_inf();
            for (std::size_t k = 0; k < a.cols(); ++k) acc = add(acc, mul(a(i, k), b(k, j)));
            out(i, j) = std::move(acc);
        }
    }
    return out;
}

Matrix scalar_mul(const Scalar& c, const Matrix& a) {
    Matrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = mul(c, a(i, j));
    }
    return out;
}

Matrix transpose(const Matrix& a) {
    Matrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    }
    return out;
}

Matrix pi_project(const Matrix& a) {
    Matrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = pi_project(a(i, j));
    }
    return out;
}

Matrix minor(const Matrix& a, std::size_t i, std::size_t j) {
    require_square(a, "minor");
    if (a.rows() < 2) throw Error(ErrorKind::TooSmall, "minor of a 1x1 matrix");
    if (i >= a.rows() || j >= a.cols()) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "minor (" + std::to_string(i) + ", " + std::to_string(j) + ") of " + shape(a));
    }
    const std::size_t m = a.rows() - 1;
    Matrix out(m, m);
    for (std::size_t r = 0, rr = 0; r < a.rows(); ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < a.cols(); ++c) {
            if (c == j) continue;
            out(rr, cc++) = a(r, c);
        }
        ++rr;
    }
    return out;
}

bool all_real(const Matrix& a) {
    for (const auto& x : a.entries()) {
        if (!x.is_real()) return false;
    }
    return true;
}

DetOptions det_options_from_env() {
    DetOptions options;
    if (const char* env = std::getenv("XTROP_NAIVE_MAX_N"); env && *env) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) options.naive_max_n = v;
    }
    return options;
}

namespace {

// Depth-first walk over partial permutations, sharing prefix products.
class PermutationWalk {
public:
    explicit PermutationWalk(const Matrix& a) : a_(a), n_(a.rows()), used_(n_, false) {}

    DetResult run() {
        visit(0, Scalar::one());
        DetResult out;
        if (!best_) return out;
        out.optimal_count = count_;
        out.uses_nu_entry = uses_nu_;
        const bool real = count_ == 1 && !uses_nu_;
        out.value = real ? Scalar::real(best_->value()) : Scalar::nu(best_->value());
        return out;
    }

private:
    void visit(std::size_t row, const Scalar& prefix) {
        if (row == n_) {
            record(prefix);
            return;
        }
        for (std::size_t c = 0; c < n_; ++c) {
            if (used_[c]) continue;
            const Scalar& entry = a_(row, c);
            if (entry.is_neg_inf()) continue;  // the whole product is -inf
            used_[c] = true;
            visit(row + 1, mul(prefix, entry));
            used_[c] = false;
        }
    }

    void record(const Scalar& product) {
        if (!best_ || compare_nu_value(product, *best_) == Ordering::Greater) {
            best_ = product;
            count_ = 1;
            uses_nu_ = product.is_nu();
        } else if (compare_nu_value(product, *best_) == Ordering::Equal) {
            if (count_ < DetResult::kManyOptimal) ++count_;
            uses_nu_ = uses_nu_ || product.is_nu();
        }
    }

    const Matrix& a_;
    std::size_t n_;
    std::vector<bool> used_;
    std::optional<Scalar> best_;
    unsigned count_ = 0;
    bool uses_nu_ = false;
};

}  // namespace

DetResult det_naive(const Matrix& a, const DetOptions& options) {
    require_square(a, "det_naive");
    if (a.rows() > options.naive_max_n) {
        throw Error(ErrorKind::NaiveSizeCap, "det_naive is capped at n = " + std::to_string(options.naive_max_n) +
                                                 ", got n = " + std::to_string(a.rows()));
    }
    return PermutationWalk(a).run();
}

DetResult det_fast(const Matrix& a) {
    require_square(a, "det_fast");
    const std::size_t n = a.rows();

    WeightGrid grid{n, std::vector<std::optional<Rational>>(n * n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!a(i, j).is_neg_inf()) grid.weights[i * n + j] = a(i, j).value();
        }
    }

    const auto solved = solve_assignment(grid);
    DetResult out;
    if (!solved) return out;

    out.optimal_count = solved->unique ? 1 : DetResult::kManyOptimal;
    for (std::size_t i = 0; i < n && !out.uses_nu_entry; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (a(i, j).is_nu() && solved->on_some_optimum(i, j)) {
                out.uses_nu_entry = true;
                break;
            }
        }
    }
    const bool real = solved->unique && !out.uses_nu_entry;
    out.value = real ? Scalar::real(solved->total) : Scalar::nu(solved->total);
    return out;
}

}  // namespace xtrop
