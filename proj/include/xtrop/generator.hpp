#pragma once

#include "xtrop/matrix.hpp"
#include "xtrop/valuation.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace xtrop {

struct GenConfig {
    std::uint64_t seed = 0;
    std::size_t count = 1000;
    std::size_t dim_min = 2;
    std::size_t dim_max = 4;
    Rational value_lo = -3;
    Rational value_hi = 3;
    /// Values are drawn as k/d with 1 <= d <= max_denominator.
    unsigned max_denominator = 2;
    double nu_probability = 0.2;
    double neginf_probability = 0.1;
    /// Square matrices get one row (or column) copied over another.
    bool duplicate_row_mode = false;

    /// Throws InvalidConfig.
    void validate() const;
};

/// splitmix64 finalizer; used to derive per-instance seeds.
std::uint64_t mix_seed(std::uint64_t x);

/**
 * Deterministic instance generator. All draws go through mt19937_64 (whose
 * output sequence is fixed by the standard) and rejection sampling, so a seed
 * reproduces the same instances on every platform.
 */
class Generator {
public:
    explicit Generator(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [lo, hi].
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
    std::int64_t uniform_signed(std::int64_t lo, std::int64_t hi);
    /// True with probability p.
    bool chance(double p);

    Rational rational(const Rational& lo, const Rational& hi, unsigned max_denominator);
    Rational value(const GenConfig& cfg) { return rational(cfg.value_lo, cfg.value_hi, cfg.max_denominator); }

    /// Real, nu or -inf according to the configured probabilities.
    Scalar scalar(const GenConfig& cfg);
    /// Never -inf; nu with the configured probability.
    Scalar finite_scalar(const GenConfig& cfg);

    std::size_t dim(const GenConfig& cfg) { return uniform(cfg.dim_min, cfg.dim_max); }
    Matrix matrix(std::size_t rows, std::size_t cols, const GenConfig& cfg);
    std::vector<std::size_t> permutation(std::size_t n);

    /// 1..max_terms terms, exponents in [-3, 3] with denominators up to 3,
    /// non-zero coefficients in [-3, 3].
    PuiseuxPoly series(std::size_t max_terms);

private:
    std::mt19937_64 engine_;
};

}  // namespace xtrop
