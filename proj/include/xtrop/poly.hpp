#pragma once

#include "xtrop/scalar.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace xtrop {

using Exponents = std::vector<unsigned>;

/**
 * Tropical polynomial in `num_vars` variables over T, stored as a map from
 * non-negative exponent vectors to coefficients.
 *
 * Construction merges repeated exponent vectors with (+) and drops -inf
 * coefficients; a polynomial with no remaining monomial is rejected. Two
 * polynomials compare equal when their monomial sets agree, not when they
 * induce the same function.
 */
class TropPoly {
public:
    TropPoly(std::size_t num_vars, const std::vector<std::pair<Exponents, Scalar>>& monomials);

    /// Single-variable-free constant polynomial.
    static TropPoly constant(std::size_t num_vars, const Scalar& c);

    std::size_t num_vars() const noexcept { return num_vars_; }
    const std::map<Exponents, Scalar>& monomials() const noexcept { return monomials_; }

    friend bool operator==(const TropPoly&, const TropPoly&) = default;

private:
    TropPoly() = default;

    std::size_t num_vars_ = 0;
    std::map<Exponents, Scalar> monomials_;
};

Scalar eval(const TropPoly& f, std::span<const Scalar> point);

/// Point lies in Z(f): f(point) is a nu-value or -inf.
bool in_zero_set(const TropPoly& f, std::span<const Scalar> point);

TropPoly poly_add(const TropPoly& f, const TropPoly& g);
TropPoly poly_mul(const TropPoly& f, const TropPoly& g);

struct Interval {
    Rational lo;
    Rational hi;
};

struct GridPoint {
    std::vector<Rational> coords;
    bool in_locus = false;
};

/// Samples the real grid lo, lo + step, ... <= hi on each axis (first axis
/// outermost) and classifies each point against Z(f). One or two variables.
std::vector<GridPoint> corner_locus_grid(const TropPoly& f, std::span<const Interval> box, const Rational& step);

}  // namespace xtrop
