#pragma once

#include "xtrop/law_report.hpp"
#include "xtrop/rational.hpp"
#include "xtrop/scalar.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace xtrop {

/// Finite-support Puiseux polynomial sum c_a t^a with rational exponents and
/// exact rational coefficients. Zero coefficients are never stored; the empty
/// map is the zero series.
class PuiseuxPoly {
public:
    PuiseuxPoly() = default;
    /// Terms with equal exponents are summed; zero results are dropped.
    explicit PuiseuxPoly(const std::vector<std::pair<Rational, Rational>>& terms);

    static PuiseuxPoly monomial(const Rational& coef, const Rational& exp);

    const std::map<Rational, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    friend bool operator==(const PuiseuxPoly&, const PuiseuxPoly&) = default;

private:
    std::map<Rational, Rational> terms_;  // exponent -> coefficient
};

PuiseuxPoly series_add(const PuiseuxPoly& f, const PuiseuxPoly& g);
PuiseuxPoly series_mul(const PuiseuxPoly& f, const PuiseuxPoly& g);
PuiseuxPoly series_neg(const PuiseuxPoly& f);

inline PuiseuxPoly operator+(const PuiseuxPoly& f, const PuiseuxPoly& g) { return series_add(f, g); }
inline PuiseuxPoly operator*(const PuiseuxPoly& f, const PuiseuxPoly& g) { return series_mul(f, g); }
inline PuiseuxPoly operator-(const PuiseuxPoly& f) { return series_neg(f); }

std::string format_series(const PuiseuxPoly& f);

/// Val(f) = -min support, as a real; -inf for the zero series.
Scalar val(const PuiseuxPoly& f);

/// The target set P_x: {a} for a real, [-inf, a] for a^nu, {-inf} for -inf.
class Ray {
public:
    explicit Ray(Scalar anchor) : anchor_(std::move(anchor)) {}

    const Scalar& anchor() const noexcept { return anchor_; }

    /// Membership of a valuation value; throws NuValuation for nu-tagged v.
    bool contains(const Scalar& v) const;
    /// Set inclusion P_this within P_other.
    bool subset_of(const Ray& other) const;

private:
    Scalar anchor_;
};

bool ray_contains(const Scalar& anchor, const Scalar& v);

/**
 * With x = Val(f) and y = Val(g), checks Val(f g) in P_{x (*) y} and
 * Val(f + g) in P_{x (+) y}, together with the exact product rule and the
 * ultrametric bound Val(f + g) <= max(x, y). Equal valuations give a nu
 * anchor whose ray absorbs any depth of cancellation.
 */
LawReport check_homomorphic_relation(const PuiseuxPoly& f, const PuiseuxPoly& g);

}  // namespace xtrop
