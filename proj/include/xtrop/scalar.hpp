#pragma once

#include "xtrop/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace xtrop {

enum class Tag : std::uint8_t { NegInf, Real, Nu };

enum class Ordering : std::int8_t { Less = -1, Equal = 0, Greater = 1 };

std::string_view to_string(Tag tag) noexcept;
std::string_view to_string(Ordering ord) noexcept;

/**
 * One element of the extended tropical semiring T = R u {-inf} u R^nu.
 *
 * A scalar is either -inf, a real `a`, or a nu-value `a^nu` (a "ghost" copy of
 * `a` recording additive multiplicity > 1). The encoding is canonical: -inf
 * stores a zero payload, so structural equality is element equality and
 * `3 != 3^nu`.
 *
 * The order on T is total: by value first, then `a < a^nu`, with -inf the
 * least element. (A partial order that only relates reals with reals and
 * nu-values with nu-values can be recovered by comparing tags; it is not
 * modelled separately.)
 */
class Scalar {
public:
    /// The multiplicative unit, real 0.
    Scalar() = default;

    static Scalar neg_inf() { return Scalar(Tag::NegInf, Rational(0)); }
    static Scalar real(Rational value) { return Scalar(Tag::Real, std::move(value)); }
    static Scalar nu(Rational value) { return Scalar(Tag::Nu, std::move(value)); }
    static Scalar zero() { return neg_inf(); }
    static Scalar one() { return real(Rational(0)); }

    Tag tag() const noexcept { return tag_; }
    bool is_neg_inf() const noexcept { return tag_ == Tag::NegInf; }
    bool is_real() const noexcept { return tag_ == Tag::Real; }
    bool is_nu() const noexcept { return tag_ == Tag::Nu; }
    /// Member of R^nu u {-inf}, the ideal of "pseudo zeros".
    bool is_ghost() const noexcept { return tag_ != Tag::Real; }

    /// Rational payload; zero for -inf.
    const Rational& value() const noexcept { return value_; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.tag_ == b.tag_ && a.value_ == b.value_;
    }

private:
    Scalar(Tag tag, Rational value);

    Tag tag_ = Tag::Real;
    Rational value_ = 0;
};

Ordering compare(const Scalar& x, const Scalar& y);
bool precedes(const Scalar& x, const Scalar& y);           // x < y
bool precedes_or_equal(const Scalar& x, const Scalar& y);  // x <= y

/// Compares nu-values only: a and a^nu are equal up to nu.
Ordering compare_nu_value(const Scalar& x, const Scalar& y);

Scalar add(const Scalar& x, const Scalar& y);
Scalar mul(const Scalar& x, const Scalar& y);

/// x (/) y = x (*) (-y); -(a^nu) = (-a)^nu. Throws DivisionByNegInf.
Scalar div(const Scalar& x, const Scalar& y);

/// n-fold product. pow(x, 0) is the unit 0 for x != -inf and an error for -inf.
Scalar pow(const Scalar& x, unsigned n);

/// Additive-sign flip of the payload, tag preserved; -inf has no negation.
Scalar negate(const Scalar& x);

Scalar nu_project(const Scalar& x);
Scalar pi_project(const Scalar& x);
/// Embeds max-plus into R^nu u {-inf}; rejects nu-tagged input.
Scalar theta_embed(const Scalar& x);

inline Scalar operator+(const Scalar& x, const Scalar& y) { return add(x, y); }
inline Scalar operator*(const Scalar& x, const Scalar& y) { return mul(x, y); }
inline Scalar& operator+=(Scalar& x, const Scalar& y) { return x = add(x, y); }
inline Scalar& operator*=(Scalar& x, const Scalar& y) { return x = mul(x, y); }

/// Literal grammar: `-inf` | RATIONAL | RATIONAL`v`.
Scalar parse_scalar(std::string_view text);
std::string format_scalar(const Scalar& x);

std::ostream& operator<<(std::ostream& os, const Scalar& x);

}  // namespace xtrop
