#include "xtrop/scalar.hpp"

#include "xtrop/error.hpp"

#include <ostream>

namespace xtrop {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::DivisionByNegInf: return "DivisionByNegInf";
    case ErrorKind::InvalidMaxPlusElement: return "InvalidMaxPlusElement";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NaiveSizeCap: return "NaiveSizeCap";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::SingularNegInf: return "SingularNegInf";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::UnsupportedArity: return "UnsupportedArity";
    case ErrorKind::EmptyBox: return "EmptyBox";
    case ErrorKind::EmptyPolynomial: return "EmptyPolynomial";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NuValuation: return "NuValuation";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::UnknownLaw: return "UnknownLaw";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    }
    return "Error";
}

std::string_view to_string(Tag tag) noexcept {
    switch (tag) {
    case Tag::NegInf: return "neginf";
    case Tag::Real: return "real";
    case Tag::Nu: return "nu";
    }
    return "?";
}

std::string_view to_string(Ordering ord) noexcept {
    switch (ord) {
    case Ordering::Less: return "Less";
    case Ordering::Equal: return "Equal";
    case Ordering::Greater: return "Greater";
    }
    return "?";
}

Scalar::Scalar(Tag tag, Rational value) : tag_(tag), value_(std::move(value)) {
    if (tag_ == Tag::NegInf) value_ = 0;
    value_.canonicalize();
}

namespace {

Ordering from_cmp(int c) {
    return c < 0 ? Ordering::Less : (c > 0 ? Ordering::Greater : Ordering::Equal);
}

}  // namespace

Ordering compare_nu_value(const Scalar& x, const Scalar& y) {
    if (x.is_neg_inf() || y.is_neg_inf()) {
        return from_cmp(int(!x.is_neg_inf()) - int(!y.is_neg_inf()));
    }
    return from_cmp(cmp(x.value(), y.value()));
}

Ordering compare(const Scalar& x, const Scalar& y) {
    if (auto o = compare_nu_value(x, y); o != Ordering::Equal) return o;
    // Same nu-value: a < a^nu.
    return from_cmp(int(x.is_nu()) - int(y.is_nu()));
}

bool precedes(const Scalar& x, const Scalar& y) { return compare(x, y) == Ordering::Less; }

bool precedes_or_equal(const Scalar& x, const Scalar& y) {
    return compare(x, y) != Ordering::Greater;
}

Scalar add(const Scalar& x, const Scalar& y) {
    switch (compare_nu_value(x, y)) {
    case Ordering::Greater: return x;
    case Ordering::Less: return y;
    case Ordering::Equal: break;
    }
    if (x.is_neg_inf()) return x;
    // a + a = a + a^nu = a^nu + a^nu = a^nu
    return Scalar::nu(x.value());
}

Scalar mul(const Scalar& x, const Scalar& y) {
    if (x.is_neg_inf() || y.is_neg_inf()) return Scalar::neg_inf();
    Rational sum = x.value() + y.value();
    if (x.is_nu() || y.is_nu()) return Scalar::nu(std::move(sum));
    return Scalar::real(std::move(sum));
}

Scalar negate(const Scalar& x) {
    if (x.is_neg_inf()) throw Error(ErrorKind::DivisionByNegInf, "-inf has no multiplicative inverse");
    Rational v = -x.value();
    return x.is_nu() ? Scalar::nu(std::move(v)) : Scalar::real(std::move(v));
}

Scalar div(const Scalar& x, const Scalar& y) {
    if (y.is_neg_inf()) throw Error(ErrorKind::DivisionByNegInf, "divisor is -inf");
    return mul(x, negate(y));
}

Scalar pow(const Scalar& x, unsigned n) {
    if (x.is_neg_inf()) {
        if (n == 0) throw Error(ErrorKind::InvalidArgument, "(-inf)^0 is undefined");
        return x;
    }
    if (n == 0) return Scalar::one();
    Rational v = x.value() * n;
    return x.is_nu() ? Scalar::nu(std::move(v)) : Scalar::real(std::move(v));
}

Scalar nu_project(const Scalar& x) {
    if (x.is_real()) return Scalar::nu(x.value());
    return x;
}

Scalar pi_project(const Scalar& x) {
    if (x.is_nu()) return Scalar::real(x.value());
    return x;
}

Scalar theta_embed(const Scalar& x) {
    if (x.is_nu()) {
        throw Error(ErrorKind::InvalidMaxPlusElement,
                    "theta is defined on max-plus elements only, got " + format_scalar(x));
    }
    return nu_project(x);
}

Scalar parse_scalar(std::string_view text) {
    if (text == "-inf") return Scalar::neg_inf();
    if (!text.empty() && text.back() == 'v') {
        text.remove_suffix(1);
        return Scalar::nu(parse_rational(text));
    }
    return Scalar::real(parse_rational(text));
}

std::string format_scalar(const Scalar& x) {
    switch (x.tag()) {
    case Tag::NegInf: return "-inf";
    case Tag::Real: return format_rational(x.value());
    case Tag::Nu: return format_rational(x.value()) + "v";
    }
    return "?";
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << format_scalar(x); }

}  // namespace xtrop
