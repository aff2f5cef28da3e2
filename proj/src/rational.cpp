#include "xtrop/rational.hpp"

#include "xtrop/error.hpp"

#include <cctype>

namespace xtrop {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }

    mpz_class num;
    mpz_class den = 1;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto n = body.substr(0, slash);
        auto d = body.substr(slash + 1);
        if (!all_digits(n) || !all_digits(d)) {
            throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
        }
        num = mpz_class(std::string(n), 10);
        den = mpz_class(std::string(d), 10);
        if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto ip = body.substr(0, dot);
        auto fp = body.substr(dot + 1);
        if (!all_digits(ip) || !all_digits(fp)) {
            throw Error(ErrorKind::Parse, "malformed decimal '" + std::string(text) + "'");
        }
        num = mpz_class(std::string(ip) + std::string(fp), 10);
        mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
    } else {
        if (!all_digits(body)) {
            throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
        }
        num = mpz_class(std::string(body), 10);
    }

    Rational q(num, den);
    q.canonicalize();
    if (negative) q = -q;
    return q;
}

std::string format_rational(const Rational& q) {
    return q.get_str();
}

}  // namespace xtrop
