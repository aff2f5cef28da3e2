#include "xtrop/generator.hpp"

#include "xtrop/error.hpp"

namespace xtrop {

void GenConfig::validate() const {
    if (dim_min < 1 || dim_max < dim_min) throw Error(ErrorKind::InvalidConfig, "dims must satisfy 1 <= min <= max");
    if (value_hi < value_lo) throw Error(ErrorKind::InvalidConfig, "empty value range");
    if (max_denominator < 1) throw Error(ErrorKind::InvalidConfig, "max_denominator must be positive");
    if (nu_probability < 0 || neginf_probability < 0 || nu_probability + neginf_probability > 1) {
        throw Error(ErrorKind::InvalidConfig, "probabilities must be non-negative and sum to at most 1");
    }
}

std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t Generator::uniform(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo;
    if (span == ~std::uint64_t{0}) return engine_();
    const std::uint64_t range = span + 1;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
    std::uint64_t r;
    do {
        r = engine_();
    } while (r >= limit);
    return lo + r % range;
}

std::int64_t Generator::uniform_signed(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + uniform(0, span));
}

bool Generator::chance(double p) {
    if (p <= 0) return false;
    // 53 random bits -> [0, 1)
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return u < p;
}

Rational Generator::rational(const Rational& lo, const Rational& hi, unsigned max_denominator) {
    const unsigned den = static_cast<unsigned>(uniform(1, max_denominator));
    mpz_class num_lo, num_hi;
    const mpq_class scaled_lo = lo * den;
    const mpq_class scaled_hi = hi * den;
    mpz_cdiv_q(num_lo.get_mpz_t(), scaled_lo.get_num_mpz_t(), scaled_lo.get_den_mpz_t());
    mpz_fdiv_q(num_hi.get_mpz_t(), scaled_hi.get_num_mpz_t(), scaled_hi.get_den_mpz_t());
    if (num_hi < num_lo) return lo;
    Rational q(num_lo + mpz_class(uniform_signed(0, mpz_class(num_hi - num_lo).get_si())), den);
    q.canonicalize();
    return q;
}

Scalar Generator::scalar(const GenConfig& cfg) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    if (u < cfg.neginf_probability) return Scalar::neg_inf();
    if (u < cfg.neginf_probability + cfg.nu_probability) return Scalar::nu(value(cfg));
    return Scalar::real(value(cfg));
}

Scalar Generator::finite_scalar(const GenConfig& cfg) {
    if (chance(cfg.nu_probability)) return Scalar::nu(value(cfg));
    return Scalar::real(value(cfg));
}

Matrix Generator::matrix(std::size_t rows, std::size_t cols, const GenConfig& cfg) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = scalar(cfg);
    }
    if (cfg.duplicate_row_mode && rows == cols && rows >= 2) {
        const std::size_t src = uniform(0, rows - 1);
        std::size_t dst = uniform(0, rows - 2);
        if (dst >= src) ++dst;
        const bool by_column = chance(0.5);
        for (std::size_t k = 0; k < rows; ++k) {
            if (by_column) {
                m(k, dst) = m(k, src);
            } else {
                m(dst, k) = m(src, k);
            }
        }
    }
    return m;
}

std::vector<std::size_t> Generator::permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[uniform(0, i - 1)]);
    return p;
}

PuiseuxPoly Generator::series(std::size_t max_terms) {
    const std::size_t k = uniform(1, max_terms);
    std::vector<std::pair<Rational, Rational>> terms;
    for (std::size_t t = 0; t < k; ++t) {
        Rational exp = rational(-3, 3, 3);
        Rational coef = rational(-3, 3, 1);
        if (coef == 0) coef = 1;
        terms.emplace_back(std::move(exp), std::move(coef));
    }
    return PuiseuxPoly(terms);
}

}  // namespace xtrop
