#include "xtrop/poly.hpp"

#include "xtrop/error.hpp"

namespace xtrop {

namespace {

void require_arity(const TropPoly& f, std::size_t n) {
    if (f.num_vars() != n) {
        throw Error(ErrorKind::ArityMismatch, "polynomial in " + std::to_string(f.num_vars()) +
                                                  " variables given " + std::to_string(n));
    }
}

}  // namespace

TropPoly::TropPoly(std::size_t num_vars, const std::vector<std::pair<Exponents, Scalar>>& monomials)
    : num_vars_(num_vars) {
    if (num_vars == 0) throw Error(ErrorKind::InvalidArgument, "polynomial needs at least one variable");
    for (const auto& [exp, coef] : monomials) {
        if (exp.size() != num_vars) {
            throw Error(ErrorKind::ArityMismatch, "exponent vector of length " + std::to_string(exp.size()) +
                                                      " in a polynomial of " + std::to_string(num_vars) + " variables");
        }
        auto [it, inserted] = monomials_.try_emplace(exp, coef);
        if (!inserted) it->second = add(it->second, coef);
    }
    std::erase_if(monomials_, [](const auto& kv) { return kv.second.is_neg_inf(); });
    if (monomials_.empty()) throw Error(ErrorKind::EmptyPolynomial, "every coefficient is -inf");
}

TropPoly TropPoly::constant(std::size_t num_vars, const Scalar& c) {
    return TropPoly(num_vars, {{Exponents(num_vars, 0), c}});
}

Scalar eval(const TropPoly& f, std::span<const Scalar> point) {
    require_arity(f, point.size());
    Scalar acc = Scalar::neg_inf();
    for (const auto& [exp, coef] : f.monomials()) {
        Scalar term = coef;
        for (std::size_t k = 0; k < exp.size(); ++k) {
            if (exp[k] != 0) term = mul(term, pow(point[k], exp[k]));
        }
        acc = add(acc, term);
    }
    return acc;
}

bool in_zero_set(const TropPoly& f, std::span<const Scalar> point) { return eval(f, point).is_ghost(); }

TropPoly poly_add(const TropPoly& f, const TropPoly& g) {
    require_arity(g, f.num_vars());
    std::vector<std::pair<Exponents, Scalar>> terms(f.monomials().begin(), f.monomials().end());
    terms.insert(terms.end(), g.monomials().begin(), g.monomials().end());
    return TropPoly(f.num_vars(), terms);
}

TropPoly poly_mul(const TropPoly& f, const TropPoly& g) {
    require_arity(g, f.num_vars());
    std::vector<std::pair<Exponents, Scalar>> terms;
    terms.reserve(f.monomials().size() * g.monomials().size());
    for (const auto& [ef, cf] : f.monomials()) {
        for (const auto& [eg, cg] : g.monomials()) {
            Exponents e(ef.size());
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ef[k] + eg[k];
            terms.emplace_back(std::move(e), mul(cf, cg));
        }
    }
    return TropPoly(f.num_vars(), terms);
}

std::vector<GridPoint> corner_locus_grid(const TropPoly& f, std::span<const Interval> box, const Rational& step) {
    if (f.num_vars() > 2) {
        throw Error(ErrorKind::UnsupportedArity, "grid sampling supports 1 or 2 variables, got " +
                                                     std::to_string(f.num_vars()));
    }
    require_arity(f, box.size());
    Rational delta = step;
    delta.canonicalize();
    if (delta <= 0) throw Error(ErrorKind::InvalidArgument, "step must be positive");
    for (const auto& iv : box) {
        if (iv.lo > iv.hi) throw Error(ErrorKind::EmptyBox, "interval lower bound exceeds upper bound");
    }

    auto axis = [&](const Interval& iv) {
        std::vector<Rational> pts;
        Rational x = iv.lo;
        x.canonicalize();
        for (; x <= iv.hi; x += delta) pts.push_back(x);
        return pts;
    };

    std::vector<GridPoint> out;
    const auto xs = axis(box[0]);
    const std::vector<Rational> ys = box.size() == 2 ? axis(box[1]) : std::vector<Rational>{};
    auto classify = [&](std::vector<Rational> coords) {
        std::vector<Scalar> p;
        for (const auto& c : coords) p.push_back(Scalar::real(c));
        out.push_back(GridPoint{std::move(coords), in_zero_set(f, p)});
    };
    for (const auto& x : xs) {
        if (box.size() == 1) {
            classify({x});
        } else {
            for (const auto& y : ys) classify({x, y});
        }
    }
    return out;
}

}  // namespace xtrop
