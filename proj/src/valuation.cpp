#include "xtrop/valuation.hpp"

#include "xtrop/error.hpp"
#include "xtrop/io.hpp"

#include <json.hpp>

#include <sstream>

namespace xtrop {

PuiseuxPoly::PuiseuxPoly(const std::vector<std::pair<Rational, Rational>>& terms) {
    for (auto [exp, coef] : terms) {
        exp.canonicalize();
        coef.canonicalize();
        auto [it, inserted] = terms_.try_emplace(exp, coef);
        if (!inserted) it->second += coef;
    }
    std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

PuiseuxPoly PuiseuxPoly::monomial(const Rational& coef, const Rational& exp) { return PuiseuxPoly({{exp, coef}}); }

PuiseuxPoly series_add(const PuiseuxPoly& f, const PuiseuxPoly& g) {
    std::vector<std::pair<Rational, Rational>> terms(f.terms().begin(), f.terms().end());
    terms.insert(terms.end(), g.terms().begin(), g.terms().end());
    return PuiseuxPoly(terms);
}

PuiseuxPoly series_mul(const PuiseuxPoly& f, const PuiseuxPoly& g) {
    std::vector<std::pair<Rational, Rational>> terms;
    for (const auto& [ef, cf] : f.terms()) {
        for (const auto& [eg, cg] : g.terms()) terms.emplace_back(Rational(ef + eg), Rational(cf * cg));
    }
    return PuiseuxPoly(terms);
}

PuiseuxPoly series_neg(const PuiseuxPoly& f) {
    std::vector<std::pair<Rational, Rational>> terms;
    for (const auto& [e, c] : f.terms()) terms.emplace_back(e, Rational(-c));
    return PuiseuxPoly(terms);
}

std::string format_series(const PuiseuxPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        if (!first) os << " + ";
        first = false;
        os << '(' << c.get_str() << ")t^" << e.get_str();
    }
    return os.str();
}

Scalar val(const PuiseuxPoly& f) {
    if (f.is_zero()) return Scalar::neg_inf();
    return Scalar::real(-f.terms().begin()->first);
}

bool Ray::contains(const Scalar& v) const {
    if (v.is_nu()) throw Error(ErrorKind::NuValuation, "valuation values live in max-plus, got " + format_scalar(v));
    switch (anchor_.tag()) {
    case Tag::NegInf:
    case Tag::Real: return v == anchor_;
    case Tag::Nu: return v.is_neg_inf() || v.value() <= anchor_.value();
    }
    return false;
}

bool Ray::subset_of(const Ray& other) const {
    if (anchor_.is_nu()) {
        // [-inf, a] is only inside a ray [-inf, b] with a <= b.
        return other.anchor_.is_nu() && anchor_.value() <= other.anchor_.value();
    }
    return other.contains(anchor_);
}

bool ray_contains(const Scalar& anchor, const Scalar& v) { return Ray(anchor).contains(v); }


LawReport check_homomorphic_relation(const PuiseuxPoly& f, const PuiseuxPoly& g) {
    const Scalar x = val(f);
    const Scalar y = val(g);
    const PuiseuxPoly prod = series_mul(f, g);
    const PuiseuxPoly sum = series_add(f, g);
    const Scalar v_prod = val(prod);
    const Scalar v_sum = val(sum);
    const Scalar prod_anchor = mul(x, y);
    const Scalar sum_anchor = add(x, y);

    const bool product_in_ray = ray_contains(prod_anchor, v_prod);
    const bool sum_in_ray = ray_contains(sum_anchor, v_sum);
    const bool product_rule = v_prod == prod_anchor;
    const bool ultrametric = !precedes(pi_project(sum_anchor), v_sum);

    nlohmann::json instance = {
        {"f", io::to_json(f)},
        {"g", io::to_json(g)},
        {"val_f", format_scalar(x)},
        {"val_g", format_scalar(y)},
        {"val_fg", format_scalar(v_prod)},
        {"val_f_plus_g", format_scalar(v_sum)},
    };

    LawReport report;
    report.law_id = "val-homomorphism";
    report.instance = instance.dump();
    report.passed = product_in_ray && sum_in_ray && product_rule && ultrametric;
    if (!report.passed) {
        report.witness = nlohmann::json{{"product_in_ray", product_in_ray},
                                        {"sum_in_ray", sum_in_ray},
                                        {"product_rule", product_rule},
                                        {"ultrametric", ultrametric},
                                        {"product_anchor", format_scalar(prod_anchor)},
                                        {"sum_anchor", format_scalar(sum_anchor)}}
                             .dump();
    }
    return report;
}

}  // namespace xtrop
