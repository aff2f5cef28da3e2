#include "xtrop/io.hpp"

#include "xtrop/error.hpp"

#include <fstream>
#include <sstream>

namespace xtrop::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

Json to_json(const Scalar& x) { return format_scalar(x); }

Scalar scalar_from_json(const Json& j) {
    if (!j.is_string()) bad("scalar literals must be JSON strings, got " + j.dump());
    return parse_scalar(j.get<std::string>());
}

Json to_json(const Matrix& a) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Json row = Json::array();
        for (const auto& x : a.row(i)) row.push_back(to_json(x));
        rows.push_back(std::move(row));
    }
    return Json{{"rows", std::move(rows)}};
}

Matrix matrix_from_json(const Json& j) {
    const Json& rows = field(j, "rows");
    if (!rows.is_array() || rows.empty()) bad("'rows' must be a non-empty array");
    std::vector<std::vector<Scalar>> parsed;
    for (const auto& row : rows) {
        if (!row.is_array() || row.empty()) bad("each row must be a non-empty array");
        auto& out = parsed.emplace_back();
        for (const auto& x : row) out.push_back(scalar_from_json(x));
    }
    return Matrix::from_rows(parsed);
}

Json to_json(const DetResult& d) {
    return Json{{"value", to_json(d.value)},
                {"tag", std::string(to_string(d.value.tag()))},
                {"optimal_count", d.optimal_count},
                {"uses_nu_entry", d.uses_nu_entry}};
}

DetResult det_result_from_json(const Json& j) {
    DetResult d;
    d.value = scalar_from_json(field(j, "value"));
    const Json& count = field(j, "optimal_count");
    const Json& uses = field(j, "uses_nu_entry");
    if (!count.is_number_unsigned() || !uses.is_boolean()) bad("malformed DetResult");
    d.optimal_count = count.get<unsigned>();
    d.uses_nu_entry = uses.get<bool>();
    if (field(j, "tag") != std::string(to_string(d.value.tag()))) bad("DetResult tag disagrees with value");
    return d;
}

Json to_json(const InverseReport& r) {
    return Json{{"inverse", to_json(r.inverse)},
                {"right_unit", to_json(r.right_unit)},
                {"left_unit", to_json(r.left_unit)},
                {"right_ok", r.right_ok},
                {"left_ok", r.left_ok}};
}

Json to_json(const PseudoUnitVerdict& v) {
    Json out{{"is_pseudo_unit", v.is_pseudo_unit}, {"is_idempotent", v.is_idempotent}};
    out["failure_reason"] = v.failure_reason ? Json(std::string(to_string(*v.failure_reason))) : Json(nullptr);
    return out;
}

Json to_json(const TropPoly& f) {
    Json monomials = Json::array();
    for (const auto& [exp, coef] : f.monomials()) monomials.push_back(Json{{"exp", exp}, {"coef", to_json(coef)}});
    return Json{{"vars", f.num_vars()}, {"monomials", std::move(monomials)}};
}

TropPoly poly_from_json(const Json& j) {
    const Json& vars = field(j, "vars");
    if (!vars.is_number_unsigned() || vars.get<std::size_t>() == 0) bad("'vars' must be a positive integer");
    const Json& monomials = field(j, "monomials");
    if (!monomials.is_array()) bad("'monomials' must be an array");
    std::vector<std::pair<Exponents, Scalar>> terms;
    for (const auto& m : monomials) {
        const Json& exp = field(m, "exp");
        if (!exp.is_array()) bad("'exp' must be an array");
        Exponents e;
        for (const auto& k : exp) {
            if (!k.is_number_unsigned()) bad("exponents must be non-negative integers");
            e.push_back(k.get<unsigned>());
        }
        terms.emplace_back(std::move(e), scalar_from_json(field(m, "coef")));
    }
    return TropPoly(vars.get<std::size_t>(), terms);
}

Json to_json(const PuiseuxPoly& f) {
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back(Json{{"exp", format_rational(e)}, {"coef", format_rational(c)}});
    return Json{{"terms", std::move(terms)}};
}

PuiseuxPoly series_from_json(const Json& j) {
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) bad("'terms' must be an array");
    std::vector<std::pair<Rational, Rational>> parsed;
    for (const auto& t : terms) {
        const Json& e = field(t, "exp");
        const Json& c = field(t, "coef");
        if (!e.is_string() || !c.is_string()) bad("series exponents and coefficients must be strings");
        parsed.emplace_back(parse_rational(e.get<std::string>()), parse_rational(c.get<std::string>()));
    }
    return PuiseuxPoly(parsed);
}

Json to_json(const LawReport& r) {
    Json instance = Json::parse(r.instance, nullptr, false);
    Json out{{"law_id", r.law_id},
             {"instance", instance.is_discarded() ? Json(r.instance) : instance},
             {"verdict", r.passed ? "pass" : "fail"},
             {"seed", r.seed}};
    if (r.witness) {
        Json w = Json::parse(*r.witness, nullptr, false);
        out["witness"] = w.is_discarded() ? Json(*r.witness) : w;
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

Json to_json(const LawSummary& s) {
    return Json{{"law_id", s.law_id}, {"passed", s.passed}, {"failed", s.failed}, {"total", s.passed + s.failed}};
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    Json j = Json::parse(buf.str(), nullptr, false);
    if (j.is_discarded()) bad("invalid JSON in " + path.string());
    return j;
}

}  // namespace xtrop::io
