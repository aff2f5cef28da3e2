#include "xtrop/laws.hpp"

#include "xtrop/error.hpp"
#include "xtrop/io.hpp"
#include "xtrop/linalg.hpp"
#include "xtrop/valuation.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace xtrop {

namespace {

using Json = nlohmann::json;

// Named sub-checks of one instance; the names of failing ones become the
// witness.
class Checks {
public:
    void expect(std::string name, bool ok) { items_.emplace_back(std::move(name), ok); }

    bool all() const {
        return std::all_of(items_.begin(), items_.end(), [](const auto& kv) { return kv.second; });
    }

    Json failures() const {
        Json out = Json::array();
        for (const auto& [name, ok] : items_) {
            if (!ok) out.push_back(name);
        }
        return out;
    }

private:
    std::vector<std::pair<std::string, bool>> items_;
};

LawReport finish(Json instance, const Checks& checks, Json details = Json::object()) {
    LawReport r;
    r.instance = instance.dump();
    r.passed = checks.all();
    if (!r.passed) {
        details["failed_checks"] = checks.failures();
        r.witness = details.dump();
    }
    return r;
}

Json js(const Scalar& x) { return io::to_json(x); }
Json js(const Matrix& a) { return io::to_json(a).at("rows"); }
Json js(const DetResult& d) { return io::to_json(d); }

Json js(const std::vector<Scalar>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(js(x));
    return out;
}

Scalar power(const ScalarOps& ops, const Scalar& x, unsigned n) {
    Scalar acc = x;
    for (unsigned k = 1; k < n; ++k) acc = ops.mul(acc, x);
    return acc;
}

Scalar sum(const ScalarOps& ops, const std::vector<Scalar>& xs) {
    Scalar acc = Scalar::neg_inf();
    for (const auto& x : xs) acc = ops.add(acc, x);
    return acc;
}

Scalar product(const ScalarOps& ops, const std::vector<Scalar>& xs) {
    Scalar acc = Scalar::one();
    for (const auto& x : xs) acc = ops.mul(acc, x);
    return acc;
}

const Scalar& order_max(const Scalar& x, const Scalar& y) { return precedes(x, y) ? y : x; }

// (R-bar, max, +) on pi-images, written independently of add/mul.
Scalar maxplus_add(const Scalar& a, const Scalar& b) {
    if (a.is_neg_inf()) return b;
    if (b.is_neg_inf()) return a;
    return Scalar::real(a.value() > b.value() ? a.value() : b.value());
}

Scalar maxplus_mul(const Scalar& a, const Scalar& b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return Scalar::neg_inf();
    return Scalar::real(a.value() + b.value());
}

std::optional<Matrix> sample_regular(Generator& gen, std::size_t n, const GenConfig& cfg, std::size_t& attempts) {
    constexpr std::size_t kMaxAttempts = 20000;
    for (attempts = 1; attempts <= kMaxAttempts; ++attempts) {
        Matrix a = gen.matrix(n, n, cfg);
        if (det_naive(a).value.is_real()) return a;
    }
    return std::nullopt;
}

LawReport no_regular_sample(std::size_t n) {
    Checks checks;
    checks.expect("sampled_regular_matrix", false);
    return finish(Json{{"n", n}}, checks, Json{{"reason", "rejection sampling found no regular matrix"}});
}

// No nu entries: an element of M_n(R-bar).
bool max_plus(const Matrix& a) {
    return std::none_of(a.entries().begin(), a.entries().end(), [](const Scalar& x) { return x.is_nu(); });
}

Json worked_example(Json instance) {
    instance["source"] = "worked-example";
    return instance;
}

// ---- scalar laws ----------------------------------------------------------

LawReport semiring_axioms(Generator& gen, const GenConfig& cfg, const ScalarOps& ops) {
    const Scalar x = gen.scalar(cfg), y = gen.scalar(cfg), z = gen.scalar(cfg);
    const Scalar ninf = Scalar::neg_inf(), one = Scalar::one();
    Checks c;
    c.expect("add_commutative", ops.add(x, y) == ops.add(y, x));
    c.expect("mul_commutative", ops.mul(x, y) == ops.mul(y, x));
    c.expect("add_associative", ops.add(ops.add(x, y), z) == ops.add(x, ops.add(y, z)));
    c.expect("mul_associative", ops.mul(ops.mul(x, y), z) == ops.mul(x, ops.mul(y, z)));
    c.expect("left_distributive", ops.mul(x, ops.add(y, z)) == ops.add(ops.mul(x, y), ops.mul(x, z)));
    c.expect("right_distributive", ops.mul(ops.add(y, z), x) == ops.add(ops.mul(y, x), ops.mul(z, x)));
    c.expect("neginf_neutral", ops.add(ninf, x) == x && ops.add(x, ninf) == x);
    c.expect("neginf_annihilates", ops.mul(ninf, x) == ninf && ops.mul(x, ninf) == ninf);
    c.expect("zero_is_unit", ops.mul(one, x) == x && ops.mul(x, one) == x);
    c.expect("partial_idempotency", ops.add(x, x) == nu_project(x));
    const Scalar s = ops.add(x, y);
    c.expect("sum_in_operands", s == x || s == y || s == nu_project(x));
    c.expect("sum_is_order_max", x == y || s == order_max(x, y));
    return finish(Json{{"x", js(x)}, {"y", js(y)}, {"z", js(z)}}, c);
}

LawReport freshman(Generator& gen, const GenConfig& cfg, const ScalarOps& ops) {
    const Scalar x = gen.scalar(cfg), y = gen.scalar(cfg);
    const auto n = static_cast<unsigned>(gen.uniform(1, 8));
    std::vector<Scalar> terms(gen.uniform(2, 5));
    for (auto& t : terms) t = gen.scalar(cfg);
    std::vector<Scalar> powered;
    for (const auto& t : terms) powered.push_back(power(ops, t, n));

    Checks c;
    c.expect("binomial", power(ops, ops.add(x, y), n) == ops.add(power(ops, x, n), power(ops, y, n)));
    c.expect("multinomial", power(ops, sum(ops, terms), n) == sum(ops, powered));
    return finish(Json{{"x", js(x)}, {"y", js(y)}, {"n", n}, {"terms", js(terms)}}, c);
}

LawReport cauchy(Generator& gen, const GenConfig& cfg, const ScalarOps& ops) {
    const auto kind = gen.uniform(0, 2);
    const std::size_t n = gen.uniform(2, 5);
    std::vector<Scalar> xs(n);
    const char* kind_name = "random";
    if (kind == 0) {
        for (auto& x : xs) x = gen.scalar(cfg);
    } else if (kind == 1) {
        kind_name = "constructed-equality";
        if (gen.chance(0.1)) {
            std::fill(xs.begin(), xs.end(), Scalar::neg_inf());
        } else {
            const Rational a = gen.value(cfg);
            for (auto& x : xs) x = gen.chance(0.5) ? Scalar::nu(a) : Scalar::real(a);
            xs[gen.uniform(0, n - 1)] = Scalar::nu(a);
        }
    } else {
        kind_name = "constructed-strict";
        if (gen.chance(0.5)) {
            const Rational a = gen.value(cfg);
            for (auto& x : xs) x = Scalar::real(a);
        } else {
            Rational top = cfg.value_lo;
            for (auto& x : xs) {
                x = gen.finite_scalar(cfg);
                if (x.value() > top) top = x.value();
            }
            const std::size_t k = gen.uniform(0, n - 1);
            xs[k] = gen.chance(0.5) ? Scalar::nu(top + 1) : Scalar::real(top + 1);
        }
    }

    std::vector<Scalar> powered;
    for (const auto& x : xs) powered.push_back(power(ops, x, static_cast<unsigned>(n)));
    const Scalar lhs = product(ops, xs);
    const Scalar rhs = sum(ops, powered);
    const Ordering ord = compare(lhs, rhs);
    const bool equal = ord == Ordering::Equal;
    const bool same_nu_value = std::all_of(xs.begin(), xs.end(), [&](const Scalar& x) {
        return compare_nu_value(x, xs.front()) == Ordering::Equal;
    });
    const bool has_ghost = std::any_of(xs.begin(), xs.end(), [](const Scalar& x) { return x.is_ghost(); });

    Checks c;
    c.expect("inequality", ord != Ordering::Greater);
    c.expect("equality_iff_condition", equal == (same_nu_value && has_ghost));
    if (kind == 1) c.expect("constructed_equality_holds", equal);
    if (kind == 2) c.expect("constructed_strict_holds", !equal);
    return finish(Json{{"kind", kind_name}, {"xs", js(xs)}, {"lhs", js(lhs)}, {"rhs", js(rhs)}}, c);
}

LawReport diagram(Generator& gen, const GenConfig& cfg, const ScalarOps& ops) {
    const Scalar x = gen.scalar(cfg), y = gen.scalar(cfg);
    const Scalar a = pi_project(x), b = pi_project(y);
    Checks c;
    c.expect("nu_equals_theta_after_pi", nu_project(x) == theta_embed(a) && nu_project(y) == theta_embed(b));
    c.expect("pi_never_nu", !a.is_nu() && !b.is_nu());
    c.expect("pi_preserves_add", pi_project(ops.add(x, y)) == maxplus_add(a, b));
    c.expect("pi_preserves_mul", pi_project(ops.mul(x, y)) == maxplus_mul(a, b));
    c.expect("theta_preserves_add", theta_embed(maxplus_add(a, b)) == ops.add(theta_embed(a), theta_embed(b)));
    c.expect("theta_preserves_mul", theta_embed(maxplus_mul(a, b)) == ops.mul(theta_embed(a), theta_embed(b)));
    c.expect("nu_preserves_add", nu_project(ops.add(x, y)) == ops.add(nu_project(x), nu_project(y)));
    c.expect("nu_preserves_mul", nu_project(ops.mul(x, y)) == ops.mul(nu_project(x), nu_project(y)));
    c.expect("nu_idempotent", nu_project(nu_project(x)) == nu_project(x));
    return finish(Json{{"x", js(x)}, {"y", js(y)}}, c);
}

// ---- determinant laws -----------------------------------------------------

LawReport det_transpose(Generator& gen, const GenConfig& cfg, const ScalarOps&) {
    const std::size_t n = gen.dim(cfg);
    const Matrix a = gen.matrix(n, n, cfg);
    const auto rp = gen.permutation(n);
    const auto cp = gen.permutation(n);
    Matrix rows_permuted(n, n), cols_permuted(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            rows_permuted(i, j) = a(rp[i], j);
            cols_permuted(i, j) = a(i, cp[j]);
        }
    }
    const DetResult d = det_naive(a);
    Checks c;
    c.expect("transpose", det_naive(transpose(a)) == d);
    c.expect("row_permutation", det_naive(rows_permuted) == d);
    c.expect("column_permutation", det_naive(cols_permuted) == d);
    return finish(Json{{"a", js(a)}, {"row_perm", rp}, {"col_perm", cp}, {"det", js(d)}}, c);
}

LawReport det_row_linearity(Generator& gen, const GenConfig& cfg, const ScalarOps&) {
    const std::size_t n = gen.dim(cfg);
    const Matrix a = gen.matrix(n, n, cfg);
    const std::size_t line = gen.uniform(0, n - 1);
    const bool by_column = gen.chance(0.5);
    const Scalar factor = gen.chance(0.5) ? Scalar::nu(gen.value(cfg)) : Scalar::real(gen.value(cfg));
    Matrix scaled = a;
    for (std::size_t k = 0; k < n; ++k) {
        auto& e = by_column ? scaled(k, line) : scaled(line, k);
        e = mul(factor, e);
    }
    const Scalar d = det_naive(a).value;
    const Scalar ds = det_naive(scaled).value;
    Checks c;
    c.expect("scaled_determinant", ds == mul(factor, d));
    return finish(Json{{"a", js(a)},
                       {"line", line},
                       {"axis", by_column ? "column" : "row"},
                       {"factor", js(factor)},
                       {"det", js(d)},
                       {"det_scaled", js(ds)}},
                  c);
}

LawReport identical_rows(Generator& gen, const GenConfig& cfg, const ScalarOps&) {
    const std::size_t n = gen.dim(cfg);
    const Matrix a = gen.matrix(n, n, cfg);
    const DetResult d = det_naive(a);
    Checks c;
    c.expect("singular", d.value.is_ghost());
    return finish(Json{{"a", js(a)}, {"det", js(d)}}, c);
}

LawReport det_mult_case(const Matrix& a, const Matrix& b, Json instance, const char* expected_class = nullptr) {
    const Matrix ab = mat_mul(a, b);
    const Scalar da = det_naive(a).value, db = det_naive(b).value, dab = det_naive(ab).value;
    const bool ra = da.is_real(), rb = db.is_real(), rab = dab.is_real();
    const char* cls = !(ra && rb) ? "singular-factor" : (rab ? "regular-product" : "singular-product");

    Checks c;
    if (ra && rb && rab) c.expect("multiplicative", dab == mul(da, db));
    if (!(ra && rb)) c.expect("singular_factor_gives_singular_product", !rab);
    if (expected_class) c.expect("expected_classification", std::string(cls) == expected_class);

    instance["a"] = js(a);
    instance["b"] = js(b);
    instance["ab"] = js(ab);
    instance["det_a"] = js(da);
    instance["det_b"] = js(db);
    instance["det_ab"] = js(dab);
    instance["classification"] = cls;
    return finish(std::move(instance), c);
}

LawReport det_mult(Generator& gen, const GenConfig& cfg, const ScalarOps&) {
    const std::size_t n = gen.dim(cfg);
    if (gen.chance(0.5)) {
        std::size_t tries = 0;
        auto a = sample_regular(gen, n, cfg, tries);
        auto b = sample_regular(gen, n, cfg, tries);
        if (!a || !b) return no_regular_sample(n);
        return det_mult_case(*a, *b, Json{{"sampling", "regular-factors"}});
    }
    const Matrix a = gen.matrix(n, n, cfg);
    const Matrix b = gen.matrix(n, n, cfg);
    return det_mult_case(a, b, Json{{"sampling", "unconstrained"}});
}

std::vector<LawReport> det_mult_examples() {
    const Matrix a = Matrix::from_literals({{"1", "1"}, {"2", "3"}});
    const Matrix s = Matrix::from_literals({{"1", "2"}, {"2", "3"}});
    const Matrix b = Matrix::from_literals({{"3", "1"}, {"0", "2"}});
    std::vector<LawReport> out;
    out.push_back(det_mult_case(a, a, worked_example({{"example", "A^2 with |A| = 4, |A^2| = 9v"}}), "singular-product"));
    out.push_back(det_mult_case(s, b, worked_example({{"example", "singular A times regular B"}}), "singular-factor"));
    out.push_back(det_mult_case(b, b, worked_example({{"example", "B^2 with |B^2| = 10"}}), "regular-product"));
    return out;
}

// ---- inverse laws ---------------------------------------------------------

LawReport inverse_case(const Matrix& a, Json instance) {
    const DetResult d = det_naive(a);
    const bool regular = d.value.is_real();
    Checks c;
    bool pair_ok = false;
    if (d.value.is_neg_inf()) {
        bool threw = false;
        try {
            (void)pseudo_inverse(a);
        } catch (const Error& e) {
            threw = e.kind() == ErrorKind::SingularNegInf;
        }
        c.expect("neginf_determinant_has_no_inverse", threw);
    } else {
        const Matrix inv = pseudo_inverse(a);
        pair_ok = check_inverse_pair(a, inv);
        instance["inverse"] = js(inv);
        if (a.rows() >= 2) {
            const Matrix b = mat_mul(a, adjoint(a));
            bool diag = true;
            for (std::size_t i = 0; i < a.rows(); ++i) diag = diag && b(i, i) == d.value;
            c.expect("adjoint_product_diagonal_is_det", !regular || diag);
        }
    }
    c.expect("regular_iff_pseudo_invertible", regular == pair_ok);
    instance["a"] = js(a);
    instance["det"] = js(d);
    instance["regular"] = regular;
    instance["pair_ok"] = pair_ok;
    return finish(std::move(instance), c);
}

LawReport inverse_iff_regular(Generator& gen, const GenConfig& cfg, const ScalarOps&) {
    const std::size_t n = gen.dim(cfg);
    if (gen.chance(0.5)) {
        std::size_t tries = 0;
        auto a = sample_regular(gen, n, cfg, tries);
        if (!a) return no_regular_sample(n);
        return inverse_case(*a, Json{{"sampling", "rejection-regular"}, {"attempts", tries}});
    }
    return inverse_case(gen.matrix(n, n, cfg), Json{{"sampling", "unconstrained"}});
}

std::vector<LawReport> inverse_examples() {
    std::vector<LawReport> out;
    out.push_back(inverse_case(Matrix::from_literals({{"1", "-1"}, {"2", "2"}}), worked_example({})));
    out.push_back(inverse_case(Matrix::from_literals({{"1", "-1"}, {"4", "2"}}), worked_example({})));
    return out;
}

LawReport products_idempotent(Generator& gen, const GenConfig& cfg, const ScalarOps&) {
    const std::size_t n = gen.dim(cfg);
    std::size_t tries = 0;
    auto a = sample_regular(gen, n, cfg, tries);
    if (!a) return no_regular_sample(n);
    const Matrix inv = pseudo_inverse(*a);
    const Matrix right = mat_mul(*a, inv);
    const Matrix left = mat_mul(inv, *a);
    Checks c;
    c.expect("right_product_idempotent", is_idempotent(right));
    c.expect("left_product_idempotent", is_idempotent(left));
    c.expect("right_product_pseudo_unit", is_pseudo_unit(right).is_pseudo_unit);
    c.expect("left_product_pseudo_unit", is_pseudo_unit(left).is_pseudo_unit);
    return finish(Json{{"a", js(*a)}, {"attempts", tries}, {"inverse", js(inv)}, {"right", js(right)}, {"left", js(left)}},
                  c);
}

LawReport det_inverse(Generator& gen, const GenConfig& cfg, const ScalarOps&) {
    const std::size_t n = gen.dim(cfg);
    std::size_t tries = 0;
    auto a = sample_regular(gen, n, cfg, tries);
    if (!a) return no_regular_sample(n);
    const Matrix inv = pseudo_inverse(*a);
    const Scalar d = det(*a);
    const Scalar dinv = det(inv);
    Checks c;
    if (n >= 2) c.expect("adjoint_regular", is_regular(adjoint(*a)));
    c.expect("inverse_regular", dinv.is_real());
    c.expect("det_is_inverse_of_inverse_det", d == div(Scalar::one(), dinv));
    return finish(Json{{"a", js(*a)}, {"attempts", tries}, {"inverse", js(inv)}, {"det", js(d)}, {"det_inverse", js(dinv)}},
                  c);
}

std::vector<LawReport> det_inverse_examples() {
    // The converse fails: |A| = |A^nabla| = 0 while A != A^nabla.
    const Matrix a = Matrix::from_literals({{"-1", "-2"}, {"-2", "1"}});
    const Matrix inv = pseudo_inverse(a);
    Checks c;
    c.expect("det_zero", det(a) == Scalar::one());
    c.expect("inverse_det_zero", det(inv) == Scalar::one());
    c.expect("distinct_from_inverse", !(a == inv));
    return {finish(worked_example({{"a", js(a)}, {"inverse", js(inv)}}), c)};
}

LawReport real_projection(Generator& gen, const GenConfig& cfg, const ScalarOps&) {
    const std::size_t n = gen.dim(cfg);
    std::size_t tries = 0;
    auto a = sample_regular(gen, n, cfg, tries);
    if (!a) return no_regular_sample(n);
    if (!all_real(*a)) {
        Checks c;
        c.expect("all_real_sample", false);
        return finish(Json{{"a", js(*a)}}, c, Json{{"reason", "real-projection needs nu_probability = neginf_probability = 0"}});
    }
    return check_real_projection(*a);
}

std::vector<LawReport> real_projection_examples() {
    LawReport r = check_real_projection(Matrix::from_literals({{"1", "1"}, {"2", "3"}}));
    r.instance = worked_example(Json::parse(r.instance)).dump();
    return {r};
}

// ---- valuation and oracle laws ---------------------------------------------

PuiseuxPoly nonzero_series(Generator& gen) {
    for (;;) {
        PuiseuxPoly f = gen.series(4);
        if (!f.is_zero()) return f;
    }
}

LawReport val_homomorphism(Generator& gen, const GenConfig&, const ScalarOps&) {
    static constexpr const char* kinds[] = {"random", "full-cancellation", "leading-cancellation", "zero"};
    const auto kind = gen.uniform(0, 3);
    PuiseuxPoly f = nonzero_series(gen);
    PuiseuxPoly g;
    switch (kind) {
    case 0: g = gen.series(4); break;
    case 1: g = series_neg(f); break;
    case 2: {
        // g cancels the leading term of f and adds only higher-order terms.
        const auto& [lead_exp, lead_coef] = *f.terms().begin();
        std::vector<std::pair<Rational, Rational>> terms{{lead_exp, -lead_coef}};
        const std::size_t extra = gen.uniform(0, 3);
        for (std::size_t k = 0; k < extra; ++k) {
            Rational coef = gen.rational(-3, 3, 1);
            if (coef == 0) coef = 1;
            terms.emplace_back(lead_exp + gen.rational(Rational(1, 3), 3, 3), coef);
        }
        g = PuiseuxPoly(terms);
        break;
    }
    default: g = PuiseuxPoly{}; break;
    }
    if (kind == 3 && gen.chance(0.5)) std::swap(f, g);

    LawReport r = check_homomorphic_relation(f, g);
    Json instance = Json::parse(r.instance);
    instance["kind"] = kinds[kind];
    r.instance = instance.dump();
    return r;
}

LawReport fast_vs_naive(Generator& gen, const GenConfig& cfg, const ScalarOps&) {
    const std::size_t n = gen.dim(cfg);
    const Matrix a = gen.matrix(n, n, cfg);
    const DetResult naive = det_naive(a);
    const DetResult fast = det_fast(a);
    Checks c;
    c.expect("value_and_tag", naive.value == fast.value);
    c.expect("optimal_count", naive.optimal_count == fast.optimal_count);
    c.expect("uses_nu_entry", naive.uses_nu_entry == fast.uses_nu_entry);
    return finish(Json{{"a", js(a)}}, c, Json{{"naive", js(naive)}, {"fast", js(fast)}});
}

// ---- registry -------------------------------------------------------------

using Body = LawReport (*)(Generator&, const GenConfig&, const ScalarOps&);
using WorkedExamples = std::vector<LawReport> (*)();

struct LawEntry {
    const char* id;
    Body body;
    WorkedExamples examples;
    std::size_t count;
    std::size_t dim_min;
    std::size_t dim_max;
};

constexpr std::size_t kScalarCount = 10000;
constexpr std::size_t kMatrixCount = 1000;

const std::vector<LawEntry>& registry() {
    static const std::vector<LawEntry> entries = {
        {"semiring-axioms", semiring_axioms, nullptr, kScalarCount, 1, 1},
        {"freshman", freshman, nullptr, kScalarCount, 1, 1},
        {"cauchy", cauchy, nullptr, kScalarCount, 1, 1},
        {"diagram", diagram, nullptr, kScalarCount, 1, 1},
        {"det-transpose", det_transpose, nullptr, kMatrixCount, 1, 6},
        {"det-row-linearity", det_row_linearity, nullptr, kMatrixCount, 1, 6},
        {"identical-rows", identical_rows, nullptr, kMatrixCount, 2, 6},
        {"det-mult", det_mult, det_mult_examples, kMatrixCount, 1, 5},
        {"inverse-iff-regular", inverse_iff_regular, inverse_examples, kMatrixCount, 2, 5},
        {"products-idempotent", products_idempotent, nullptr, kMatrixCount, 2, 5},
        {"det-inverse", det_inverse, det_inverse_examples, kMatrixCount, 1, 5},
        {"real-projection", real_projection, real_projection_examples, kMatrixCount, 2, 5},
        {"val-homomorphism", val_homomorphism, nullptr, kScalarCount, 1, 1},
        {"fast-vs-naive", fast_vs_naive, nullptr, kMatrixCount, 1, 7},
    };
    return entries;
}

const LawEntry& lookup(std::string_view law_id) {
    for (const auto& e : registry()) {
        if (law_id == e.id) return e;
    }
    throw Error(ErrorKind::UnknownLaw, "no law registered as '" + std::string(law_id) + "'");
}

LawReport run_entry(const LawEntry& entry, std::uint64_t seed, const GenConfig& config, const ScalarOps& ops) {
    Generator gen(seed);
    LawReport r;
    try {
        r = entry.body(gen, config, ops);
    } catch (const Error& e) {
        r.passed = false;
        r.instance = Json::object().dump();
        r.witness = Json{{"error", e.what()}}.dump();
    }
    r.law_id = entry.id;
    r.seed = seed;
    return r;
}

}  // namespace

const std::vector<std::string>& law_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& e : registry()) out.emplace_back(e.id);
        return out;
    }();
    return ids;
}

bool is_registered(std::string_view law_id) {
    return std::any_of(registry().begin(), registry().end(), [&](const LawEntry& e) { return law_id == e.id; });
}

GenConfig default_config(std::string_view law_id) {
    const LawEntry& e = lookup(law_id);
    GenConfig cfg;
    cfg.count = e.count;
    cfg.dim_min = e.dim_min;
    cfg.dim_max = e.dim_max;
    if (law_id == "identical-rows") cfg.duplicate_row_mode = true;
    if (law_id == "real-projection") {
        cfg.nu_probability = 0;
        cfg.neginf_probability = 0;
    }
    return cfg;
}

std::vector<LawReport> run_law(std::string_view law_id, const GenConfig& config, const ScalarOps& ops) {
    const LawEntry& entry = lookup(law_id);
    config.validate();
    if (law_id == "identical-rows" && (!config.duplicate_row_mode || config.dim_min < 2)) {
        throw Error(ErrorKind::InvalidConfig, "identical-rows needs duplicate_row_mode and n >= 2");
    }

    std::vector<LawReport> reports;
    if (entry.examples) {
        for (auto& r : entry.examples()) {
            r.law_id = entry.id;
            r.seed = 0;
            reports.push_back(std::move(r));
        }
    }
    reports.reserve(reports.size() + config.count);
    for (std::size_t k = 0; k < config.count; ++k) {
        reports.push_back(run_entry(entry, mix_seed(config.seed ^ mix_seed(k)), config, ops));
    }
    return reports;
}

LawReport run_instance(std::string_view law_id, std::uint64_t instance_seed, const GenConfig& config,
                       const ScalarOps& ops) {
    return run_entry(lookup(law_id), instance_seed, config, ops);
}

LawReport check_real_projection(const Matrix& a) {
    if (!a.is_square()) throw Error(ErrorKind::PreconditionFailed, "matrix is not square");
    if (!max_plus(a)) throw Error(ErrorKind::PreconditionFailed, "matrix has nu entries");
    if (!is_regular(a)) throw Error(ErrorKind::PreconditionFailed, "matrix is not regular");

    const Matrix inv = pseudo_inverse(a);
    const Matrix right_unit = mat_mul(a, inv);
    const Matrix left_unit = mat_mul(inv, a);
    const bool exact = max_plus(inv);

    // With a real inverse the targets are fixed by pi, so both forms coincide
    // with the exact identities there.
    Checks c;
    c.expect("right_unit_times_a", pi_project(mat_mul(right_unit, a)) == pi_project(a));
    c.expect("inverse_times_right_unit", pi_project(mat_mul(inv, right_unit)) == pi_project(inv));
    c.expect("left_unit_times_inverse", pi_project(mat_mul(left_unit, inv)) == pi_project(inv));
    c.expect("a_times_left_unit", pi_project(mat_mul(a, left_unit)) == pi_project(a));

    LawReport r = finish(Json{{"a", js(a)},
                              {"inverse", js(inv)},
                              {"right_unit", js(right_unit)},
                              {"left_unit", js(left_unit)},
                              {"form", exact ? "exact" : "pi-images"}},
                         c);
    r.law_id = "real-projection";
    return r;
}

LawSummary summarize(std::string_view law_id, const std::vector<LawReport>& reports) {
    LawSummary s{std::string(law_id), 0, 0};
    for (const auto& r : reports) {
        if (r.law_id != law_id) continue;
        (r.passed ? s.passed : s.failed) += 1;
    }
    return s;
}

}  // namespace xtrop
