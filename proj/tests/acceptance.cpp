// Acceptance gate: one PASS/FAIL line per criterion.
//
// A criterion that fails only because of a reproduced mathematical
// counterexample is reported as FAIL with the counterexample named; such
// failures do not change the exit status. Any other failure does.

#include "support.hpp"
#include "xtrop/generator.hpp"
#include "xtrop/io.hpp"
#include "xtrop/laws.hpp"
#include "xtrop/linalg.hpp"
#include "xtrop/valuation.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace xtrop;
using testing::M;
using testing::S;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool passed = true;
    bool counterexample_only = false;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            passed = false;
            notes.push_back("failed: " + what);
        }
    }
    void note(const std::string& what) { notes.push_back(what); }
};

// ---- 1: worked examples ------------------------------------------------------

Outcome golden_examples() {
    Outcome o;
    const auto start = Clock::now();
    const Matrix a = M({{"1", "1"}, {"2", "3"}});
    const Matrix s = M({{"1", "2"}, {"2", "3"}});
    const Matrix b = M({{"3", "1"}, {"0", "2"}});
    for (auto* d : {+[](const Matrix& m) { return det_naive(m); }, +[](const Matrix& m) { return det_fast(m); }}) {
        o.expect(d(a).value == S("4"), "|A| = 4");
        o.expect(d(mat_mul(a, a)).value == S("9v"), "|A^2| = 9v");
        o.expect(d(s).value == S("4v"), "|[[1,2],[2,3]]| = 4v");
        o.expect(d(b).value == S("5"), "|B| = 5");
        o.expect(d(mat_mul(s, b)).value == S("9v"), "|AB| = 9v");
        o.expect(d(mat_mul(b, b)).value == S("10"), "|B^2| = 10");
    }
    o.expect(mat_mul(a, a) == M({{"3", "4"}, {"5", "6"}}), "A^2");
    o.expect(mat_mul(s, b) == M({{"4", "4"}, {"5", "5"}}), "AB");
    o.expect(mat_mul(b, b) == M({{"6", "4"}, {"3", "4"}}), "B^2");

    const Matrix r = M({{"1", "-1"}, {"2", "2"}});
    const InverseReport ri = invert(r);
    o.expect(ri.inverse == M({{"-1", "-4"}, {"-1", "-2"}}), "inverse of [[1,-1],[2,2]]");
    o.expect(ri.right_unit == M({{"0", "-3v"}, {"1v", "0"}}), "A A^nabla for [[1,-1],[2,2]]");
    o.expect(ri.right_ok && ri.left_ok, "[[1,-1],[2,2]] products are pseudo units");

    const Matrix q = M({{"1", "-1"}, {"4", "2"}});
    o.expect(det(q) == S("3v"), "|[[1,-1],[4,2]]| = 3v");
    o.expect(!invert(q).right_ok, "singular product not a pseudo unit");

    const Matrix w = M({{"-1", "-2"}, {"-2", "1"}});
    o.expect(adjoint(w) == M({{"1", "-2"}, {"-2", "-1"}}), "adjoint([[-1,-2],[-2,1]])");
    o.expect(det(w) == S("0") && det(adjoint(w)) == S("0"), "both determinants 0");

    const Matrix inv = pseudo_inverse(a);
    o.expect(inv == M({{"-1", "-3"}, {"-2", "-3"}}), "inverse of [[1,1],[2,3]]");
    const Matrix unit = mat_mul(a, inv);
    o.expect(mat_mul(unit, a) == M({{"1", "1v"}, {"2v", "3"}}), "I' A");
    o.expect(mat_mul(inv, unit) == M({{"-1", "-3v"}, {"-2v", "-3"}}), "A^nabla I'");
    o.expect(pi_project(mat_mul(unit, a)) == a && pi_project(mat_mul(inv, unit)) == inv, "pi images");

    const Matrix p = M({{"0", "-2", "-1"}, {"-2", "0", "-3v"}, {"-1", "-3v", "0"}});
    const Matrix p2 = M({{"0", "-2", "-1"}, {"-2", "0", "-3"}, {"-1", "-3", "0"}});
    o.expect(check_inverse_pair(p, p2), "3x3 pair (A, A')");
    o.expect(check_inverse_pair(p2, p), "3x3 pair (A', A)");
    o.expect(check_inverse_pair(p, p), "3x3 pair (A, A)");

    const double secs = seconds_since(start);
    o.expect(secs < 1.0, "runtime under 1 s");
    std::ostringstream os;
    os << "runtime " << secs << " s";
    o.note(os.str());
    return o;
}

// ---- 2: theorem suites -------------------------------------------------------

// Confirms a failing real-projection report is a genuine counterexample:
// A is regular and all-real and some identity visibly fails.
bool genuine_real_projection_counterexample(const LawReport& r) {
    const auto inst = io::Json::parse(r.instance);
    if (!inst.contains("a")) return false;
    const Matrix a = io::matrix_from_json(io::Json{{"rows", inst.at("a")}});
    if (!all_real(a) || !is_regular(a)) return false;
    const Matrix inv = pseudo_inverse(a);
    const Matrix right = mat_mul(a, inv), left = mat_mul(inv, a);
    return pi_project(mat_mul(right, a)) != pi_project(a) || pi_project(mat_mul(inv, right)) != pi_project(inv) ||
           pi_project(mat_mul(left, inv)) != pi_project(inv) || pi_project(mat_mul(a, left)) != pi_project(a);
}

Outcome theorem_suites() {
    Outcome o;
    const auto start = Clock::now();
    bool only_counterexamples = true;
    for (const auto& id : law_ids()) {
        if (id == "val-homomorphism" || id == "fast-vs-naive") continue;
        const GenConfig cfg = default_config(id);
        const bool scalar_law = id == "semiring-axioms" || id == "freshman" || id == "cauchy" || id == "diagram";
        const auto reports = run_law(id, cfg);
        const LawSummary s = summarize(id, reports);
        o.expect(s.passed + s.failed >= (scalar_law ? 10000u : 1000u), id + " instance count");
        std::ostringstream line;
        line << id << ": " << s.passed << " passed, " << s.failed << " failed";
        o.note(line.str());
        if (s.failed == 0) continue;
        o.passed = false;
        for (const auto& r : reports) {
            if (r.passed) continue;
            const bool genuine = id == "real-projection" && genuine_real_projection_counterexample(r);
            only_counterexamples = only_counterexamples && genuine;
        }
        if (id == "real-projection") {
            for (const auto& r : reports) {
                if (!r.passed) {
                    o.note("first counterexample: " + io::to_json(r).dump());
                    break;
                }
            }
        }
    }
    const double secs = seconds_since(start);
    o.expect(secs <= 60.0, "runtime within 60 s");
    if (secs > 60.0) only_counterexamples = false;
    o.counterexample_only = !o.passed && only_counterexamples;
    std::ostringstream os;
    os << "runtime " << secs << " s";
    o.note(os.str());
    return o;
}

// ---- 3: oracle equivalence ----------------------------------------------------

Outcome oracle_equivalence() {
    Outcome o;
    GenConfig cfg;
    Generator gen(mix_seed(3));
    std::size_t mismatches = 0, tags[3] = {0, 0, 0};
    for (auto [n, count] : {std::pair<std::size_t, int>{6, 500}, {7, 200}}) {
        for (int k = 0; k < count; ++k) {
            const Matrix a = gen.matrix(n, n, cfg);
            const DetResult naive = det_naive(a), fast = det_fast(a);
            ++tags[static_cast<int>(naive.value.tag())];
            if (!(naive == fast)) {
                ++mismatches;
                if (mismatches == 1) o.note("mismatch on " + format_matrix(a));
            }
        }
    }
    o.expect(mismatches == 0, "det_fast == det_naive on 700 matrices");
    std::ostringstream os;
    os << "700 matrices (6x6: 500, 7x7: 200); determinant tags neginf/real/nu = " << tags[0] << "/" << tags[1] << "/"
       << tags[2];
    o.note(os.str());

    cfg.nu_probability = 0;
    cfg.neginf_probability = 0;
    cfg.value_lo = -100;
    cfg.value_hi = 100;
    cfg.max_denominator = 4;
    const Matrix big = gen.matrix(50, 50, cfg);
    const auto start = Clock::now();
    const DetResult d = det_fast(big);
    const double secs = seconds_since(start);
    o.expect(secs <= 1.0, "50x50 det_fast within 1 s");
    std::ostringstream t;
    t << "50x50 det_fast " << secs << " s, value " << format_scalar(d.value);
    o.note(t.str());
    return o;
}

// ---- 4: valuation theorem -------------------------------------------------------

Outcome valuation_theorem() {
    Outcome o;
    const auto reports = run_law("val-homomorphism", default_config("val-homomorphism"));
    std::size_t passed = 0, engineered = 0, full = 0;
    for (const auto& r : reports) {
        passed += r.passed;
        const auto inst = io::Json::parse(r.instance);
        const std::string kind = inst.at("kind").get<std::string>();
        if (kind == "full-cancellation" || kind == "leading-cancellation") {
            const PuiseuxPoly f = io::series_from_json(inst.at("f")), g = io::series_from_json(inst.at("g"));
            const bool shape_ok = val(f) == val(g) && precedes(val(f + g), val(f));
            o.expect(shape_ok, "engineered pair has equal valuations and cancels");
            ++engineered;
            if (kind == "full-cancellation") {
                o.expect((f + g).is_zero(), "full cancellation sums to zero");
                ++full;
            }
        }
    }
    o.expect(reports.size() >= 10000, "at least 10^4 pairs");
    o.expect(passed == reports.size(), "every pair passes");
    o.expect(engineered >= 1000, "at least 10^3 engineered cancellation pairs");
    std::ostringstream os;
    os << reports.size() << " pairs, " << passed << " passed, " << engineered << " engineered cancellations (" << full
       << " to zero)";
    o.note(os.str());
    return o;
}

// ---- 5: negative controls -------------------------------------------------------

// (R-bar, "max", +) with "a + a" = -inf, as a negative control only.
Scalar quoted_max(const Scalar& x, const Scalar& y) {
    if (x == y) return Scalar::neg_inf();
    return precedes(x, y) ? y : x;
}

Outcome negative_controls() {
    Outcome o;
    std::size_t witnesses = 0;
    for (int bi = -4; bi <= 4; ++bi) {
        for (int ai = bi + 1; ai <= 4; ++ai) {
            const Scalar b = Scalar::real(Rational(bi, 2)), a = Scalar::real(Rational(ai, 2));
            const Scalar left = quoted_max(b, quoted_max(a, a));
            const Scalar right = quoted_max(quoted_max(b, a), a);
            o.expect(left == b && right == Scalar::neg_inf(), "non-associativity witness for b < a");
            o.expect(add(b, add(a, a)) == add(add(b, a), a), "(+) stays associative on the same triple");
            ++witnesses;
        }
    }
    o.note(std::to_string(witnesses) + " triples with b < a reproduce \"b + (a + a)\" = b, \"(b + a) + a\" = -inf");

    const Matrix a = M({{"1", "1"}, {"2", "3"}});
    const Matrix base = M({{"6", "4"}, {"5", "3"}});
    const Matrix inv = pseudo_inverse(a);
    const Matrix inv_sq = mat_mul(inv, inv);
    const Matrix sq_inv = pseudo_inverse(mat_mul(a, a));
    o.expect(inv_sq == scalar_mul(S("-8"), base), "(A^nabla)^2 = [[6,4],[5,3]] (-8)");
    o.expect(sq_inv == scalar_mul(S("-9v"), base), "(A^2)^nabla = [[6,4],[5,3]] (-9)^nu");
    o.expect(inv_sq != sq_inv, "(A^nabla)^2 != (A^2)^nabla");
    o.note("(A^nabla)^2 = " + format_matrix(inv_sq) + ", (A^2)^nabla = " + format_matrix(sq_inv));
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"golden worked examples", golden_examples},
        {"theorem suites", theorem_suites},
        {"det_fast / det_naive oracle equivalence", oracle_equivalence},
        {"valuation homomorphism", valuation_theorem},
        {"negative controls", negative_controls},
    };

    int passed = 0, blocking = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.passed = false;
            o.note(std::string("exception: ") + e.what());
        }
        std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << (k + 1) << ": " << criteria[k].first;
        if (!o.passed && o.counterexample_only) std::cout << " (mathematical counterexample reproduced)";
        std::cout << '\n';
        for (const auto& n : o.notes) std::cout << "    " << n << '\n';
        passed += o.passed;
        blocking += !o.passed && !o.counterexample_only;
    }
    std::cout << passed << "/" << criteria.size() << " criteria passed";
    if (blocking == 0 && passed != static_cast<int>(criteria.size())) {
        std::cout << "; remaining failures are reproduced counterexamples";
    }
    std::cout << '\n';
    return blocking == 0 ? 0 : 1;
}
