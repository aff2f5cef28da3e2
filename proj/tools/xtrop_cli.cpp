#include "xtrop/error.hpp"
#include "xtrop/io.hpp"
#include "xtrop/laws.hpp"
#include "xtrop/linalg.hpp"
#include "xtrop/poly.hpp"
#include "xtrop/valuation.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace xtrop;
using Json = io::Json;

namespace {

enum Exit : int {
    kOk = 0,
    kLawFailed = 1,
    kUsage = 2,
    kShape = 3,
    kDisagree = 4,
    kSingular = 5,
};

int exit_code(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::UnknownLaw:
    case ErrorKind::InvalidConfig:
    case ErrorKind::InvalidArgument:
        return kUsage;
    case ErrorKind::Singular:
    case ErrorKind::SingularNegInf:
        return kSingular;
    default:
        return kShape;
    }
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

Matrix load_matrix(const std::string& path) { return io::matrix_from_json(io::read_json_file(path)); }

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = text.find(sep, start);
        out.push_back(text.substr(start, pos - start));
        if (pos == std::string::npos) return out;
        start = pos + 1;
    }
}

// "N" or "LO..HI"
std::pair<std::size_t, std::size_t> parse_dims(const std::string& text) {
    auto number = [&](const std::string& s) -> std::size_t {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
            throw Error(ErrorKind::Parse, "bad --dims value '" + text + "'");
        }
        return std::stoul(s);
    };
    const std::size_t dots = text.find("..");
    if (dots == std::string::npos) {
        const std::size_t n = number(text);
        return {n, n};
    }
    return {number(text.substr(0, dots)), number(text.substr(dots + 2))};
}

// "-2:2" or "-1:1,-1:1"
std::vector<Interval> parse_box(const std::string& text) {
    std::vector<Interval> box;
    for (const auto& axis : split(text, ',')) {
        const auto ends = split(axis, ':');
        if (ends.size() != 2) throw Error(ErrorKind::Parse, "bad --box axis '" + axis + "'");
        box.push_back({parse_rational(ends[0]), parse_rational(ends[1])});
    }
    return box;
}

int cmd_det(const std::string& path, const std::string& method) {
    const Matrix a = load_matrix(path);
    if (method == "fast") {
        emit(io::to_json(det_fast(a)));
        return kOk;
    }
    const DetResult naive = det_naive(a, det_options_from_env());
    if (method == "naive") {
        emit(io::to_json(naive));
        return kOk;
    }
    const DetResult fast = det_fast(a);
    if (!(naive == fast)) {
        emit(Json{{"error", "det methods disagree"}, {"naive", io::to_json(naive)}, {"fast", io::to_json(fast)}});
        return kDisagree;
    }
    emit(io::to_json(fast));
    return kOk;
}

int cmd_inv(const std::string& path, bool strict) {
    const Matrix a = load_matrix(path);
    emit(io::to_json(invert(a, strict ? InverseMode::Strict : InverseMode::Permissive)));
    return kOk;
}

int cmd_check_pair(const std::string& a_path, const std::string& b_path) {
    const Matrix a = load_matrix(a_path);
    const Matrix b = load_matrix(b_path);
    const bool ab = check_inverse_pair(a, b);
    const bool ba = check_inverse_pair(b, a);
    emit(Json{{"pair_ok", ab}, {"ab", io::to_json(mat_mul(a, b))}, {"ba", io::to_json(mat_mul(b, a))}, {"reverse_ok", ba}});
    return kOk;
}

int cmd_pseudo_unit(const std::string& path) {
    emit(io::to_json(is_pseudo_unit(load_matrix(path))));
    return kOk;
}

int cmd_regular(const std::string& path) {
    const Matrix a = load_matrix(path);
    const DetResult d = det_fast(a);
    emit(Json{{"regular", d.value.is_real()}, {"det", io::to_json(d)}});
    return kOk;
}

struct LawsArgs {
    std::string law = "all";
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> count;
    std::optional<std::string> dims;
    bool quiet = false;
};

int cmd_laws(const LawsArgs& args) {
    std::vector<std::string> ids;
    if (args.law == "all") {
        ids = law_ids();
    } else if (is_registered(args.law)) {
        ids.push_back(args.law);
    } else {
        std::cerr << "unknown law '" << args.law << "'\n";
        return kUsage;
    }
    std::optional<std::pair<std::size_t, std::size_t>> dims;
    if (args.dims) dims = parse_dims(*args.dims);

    Json summary = Json::array();
    bool all_passed = true;
    for (const auto& id : ids) {
        GenConfig cfg = default_config(id);
        if (args.seed) cfg.seed = *args.seed;
        if (args.count) cfg.count = *args.count;
        if (dims) {
            cfg.dim_min = dims->first;
            cfg.dim_max = dims->second;
            // Duplicated rows need two rows to copy between.
            if (id == "identical-rows" && cfg.dim_min < 2) cfg.dim_min = 2;
            if (cfg.dim_max < cfg.dim_min) cfg.dim_max = cfg.dim_min;
        }
        const auto reports = run_law(id, cfg);
        if (!args.quiet) {
            for (const auto& r : reports) emit(io::to_json(r));
        }
        const LawSummary s = summarize(id, reports);
        all_passed = all_passed && s.failed == 0;
        summary.push_back(io::to_json(s));
    }
    emit(Json{{"summary", summary}, {"all_passed", all_passed}});
    return all_passed ? kOk : kLawFailed;
}

int cmd_poly_eval(const std::string& path, const std::string& point_text) {
    const TropPoly f = io::poly_from_json(io::read_json_file(path));
    std::vector<Scalar> point;
    if (!point_text.empty()) {
        for (const auto& lit : split(point_text, ',')) point.push_back(parse_scalar(lit));
    }
    const Scalar v = eval(f, point);
    emit(Json{{"value", io::to_json(v)}, {"in_zero_set", in_zero_set(f, point)}});
    return kOk;
}

int cmd_locus(const std::string& path, const std::string& box_text, const std::string& step_text,
              const std::string& format) {
    const TropPoly f = io::poly_from_json(io::read_json_file(path));
    const auto box = parse_box(box_text);
    const auto grid = corner_locus_grid(f, box, parse_rational(step_text));
    if (format == "json") {
        Json out = Json::array();
        for (const auto& p : grid) {
            Json coords = Json::array();
            for (const auto& c : p.coords) coords.push_back(format_rational(c));
            out.push_back(Json{{"point", coords}, {"in_locus", p.in_locus}});
        }
        emit(out);
        return kOk;
    }
    std::cout << (box.size() == 1 ? "x,in_locus\n" : "x,y,in_locus\n");
    for (const auto& p : grid) {
        for (const auto& c : p.coords) std::cout << format_rational(c) << ',';
        std::cout << (p.in_locus ? 1 : 0) << '\n';
    }
    return kOk;
}

int cmd_val_demo(const std::string& f_path, const std::string& g_path) {
    const PuiseuxPoly f = io::series_from_json(io::read_json_file(f_path));
    const PuiseuxPoly g = io::series_from_json(io::read_json_file(g_path));
    const LawReport r = check_homomorphic_relation(f, g);
    emit(Json{{"f", format_series(f)},
              {"g", format_series(g)},
              {"sum", format_series(f + g)},
              {"product", format_series(f * g)},
              {"val_f", io::to_json(val(f))},
              {"val_g", io::to_json(val(g))},
              {"val_sum", io::to_json(val(f + g))},
              {"val_product", io::to_json(val(f * g))},
              {"tropical_sum", io::to_json(add(val(f), val(g)))},
              {"tropical_product", io::to_json(mul(val(f), val(g)))},
              {"report", io::to_json(r)}});
    return r.passed ? kOk : kLawFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic over the extended tropical semiring"};
    app.require_subcommand(1, 1);

    std::string method = "both", path, path2, point, box, step = "1", format = "csv";
    bool strict = false;
    LawsArgs laws;

    auto* det = app.add_subcommand("det", "Tropical determinant of a matrix file");
    det->add_option("matrix", path, "Matrix JSON file")->required();
    det->add_option("--method", method, "naive, fast or both")->check(CLI::IsMember({"naive", "fast", "both"}));

    auto* inv = app.add_subcommand("inv", "Pseudo inverse and the resulting pseudo units");
    inv->add_option("matrix", path, "Matrix JSON file")->required();
    inv->add_flag("--strict", strict, "Fail with exit 5 on singular input");

    auto* pair = app.add_subcommand("check-pair", "Whether A B and B A are pseudo units");
    pair->add_option("a", path, "Matrix JSON file")->required();
    pair->add_option("b", path2, "Matrix JSON file")->required();

    auto* unit = app.add_subcommand("pseudo-unit", "Pseudo unit membership of a matrix");
    unit->add_option("matrix", path, "Matrix JSON file")->required();

    auto* reg = app.add_subcommand("regular", "Regularity of a matrix");
    reg->add_option("matrix", path, "Matrix JSON file")->required();

    auto* lw = app.add_subcommand("laws", "Run the law-checking harness");
    lw->add_option("--law", laws.law, "Law id or 'all'");
    lw->add_option("--seed", laws.seed, "Base seed");
    lw->add_option("--count", laws.count, "Instances per law");
    lw->add_option("--dims", laws.dims, "Matrix size N or LO..HI");
    lw->add_flag("--quiet", laws.quiet, "Print only the summary");

    auto* pe = app.add_subcommand("poly-eval", "Evaluate a tropical polynomial at a point");
    pe->add_option("poly", path, "Polynomial JSON file")->required();
    pe->add_option("--point", point, "Comma-separated scalar literals")->required();

    auto* lc = app.add_subcommand("locus", "Classify grid points against the corner locus");
    lc->add_option("poly", path, "Polynomial JSON file")->required();
    lc->add_option("--box", box, "LO:HI per axis, comma separated")->required();
    lc->add_option("--step", step, "Grid step");
    lc->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* vd = app.add_subcommand("val-demo", "Valuations of two Puiseux polynomials");
    vd->add_option("f", path, "Series JSON file")->required();
    vd->add_option("g", path2, "Series JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*det) return cmd_det(path, method);
        if (*inv) return cmd_inv(path, strict);
        if (*pair) return cmd_check_pair(path, path2);
        if (*unit) return cmd_pseudo_unit(path);
        if (*reg) return cmd_regular(path);
        if (*lw) return cmd_laws(laws);
        if (*pe) return cmd_poly_eval(path, point);
        if (*lc) return cmd_locus(path, box, step, format);
        if (*vd) return cmd_val_demo(path, path2);
    } catch (const Error& e) {
        std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return exit_code(e.kind());
    }
    return kUsage;
}
