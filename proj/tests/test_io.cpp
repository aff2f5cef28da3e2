#include "support.hpp"
#include "xtrop/error.hpp"
#include "xtrop/generator.hpp"
#include "xtrop/io.hpp"

#include <doctest.h>

using namespace xtrop;
using testing::M;
using testing::S;
using io::Json;

namespace {

bool is_parse_error(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind() == ErrorKind::Parse;
    }
    return false;
}

}  // namespace

TEST_CASE("matrix format") {
    const Matrix a = M({{"1", "-1"}, {"2", "2v"}});
    const Json j = io::to_json(a);
    CHECK(j == Json::parse(R"({"rows": [["1","-1"],["2","2v"]]})"));
    CHECK(io::matrix_from_json(j) == a);
    CHECK(is_parse_error([] { io::matrix_from_json(Json::parse(R"({"rows": []})")); }));
    CHECK(is_parse_error([] { io::matrix_from_json(Json::parse(R"({"rows": [[1, 2]]})")); }));
    CHECK(is_parse_error([] { io::matrix_from_json(Json::parse(R"({"cols": [["1"]]})")); }));
    CHECK_THROWS_AS(io::matrix_from_json(Json::parse(R"({"rows": [["1","2"],["3"]]})")), Error);
}

TEST_CASE("determinant format") {
    const DetResult d = det_fast(M({{"1", "1"}, {"2", "3"}}));
    const Json j = io::to_json(d);
    CHECK(j == Json::parse(R"({"value":"4","tag":"real","optimal_count":1,"uses_nu_entry":false})"));
    CHECK(io::det_result_from_json(j) == d);
    CHECK(is_parse_error([] {
        io::det_result_from_json(Json::parse(R"({"value":"4","tag":"nu","optimal_count":1,"uses_nu_entry":false})"));
    }));
}

TEST_CASE("inverse report format") {
    const Json j = io::to_json(invert(M({{"1", "-1"}, {"2", "2"}})));
    CHECK(j.at("inverse") == Json::parse(R"({"rows": [["-1","-4"],["-1","-2"]]})"));
    CHECK(j.at("right_unit") == Json::parse(R"({"rows": [["0","-3v"],["1v","0"]]})"));
    CHECK(j.at("right_ok") == true);
    CHECK(j.at("left_ok") == true);
}

TEST_CASE("polynomial and series formats round-trip") {
    const Json pj = Json::parse(R"({"vars": 2, "monomials": [{"exp": [1,0], "coef": "0"}, {"exp": [0,1], "coef": "1/2v"}]})");
    const TropPoly f = io::poly_from_json(pj);
    CHECK(io::poly_from_json(io::to_json(f)) == f);
    CHECK(is_parse_error([] { io::poly_from_json(Json::parse(R"({"vars": 1, "monomials": [{"exp": [-1], "coef": "0"}]})")); }));

    const Json sj = Json::parse(R"({"terms": [{"exp": "-2", "coef": "1"}, {"exp": "1/2", "coef": "-3"}]})");
    const PuiseuxPoly s = io::series_from_json(sj);
    CHECK(val(s) == S("2"));
    CHECK(io::series_from_json(io::to_json(s)) == s);
    CHECK(is_parse_error([] { io::series_from_json(Json::parse(R"({"terms": [{"exp": 1, "coef": "1"}]})")); }));
}

TEST_CASE("random matrices round-trip through JSON text") {
    GenConfig cfg;
    cfg.max_denominator = 9;
    Generator gen(3);
    for (int k = 0; k < 200; ++k) {
        const Matrix a = gen.matrix(gen.uniform(1, 4), gen.uniform(1, 4), cfg);
        const std::string text = io::to_json(a).dump();
        CHECK(io::matrix_from_json(Json::parse(text)) == a);
        if (a.is_square()) {
            const DetResult d = det_fast(a);
            CHECK(io::det_result_from_json(Json::parse(io::to_json(d).dump())) == d);
        }
    }
}

TEST_CASE("law report format") {
    LawReport r{"cauchy", R"({"xs":["1"]})", false, R"({"failed_checks":["inequality"]})", 7};
    const Json j = io::to_json(r);
    CHECK(j.at("verdict") == "fail");
    CHECK(j.at("instance").at("xs") == Json::array({"1"}));
    CHECK(j.at("witness").at("failed_checks") == Json::array({"inequality"}));
    CHECK(j.at("seed") == 7);
    const Json s = io::to_json(LawSummary{"cauchy", 3, 1});
    CHECK(s == Json::parse(R"({"law_id":"cauchy","passed":3,"failed":1,"total":4})"));
}
