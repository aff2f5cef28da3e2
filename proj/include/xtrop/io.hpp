#pragma once

#include "xtrop/laws.hpp"
#include "xtrop/linalg.hpp"
#include "xtrop/matrix.hpp"
#include "xtrop/poly.hpp"
#include "xtrop/valuation.hpp"

#include <json.hpp>

#include <filesystem>

// JSON wire formats. Scalars travel as literal strings ("3", "-1/2", "5/2v",
// "-inf"); every reader throws Error(Parse) on malformed input.
namespace xtrop::io {

using Json = nlohmann::json;

Json to_json(const Scalar& x);
Scalar scalar_from_json(const Json& j);

/// {"rows": [["1", "-1"], ["2", "2v"]]}
Json to_json(const Matrix& a);
Matrix matrix_from_json(const Json& j);

/// {"value": "4", "tag": "real", "optimal_count": 1, "uses_nu_entry": false}
Json to_json(const DetResult& d);
DetResult det_result_from_json(const Json& j);

Json to_json(const InverseReport& r);
Json to_json(const PseudoUnitVerdict& v);

/// {"vars": 2, "monomials": [{"exp": [1, 0], "coef": "0"}, ...]}
Json to_json(const TropPoly& f);
TropPoly poly_from_json(const Json& j);

/// {"terms": [{"exp": "-2", "coef": "1"}, ...]}
Json to_json(const PuiseuxPoly& f);
PuiseuxPoly series_from_json(const Json& j);

Json to_json(const LawReport& r);
Json to_json(const LawSummary& s);

/// Reads and parses a whole file as JSON.
Json read_json_file(const std::filesystem::path& path);

}  // namespace xtrop::io
