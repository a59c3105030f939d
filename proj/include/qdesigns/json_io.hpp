#pragma once

#include <string>

#include <json.hpp>

#include "qdesigns/channel.hpp"
#include "qdesigns/projective.hpp"
#include "qdesigns/simplex.hpp"
#include "qdesigns/unitary.hpp"
#include "qdesigns/weingarten.hpp"

namespace qdesigns {

using Json = nlohmann::json;

// Matrices: {"rows": r, "cols": c, "data": [[re, im], ...]} in row-major order.
// Parse functions throw InputError on schema violations.
Json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json to_json(const WeightedStateSet& s);
WeightedStateSet state_set_from_json(const Json& j);

Json to_json(const UnitarySet& s);
UnitarySet unitary_set_from_json(const Json& j);

Json to_json(const SimplexDesign& s);
SimplexDesign simplex_design_from_json(const Json& j);

Json to_json(const Triangulation& t);
Triangulation triangulation_from_json(const Json& j);

Json to_json(const WeightedChannelSet& s);
WeightedChannelSet channel_set_from_json(const Json& j);

Json to_json(const ChoiState& c);

/// {"t": t, "D": D, "values": {"[2,1]": value, ...}}.
Json to_json(const WeingartenTable& t);

/// {"terms": [{"exponents": [...], "coefficient": c}, ...]}.
Polynomial polynomial_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace qdesigns
