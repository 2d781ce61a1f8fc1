#ifndef KMM_JSON_IO_HPP
#define KMM_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "kmm/certificate.hpp"
#include "kmm/graph.hpp"
#include "kmm/la/eval.hpp"
#include "kmm/matrix.hpp"
#include "kmm/order.hpp"
#include "kmm/solver.hpp"

namespace kmm {

/// Interchange schemas (all versioned with "format": 1; indices and
/// vertex ids are 1-based on the wire):
///   matrix     {"format":1, "rows":r, "cols":c, "data":[[...], ...]}
///   cover      {"format":1, "row_flags":[...], "col_flags":[...]}
///   selection  {"format":1, "n":n, "picks":[[i,j], ...]}
///   graph      {"format":1, "n":k, "edges":[[u,v], ...], "x":x, "y":y}
///   set system {"format":1, "sets":[[elements], ...]}
///   poset      {"format":1, "n":k, "lt":[[i,j], ...]}
/// A missing "format" field is accepted on input.
using json = nlohmann::ordered_json;

json to_json(const BoolMatrix& m);
BoolMatrix bool_matrix_from_json(const json& j);

json to_json(const Cover& c);
Cover cover_from_json(const json& j);

json to_json(const Selection& s);
Selection selection_from_json(const json& j);

json to_json(const TerminalGraph& g);
TerminalGraph graph_from_json(const json& j);

json to_json(const SetSystem& s);
SetSystem set_system_from_json(const json& j);

json poset_to_json(const Poset& p);
Poset poset_from_json(const json& j);

json to_json(const KmmReport& r);

json to_json(const la::IntMatrix& m);
la::IntMatrix int_matrix_from_json(const json& j);

/// {"index":{...}, "ring":{...}, "matrix":{...}}
json to_json(const la::Environment& env);
la::Environment environment_from_json(const json& j);

/// Wrap nlohmann parse/type errors in invalid_input so the CLI maps
/// them to the schema-violation exit code.
json parse_json(const std::string& text);

} // namespace kmm

#endif
