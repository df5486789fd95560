#pragma once

#include <json.hpp>
#include <vector>

#include "bcoh/action.hpp"
#include "bcoh/chern.hpp"
#include "bcoh/gkm.hpp"
#include "bcoh/poly.hpp"
#include "bcoh/tuple.hpp"

// JSON schemas of the CLI. Rationals travel as strings ("p" or "p/q");
// parsers also accept JSON integers. Parse failures throw ValidationError.
namespace bcoh::io {

using Json = nlohmann::ordered_json;

Rational parse_rational(const Json& j);
Json to_json(const Rational& r);

// {"degree": d, "coeffs": ["p/q", ...]}
Tuple parse_tuple(const Json& j);
Json to_json(const Tuple& t);
// A list of tuples, bare or as {"generators": [...]}.
std::vector<Tuple> parse_tuples(const Json& j);

// Coefficient list, lowest power first.
Json to_json(const Poly& p);
Json to_json(const Matrix<Rational>& m);

// {"n": int, "h_weights": [int...], "e_matrix": [[...]...] | "principal"}
action::ActionModel parse_action(const Json& j);
Json to_json(const action::ActionModel& m);

// {"vertices": [int...], "edges": [[i, j, m] | [i, j] ...]}
gkm::Graph parse_graph(const Json& j);

// {"rank": int, "fibres": {"j": {"weights": [...]} | {"rho_W": [[...]], "rho_V": [[...]]}}}
chern::BundleData parse_bundle(const Json& j);

}  // namespace bcoh::io
