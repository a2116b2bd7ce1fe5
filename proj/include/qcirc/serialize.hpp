#ifndef QCIRC_SERIALIZE_HPP
#define QCIRC_SERIALIZE_HPP

#include <json.hpp>

#include "qcirc/linear.hpp"
#include "qcirc/resonant.hpp"
#include "qcirc/weights.hpp"

namespace qcirc {

using Json = nlohmann::ordered_json;

// Rationals are always strings (`p` or `p/q`), never JSON numbers. Malformed
// documents raise Error(ParseError); well-formed documents describing invalid
// objects raise the corresponding domain error.

Json to_json(const MultiIndex& alpha);
Json to_json(const WeightVector& m);
/// Row-major flat array of n*n rational strings.
Json to_json(const LinearMap& l);
/// {"weights": [...], "g": {"i": {"a1,...,an": "p/q", ...}, ...}}; only
/// components with a nonzero g_i are listed.
Json to_json(const TriangularResonantMap& s);

WeightVector weights_from_json(const Json& j);
/// Accepts a flat row-major array or an array of rows.
LinearMap linear_map_from_json(const Json& j);
TriangularResonantMap sigma_from_json(const Json& j);

}  // namespace qcirc

#endif  // QCIRC_SERIALIZE_HPP
