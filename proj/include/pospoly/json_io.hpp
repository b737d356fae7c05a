#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "pospoly/geometry.hpp"
#include "pospoly/polytope.hpp"
#include "pospoly/poset.hpp"

namespace pospoly {

using nlohmann::json;

/// Poset file format: {"elements": ["a", ...], "relations": [["a","b"], ...]}
/// where each relation is a strict `<` pair; the closure is taken on load.
Poset poset_from_json(const json& j);
json poset_to_json(const Poset& poset);

/// Vector format: {"z": {"label": value, ...}}; missing labels read as 0.
IntPoint zvector_from_json(const json& j, const Poset& poset);
std::vector<Rational> zvector_rational_from_json(const json& j, const Poset& poset);
json zvector_to_json(const IntPoint& z, const Poset& poset);

/// Point as a label -> value object, zeros omitted.
json point_to_json(const IntPoint& z, const Poset& poset);

json cert_to_json(const DecompositionCert& cert, const Poset& poset);

/// "3", "-1/2" etc.
Rational parse_rational(const std::string& text);
std::string rational_str(const Rational& value);

/// Subspace format: a JSON array of rows of rational strings or numbers.
Subspace subspace_from_json(const json& j);

json qpoly_to_json(const QPolynomial& p);

json load_json_file(const std::string& path);

}  // namespace pospoly
