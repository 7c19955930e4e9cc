#pragma once

// JSON forms of the main values. Matrix entries are written as "p/q"
// strings; integers are accepted on input as well.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "crystal/multisegment.hpp"
#include "crystal/quiver.hpp"
#include "crystal/rep.hpp"
#include "crystal/tableau.hpp"

namespace crystal {

using Json = nlohmann::ordered_json;

// Parses text, turning syntax errors into DomainError.
Json parse_json(const std::string& text);

Json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols);

// {"dims":[..],"maps":{"a1":[["0"]],...}} over the type-A double quiver of
// rank dims.size(). Missing maps are zero.
Json rep_to_json(const RepPoint& p);
RepPoint rep_from_json(const Json& j);

// A rep plus "wdims" and "t": one matrix per vertex, in vertex order.
FramedPoint framed_from_json(const Json& j);

Json multisegment_to_json(const Multisegment& m);
Multisegment multisegment_from_json(const Json& j);

Json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j);

Json matching_report(const std::vector<std::pair<Multisegment, Tableau>>& pairs);

}  // namespace crystal
