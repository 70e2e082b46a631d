#pragma once

#include <string>
#include <string_view>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

// Reads the JSON interchange document
//   {"vertices": ["a", ...], "edges": [{"members": {"a": -1, "b": 1}}, ...]}
// Vertex and edge order follow the document. The result may still fail validation
// (isolated vertex, duplicate edge); inspect validation() before use.
// Throws ParseError for malformed JSON, unknown vertices, and signs outside {-1, +1}.
OrientedHypergraph parse(std::string_view text);

// Canonical form: sorted vertices, edges sorted by member lists, sorted keys, two-space indent.
std::string serialize(const OrientedHypergraph& h);

} // namespace hyperspec
