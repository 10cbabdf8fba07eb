#pragma once

#include <string>
#include <string_view>

#include "rwit/graph.hpp"

namespace rwit {

// Decodes one graph6 line. A leading ">>graph6<<" header is tolerated and
// stripped. Throws ParseError with the byte offset of the offending
// character on malformed input.
Graph parse_graph6(std::string_view line);

// Minimal graph6 encoding. Supports orders up to 258047 (one- and four-byte
// order headers); larger orders are rejected.
std::string write_graph6(const Graph& g);

}  // namespace rwit
