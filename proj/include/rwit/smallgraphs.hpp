#pragma once

#include <cstdint>
#include <vector>

#include "rwit/graph.hpp"

namespace rwit {

// Canonical form: the labelling minimising the upper-triangle adjacency bits
// in graph6 column order. Supports orders up to 11 (55 bits).
std::uint64_t canonical_code(const Graph& g);
Graph canonical_form(const Graph& g);

// All graphs of the given order up to isomorphism, canonically labelled and
// sorted by canonical code. Results are memoised per process.
const std::vector<Graph>& all_graphs(int order);
std::vector<Graph> connected_graphs(int order);
std::vector<Graph> connected_graphs_upto(int order);

}  // namespace rwit
