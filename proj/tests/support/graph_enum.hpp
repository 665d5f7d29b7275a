#pragma once

#include <cstdint>
#include <vector>

#include "tokenjump/graph.hpp"

namespace tj::testsupport {

// All connected graphs on exactly n vertices up to isomorphism, n <= 8.
// Enumerates labeled graphs, keeps those whose degree sequence is already
// non-increasing (every class has such a labeling) and deduplicates by an
// exact canonical code. Expected counts for n = 1..7:
// 1, 1, 2, 6, 21, 112, 853.
std::vector<Graph> connected_graphs_exactly(int n);

// Canonical code of the upper-triangle adjacency bits, maximized over all
// vertex orderings.
std::uint64_t canonical_code(const Graph& g);

}  // namespace tj::testsupport
