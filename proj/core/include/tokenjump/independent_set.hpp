#pragma once

#include <optional>

#include "tokenjump/graph.hpp"

namespace tj {

/// Exact search for an independent set of size exactly `size`; returns
/// nothing when none exists. Branch-and-bound over closed neighborhoods of
/// a minimum-degree vertex, with a greedy lower bound for early success.
/// Deterministic (ascending-id choices throughout). Worst case exponential;
/// callers only invoke it on vertex sets whose order is bounded by a
/// function of the token count.
std::optional<VertexList> find_independent_set_exact(const Graph& g, int size);

/// Same search restricted to the induced subgraph on `candidates`.
std::optional<VertexList> find_independent_set_exact(const Graph& g,
                                                     std::span<const Vertex> candidates,
                                                     int size);

}  // namespace tj
