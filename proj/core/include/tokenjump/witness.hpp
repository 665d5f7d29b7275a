#pragma once

#include <array>
#include <optional>

#include "tokenjump/graph.hpp"

namespace tj {

/// A K_{3,t} subgraph certificate: three left vertices all adjacent to
/// every right vertex. right holds the full common neighborhood of the
/// triple (minus the triple itself), so |right| >= t.
struct BipartiteWitness {
    std::array<Vertex, 3> left{};
    VertexList right;
};

/// Searches for a K_{3,t} subgraph, t >= 3. Enumerates vertex triples in
/// ascending lexicographic order and reports the first whose common
/// neighborhood (outside the triple) has size >= t; returns nothing when
/// the graph is K_{3,t}-forbidden.
std::optional<BipartiteWitness> find_k3t_witness(const Graph& g, int t);

}  // namespace tj
