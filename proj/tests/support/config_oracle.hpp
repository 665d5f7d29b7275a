#pragma once

#include <optional>
#include <vector>

#include "tokenjump/token_set.hpp"

namespace tj::testsupport {

// Ground-truth oracle that materializes the whole configuration graph:
// every independent k-set is a node, two nodes are adjacent iff they differ
// by a single token jump. Deliberately independent of the production lazy
// search so the two can cross-check each other. Only for small graphs.
class ExplicitConfigGraph {
public:
    ExplicitConfigGraph(const Graph& g, int k);

    int node_count() const { return static_cast<int>(nodes_.size()); }
    const std::vector<VertexList>& nodes() const { return nodes_; }

    std::optional<int> index_of(const VertexList& config) const;
    bool reachable(const VertexList& a, const VertexList& b) const;
    // minimum number of jumps, nothing when unreachable
    std::optional<int> distance(const VertexList& a, const VertexList& b) const;

private:
    std::vector<VertexList> nodes_;            // lexicographic order
    std::vector<std::vector<int>> adjacency_;  // node indices
};

}  // namespace tj::testsupport
