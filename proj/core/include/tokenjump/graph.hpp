#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "tokenjump/errors.hpp"

namespace tj {

using Vertex = int;
using VertexList = std::vector<Vertex>;  // kept sorted wherever it denotes a set

/// Undirected simple graph over integer ids 0..id_bound()-1.
///
/// Vertices can be deleted (kernelization shrinks the graph in place);
/// the ids of surviving vertices never change, so token sets and move
/// sequences computed on a shrunk graph are valid verbatim in the graph
/// they were shrunk from. Read access is safe from multiple threads;
/// delete_vertex requires exclusive access.
class Graph {
public:
    explicit Graph(int n);
    static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    int id_bound() const { return static_cast<int>(adj_.size()); }
    int order() const { return live_count_; }
    std::size_t edge_count() const { return edge_count_; }

    bool is_live(Vertex v) const {
        return v >= 0 && v < id_bound() && live_[static_cast<std::size_t>(v)];
    }
    void require_live(Vertex v) const;

    VertexList vertices() const;  // sorted live ids
    const VertexList& neighbors(Vertex v) const;
    int degree(Vertex v) const;
    bool has_edge(Vertex u, Vertex v) const;
    std::vector<std::pair<Vertex, Vertex>> edges() const;  // u < v, sorted

    void add_edge(Vertex u, Vertex v);  // rejects self-loops and duplicates
    void delete_vertex(Vertex v);       // removes v and all incident edges

private:
    std::vector<VertexList> adj_;
    std::vector<char> live_;
    int live_count_ = 0;
    std::size_t edge_count_ = 0;
};

bool is_independent(const Graph& g, std::span<const Vertex> s);

// N(S) = union of open neighborhoods; may intersect S.
VertexList open_neighborhood(const Graph& g, std::span<const Vertex> s);
// N[S] = N(S) with S added.
VertexList closed_neighborhood(const Graph& g, std::span<const Vertex> s);

}  // namespace tj
