#include "tokenjump/graph.hpp"

#include <algorithm>
#include <string>

namespace tj {

Graph::Graph(int n) {
    if (n < 0) throw input_error("vertex count must be non-negative");
    adj_.resize(static_cast<std::size_t>(n));
    live_.assign(static_cast<std::size_t>(n), 1);
    live_count_ = n;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::require_live(Vertex v) const {
    if (!is_live(v)) throw input_error("unknown vertex id " + std::to_string(v));
}

VertexList Graph::vertices() const {
    VertexList out;
    out.reserve(static_cast<std::size_t>(live_count_));
    for (Vertex v = 0; v < id_bound(); ++v)
        if (live_[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

const VertexList& Graph::neighbors(Vertex v) const {
    require_live(v);
    return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(Vertex u, Vertex v) const {
    require_live(u);
    require_live(v);
    const auto& nu = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < id_bound(); ++u) {
        if (!live_[static_cast<std::size_t>(u)]) continue;
        for (Vertex v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    }
    return out;
}

void Graph::add_edge(Vertex u, Vertex v) {
    require_live(u);
    require_live(v);
    if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
    auto& nu = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v)
        throw input_error("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    nu.insert(it, v);
    auto& nv = adj_[static_cast<std::size_t>(v)];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
}

void Graph::delete_vertex(Vertex v) {
    require_live(v);
    auto& nv = adj_[static_cast<std::size_t>(v)];
    for (Vertex u : nv) {
        auto& nu = adj_[static_cast<std::size_t>(u)];
        nu.erase(std::lower_bound(nu.begin(), nu.end(), v));
    }
    edge_count_ -= nv.size();
    nv.clear();
    nv.shrink_to_fit();
    live_[static_cast<std::size_t>(v)] = 0;
    --live_count_;
}

bool is_independent(const Graph& g, std::span<const Vertex> s) {
    for (Vertex v : s) g.require_live(v);
    VertexList sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    for (Vertex v : sorted) {
        for (Vertex u : g.neighbors(v)) {
            if (u > v) break;  // each edge checked once
            if (std::binary_search(sorted.begin(), sorted.end(), u)) return false;
        }
    }
    return true;
}

VertexList open_neighborhood(const Graph& g, std::span<const Vertex> s) {
    std::vector<char> mark(static_cast<std::size_t>(g.id_bound()), 0);
    for (Vertex v : s) {
        g.require_live(v);
        for (Vertex u : g.neighbors(v)) mark[static_cast<std::size_t>(u)] = 1;
    }
    VertexList out;
    for (Vertex v = 0; v < g.id_bound(); ++v)
        if (mark[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

VertexList closed_neighborhood(const Graph& g, std::span<const Vertex> s) {
    std::vector<char> mark(static_cast<std::size_t>(g.id_bound()), 0);
    for (Vertex v : s) {
        g.require_live(v);
        mark[static_cast<std::size_t>(v)] = 1;
        for (Vertex u : g.neighbors(v)) mark[static_cast<std::size_t>(u)] = 1;
    }
    VertexList out;
    for (Vertex v = 0; v < g.id_bound(); ++v)
        if (mark[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

}  // namespace tj
