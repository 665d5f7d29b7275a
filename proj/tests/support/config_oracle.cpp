#include "support/config_oracle.hpp"

#include <algorithm>
#include <deque>

namespace tj::testsupport {
namespace {

// all size-k subsets of verts in lexicographic order, filtered to
// independent ones
void enumerate_independent(const Graph& g, const VertexList& verts, int k, VertexList& pick,
                           std::size_t from, std::vector<VertexList>& out) {
    if (static_cast<int>(pick.size()) == k) {
        if (is_independent(g, pick)) out.push_back(pick);
        return;
    }
    for (std::size_t i = from; i < verts.size(); ++i) {
        pick.push_back(verts[i]);
        enumerate_independent(g, verts, k, pick, i + 1, out);
        pick.pop_back();
    }
}

}  // namespace

ExplicitConfigGraph::ExplicitConfigGraph(const Graph& g, int k) {
    VertexList verts = g.vertices();
    VertexList pick;
    enumerate_independent(g, verts, k, pick, 0, nodes_);

    adjacency_.resize(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        for (std::size_t j = i + 1; j < nodes_.size(); ++j) {
            VertexList common;
            std::set_intersection(nodes_[i].begin(), nodes_[i].end(), nodes_[j].begin(),
                                  nodes_[j].end(), std::back_inserter(common));
            if (static_cast<int>(common.size()) == k - 1) {
                adjacency_[i].push_back(static_cast<int>(j));
                adjacency_[j].push_back(static_cast<int>(i));
            }
        }
    }
}

std::optional<int> ExplicitConfigGraph::index_of(const VertexList& config) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), config);
    if (it == nodes_.end() || *it != config) return std::nullopt;
    return static_cast<int>(it - nodes_.begin());
}

std::optional<int> ExplicitConfigGraph::distance(const VertexList& a, const VertexList& b) const {
    auto ia = index_of(a), ib = index_of(b);
    if (!ia || !ib) return std::nullopt;
    std::vector<int> dist(nodes_.size(), -1);
    std::deque<int> queue{*ia};
    dist[static_cast<std::size_t>(*ia)] = 0;
    while (!queue.empty()) {
        int at = queue.front();
        queue.pop_front();
        if (at == *ib) return dist[static_cast<std::size_t>(at)];
        for (int next : adjacency_[static_cast<std::size_t>(at)]) {
            if (dist[static_cast<std::size_t>(next)] < 0) {
                dist[static_cast<std::size_t>(next)] = dist[static_cast<std::size_t>(at)] + 1;
                queue.push_back(next);
            }
        }
    }
    return std::nullopt;
}

bool ExplicitConfigGraph::reachable(const VertexList& a, const VertexList& b) const {
    return distance(a, b).has_value();
}

}  // namespace tj::testsupport
