#include "tokenjump/independent_set.hpp"

#include <algorithm>
#include <iterator>

namespace tj {
namespace {

// |N(v) ∩ cands| for sorted cands
int degree_within(const Graph& g, const VertexList& cands, Vertex v) {
    int d = 0;
    for (Vertex u : g.neighbors(v))
        if (std::binary_search(cands.begin(), cands.end(), u)) ++d;
    return d;
}

Vertex min_degree_vertex(const Graph& g, const VertexList& cands) {
    Vertex best = cands.front();
    int best_deg = degree_within(g, cands, best);
    for (std::size_t i = 1; i < cands.size() && best_deg > 0; ++i) {
        int d = degree_within(g, cands, cands[i]);
        if (d < best_deg) {
            best = cands[i];
            best_deg = d;
        }
    }
    return best;
}

// Repeatedly take a minimum-degree vertex (smallest id on ties) and drop
// its closed neighborhood.
VertexList greedy_independent(const Graph& g, VertexList cands) {
    VertexList picked;
    while (!cands.empty()) {
        Vertex v = min_degree_vertex(g, cands);
        picked.push_back(v);
        VertexList next;
        next.reserve(cands.size());
        const auto& nv = g.neighbors(v);
        for (Vertex u : cands)
            if (u != v && !std::binary_search(nv.begin(), nv.end(), u)) next.push_back(u);
        cands = std::move(next);
    }
    return picked;
}

VertexList remove_closed_neighborhood(const Graph& g, const VertexList& cands, Vertex v) {
    VertexList next;
    next.reserve(cands.size());
    const auto& nv = g.neighbors(v);
    for (Vertex u : cands)
        if (u != v && !std::binary_search(nv.begin(), nv.end(), u)) next.push_back(u);
    return next;
}

struct Search {
    const Graph& g;
    int want;
    VertexList current;

    bool run(VertexList cands) {
        if (static_cast<int>(current.size()) >= want) return true;
        int missing = want - static_cast<int>(current.size());
        if (static_cast<int>(cands.size()) < missing) return false;

        VertexList greedy = greedy_independent(g, cands);
        if (static_cast<int>(greedy.size()) >= missing) {
            current.insert(current.end(), greedy.begin(), greedy.begin() + missing);
            return true;
        }

        // Every maximal independent set meets N[v]; branch on which member
        // it contains, excluding earlier branch vertices to avoid revisits.
        Vertex v = min_degree_vertex(g, cands);
        VertexList branch;
        branch.push_back(v);
        for (Vertex u : g.neighbors(v))
            if (std::binary_search(cands.begin(), cands.end(), u)) branch.push_back(u);
        std::sort(branch.begin(), branch.end());

        for (std::size_t i = 0; i < branch.size(); ++i) {
            VertexList next = remove_closed_neighborhood(g, cands, branch[i]);
            if (i > 0) {
                VertexList filtered;
                filtered.reserve(next.size());
                for (Vertex u : next)
                    if (std::find(branch.begin(), branch.begin() + static_cast<long>(i), u) ==
                        branch.begin() + static_cast<long>(i))
                        filtered.push_back(u);
                next = std::move(filtered);
            }
            current.push_back(branch[i]);
            if (run(std::move(next))) return true;
            current.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<VertexList> find_independent_set_exact(const Graph& g,
                                                     std::span<const Vertex> candidates,
                                                     int size) {
    if (size < 0) throw input_error("independent set size must be non-negative");
    VertexList cands(candidates.begin(), candidates.end());
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (Vertex v : cands) g.require_live(v);

    if (size == 0) return VertexList{};
    if (static_cast<int>(cands.size()) < size) return std::nullopt;

    Search s{g, size, {}};
    if (!s.run(std::move(cands))) return std::nullopt;
    std::sort(s.current.begin(), s.current.end());
    return s.current;
}

std::optional<VertexList> find_independent_set_exact(const Graph& g, int size) {
    return find_independent_set_exact(g, g.vertices(), size);
}

}  // namespace tj
