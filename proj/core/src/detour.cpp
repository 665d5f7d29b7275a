#include "tokenjump/detour.hpp"

#include <algorithm>
#include <random>

#include "tokenjump/oracle.hpp"
#include "tokenjump/witness.hpp"

namespace tj {
namespace {

std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

std::optional<VertexList> random_independent_superset(const Graph& g, const VertexList& base,
                                                      int k, std::mt19937_64& rng) {
    VertexList picked = base;
    VertexList order = g.vertices();
    for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[rng_below(rng, i)]);
    for (Vertex v : order) {
        if (static_cast<int>(picked.size()) == k) break;
        if (std::find(picked.begin(), picked.end(), v) != picked.end()) continue;
        bool clash = false;
        const auto& nv = g.neighbors(v);
        for (Vertex u : picked)
            if (std::binary_search(nv.begin(), nv.end(), u)) {
                clash = true;
                break;
            }
        if (!clash) picked.push_back(v);
    }
    if (static_cast<int>(picked.size()) != k) return std::nullopt;
    std::sort(picked.begin(), picked.end());
    return picked;
}

}  // namespace

std::optional<DetourInstance> find_detour_instance(const DetourSearch& search) {
    if (search.k < 1) throw input_error("k must be >= 1");
    if (search.max_n < search.k + 1) return std::nullopt;

    std::mt19937_64 rng(search.seed);
    const int lo_n = std::max(4, search.k + 1);
    if (search.max_n < lo_n) return std::nullopt;

    for (std::uint64_t trial = 0; trial < search.trial_budget; ++trial) {
        const int n = lo_n + static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(
                                                                 search.max_n - lo_n + 1)));
        Graph g(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (rng_below(rng, 2) == 0) g.add_edge(u, v);
        if (n >= 6 && find_k3t_witness(g, 3)) continue;

        auto start = random_independent_superset(g, {}, search.k, rng);
        if (!start) continue;
        // force a nonempty intersection: grow the target around a shared part
        const int shared_count =
            1 + static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(search.k)));
        if (shared_count >= search.k) continue;  // identical sets never detour
        VertexList shared = *start;
        for (std::size_t i = shared.size(); i > 1; --i)
            std::swap(shared[i - 1], shared[rng_below(rng, i)]);
        shared.resize(static_cast<std::size_t>(shared_count));
        std::sort(shared.begin(), shared.end());
        auto target = random_independent_superset(g, shared, search.k, rng);
        if (!target || *target == *start) continue;

        TokenSet s(*start), t(*target);
        VertexList moved;
        std::set_difference(start->begin(), start->end(), target->begin(), target->end(),
                            std::back_inserter(moved));
        VertexList common;
        std::set_intersection(start->begin(), start->end(), target->begin(), target->end(),
                              std::back_inserter(common));
        if (common.empty()) continue;

        auto seq = shortest_sequence(g, s, t);
        if (!seq) continue;
        const int len = static_cast<int>(seq->length());
        if (len <= static_cast<int>(moved.size())) continue;

        OracleOptions frozen_opts;
        frozen_opts.frozen = common;
        auto frozen_seq = shortest_sequence(g, s, t, frozen_opts);
        if (frozen_seq && static_cast<int>(frozen_seq->length()) <= len) continue;

        DetourInstance found{
            Instance::create(std::move(g), std::move(s), std::move(t), 3, Mode::planar,
                             /*check_forbidden=*/false),
            len,
            static_cast<int>(moved.size()),
            frozen_seq.has_value(),
            frozen_seq ? static_cast<int>(frozen_seq->length()) : 0,
        };
        return found;
    }
    return std::nullopt;
}

}  // namespace tj
