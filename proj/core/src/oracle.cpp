#include "tokenjump/oracle.hpp"

#include <algorithm>
#include <cstddef>
#include <unordered_map>
#include <vector>

namespace tj {
namespace {

struct ConfigHash {
    std::size_t operator()(const VertexList& c) const noexcept {
        std::size_t h = c.size();
        for (Vertex v : c)
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

struct Node {
    VertexList config;
    int parent;  // -1 at the root
    Move via;
};

void validate_endpoints(const Graph& g, const TokenSet& start, const TokenSet& target) {
    if (start.size() != target.size())
        throw input_error("start and target sets differ in size");
    for (Vertex v : start.members()) g.require_live(v);
    for (Vertex v : target.members()) g.require_live(v);
    if (!is_independent(g, start.members())) throw input_error("start set not independent");
    if (!is_independent(g, target.members())) throw input_error("target set not independent");
}

std::optional<std::vector<Move>> bfs(const Graph& g, const TokenSet& start,
                                     const TokenSet& target, const OracleOptions& opts) {
    validate_endpoints(g, start, target);
    for (Vertex v : opts.frozen) g.require_live(v);

    if (start == target) return std::vector<Move>{};

    std::vector<char> frozen(static_cast<std::size_t>(g.id_bound()), 0);
    for (Vertex v : opts.frozen) frozen[static_cast<std::size_t>(v)] = 1;

    const VertexList verts = g.vertices();
    std::vector<Node> nodes;
    std::unordered_map<VertexList, int, ConfigHash> seen;
    nodes.push_back({start.members(), -1, {}});
    seen.emplace(start.members(), 0);

    auto reconstruct = [&](int idx) {
        std::vector<Move> moves;
        for (int at = idx; nodes[static_cast<std::size_t>(at)].parent >= 0;
             at = nodes[static_cast<std::size_t>(at)].parent)
            moves.push_back(nodes[static_cast<std::size_t>(at)].via);
        std::reverse(moves.begin(), moves.end());
        return moves;
    };

    for (std::size_t head = 0; head < nodes.size(); ++head) {
        // nodes grows while we iterate; copy the config out
        const VertexList config = nodes[head].config;
        for (Vertex from : config) {
            if (frozen[static_cast<std::size_t>(from)]) continue;
            for (Vertex to : verts) {
                if (std::binary_search(config.begin(), config.end(), to)) continue;
                const auto& nt = g.neighbors(to);
                bool blocked = false;
                for (Vertex w : config) {
                    if (w == from) continue;
                    if (std::binary_search(nt.begin(), nt.end(), w)) {
                        blocked = true;
                        break;
                    }
                }
                if (blocked) continue;
                VertexList next = apply_move(config, {from, to});
                auto [it, inserted] = seen.emplace(std::move(next), static_cast<int>(nodes.size()));
                if (!inserted) continue;
                nodes.push_back({it->first, static_cast<int>(head), {from, to}});
                if (it->first == target.members())
                    return reconstruct(static_cast<int>(nodes.size()) - 1);
                if (nodes.size() > opts.node_budget)
                    throw resource_limit_error(
                        nodes.size(), "configuration search exceeded node budget of " +
                                          std::to_string(opts.node_budget));
            }
        }
    }
    return std::nullopt;
}

}  // namespace

bool bfs_reachable(const Graph& g, const TokenSet& start, const TokenSet& target,
                   const OracleOptions& opts) {
    return bfs(g, start, target, opts).has_value();
}

std::optional<ReconfigSequence> shortest_sequence(const Graph& g, const TokenSet& start,
                                                  const TokenSet& target,
                                                  const OracleOptions& opts) {
    auto moves = bfs(g, start, target, opts);
    if (!moves) return std::nullopt;
    return ReconfigSequence{std::move(*moves)};
}

}  // namespace tj
