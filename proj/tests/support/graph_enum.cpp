#include "support/graph_enum.hpp"

#include <array>
#include <bit>
#include <unordered_set>

namespace tj::testsupport {
namespace {

constexpr int kMaxN = 8;

struct Canon {
    int n = 0;
    std::array<std::uint8_t, kMaxN> rows{};
    int total_bits = 0;
    std::uint64_t best = 0;
    bool have_best = false;
    std::array<int, kMaxN> perm{};

    // Place original vertices into positions one at a time; each placement
    // emits the adjacency bits toward the already-placed prefix. Prune
    // branches whose emitted prefix falls below the best complete code.
    void dfs(int depth, std::uint64_t prefix, int prefix_bits, unsigned used) {
        if (depth == n) {
            if (!have_best || prefix > best) {
                best = prefix;
                have_best = true;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used & (1u << v)) continue;
            std::uint64_t bits = 0;
            for (int i = 0; i < depth; ++i)
                bits = (bits << 1) | ((rows[static_cast<std::size_t>(v)] >> perm[static_cast<std::size_t>(i)]) & 1u);
            const std::uint64_t next_prefix = (prefix << depth) | bits;
            const int next_bits = prefix_bits + depth;
            if (have_best && next_prefix < (best >> (total_bits - next_bits))) continue;
            perm[static_cast<std::size_t>(depth)] = v;
            dfs(depth + 1, next_prefix, next_bits, used | (1u << v));
        }
    }

    std::uint64_t run() {
        total_bits = n * (n - 1) / 2;
        best = 0;
        have_best = false;
        dfs(0, 0, 0, 0);
        return best;
    }
};

bool rows_connected(const std::array<std::uint8_t, kMaxN>& rows, int n) {
    unsigned reached = 1;
    unsigned frontier = 1;
    while (frontier) {
        unsigned next = 0;
        for (int v = 0; v < n; ++v)
            if (frontier & (1u << v)) next |= rows[static_cast<std::size_t>(v)];
        frontier = next & ~reached;
        reached |= next;
    }
    return reached == (1u << n) - 1u;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
    Canon canon;
    canon.n = g.order();
    if (canon.n > kMaxN) throw input_error("canonical_code supports order <= 8");
    VertexList verts = g.vertices();
    for (int i = 0; i < canon.n; ++i)
        for (int j = 0; j < canon.n; ++j)
            if (i != j && g.has_edge(verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>(j)]))
                canon.rows[static_cast<std::size_t>(i)] |= static_cast<std::uint8_t>(1u << j);
    return canon.run();
}

std::vector<Graph> connected_graphs_exactly(int n) {
    if (n < 1 || n > 7) throw input_error("connected_graphs_exactly supports 1 <= n <= 7");

    std::vector<std::pair<int, int>> bit_edge;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) bit_edge.emplace_back(i, j);
    const int nb = static_cast<int>(bit_edge.size());

    std::unordered_set<std::uint64_t> seen;
    std::vector<Graph> out;

    for (std::uint32_t mask = 0; mask < (1u << nb); ++mask) {
        std::array<std::uint8_t, kMaxN> rows{};
        for (int b = 0; b < nb; ++b) {
            if (mask & (1u << b)) {
                auto [i, j] = bit_edge[static_cast<std::size_t>(b)];
                rows[static_cast<std::size_t>(i)] |= static_cast<std::uint8_t>(1u << j);
                rows[static_cast<std::size_t>(j)] |= static_cast<std::uint8_t>(1u << i);
            }
        }
        // cheap class representative filter: non-increasing degrees
        bool sorted = true;
        for (int v = 0; v + 1 < n && sorted; ++v)
            sorted = std::popcount(rows[static_cast<std::size_t>(v)]) >=
                     std::popcount(rows[static_cast<std::size_t>(v + 1)]);
        if (!sorted) continue;
        if (!rows_connected(rows, n)) continue;

        Canon canon;
        canon.n = n;
        canon.rows = rows;
        if (!seen.insert(canon.run()).second) continue;

        Graph g(n);
        for (int b = 0; b < nb; ++b)
            if (mask & (1u << b)) g.add_edge(bit_edge[static_cast<std::size_t>(b)].first,
                                             bit_edge[static_cast<std::size_t>(b)].second);
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace tj::testsupport
