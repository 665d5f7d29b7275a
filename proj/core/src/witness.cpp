#include "tokenjump/witness.hpp"

#include <algorithm>
#include <iterator>

namespace tj {

std::optional<BipartiteWitness> find_k3t_witness(const Graph& g, int t) {
    if (t < 3) throw input_error("K_{3,t} search requires t >= 3");

    const VertexList verts = g.vertices();
    const int n = static_cast<int>(verts.size());
    VertexList common_ab, common_abc;

    for (int i = 0; i < n; ++i) {
        const Vertex a = verts[i];
        if (g.degree(a) < t) continue;
        for (int j = i + 1; j < n; ++j) {
            const Vertex b = verts[j];
            if (g.degree(b) < t) continue;
            common_ab.clear();
            const auto& na = g.neighbors(a);
            const auto& nb = g.neighbors(b);
            std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(),
                                  std::back_inserter(common_ab));
            if (static_cast<int>(common_ab.size()) < t) continue;
            for (int l = j + 1; l < n; ++l) {
                const Vertex c = verts[l];
                if (g.degree(c) < t) continue;
                common_abc.clear();
                const auto& nc = g.neighbors(c);
                std::set_intersection(common_ab.begin(), common_ab.end(), nc.begin(), nc.end(),
                                      std::back_inserter(common_abc));
                // the right side must lie outside the triple
                std::erase_if(common_abc, [&](Vertex v) { return v == a || v == b || v == c; });
                if (static_cast<int>(common_abc.size()) >= t)
                    return BipartiteWitness{{a, b, c}, common_abc};
            }
        }
    }
    return std::nullopt;
}

}  // namespace tj
