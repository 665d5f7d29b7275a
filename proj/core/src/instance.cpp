#include "tokenjump/instance.hpp"

#include <sstream>

#include "tokenjump/witness.hpp"

namespace tj {

std::string_view mode_name(Mode mode) {
    return mode == Mode::planar ? "planar" : "general";
}

Mode mode_from_name(std::string_view name) {
    if (name == "planar") return Mode::planar;
    if (name == "general" || name == "k3t-general") return Mode::k3t_general;
    throw input_error("unknown mode: " + std::string(name));
}

Instance Instance::create(Graph graph, TokenSet start, TokenSet target, int t, Mode mode,
                          bool check_forbidden) {
    if (t < 3) throw semantic_error("forbiddance parameter t must be >= 3");
    if (start.size() != target.size())
        throw semantic_error("start and target sets differ in size");
    if (start.size() < 1) throw semantic_error("token count k must be >= 1");
    for (Vertex v : start.members()) graph.require_live(v);
    for (Vertex v : target.members()) graph.require_live(v);
    if (!is_independent(graph, start.members()))
        throw semantic_error("start set not independent");
    if (!is_independent(graph, target.members()))
        throw semantic_error("target set not independent");

    Instance inst{std::move(graph), std::move(start), std::move(target), t, mode};
    if (check_forbidden) inst.check_forbiddance();
    return inst;
}

void Instance::check_forbiddance() const {
    const int ft = forbiddance_t();
    if (auto w = find_k3t_witness(graph, ft)) {
        std::ostringstream msg;
        msg << "graph contains K_{3," << ft << "}: left {";
        msg << w->left[0] << "," << w->left[1] << "," << w->left[2] << "}, right {";
        for (std::size_t i = 0; i < w->right.size(); ++i) {
            if (i) msg << ",";
            msg << w->right[i];
        }
        msg << "}";
        throw semantic_error(msg.str());
    }
}

}  // namespace tj
