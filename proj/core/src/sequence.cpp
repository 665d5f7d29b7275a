#include "tokenjump/sequence.hpp"

#include <algorithm>

#include "json.hpp"

namespace tj {

std::string_view violation_name(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::move_from_absent_vertex: return "move-from-absent-vertex";
        case ViolationKind::move_to_occupied_vertex: return "move-to-occupied-vertex";
        case ViolationKind::intermediate_not_independent: return "intermediate-not-independent";
        case ViolationKind::wrong_final_set: return "wrong-final-set";
    }
    return "?";
}

VertexList apply_move(const VertexList& tokens, const Move& mv) {
    VertexList next;
    next.reserve(tokens.size());
    for (Vertex v : tokens)
        if (v != mv.from) next.push_back(v);
    next.insert(std::lower_bound(next.begin(), next.end(), mv.to), mv.to);
    return next;
}

VerifyReport verify_sequence(const Instance& inst, const ReconfigSequence& seq) {
    const Graph& g = inst.graph;
    VertexList cur = inst.start.members();

    for (std::size_t i = 0; i < seq.moves.size(); ++i) {
        const Move& mv = seq.moves[i];
        g.require_live(mv.from);
        g.require_live(mv.to);
        if (!std::binary_search(cur.begin(), cur.end(), mv.from))
            return {false, i, ViolationKind::move_from_absent_vertex,
                    "no token on vertex " + std::to_string(mv.from)};
        if (std::binary_search(cur.begin(), cur.end(), mv.to))
            return {false, i, ViolationKind::move_to_occupied_vertex,
                    "vertex " + std::to_string(mv.to) + " already holds a token"};
        cur = apply_move(cur, mv);
        // cur minus the landed token was independent already; only pairs
        // through mv.to can break.
        const auto& nt = g.neighbors(mv.to);
        for (Vertex v : cur) {
            if (v != mv.to && std::binary_search(nt.begin(), nt.end(), v))
                return {false, i, ViolationKind::intermediate_not_independent,
                        "tokens on adjacent vertices " + std::to_string(mv.to) + " and " +
                            std::to_string(v)};
        }
    }

    if (cur != inst.target.members())
        return {false, seq.moves.size(), ViolationKind::wrong_final_set,
                "replay does not end at the target set"};
    return {};
}

std::string sequence_to_json(const ReconfigSequence& seq) {
    nlohmann::json moves = nlohmann::json::array();
    for (const Move& mv : seq.moves) moves.push_back({mv.from, mv.to});
    return nlohmann::json{{"moves", std::move(moves)}}.dump();
}

ReconfigSequence sequence_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(0, std::string("bad sequence JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("moves") || !doc["moves"].is_array())
        throw parse_error(0, "sequence JSON must be an object with a \"moves\" array");
    ReconfigSequence seq;
    for (const auto& entry : doc["moves"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer())
            throw parse_error(0, "each move must be a [from,to] integer pair");
        seq.moves.push_back({entry[0].get<Vertex>(), entry[1].get<Vertex>()});
    }
    return seq;
}

}  // namespace tj
