#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tokenjump/instance.hpp"

namespace tj {

struct Move {
    Vertex from{};
    Vertex to{};
    friend bool operator==(const Move&, const Move&) = default;
};

/// An ordered list of single-token jumps. Validity (every intermediate set
/// independent, correct endpoints) is established by verify_sequence.
struct ReconfigSequence {
    std::vector<Move> moves;

    std::size_t length() const { return moves.size(); }
    friend bool operator==(const ReconfigSequence&, const ReconfigSequence&) = default;
};

enum class ViolationKind {
    move_from_absent_vertex,
    move_to_occupied_vertex,
    intermediate_not_independent,
    wrong_final_set,
};

std::string_view violation_name(ViolationKind kind);

struct VerifyReport {
    bool ok = true;
    std::size_t index = 0;  // offending move; == moves.size() for wrong_final_set
    std::optional<ViolationKind> kind;
    std::string detail;
};

/// Replays seq from inst.start: every move must lift a present token onto a
/// free vertex keeping independence, and the final set must equal
/// inst.target. Reports the first violation.
VerifyReport verify_sequence(const Instance& inst, const ReconfigSequence& seq);

/// Applies a single move to a sorted token list (no validity checking).
VertexList apply_move(const VertexList& tokens, const Move& mv);

// wire format: {"moves":[[from,to],...]}
std::string sequence_to_json(const ReconfigSequence& seq);
ReconfigSequence sequence_from_json(const std::string& text);

}  // namespace tj
