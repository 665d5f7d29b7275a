#pragma once

#include <string_view>

#include "tokenjump/graph.hpp"
#include "tokenjump/token_set.hpp"

namespace tj {

/// Which forbiddance class the solver may assume. Planar mode runs the
/// 4k/10k thresholds and gates on K_{3,3}-forbiddance (the only planarity
/// property the algorithm uses); general mode gates on K_{3,t} and uses
/// Ramsey-bound thresholds.
enum class Mode { planar, k3t_general };

std::string_view mode_name(Mode mode);
Mode mode_from_name(std::string_view name);

struct Instance {
    Graph graph;
    TokenSet start;   // I_0
    TokenSet target;  // I_r
    int t = 3;
    Mode mode = Mode::planar;

    int k() const { return start.size(); }
    int forbiddance_t() const { return mode == Mode::planar ? 3 : t; }

    /// Validates |start| = |target| = k >= 1, liveness, independence of both
    /// sets and, unless check_forbidden is false, the mode's forbiddance.
    static Instance create(Graph graph, TokenSet start, TokenSet target, int t, Mode mode,
                           bool check_forbidden = true);

    /// Re-runs the forbiddance check; throws semantic_error with an embedded
    /// witness description on failure.
    void check_forbiddance() const;
};

}  // namespace tj
