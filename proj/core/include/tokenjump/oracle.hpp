#pragma once

#include <cstdint>
#include <optional>

#include "tokenjump/sequence.hpp"

namespace tj {

struct OracleOptions {
    /// Abort with resource_limit_error once this many configurations have
    /// been discovered. The search is exponential by design; failures must
    /// be loud, not thrashing.
    std::uint64_t node_budget = 50'000'000;

    /// Tokens sitting on these vertices may never be moved. Used to certify
    /// detours: freezing the shared vertices of I_0 and I_r tests whether
    /// some shortest sequence leaves them alone.
    VertexList frozen;
};

/// True iff target is reachable from start under single-token jumps.
/// Lazy breadth-first search over the configuration graph: neighbors of a
/// configuration are generated on demand and visited configurations are
/// hashed by canonical form, so the full node set is never materialized.
bool bfs_reachable(const Graph& g, const TokenSet& start, const TokenSet& target,
                   const OracleOptions& opts = {});

/// A provably minimum-length sequence (BFS layering), or nothing when
/// unreachable. Deterministic: neighbor generation is ascending in the
/// vacated vertex, then in the landing vertex.
std::optional<ReconfigSequence> shortest_sequence(const Graph& g, const TokenSet& start,
                                                  const TokenSet& target,
                                                  const OracleOptions& opts = {});

}  // namespace tj
