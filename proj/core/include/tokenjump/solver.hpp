#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tokenjump/oracle.hpp"

namespace tj {

/// V split around the terminal sets: core = I_0 ∪ I_r, fringe = N(core)
/// minus core (every member has a core neighbor), remote = everything
/// outside N[core] (no member touches the core).
struct Partition {
    VertexList core;
    VertexList fringe;
    VertexList remote;
};

/// alpha: remote-size threshold that guarantees a buffer (Step 1).
/// beta: class-size threshold for Step 2 / shrinking.
/// Planar mode: alpha = 4k, beta = 10k. General mode: alpha =
/// ramsey_upper(k, t+3), beta = ramsey_upper((2t+1)k, t+3).
struct Thresholds {
    std::uint64_t alpha = 0;
    std::uint64_t beta = 0;
    Mode mode = Mode::planar;
    int t = 3;
};

/// Fringe vertices sharing the identical neighbor set (the key) within
/// V minus fringe. Every member-key pair is an edge, so members x key is a
/// complete bipartite subgraph.
struct NeighborhoodClass {
    VertexList key;
    VertexList members;
};

enum class Answer { yes, no };
enum class DecidedAt { step1, step2, step4 };

std::string_view answer_name(Answer a);
std::string_view decided_at_name(DecidedAt d);

struct SolveOptions {
    std::uint64_t oracle_node_budget = 50'000'000;
};

struct SolveOutcome {
    Answer answer = Answer::no;
    DecidedAt decided_at = DecidedAt::step4;
    std::optional<ReconfigSequence> sequence;  // present whenever answer is yes
    std::optional<Graph> kernel;               // present when step 4 was reached
    VertexList deleted;                        // vertices removed by shrinking
    Thresholds thresholds;
};

Thresholds compute_thresholds(int k, Mode mode, int t);

Partition compute_partition(const Instance& inst);

/// Groups fringe vertices by their exact neighbor set within V minus
/// fringe, by hashing each restricted neighbor list (never by enumerating
/// binary vectors). Classes are returned sorted by key.
std::vector<NeighborhoodClass> neighborhood_classes(const Graph& g, const Partition& part);

/// Step 1: when the remote side is large enough, look for a k-buffer inside
/// it. Nothing means either |remote| < alpha or the exact search failed
/// (possible only off the guaranteed regime); yes is never reported without
/// a concrete buffer.
std::optional<VertexList> step1_check(const Partition& part, const Thresholds& th,
                                      const Graph& g, int k);

struct Step2Result {
    VertexList buffer;
    std::optional<Vertex> w0;  // the unique key vertex in I_0, when present
    std::optional<Vertex> wr;  // the unique key vertex in I_r, when present
};

/// Step 2: for an oversized class whose key meets both terminal sets at
/// most once, find a buffer inside the class (size 2k planar, (2t+1)k
/// general).
std::optional<Step2Result> step2_check(const NeighborhoodClass& cls, const Thresholds& th,
                                       const Instance& inst);

/// Emits the buffer schedule: detour the key token out of the way, route
/// all movers through the buffer, then fill the target side. With w0/wr
/// absent this degenerates to the two-phase form. Tokens already on target
/// vertices stay put; emitted length <= 2k.
ReconfigSequence build_buffer_sequence(const TokenSet& start, const TokenSet& target,
                                       const VertexList& buffer, std::optional<Vertex> w0,
                                       std::optional<Vertex> wr);

/// Step 3: retains the beta members with smallest ids and deletes the rest
/// from g; returns the deleted vertices. Requires an oversized class that
/// failed the Step-2 condition.
VertexList shrink_class(Graph& g, const NeighborhoodClass& cls, const Thresholds& th);

/// Order bound on the shrunk graph: 2^{6k+1} + 180k^3 in planar mode, the
/// analogous Ramsey-threshold expression in general mode.
std::uint64_t kernel_size_bound(int k, Mode mode, int t);

struct KernelizeOutcome {
    Graph kernel;
    VertexList deleted;
    Thresholds thresholds;
    std::optional<SolveOutcome> early;  // set when Step 1 or Step 2 already decided
};

/// Steps 1-3 only: either an early yes (with sequence) or the shrunk graph.
KernelizeOutcome kernelize(const Instance& inst);

/// The full pipeline; a kernel decision (Step 4) runs the configuration
/// search on the shrunk graph. Sequences are valid verbatim on the original
/// instance. Oracle budget exhaustion is rethrown with the kernel order in
/// the message.
SolveOutcome solve(const Instance& inst, const SolveOptions& opts = {});

std::string outcome_to_json(const SolveOutcome& outcome);

}  // namespace tj
