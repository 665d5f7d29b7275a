#pragma once

#include <cstdint>
#include <optional>

#include "tokenjump/instance.hpp"
#include "tokenjump/sequence.hpp"

namespace tj {

struct DetourSearch {
    int max_n = 8;
    int k = 3;
    std::uint64_t seed = 1;
    std::uint64_t trial_budget = 500'000;
};

struct DetourInstance {
    Instance instance;
    int shortest_len = 0;
    int lower_bound = 0;  // |I_0 \ I_r|
    bool frozen_reachable = false;
    int frozen_len = 0;  // meaningful when frozen_reachable
};

/// Randomized search over small K_{3,3}-forbidden graphs for an instance
/// with I_0 ∩ I_r nonempty whose shortest sequence is strictly longer than
/// |I_0 \ I_r| and where every minimum-length sequence moves a shared
/// token (certified by a search with the shared vertices frozen being
/// unreachable or strictly longer). Deterministic given the seed; returns
/// nothing when the trial budget is exhausted.
std::optional<DetourInstance> find_detour_instance(const DetourSearch& search = {});

}  // namespace tj
