#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "tokenjump/instance.hpp"

namespace tj {

enum class Family {
    grid,
    cycle,
    path,
    star_gadget,
    k2m_gadget,
    buffer_gadget,
    random_planar,
};

std::string_view family_name(Family f);

/// grid / random-planar take rows+cols; cycle / path take n; k2m takes the
/// class size m (default 10k+5). Without a seed the terminal sets are the
/// canonical extremes (lexicographically smallest and largest independent
/// k-sets); with a seed they are sampled. All families generate planar,
/// hence K_{3,3}-forbidden, graphs.
struct FamilySpec {
    Family family = Family::grid;
    int rows = 0;
    int cols = 0;
    int n = 0;
    int m = 0;
    int k = 1;
    std::optional<std::uint64_t> seed;
};

/// "family=grid,rows=4,cols=4,k=3,seed=7"
FamilySpec parse_family_spec(std::string_view text);
std::map<std::string, std::string, std::less<>> parse_kv_spec(std::string_view text);

/// Deterministic given spec (and seed); throws generation_error when the
/// spec cannot be realized.
Instance generate(const FamilySpec& spec);

}  // namespace tj
