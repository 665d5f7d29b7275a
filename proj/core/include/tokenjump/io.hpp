#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "tokenjump/instance.hpp"

namespace tj {

struct ReadOptions {
    Mode mode = Mode::planar;
    std::optional<int> t_override;  // replaces the header's t
    bool check_forbidden = true;
};

/// Line-oriented text format:
///   tj <n> <m> <k> <t>
///   e <u> <v>          (m times, 0-based ids)
///   s <v1> ... <vk>
///   g <v1> ... <vk>
/// '#' starts a comment line. Syntax problems raise parse_error with the
/// line number; instance-level problems (dependent sets, forbidden
/// subgraph) raise semantic_error.
Instance read_instance(std::istream& in, const ReadOptions& opts = {});
Instance read_instance_file(const std::string& path, const ReadOptions& opts = {});

/// Canonical form: sorted edge list, then the s and g lines. Requires a
/// graph without deletions (the format has no vertex list).
void write_instance(const Instance& inst, std::ostream& out);
void write_instance_file(const Instance& inst, const std::string& path);

}  // namespace tj
