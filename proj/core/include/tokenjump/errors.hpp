#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tj {

// Malformed caller input: unknown vertex ids, dependent token sets, bad parameters.
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input that parses but violates an instance-level requirement
// (start set not independent, forbidden subgraph present, ...).
class semantic_error : public input_error {
public:
    using input_error::input_error;
};

// Syntactic failure while reading an instance or sequence file.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// A precondition the caller was required to guarantee does not hold.
class contract_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// An instance family spec that cannot be realized (e.g. k exceeds the
// independence number of the requested graph).
class generation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The configuration-graph search exceeded its node budget.
class resource_limit_error : public std::runtime_error {
public:
    resource_limit_error(std::uint64_t visited, const std::string& what)
        : std::runtime_error(what), visited_(visited) {}

    std::uint64_t visited() const { return visited_; }

private:
    std::uint64_t visited_;
};

}  // namespace tj
