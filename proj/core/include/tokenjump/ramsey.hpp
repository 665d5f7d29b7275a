#pragma once

#include <cstdint>

namespace tj {

/// binomial(n, k) in 64 bits; throws std::overflow_error instead of wrapping.
std::uint64_t binomial_checked(std::uint64_t n, std::uint64_t k);

/// The classical upper bound Ramsey(a,b) <= binomial(a+b-2, b-1), a,b >= 1.
/// Every place the solver needs a Ramsey number uses this bound; larger
/// thresholds are always sound.
std::uint64_t ramsey_upper(std::uint64_t a, std::uint64_t b);

}  // namespace tj
