#include "tokenjump/ramsey.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "tokenjump/errors.hpp"

namespace tj {

std::uint64_t binomial_checked(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    // r holds binomial(n-k+i, i) after step i, so each step is an exact
    // division and intermediate values never exceed the final result.
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("binomial(" + std::to_string(n) + "," + std::to_string(k) +
                                      ") exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t ramsey_upper(std::uint64_t a, std::uint64_t b) {
    if (a < 1 || b < 1) throw input_error("ramsey_upper requires a,b >= 1");
    return binomial_checked(a + b - 2, b - 1);
}

}  // namespace tj
