#ifndef VB1_LIMITS_HPP
#define VB1_LIMITS_HPP

#include <cstdint>

namespace vb1 {

// Resource caps. Every cap fails loudly (resource_limit) rather than
// degrading the computation.
struct Limits {
    std::uint64_t max_cosets = 100000;
    std::uint64_t max_gb_pairs = 1000000;
    // Dense matrix / staircase enumeration guard, in cells.
    std::uint64_t max_dense_cells = 200000000;
    int max_rank = 4;
    std::int64_t max_exponent = 2147483647;
};

} // namespace vb1

#endif
