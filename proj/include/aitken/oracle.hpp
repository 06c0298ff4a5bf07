#ifndef AITKEN_ORACLE_HPP
#define AITKEN_ORACLE_HPP

#include <functional>
#include <map>
#include <span>

#include "aitken/exact_core.hpp"

namespace aitken::oracle {

// Default ceiling for full enumeration (B_12 ~ 4.2M partitions). Calls above
// it must opt in explicitly.
inline constexpr unsigned kDefaultEnumCap = 12;

// Visits every set partition of [n] exactly once, encoded as a restricted
// growth string (codes[0] = 0, codes[i] <= 1 + max of earlier codes), in
// lexicographic order. n = 0 visits the single empty string.
void enumerate(unsigned n,
               const std::function<void(std::span<const unsigned>)>& visit);

struct PartitionStats {
    unsigned n = 0;
    core::Nat total;
    core::Nat singleton_free;
    // s -> number of partitions whose largest singleton block is {s}.
    // Partitions with no singleton are absent here, not keyed by 0.
    std::map<unsigned, core::Nat> by_largest_singleton;
    // j -> number of partitions with exactly j blocks.
    std::map<unsigned, core::Nat> by_block_count;
};

// Direct counting over the full enumeration. Throws std::invalid_argument
// when n exceeds the cap and allow_large is false.
PartitionStats stats(unsigned n, bool allow_large = false);

// (sum_s s * by_largest_singleton[s]) / B_n, exact. Requires n >= 1.
mpq_class avg_largest_singleton(unsigned n, bool allow_large = false);

}  // namespace aitken::oracle

#endif
