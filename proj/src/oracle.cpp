#include "aitken/oracle.hpp"

#include <stdexcept>
#include <vector>

namespace aitken::oracle {

void enumerate(unsigned n,
               const std::function<void(std::span<const unsigned>)>& visit) {
    std::vector<unsigned> codes(n, 0);
    if (n == 0) {
        visit(std::span<const unsigned>{});
        return;
    }
    // maxpref[i] = max(codes[0..i-1]); codes[i] may run up to maxpref[i]+1.
    std::vector<unsigned> maxpref(n, 0);
    for (;;) {
        visit(codes);
        // Lexicographic successor: bump the rightmost position with
        // headroom, reset everything to its right to 0.
        bool advanced = false;
        for (unsigned i = n; i-- > 1;) {
            if (codes[i] <= maxpref[i]) {
                ++codes[i];
                for (unsigned j = i + 1; j < n; ++j) {
                    codes[j] = 0;
                    maxpref[j] = std::max(maxpref[j - 1], codes[j - 1]);
                }
                advanced = true;
                break;
            }
        }
        if (!advanced) return;  // codes was the all-max string
    }
}

PartitionStats stats(unsigned n, bool allow_large) {
    if (n > kDefaultEnumCap && !allow_large)
        throw std::invalid_argument(
            "oracle::stats: n exceeds the enumeration cap; pass "
            "allow_large=true to override");

    PartitionStats st;
    st.n = n;
    st.total = 0;
    st.singleton_free = 0;

    std::vector<unsigned> block_size;
    enumerate(n, [&](std::span<const unsigned> codes) {
        st.total += 1;
        unsigned nblocks = 0;
        block_size.assign(codes.size(), 0);
        for (unsigned c : codes) {
            if (c + 1 > nblocks) nblocks = c + 1;
            ++block_size[c];
        }
        if (codes.empty()) nblocks = 0;
        st.by_block_count[nblocks] += 1;
        // largest element sitting in a size-1 block
        unsigned largest_singleton = 0;
        for (unsigned i = codes.size(); i-- > 0;) {
            if (block_size[codes[i]] == 1) {
                largest_singleton = i + 1;
                break;
            }
        }
        if (largest_singleton == 0)
            st.singleton_free += 1;
        else
            st.by_largest_singleton[largest_singleton] += 1;
    });
    return st;
}

mpq_class avg_largest_singleton(unsigned n, bool allow_large) {
    if (n < 1)
        throw std::invalid_argument("avg_largest_singleton: n must be >= 1");
    PartitionStats st = stats(n, allow_large);
    core::Nat weighted = 0;
    for (const auto& [s, count] : st.by_largest_singleton)
        weighted += s * count;
    mpq_class r(weighted, st.total);
    r.canonicalize();
    return r;
}

}  // namespace aitken::oracle
