#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hint/core.hpp"

namespace hint {

struct PartitionAddress {
    int level = 0;            // 0 (root) .. m (finest)
    std::uint64_t offset = 0; // < 2^level

    friend bool operator==(const PartitionAddress&, const PartitionAddress&) = default;
};

// Walks the smallest set of partitions that tile [st, end] in an m-bit
// domain, bottom level first. Per level, while the running bounds [a, b] are
// non-empty: an odd a emits (level, a) and advances, an even b emits
// (level, b) and retreats, then both lose their last bit. At most two
// partitions per level are emitted.
//
// The emission whose offset equals prefix(level, st) holds the interval's
// start; that one is flagged as the original, every other one is a replica.
template <typename Emit>
void for_each_partition(std::uint64_t st, std::uint64_t end, int m, Emit&& emit) {
    assert(st <= end);
    assert(m >= 64 || end < (std::uint64_t{1} << m));
    std::uint64_t a = st;
    std::uint64_t b = end;
    for (int level = m; level >= 0 && a <= b; --level) {
        const int shift = m - level;
        if (a & 1u) {
            emit(level, a, (st >> shift) == a);
            ++a;
        }
        if ((b & 1u) == 0) {
            emit(level, b, (st >> shift) == b);
            if (b == 0) return;  // start of domain; nothing remains above
            --b;
        }
        a >>= 1;
        b >>= 1;
    }
}

inline std::vector<std::pair<PartitionAddress, bool>>
assign_partitions(std::uint64_t st, std::uint64_t end, int m) {
    std::vector<std::pair<PartitionAddress, bool>> out;
    for_each_partition(st, end, m, [&](int level, std::uint64_t offset, bool original) {
        out.push_back({PartitionAddress{level, offset}, original});
    });
    return out;
}

}  // namespace hint
