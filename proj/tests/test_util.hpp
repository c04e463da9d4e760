#pragma once

#include <algorithm>
#include <vector>

#include "hint/core.hpp"
#include "hint/grid.hpp"
#include "hint/rng.hpp"

namespace hint::test {

inline std::vector<RecordId> sorted(std::vector<RecordId> ids) {
    std::sort(ids.begin(), ids.end());
    return ids;
}

inline std::vector<RecordId> oracle(std::span<const Interval> intervals, QueryRange q) {
    return sorted(brute_force_query(intervals, q));
}

// Uniform random intervals with lengths in [1, max_len], endpoints within
// [0, domain_max].
inline std::vector<Interval> random_intervals(Rng& rng, std::size_t n,
                                              std::uint64_t domain_max,
                                              std::uint64_t max_len) {
    std::vector<Interval> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t len = 1 + rng.next_below(max_len);
        const std::uint64_t st = rng.next_below(domain_max + 1);
        const std::uint64_t end = std::min(domain_max, st + len - 1);
        out.push_back(Interval{i, st, end});
    }
    return out;
}

inline std::vector<QueryRange> random_queries(Rng& rng, std::size_t count,
                                              std::uint64_t domain_max,
                                              std::uint64_t max_extent) {
    std::vector<QueryRange> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t st = rng.next_below(domain_max + 1);
        const std::uint64_t extent = rng.next_below(max_extent + 1);
        out.push_back(QueryRange{st, std::min(domain_max, st + extent)});
    }
    return out;
}

}  // namespace hint::test
