#pragma once

#include <cstdint>

namespace hint {

// Per-query instrumentation. A "comparison" is one evaluated predicate
// between a stored endpoint and a query endpoint (binary-search probes
// included); partition routing by bit prefixes is not counted.
struct QueryStats {
    std::uint64_t comparisons = 0;
    std::uint64_t partitions_compared = 0;  // partitions with >= 1 comparison
    std::uint64_t results = 0;

    QueryStats& operator+=(const QueryStats& o) {
        comparisons += o.comparisons;
        partitions_compared += o.partitions_compared;
        results += o.results;
        return *this;
    }
};

}  // namespace hint
