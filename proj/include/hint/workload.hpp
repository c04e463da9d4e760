#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hint/core.hpp"

namespace hint {

// Parameters of a synthetic experiment. Interval lengths follow a zipfian
// distribution (exponent alpha), midpoints a normal centered at the middle of
// the domain (spread sigma); query extents are a fixed fraction of the
// domain. Generation is deterministic under the seed.
struct WorkloadSpec {
    std::uint64_t domain_len = std::uint64_t{1} << 20;
    std::uint64_t n = 100'000;
    double alpha = 1.2;
    double sigma = 8192.0;
    std::uint64_t query_count = 10'000;
    double query_extent_pct = 0.001;
    enum class Position { kUniform, kDataFollowing };
    Position query_position = Position::kDataFollowing;
    std::uint64_t seed = 42;

    void validate() const;
    // round(query_extent_pct * domain_len), as q.end - q.st.
    std::uint64_t query_extent() const;
};

std::vector<Interval> gen_intervals(const WorkloadSpec& spec);
std::vector<QueryRange> gen_queries(const WorkloadSpec& spec,
                                    std::span<const Interval> dataset);

// Dataset files: one record per line, "id<TAB>st<TAB>end" (or headerless CSV
// "id,st,end" when the path ends in .csv). A .gz suffix selects gzip
// transparently on both read and write. Malformed input throws
// std::runtime_error naming the line.
std::vector<Interval> load_intervals(const std::string& path);
void save_intervals(const std::string& path, std::span<const Interval> intervals);

// Query files: "st<TAB>end" per line (same CSV/gzip conventions).
std::vector<QueryRange> load_queries(const std::string& path);
void save_queries(const std::string& path, std::span<const QueryRange> queries);

}  // namespace hint
