#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hint/core.hpp"
#include "hint/stats.hpp"

namespace hint {

// Exact overlap scan; the correctness oracle for every index in this library.
std::vector<RecordId> brute_force_query(std::span<const Interval> intervals,
                                        QueryRange q);

// Uniform 1D grid over the raw domain. Each interval is stored (as a full
// triple) in every cell it overlaps; duplicate results are suppressed with
// the reference-value test, so no dedup structure is needed at query time.
class Grid1D {
  public:
    Grid1D(std::span<const Interval> intervals, std::uint32_t p);

    std::uint32_t partitions() const { return p_; }
    std::uint64_t stored_entries() const { return stored_entries_; }
    double replication() const;
    std::uint64_t index_bytes() const;

    void query(QueryRange q, std::vector<RecordId>& out,
               QueryStats* stats = nullptr) const;
    std::vector<RecordId> query(QueryRange q) const;

    // Cell index of a raw point; integer arithmetic, last cell absorbs the
    // domain maximum.
    std::uint32_t cell_of(std::uint64_t x) const;
    std::uint64_t cell_start(std::uint32_t c) const;
    std::uint64_t cell_end(std::uint32_t c) const;

  private:
    std::uint32_t p_;
    std::uint64_t min_ = 0;
    std::uint64_t max_ = 0;  // domain = [min_, max_]
    std::uint64_t stored_entries_ = 0;
    std::uint64_t n_ = 0;
    std::vector<std::vector<Interval>> cells_;
};

}  // namespace hint
