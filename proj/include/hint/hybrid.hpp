#pragma once

#include <cstdint>
#include <shared_mutex>
#include <span>
#include <vector>

#include "hint/core.hpp"
#include "hint/hint_m.hpp"
#include "hint/stats.hpp"

namespace hint {

// Mixed-workload front over HintMIndex: a fully optimized main index holds
// the bulk, an appendable delta digests fresh insertions, deletions
// tombstone whichever side owns the id. Queries probe both sides; their live
// id sets stay disjoint, so the union needs no dedup. The delta drains into a
// rebuilt main when it grows past merge_threshold of the main's live count,
// or on an explicit flush().
//
// Single writer, multiple readers: a shared mutex guards reads against
// mutation; flush() rebuilds outside the lock and swaps the main in one
// critical section, so readers observe either the old or the new index.
class HybridIndex {
  public:
    HybridIndex(std::span<const Interval> intervals, const DomainMapper& mapper,
                BuildOptions options = {}, double merge_threshold = 0.10);

    const DomainMapper& mapper() const { return mapper_; }
    double merge_threshold() const { return merge_threshold_; }

    void insert(const Interval& s);
    void erase(RecordId id);
    void flush();  // drain the delta and drop tombstoned entries

    void query(QueryRange q, std::vector<RecordId>& out,
               QueryStats* stats = nullptr) const;
    std::vector<RecordId> query(QueryRange q) const;

    std::uint64_t live_count() const;
    std::uint64_t delta_live_count() const;
    std::uint64_t total_entries() const;
    std::uint64_t index_bytes() const;
    std::uint64_t flush_count() const { return flushes_; }

    // Live source intervals (main followed by delta, input order preserved).
    std::vector<Interval> live_intervals() const;

  private:
    void flush_locked_rebuild();
    bool needs_flush() const;

    DomainMapper mapper_;
    BuildOptions options_;
    double merge_threshold_;
    mutable std::shared_mutex mutex_;
    HintMIndex main_;
    HintMIndex delta_;
    std::vector<Interval> main_source_;
    std::vector<Interval> delta_source_;
    std::uint64_t flushes_ = 0;
};

}  // namespace hint
