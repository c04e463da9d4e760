#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hint/core.hpp"
#include "hint/stats.hpp"

namespace hint {

// Comparison-free hierarchical index for small discrete domains [0, 2^m - 1].
// m + 1 levels; each interval is tiled into at most two partitions per level
// and appears as an original in exactly one partition overall. Queries report
// originals of every relevant partition plus replicas of the first one, which
// yields the exact overlap set with zero endpoint comparisons and no
// duplicate suppression machinery.
//
// Immutable after build; concurrent read-only queries are safe.
class HintIndex {
  public:
    struct Options {
        // Locate non-empty partitions through the per-level sorted directory
        // (one search, then sequential access). Disabled, every offset in the
        // relevant range is probed individually; answers are identical.
        bool use_directory = true;
    };

    // Endpoints must already lie in [0, 2^m - 1]; larger domains belong to
    // HintMIndex. Duplicate ids are rejected.
    static HintIndex build(std::span<const Interval> intervals, int m,
                           Options options);
    static HintIndex build(std::span<const Interval> intervals, int m) {
        return build(intervals, m, Options{});
    }

    int m() const { return m_; }
    std::uint64_t size() const { return n_; }
    std::uint64_t stored_entries() const { return stored_entries_; }
    std::uint64_t index_bytes() const;
    double replication() const {
        return n_ == 0 ? 0.0 : static_cast<double>(stored_entries_) / static_cast<double>(n_);
    }

    // Queries falling partially outside the domain are clamped; fully
    // disjoint ones return nothing. stats->comparisons is always 0: the
    // query path contains no endpoint comparison.
    void query(QueryRange q, std::vector<RecordId>& out,
               QueryStats* stats = nullptr) const;
    std::vector<RecordId> query(QueryRange q) const;

  private:
    struct DirEntry {
        std::uint64_t offset;
        std::uint64_t begin;  // run start in the concatenated ids column
    };
    // One division (originals or replicas) of one level: non-empty partitions
    // in offset order over a merged ids column.
    struct Division {
        std::vector<DirEntry> dir;
        std::vector<RecordId> ids;

        std::uint64_t run_end(std::size_t e) const {
            return e + 1 < dir.size() ? dir[e + 1].begin : ids.size();
        }
        // Index of the first directory entry with offset >= x.
        std::size_t lower_bound(std::uint64_t x) const;
    };
    struct Level {
        Division originals;
        Division replicas;
    };

    HintIndex(int m, Options options) : m_(m), options_(options), levels_(m + 1) {}

    void emit_division_range(const Division& d, std::uint64_t f, std::uint64_t l,
                             std::vector<RecordId>& out, QueryStats& stats) const;

    int m_;
    Options options_;
    std::uint64_t n_ = 0;
    std::uint64_t stored_entries_ = 0;
    std::vector<Level> levels_;
};

}  // namespace hint
