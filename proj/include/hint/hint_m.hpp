#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "hint/core.hpp"
#include "hint/detail/columns.hpp"
#include "hint/stats.hpp"

namespace hint {

// Membership of an interval within one of its partitions: whether it begins
// at the partition (original) or before it (replica), and whether its mapped
// end falls inside the partition or after it. The four groups bound the
// comparisons a query ever needs in a partition, and with storage truncation
// each group keeps only the endpoint fields those comparisons can touch:
// originals-in (st, end), originals-after (st), replicas-in (end),
// replicas-after (ids only).
enum class SubdivisionKind : std::uint8_t {
    kOriginalIn = 0,
    kOriginalAfter = 1,
    kReplicaIn = 2,
    kReplicaAfter = 3,
};
inline constexpr int kSubdivisionCount = 4;

constexpr bool subdivision_needs_st(SubdivisionKind k) {
    return k == SubdivisionKind::kOriginalIn || k == SubdivisionKind::kOriginalAfter;
}
constexpr bool subdivision_needs_end(SubdivisionKind k) {
    return k == SubdivisionKind::kOriginalIn || k == SubdivisionKind::kReplicaIn;
}

struct BuildOptions {
    bool sorted = true;       // sort rows within each partition's subdivision
    bool storage_opt = true;  // keep only the endpoint fields comparisons need
    bool ids_column = true;   // dedicated ids array, endpoints decoupled
    bool sparse_dir = true;   // cross-level directory links
    // Sorted runs longer than this are cut by binary search, shorter ones by
    // an early-exit scan.
    int binary_search_threshold = 32;

    friend bool operator==(const BuildOptions&, const BuildOptions&) = default;
};

// Hierarchical interval index over an m-bit mapped domain, m + 1 levels.
// Partition placement runs on mapped endpoints; every stored endpoint and
// every comparison is raw, so the covering mapping can produce no false
// negatives and the boundary comparisons remove the false positives.
//
// Two layouts:
//  - optimized: per level, the four subdivisions merged into columnar tables
//    over a sorted directory of non-empty partitions. Immutable after build
//    (deletions tombstone); the query path of choice.
//  - appendable: per level, a map of partitions each holding originals and
//    replicas as full triples, unsorted. Supports one-by-one insertion; used
//    as the delta side of HybridIndex.
class HintMIndex {
  public:
    enum class Layout : std::uint8_t { kOptimized, kAppendable };

    static HintMIndex build(std::span<const Interval> intervals,
                            const DomainMapper& mapper, BuildOptions options);
    static HintMIndex build(std::span<const Interval> intervals,
                            const DomainMapper& mapper) {
        return build(intervals, mapper, BuildOptions{});
    }
    static HintMIndex build_appendable(std::span<const Interval> intervals,
                                       const DomainMapper& mapper);
    // Mapper spanning the dataset's raw extremes.
    static DomainMapper fit_mapper(std::span<const Interval> intervals, int m);

    Layout layout() const { return layout_; }
    const DomainMapper& mapper() const { return mapper_; }
    int m() const { return mapper_.m(); }
    const BuildOptions& options() const { return options_; }

    // Overlap query; answers never include tombstoned ids. Queries straddling
    // the raw domain boundary are clamped, disjoint ones come back empty.
    void query(QueryRange q, std::vector<RecordId>& out,
               QueryStats* stats = nullptr) const;
    std::vector<RecordId> query(QueryRange q) const;
    QueryStats query_stats(QueryRange q) const;

    // Appendable layout only; the optimized layout rejects insertion (route
    // updates through HybridIndex instead). The id must be unused and not
    // tombstoned.
    void insert(const Interval& s);
    // Logical deletion; the entries stay stored until a rebuild drops them.
    void erase(RecordId id);

    bool is_live(RecordId id) const { return live_entries_.contains(id); }
    bool is_tombstoned(RecordId id) const { return tombstones_.contains(id); }
    std::uint64_t live_count() const { return live_entries_.size(); }
    std::uint64_t tombstone_count() const { return tombstones_.size(); }

    // ----- statistics ---------------------------------------------------
    std::uint64_t total_entries() const { return total_entries_; }
    std::uint64_t entry_count(RecordId id) const;
    std::vector<std::uint64_t> entries_per_level() const;
    std::uint64_t index_bytes() const;
    // Stored entries per interval; the live variant ignores tombstoned rows.
    double replication_all() const;
    double replication_live() const;

    // ----- introspection (tests, serialization) --------------------------
    struct EntryRef {
        int level;
        std::uint64_t offset;
        SubdivisionKind kind;
        RecordId id;
    };
    std::vector<EntryRef> entries() const;

    // Partitions of one query that executed comparisons.
    struct PartitionTouch {
        int level;
        std::uint64_t offset;
        std::uint64_t comparisons;
    };
    std::vector<PartitionTouch> comparison_trace(QueryRange q) const;

    friend void save_snapshot(const HintMIndex&, std::ostream&);
    friend HintMIndex load_snapshot(std::istream&);

  private:
    struct DirEntry {
        std::uint64_t offset;
        std::uint64_t begin[kSubdivisionCount];
        std::int64_t up;  // directory entry at the level above, -1 if none
    };
    struct LevelStore {
        std::vector<DirEntry> dir;
        detail::SubColumns cols[kSubdivisionCount];

        std::uint64_t run_end(std::size_t e, int kind) const {
            return e + 1 < dir.size() ? dir[e + 1].begin[kind] : cols[kind].size();
        }
        std::size_t lower_bound(std::uint64_t offset) const;
    };
    struct OptimizedStore {
        std::vector<LevelStore> levels;
    };

    struct AppendablePartition {
        std::vector<Interval> originals;
        std::vector<Interval> replicas;
    };
    struct AppendableStore {
        // level -> (offset -> partition); ordered for range walks
        std::vector<std::map<std::uint64_t, AppendablePartition>> levels;
    };

    HintMIndex(Layout layout, const DomainMapper& mapper, BuildOptions options);

    template <typename Sink>
    void query_impl(QueryRange q, Sink&& sink, QueryStats& stats,
                    std::vector<PartitionTouch>* trace) const;
    template <typename Sink>
    void query_optimized(std::uint64_t qst, std::uint64_t qend, std::uint64_t mst,
                         std::uint64_t mend, Sink&& sink, QueryStats& stats,
                         std::vector<PartitionTouch>* trace) const;
    template <typename Sink>
    void query_appendable(std::uint64_t qst, std::uint64_t qend, std::uint64_t mst,
                          std::uint64_t mend, Sink&& sink, QueryStats& stats,
                          std::vector<PartitionTouch>* trace) const;

    std::uint64_t insert_entries(const Interval& s);  // appendable append

    Layout layout_;
    DomainMapper mapper_;
    BuildOptions options_;
    OptimizedStore opt_;
    AppendableStore app_;
    std::unordered_map<RecordId, std::uint32_t> live_entries_;  // id -> stored rows
    std::unordered_map<RecordId, std::uint32_t> dead_entries_;
    std::unordered_set<RecordId> tombstones_;
    std::uint64_t total_entries_ = 0;
    std::uint64_t dead_entry_sum_ = 0;
};

}  // namespace hint
