#include "hint/hint_m.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "hint/assign.hpp"

namespace hint {

namespace {

struct BuildRow {
    std::uint64_t offset;
    std::uint64_t key;  // within-partition order: st, end, or input sequence
    std::uint64_t seq;
    RecordId id;
    std::uint64_t st;
    std::uint64_t end;
};

SubdivisionKind classify(bool original, bool ends_inside) {
    if (original)
        return ends_inside ? SubdivisionKind::kOriginalIn
                           : SubdivisionKind::kOriginalAfter;
    return ends_inside ? SubdivisionKind::kReplicaIn : SubdivisionKind::kReplicaAfter;
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

HintMIndex::HintMIndex(Layout layout, const DomainMapper& mapper, BuildOptions options)
    : layout_(layout), mapper_(mapper), options_(options) {}

DomainMapper HintMIndex::fit_mapper(std::span<const Interval> intervals, int m) {
    if (intervals.empty()) return DomainMapper(0, 0, m);
    std::uint64_t lo = intervals[0].st;
    std::uint64_t hi = intervals[0].end;
    for (const Interval& s : intervals) {
        lo = std::min(lo, s.st);
        hi = std::max(hi, s.end);
    }
    return DomainMapper(lo, hi, m);
}

std::size_t HintMIndex::LevelStore::lower_bound(std::uint64_t offset) const {
    std::size_t lo = 0, hi = dir.size();
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (dir[mid].offset < offset) lo = mid + 1;
        else hi = mid;
    }
    return lo;
}

HintMIndex HintMIndex::build(std::span<const Interval> intervals,
                             const DomainMapper& mapper, BuildOptions options) {
    HintMIndex idx(Layout::kOptimized, mapper, options);
    const int m = mapper.m();
    idx.opt_.levels.resize(m + 1);
    for (auto& level : idx.opt_.levels) {
        for (int k = 0; k < kSubdivisionCount; ++k) {
            const auto kind = static_cast<SubdivisionKind>(k);
            level.cols[k].configure(
                options.ids_column,
                !options.storage_opt || subdivision_needs_st(kind),
                !options.storage_opt || subdivision_needs_end(kind));
        }
    }

    std::vector<std::array<std::vector<BuildRow>, kSubdivisionCount>> rows(m + 1);
    idx.live_entries_.reserve(intervals.size());
    std::uint64_t seq = 0;
    for (const Interval& s : intervals) {
        if (s.st > s.end)
            throw std::invalid_argument("HintMIndex: interval start exceeds end");
        if (s.id == kTombstoneId)
            throw std::invalid_argument("HintMIndex: reserved id");
        auto [it, fresh] = idx.live_entries_.emplace(s.id, 0);
        if (!fresh) throw std::invalid_argument("HintMIndex: duplicate id");
        const auto [mst, mend] = mapper.map(s);
        std::uint32_t count = 0;
        for_each_partition(mst, mend, m, [&](int level, std::uint64_t offset,
                                             bool original) {
            const bool inside = (mend >> (m - level)) == offset;
            const auto kind = classify(original, inside);
            std::uint64_t key = seq;
            if (options.sorted) {
                if (subdivision_needs_st(kind)) key = s.st;       // by start
                else if (kind == SubdivisionKind::kReplicaIn) key = s.end;
            }
            rows[level][static_cast<int>(kind)].push_back(
                BuildRow{offset, key, seq, s.id, s.st, s.end});
            ++count;
        });
        it->second = count;
        idx.total_entries_ += count;
        ++seq;
    }

    // Pack each level: sort the four buckets, then merge-walk their offsets
    // into one directory whose entries record the run start of every kind.
    for (int level = 0; level <= m; ++level) {
        LevelStore& store = idx.opt_.levels[level];
        for (int k = 0; k < kSubdivisionCount; ++k) {
            auto& bucket = rows[level][k];
            std::sort(bucket.begin(), bucket.end(),
                      [](const BuildRow& a, const BuildRow& b) {
                          if (a.offset != b.offset) return a.offset < b.offset;
                          if (a.key != b.key) return a.key < b.key;
                          return a.seq < b.seq;
                      });
        }
        std::array<std::size_t, kSubdivisionCount> pos{};
        for (;;) {
            std::uint64_t offset = ~std::uint64_t{0};
            bool any = false;
            for (int k = 0; k < kSubdivisionCount; ++k) {
                const auto& bucket = rows[level][k];
                if (pos[k] < bucket.size()) {
                    offset = any ? std::min(offset, bucket[pos[k]].offset)
                                 : bucket[pos[k]].offset;
                    any = true;
                }
            }
            if (!any) break;
            DirEntry entry{offset, {}, -1};
            for (int k = 0; k < kSubdivisionCount; ++k)
                entry.begin[k] = store.cols[k].size();
            for (int k = 0; k < kSubdivisionCount; ++k) {
                auto& bucket = rows[level][k];
                while (pos[k] < bucket.size() && bucket[pos[k]].offset == offset) {
                    const BuildRow& r = bucket[pos[k]];
                    store.cols[k].push(r.id, r.st, r.end);
                    ++pos[k];
                }
            }
            store.dir.push_back(entry);
        }
        store.dir.shrink_to_fit();
        for (int k = 0; k < kSubdivisionCount; ++k) store.cols[k].shrink();
        rows[level] = {};
    }

    // Cross-level links: from each partition to the first non-empty partition
    // at the level above with offset >= offset/2.
    for (int level = 1; level <= m; ++level) {
        LevelStore& store = idx.opt_.levels[level];
        const LevelStore& above = idx.opt_.levels[level - 1];
        for (DirEntry& entry : store.dir) {
            const std::size_t up = above.lower_bound(entry.offset >> 1);
            entry.up = up < above.dir.size() ? static_cast<std::int64_t>(up) : -1;
        }
    }
    return idx;
}

HintMIndex HintMIndex::build_appendable(std::span<const Interval> intervals,
                                        const DomainMapper& mapper) {
    HintMIndex idx(Layout::kAppendable, mapper, BuildOptions{});
    idx.app_.levels.resize(mapper.m() + 1);
    for (const Interval& s : intervals) idx.insert(s);
    return idx;
}

std::uint64_t HintMIndex::insert_entries(const Interval& s) {
    const auto [mst, mend] = mapper_.map(s);
    const int m = mapper_.m();
    std::uint64_t count = 0;
    for_each_partition(mst, mend, m, [&](int level, std::uint64_t offset,
                                         bool original) {
        AppendablePartition& part = app_.levels[level][offset];
        (original ? part.originals : part.replicas).push_back(s);
        ++count;
    });
    return count;
}

void HintMIndex::insert(const Interval& s) {
    if (layout_ != Layout::kAppendable)
        throw std::logic_error(
            "HintMIndex: optimized layout is immutable; insert through "
            "HybridIndex");
    if (s.st > s.end)
        throw std::invalid_argument("HintMIndex: interval start exceeds end");
    if (s.id == kTombstoneId) throw std::invalid_argument("HintMIndex: reserved id");
    if (live_entries_.contains(s.id))
        throw std::invalid_argument("HintMIndex: duplicate id");
    if (tombstones_.contains(s.id))
        throw std::invalid_argument("HintMIndex: id is tombstoned");
    const std::uint64_t count = insert_entries(s);
    live_entries_.emplace(s.id, static_cast<std::uint32_t>(count));
    total_entries_ += count;
}

void HintMIndex::erase(RecordId id) {
    const auto it = live_entries_.find(id);
    if (it == live_entries_.end())
        throw std::invalid_argument("HintMIndex: erase of unknown id");
    tombstones_.insert(id);
    dead_entries_.emplace(id, it->second);
    dead_entry_sum_ += it->second;
    live_entries_.erase(it);
}

// ---------------------------------------------------------------------------
// Statistics
// ---------------------------------------------------------------------------

std::uint64_t HintMIndex::entry_count(RecordId id) const {
    if (const auto it = live_entries_.find(id); it != live_entries_.end())
        return it->second;
    if (const auto it = dead_entries_.find(id); it != dead_entries_.end())
        return it->second;
    return 0;
}

std::vector<std::uint64_t> HintMIndex::entries_per_level() const {
    std::vector<std::uint64_t> out(mapper_.m() + 1, 0);
    if (layout_ == Layout::kOptimized) {
        for (std::size_t level = 0; level < opt_.levels.size(); ++level)
            for (int k = 0; k < kSubdivisionCount; ++k)
                out[level] += opt_.levels[level].cols[k].size();
    } else {
        for (std::size_t level = 0; level < app_.levels.size(); ++level)
            for (const auto& [offset, part] : app_.levels[level])
                out[level] += part.originals.size() + part.replicas.size();
    }
    return out;
}

std::uint64_t HintMIndex::index_bytes() const {
    std::uint64_t bytes = 0;
    if (layout_ == Layout::kOptimized) {
        for (const LevelStore& level : opt_.levels) {
            bytes += level.dir.size() * sizeof(DirEntry);
            for (int k = 0; k < kSubdivisionCount; ++k) bytes += level.cols[k].bytes();
        }
    } else {
        // Ordered-map node overhead estimated at 48 bytes per partition.
        for (const auto& level : app_.levels)
            for (const auto& [offset, part] : level)
                bytes += 48 + sizeof(AppendablePartition) +
                         (part.originals.size() + part.replicas.size()) * sizeof(Interval);
    }
    return bytes;
}

double HintMIndex::replication_all() const {
    const std::uint64_t n = live_entries_.size() + dead_entries_.size();
    return n == 0 ? 0.0 : static_cast<double>(total_entries_) / static_cast<double>(n);
}

double HintMIndex::replication_live() const {
    if (live_entries_.empty()) return 0.0;
    return static_cast<double>(total_entries_ - dead_entry_sum_) /
           static_cast<double>(live_entries_.size());
}

std::vector<HintMIndex::EntryRef> HintMIndex::entries() const {
    std::vector<EntryRef> out;
    out.reserve(total_entries_);
    if (layout_ == Layout::kOptimized) {
        for (int level = 0; level < static_cast<int>(opt_.levels.size()); ++level) {
            const LevelStore& store = opt_.levels[level];
            for (std::size_t e = 0; e < store.dir.size(); ++e) {
                for (int k = 0; k < kSubdivisionCount; ++k) {
                    const std::uint64_t hi = store.run_end(e, k);
                    store.cols[k].visit([&](auto view) {
                        for (std::uint64_t i = store.dir[e].begin[k]; i < hi; ++i)
                            out.push_back(EntryRef{level, store.dir[e].offset,
                                                   static_cast<SubdivisionKind>(k),
                                                   view.id(i)});
                    });
                }
            }
        }
    } else {
        const int m = mapper_.m();
        for (int level = 0; level < static_cast<int>(app_.levels.size()); ++level) {
            for (const auto& [offset, part] : app_.levels[level]) {
                for (const Interval& s : part.originals) {
                    const bool inside =
                        (mapper_.value(s.end) >> (m - level)) == offset;
                    out.push_back(EntryRef{level, offset, classify(true, inside), s.id});
                }
                for (const Interval& s : part.replicas) {
                    const bool inside =
                        (mapper_.value(s.end) >> (m - level)) == offset;
                    out.push_back(EntryRef{level, offset, classify(false, inside), s.id});
                }
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Query
// ---------------------------------------------------------------------------

namespace {

// Counted binary searches; every probe is one endpoint comparison.
template <typename View>
std::uint64_t first_end_ge(const View& view, std::uint64_t lo, std::uint64_t hi,
                           std::uint64_t qst, std::uint64_t& comparisons) {
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        ++comparisons;
        if (view.end(mid) < qst) lo = mid + 1;
        else hi = mid;
    }
    return lo;
}

template <typename View>
std::uint64_t first_st_gt(const View& view, std::uint64_t lo, std::uint64_t hi,
                          std::uint64_t qend, std::uint64_t& comparisons) {
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        ++comparisons;
        if (view.st(mid) <= qend) lo = mid + 1;
        else hi = mid;
    }
    return lo;
}

}  // namespace

template <typename Sink>
void HintMIndex::query_optimized(std::uint64_t qst, std::uint64_t qend,
                                 std::uint64_t mst, std::uint64_t mend, Sink&& sink,
                                 QueryStats& stats,
                                 std::vector<PartitionTouch>* trace) const {
    const int m = mapper_.m();
    const std::uint64_t threshold =
        static_cast<std::uint64_t>(std::max(options_.binary_search_threshold, 0));
    bool compfirst = true;
    bool complast = true;
    constexpr std::size_t kNoEntry = ~std::size_t{0};
    std::size_t entry_below = kNoEntry;  // first relevant entry at level+1

    for (int level = m; level >= 0; --level) {
        const LevelStore& store = opt_.levels[level];
        const std::uint64_t f = mst >> (m - level);
        const std::uint64_t l = mend >> (m - level);

        // First relevant directory entry: follow the link from the level
        // below and walk back if it overshot, or fall back to binary search.
        std::size_t e;
        if (options_.sparse_dir && level < m && entry_below != kNoEntry) {
            const std::int64_t up = opt_.levels[level + 1].dir[entry_below].up;
            if (up < 0) {
                e = store.lower_bound(f);
            } else {
                e = static_cast<std::size_t>(up);
                while (e > 0 && store.dir[e - 1].offset >= f) --e;
            }
        } else {
            e = store.lower_bound(f);
        }
        entry_below = e < store.dir.size() ? e : kNoEntry;

        for (std::size_t j = e; j < store.dir.size() && store.dir[j].offset <= l; ++j) {
            const std::uint64_t offset = store.dir[j].offset;
            const std::uint64_t before = stats.comparisons;

            auto emit_all = [&](SubdivisionKind kind) {
                const int k = static_cast<int>(kind);
                const std::uint64_t b = store.dir[j].begin[k];
                const std::uint64_t hi = store.run_end(j, k);
                if (b == hi) return;
                store.cols[k].visit([&](auto view) {
                    for (std::uint64_t i = b; i < hi; ++i) sink(view.id(i));
                });
            };
            auto filter_end_ge = [&](SubdivisionKind kind) {
                const int k = static_cast<int>(kind);
                const std::uint64_t b = store.dir[j].begin[k];
                const std::uint64_t hi = store.run_end(j, k);
                if (b == hi) return;
                store.cols[k].visit([&](auto view) {
                    for (std::uint64_t i = b; i < hi; ++i) {
                        ++stats.comparisons;
                        if (view.end(i) >= qst) sink(view.id(i));
                    }
                });
            };
            // Rows ordered by end: matches form a suffix.
            auto suffix_end_ge = [&](SubdivisionKind kind) {
                const int k = static_cast<int>(kind);
                const std::uint64_t b = store.dir[j].begin[k];
                const std::uint64_t hi = store.run_end(j, k);
                if (b == hi) return;
                store.cols[k].visit([&](auto view) {
                    if (hi - b <= threshold) {
                        for (std::uint64_t i = hi; i-- > b;) {
                            ++stats.comparisons;
                            if (view.end(i) < qst) break;
                            sink(view.id(i));
                        }
                    } else {
                        const std::uint64_t lo =
                            first_end_ge(view, b, hi, qst, stats.comparisons);
                        for (std::uint64_t i = lo; i < hi; ++i) sink(view.id(i));
                    }
                });
            };
            auto filter_st_le = [&](SubdivisionKind kind) {
                const int k = static_cast<int>(kind);
                const std::uint64_t b = store.dir[j].begin[k];
                const std::uint64_t hi = store.run_end(j, k);
                if (b == hi) return;
                store.cols[k].visit([&](auto view) {
                    for (std::uint64_t i = b; i < hi; ++i) {
                        ++stats.comparisons;
                        if (view.st(i) <= qend) sink(view.id(i));
                    }
                });
            };
            // Rows ordered by start: matches form a prefix.
            auto prefix_st_le = [&](SubdivisionKind kind) {
                const int k = static_cast<int>(kind);
                const std::uint64_t b = store.dir[j].begin[k];
                const std::uint64_t hi = store.run_end(j, k);
                if (b == hi) return;
                store.cols[k].visit([&](auto view) {
                    if (hi - b <= threshold) {
                        for (std::uint64_t i = b; i < hi; ++i) {
                            ++stats.comparisons;
                            if (view.st(i) > qend) break;
                            sink(view.id(i));
                        }
                    } else {
                        const std::uint64_t cut =
                            first_st_gt(view, b, hi, qend, stats.comparisons);
                        for (std::uint64_t i = b; i < cut; ++i) sink(view.id(i));
                    }
                });
            };
            auto filter_both = [&](SubdivisionKind kind) {
                const int k = static_cast<int>(kind);
                const std::uint64_t b = store.dir[j].begin[k];
                const std::uint64_t hi = store.run_end(j, k);
                if (b == hi) return;
                store.cols[k].visit([&](auto view) {
                    for (std::uint64_t i = b; i < hi; ++i) {
                        ++stats.comparisons;
                        if (view.st(i) > qend) continue;
                        ++stats.comparisons;
                        if (view.end(i) >= qst) sink(view.id(i));
                    }
                });
            };
            // Start-ordered rows, both tests: cut the prefix by start, then
            // verify ends inside it.
            auto prefix_st_le_then_end = [&](SubdivisionKind kind) {
                const int k = static_cast<int>(kind);
                const std::uint64_t b = store.dir[j].begin[k];
                const std::uint64_t hi = store.run_end(j, k);
                if (b == hi) return;
                store.cols[k].visit([&](auto view) {
                    if (hi - b <= threshold) {
                        for (std::uint64_t i = b; i < hi; ++i) {
                            ++stats.comparisons;
                            if (view.st(i) > qend) break;
                            ++stats.comparisons;
                            if (view.end(i) >= qst) sink(view.id(i));
                        }
                        return;
                    }
                    const std::uint64_t cut =
                        first_st_gt(view, b, hi, qend, stats.comparisons);
                    for (std::uint64_t i = b; i < cut; ++i) {
                        ++stats.comparisons;
                        if (view.end(i) >= qst) sink(view.id(i));
                    }
                });
            };

            using K = SubdivisionKind;
            const bool sorted = options_.sorted;
            if (f == l) {
                // Query inside a single partition at this level.
                if (compfirst && complast) {
                    if (sorted) prefix_st_le_then_end(K::kOriginalIn);
                    else filter_both(K::kOriginalIn);
                    if (sorted) prefix_st_le(K::kOriginalAfter);
                    else filter_st_le(K::kOriginalAfter);
                    if (sorted) suffix_end_ge(K::kReplicaIn);
                    else filter_end_ge(K::kReplicaIn);
                    emit_all(K::kReplicaAfter);
                } else if (complast) {
                    if (sorted) {
                        prefix_st_le(K::kOriginalIn);
                        prefix_st_le(K::kOriginalAfter);
                    } else {
                        filter_st_le(K::kOriginalIn);
                        filter_st_le(K::kOriginalAfter);
                    }
                    emit_all(K::kReplicaIn);
                    emit_all(K::kReplicaAfter);
                } else if (compfirst) {
                    filter_end_ge(K::kOriginalIn);
                    if (sorted) suffix_end_ge(K::kReplicaIn);
                    else filter_end_ge(K::kReplicaIn);
                    emit_all(K::kOriginalAfter);
                    emit_all(K::kReplicaAfter);
                } else {
                    emit_all(K::kOriginalIn);
                    emit_all(K::kOriginalAfter);
                    emit_all(K::kReplicaIn);
                    emit_all(K::kReplicaAfter);
                }
            } else if (offset == f) {
                // First of several relevant partitions: every group can
                // qualify; starts are left of the query end by construction.
                if (compfirst) {
                    filter_end_ge(K::kOriginalIn);
                    if (sorted) suffix_end_ge(K::kReplicaIn);
                    else filter_end_ge(K::kReplicaIn);
                    emit_all(K::kOriginalAfter);
                    emit_all(K::kReplicaAfter);
                } else {
                    emit_all(K::kOriginalIn);
                    emit_all(K::kOriginalAfter);
                    emit_all(K::kReplicaIn);
                    emit_all(K::kReplicaAfter);
                }
            } else if (offset == l) {
                // Last partition: originals only, one start test each.
                if (complast) {
                    if (sorted) {
                        prefix_st_le(K::kOriginalIn);
                        prefix_st_le(K::kOriginalAfter);
                    } else {
                        filter_st_le(K::kOriginalIn);
                        filter_st_le(K::kOriginalAfter);
                    }
                } else {
                    emit_all(K::kOriginalIn);
                    emit_all(K::kOriginalAfter);
                }
            } else {
                // Middle partitions: originals are guaranteed results.
                emit_all(K::kOriginalIn);
                emit_all(K::kOriginalAfter);
            }

            if (stats.comparisons != before) {
                ++stats.partitions_compared;
                if (trace)
                    trace->push_back(
                        PartitionTouch{level, offset, stats.comparisons - before});
            }
        }

        // Boundary partitions at the levels above start (end) at the same
        // mapped value when the offset is even (odd); comparisons there are
        // provably redundant from here on.
        if ((f & 1) == 0) compfirst = false;
        if ((l & 1) == 1) complast = false;
    }
}

template <typename Sink>
void HintMIndex::query_appendable(std::uint64_t qst, std::uint64_t qend,
                                  std::uint64_t mst, std::uint64_t mend, Sink&& sink,
                                  QueryStats& stats,
                                  std::vector<PartitionTouch>* trace) const {
    const int m = mapper_.m();
    bool compfirst = true;
    bool complast = true;
    for (int level = m; level >= 0; --level) {
        const auto& parts = app_.levels[level];
        const std::uint64_t f = mst >> (m - level);
        const std::uint64_t l = mend >> (m - level);

        auto emit_all = [&](const std::vector<Interval>& v) {
            for (const Interval& s : v) sink(s.id);
        };
        auto filter_end_ge = [&](const std::vector<Interval>& v) {
            for (const Interval& s : v) {
                ++stats.comparisons;
                if (s.end >= qst) sink(s.id);
            }
        };
        auto filter_st_le = [&](const std::vector<Interval>& v) {
            for (const Interval& s : v) {
                ++stats.comparisons;
                if (s.st <= qend) sink(s.id);
            }
        };
        auto filter_both = [&](const std::vector<Interval>& v) {
            for (const Interval& s : v) {
                ++stats.comparisons;
                if (s.st > qend) continue;
                ++stats.comparisons;
                if (s.end >= qst) sink(s.id);
            }
        };

        for (auto it = parts.lower_bound(f); it != parts.end() && it->first <= l; ++it) {
            const std::uint64_t offset = it->first;
            const AppendablePartition& part = it->second;
            const std::uint64_t before = stats.comparisons;
            if (f == l) {
                if (compfirst && complast) {
                    filter_both(part.originals);
                    filter_end_ge(part.replicas);
                } else if (complast) {
                    filter_st_le(part.originals);
                    emit_all(part.replicas);
                } else if (compfirst) {
                    filter_end_ge(part.originals);
                    filter_end_ge(part.replicas);
                } else {
                    emit_all(part.originals);
                    emit_all(part.replicas);
                }
            } else if (offset == f) {
                if (compfirst) {
                    filter_end_ge(part.originals);
                    filter_end_ge(part.replicas);
                } else {
                    emit_all(part.originals);
                    emit_all(part.replicas);
                }
            } else if (offset == l) {
                if (complast) filter_st_le(part.originals);
                else emit_all(part.originals);
            } else {
                emit_all(part.originals);
            }
            if (stats.comparisons != before) {
                ++stats.partitions_compared;
                if (trace)
                    trace->push_back(
                        PartitionTouch{level, offset, stats.comparisons - before});
            }
        }
        if ((f & 1) == 0) compfirst = false;
        if ((l & 1) == 1) complast = false;
    }
}

template <typename Sink>
void HintMIndex::query_impl(QueryRange q, Sink&& sink, QueryStats& stats,
                            std::vector<PartitionTouch>* trace) const {
    if (q.st > q.end) throw std::invalid_argument("HintMIndex: query start exceeds end");
    if (q.end < mapper_.min_x() || q.st > mapper_.max_x()) return;
    const std::uint64_t qst = mapper_.clamp(q.st);
    const std::uint64_t qend = mapper_.clamp(q.end);
    const std::uint64_t mst = mapper_.value(qst);
    const std::uint64_t mend = mapper_.value(qend);
    if (layout_ == Layout::kOptimized)
        query_optimized(qst, qend, mst, mend, sink, stats, trace);
    else
        query_appendable(qst, qend, mst, mend, sink, stats, trace);
}

void HintMIndex::query(QueryRange q, std::vector<RecordId>& out,
                       QueryStats* stats) const {
    QueryStats local;
    QueryStats& st = stats ? *stats : local;
    st = QueryStats{};
    if (tombstones_.empty()) {
        query_impl(
            q,
            [&](RecordId id) {
                out.push_back(id);
                ++st.results;
            },
            st, nullptr);
    } else {
        query_impl(
            q,
            [&](RecordId id) {
                if (!tombstones_.contains(id)) {
                    out.push_back(id);
                    ++st.results;
                }
            },
            st, nullptr);
    }
}

std::vector<RecordId> HintMIndex::query(QueryRange q) const {
    std::vector<RecordId> out;
    query(q, out);
    return out;
}

QueryStats HintMIndex::query_stats(QueryRange q) const {
    std::vector<RecordId> out;
    QueryStats stats;
    query(q, out, &stats);
    return stats;
}

std::vector<HintMIndex::PartitionTouch> HintMIndex::comparison_trace(
    QueryRange q) const {
    std::vector<PartitionTouch> trace;
    QueryStats stats;
    query_impl(
        q, [&](RecordId id) { (void)id; }, stats, &trace);
    return trace;
}

}  // namespace hint
