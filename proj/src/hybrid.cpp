#include "hint/hybrid.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace hint {

HybridIndex::HybridIndex(std::span<const Interval> intervals,
                         const DomainMapper& mapper, BuildOptions options,
                         double merge_threshold)
    : mapper_(mapper),
      options_(options),
      merge_threshold_(merge_threshold),
      main_(HintMIndex::build(intervals, mapper, options)),
      delta_(HintMIndex::build_appendable({}, mapper)),
      main_source_(intervals.begin(), intervals.end()) {
    if (!(merge_threshold > 0.0))
        throw std::invalid_argument("HybridIndex: merge_threshold must be > 0");
}

bool HybridIndex::needs_flush() const {
    const double limit =
        merge_threshold_ * static_cast<double>(std::max<std::uint64_t>(main_.live_count(), 1));
    return static_cast<double>(delta_.live_count()) > limit;
}

void HybridIndex::insert(const Interval& s) {
    if (main_.is_live(s.id) || main_.is_tombstoned(s.id))
        throw std::invalid_argument("HybridIndex: id already used");
    {
        std::unique_lock lock(mutex_);
        delta_.insert(s);  // rejects delta-side duplicates and tombstones
        delta_source_.push_back(s);
    }
    if (needs_flush()) flush();
}

void HybridIndex::erase(RecordId id) {
    std::unique_lock lock(mutex_);
    if (delta_.is_live(id)) delta_.erase(id);
    else main_.erase(id);  // throws for unknown ids
}

std::vector<Interval> HybridIndex::live_intervals() const {
    std::shared_lock lock(mutex_);
    std::vector<Interval> out;
    out.reserve(main_.live_count() + delta_.live_count());
    for (const Interval& s : main_source_)
        if (main_.is_live(s.id)) out.push_back(s);
    for (const Interval& s : delta_source_)
        if (delta_.is_live(s.id)) out.push_back(s);
    return out;
}

void HybridIndex::flush() {
    // Rebuild outside the critical section (single-writer contract: no other
    // mutation can interleave), then swap.
    std::vector<Interval> survivors = live_intervals();
    HintMIndex next_main = HintMIndex::build(survivors, mapper_, options_);
    HintMIndex next_delta = HintMIndex::build_appendable({}, mapper_);
    {
        std::unique_lock lock(mutex_);
        main_ = std::move(next_main);
        delta_ = std::move(next_delta);
        main_source_ = std::move(survivors);
        delta_source_.clear();
        ++flushes_;
    }
}

void HybridIndex::query(QueryRange q, std::vector<RecordId>& out,
                        QueryStats* stats) const {
    std::shared_lock lock(mutex_);
    QueryStats main_stats;
    main_.query(q, out, &main_stats);
    QueryStats delta_stats;
    delta_.query(q, out, &delta_stats);
    if (stats) {
        *stats = main_stats;
        *stats += delta_stats;
    }
}

std::vector<RecordId> HybridIndex::query(QueryRange q) const {
    std::vector<RecordId> out;
    query(q, out);
    return out;
}

std::uint64_t HybridIndex::live_count() const {
    std::shared_lock lock(mutex_);
    return main_.live_count() + delta_.live_count();
}

std::uint64_t HybridIndex::delta_live_count() const {
    std::shared_lock lock(mutex_);
    return delta_.live_count();
}

std::uint64_t HybridIndex::total_entries() const {
    std::shared_lock lock(mutex_);
    return main_.total_entries() + delta_.total_entries();
}

std::uint64_t HybridIndex::index_bytes() const {
    std::shared_lock lock(mutex_);
    return main_.index_bytes() + delta_.index_bytes();
}

}  // namespace hint
