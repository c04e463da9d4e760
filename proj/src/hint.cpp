#include "hint/hint.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "hint/assign.hpp"

namespace hint {

namespace {

struct BuildRow {
    std::uint64_t offset;
    std::uint64_t seq;  // input order, keeps rebuilds byte-identical
    RecordId id;
};

}  // namespace

std::size_t HintIndex::Division::lower_bound(std::uint64_t x) const {
    std::size_t lo = 0, hi = dir.size();
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (dir[mid].offset < x) lo = mid + 1;
        else hi = mid;
    }
    return lo;
}

HintIndex HintIndex::build(std::span<const Interval> intervals, int m,
                           Options options) {
    if (m < 1 || m > DomainMapper::kMaxBits)
        throw std::invalid_argument("HintIndex: m out of range");
    const std::uint64_t domain_max = (std::uint64_t{1} << m) - 1;

    std::unordered_set<RecordId> seen;
    seen.reserve(intervals.size());
    for (const Interval& s : intervals) {
        if (s.st > s.end)
            throw std::invalid_argument("HintIndex: interval start exceeds end");
        if (s.end > domain_max)
            throw std::invalid_argument(
                "HintIndex: endpoint outside [0, 2^m - 1]; use HintMIndex for "
                "larger domains");
        if (s.id == kTombstoneId || !seen.insert(s.id).second)
            throw std::invalid_argument("HintIndex: duplicate or reserved id");
    }

    HintIndex index(m, options);
    index.n_ = intervals.size();

    // Bucket (level, division) rows, then sort by offset with the input
    // sequence as tiebreak and slice into directory runs.
    std::vector<std::vector<BuildRow>> originals(m + 1), replicas(m + 1);
    std::uint64_t seq = 0;
    for (const Interval& s : intervals) {
        for_each_partition(s.st, s.end, m,
                           [&](int level, std::uint64_t offset, bool original) {
                               (original ? originals : replicas)[level].push_back(
                                   BuildRow{offset, seq, s.id});
                               ++index.stored_entries_;
                           });
        ++seq;
    }

    auto pack = [](std::vector<BuildRow>& rows, Division& div) {
        std::sort(rows.begin(), rows.end(), [](const BuildRow& a, const BuildRow& b) {
            return a.offset != b.offset ? a.offset < b.offset : a.seq < b.seq;
        });
        div.ids.reserve(rows.size());
        for (const BuildRow& r : rows) {
            if (div.dir.empty() || div.dir.back().offset != r.offset)
                div.dir.push_back(DirEntry{r.offset, div.ids.size()});
            div.ids.push_back(r.id);
        }
        div.dir.shrink_to_fit();
        div.ids.shrink_to_fit();
        rows.clear();
        rows.shrink_to_fit();
    };
    for (int level = 0; level <= m; ++level) {
        pack(originals[level], index.levels_[level].originals);
        pack(replicas[level], index.levels_[level].replicas);
    }
    return index;
}

std::uint64_t HintIndex::index_bytes() const {
    std::uint64_t bytes = levels_.size() * sizeof(Level);
    for (const Level& lv : levels_) {
        bytes += lv.originals.dir.size() * sizeof(DirEntry) +
                 lv.originals.ids.size() * sizeof(RecordId);
        bytes += lv.replicas.dir.size() * sizeof(DirEntry) +
                 lv.replicas.ids.size() * sizeof(RecordId);
    }
    return bytes;
}

void HintIndex::emit_division_range(const Division& d, std::uint64_t f,
                                    std::uint64_t l, std::vector<RecordId>& out,
                                    QueryStats& stats) const {
    if (options_.use_directory) {
        for (std::size_t e = d.lower_bound(f); e < d.dir.size() && d.dir[e].offset <= l; ++e) {
            const std::uint64_t hi = d.run_end(e);
            for (std::uint64_t i = d.dir[e].begin; i < hi; ++i) out.push_back(d.ids[i]);
            stats.results += hi - d.dir[e].begin;
        }
    } else {
        for (std::uint64_t off = f; off <= l; ++off) {
            const std::size_t e = d.lower_bound(off);
            if (e == d.dir.size() || d.dir[e].offset != off) continue;
            const std::uint64_t hi = d.run_end(e);
            for (std::uint64_t i = d.dir[e].begin; i < hi; ++i) out.push_back(d.ids[i]);
            stats.results += hi - d.dir[e].begin;
        }
    }
}

void HintIndex::query(QueryRange q, std::vector<RecordId>& out,
                      QueryStats* stats) const {
    QueryStats local;
    QueryStats& st = stats ? *stats : local;
    st = QueryStats{};
    const std::uint64_t domain_max = (std::uint64_t{1} << m_) - 1;
    if (q.st > domain_max) return;
    const std::uint64_t qst = q.st;
    const std::uint64_t qend = std::min(q.end, domain_max);
    for (int level = m_; level >= 0; --level) {
        const std::uint64_t f = qst >> (m_ - level);
        const std::uint64_t l = qend >> (m_ - level);
        const Level& lv = levels_[level];
        // Originals of every relevant partition, replicas of the first only.
        emit_division_range(lv.originals, f, l, out, st);
        emit_division_range(lv.replicas, f, f, out, st);
    }
}

std::vector<RecordId> HintIndex::query(QueryRange q) const {
    std::vector<RecordId> out;
    query(q, out);
    return out;
}

}  // namespace hint
