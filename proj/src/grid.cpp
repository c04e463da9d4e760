#include "hint/grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace hint {

std::vector<RecordId> brute_force_query(std::span<const Interval> intervals,
                                        QueryRange q) {
    std::vector<RecordId> out;
    for (const Interval& s : intervals)
        if (overlaps(s, q)) out.push_back(s.id);
    return out;
}

Grid1D::Grid1D(std::span<const Interval> intervals, std::uint32_t p) : p_(p) {
    if (p < 1) throw std::invalid_argument("Grid1D: p must be >= 1");
    n_ = intervals.size();
    if (!intervals.empty()) {
        min_ = intervals[0].st;
        max_ = intervals[0].end;
        for (const Interval& s : intervals) {
            if (s.st > s.end) throw std::invalid_argument("Grid1D: st > end");
            min_ = std::min(min_, s.st);
            max_ = std::max(max_, s.end);
        }
    }
    cells_.resize(p_);
    for (const Interval& s : intervals) {
        const std::uint32_t c0 = cell_of(s.st);
        const std::uint32_t c1 = cell_of(s.end);
        for (std::uint32_t c = c0; c <= c1; ++c) cells_[c].push_back(s);
        stored_entries_ += c1 - c0 + 1;
    }
}

std::uint32_t Grid1D::cell_of(std::uint64_t x) const {
    assert(x >= min_ && x <= max_);
    const unsigned __int128 span = static_cast<unsigned __int128>(max_ - min_) + 1;
    const unsigned __int128 num = static_cast<unsigned __int128>(x - min_) * p_;
    return static_cast<std::uint32_t>(num / span);
}

// First and last raw points with cell_of(x) == c; ceiling division keeps the
// boundaries exactly consistent with cell_of's floor.
std::uint64_t Grid1D::cell_start(std::uint32_t c) const {
    const unsigned __int128 span = static_cast<unsigned __int128>(max_ - min_) + 1;
    return min_ + static_cast<std::uint64_t>((span * c + p_ - 1) / p_);
}

std::uint64_t Grid1D::cell_end(std::uint32_t c) const {
    const unsigned __int128 span = static_cast<unsigned __int128>(max_ - min_) + 1;
    return min_ + static_cast<std::uint64_t>((span * (c + 1) + p_ - 1) / p_) - 1;
}

double Grid1D::replication() const {
    return n_ == 0 ? 0.0 : static_cast<double>(stored_entries_) / static_cast<double>(n_);
}

std::uint64_t Grid1D::index_bytes() const {
    std::uint64_t bytes = cells_.size() * sizeof(std::vector<Interval>);
    for (const auto& c : cells_) bytes += c.size() * sizeof(Interval);
    return bytes;
}

void Grid1D::query(QueryRange q, std::vector<RecordId>& out,
                   QueryStats* stats) const {
    QueryStats local;
    QueryStats& st = stats ? *stats : local;
    if (n_ == 0 || q.end < min_ || q.st > max_) return;
    const QueryRange cq{std::max(q.st, min_), std::min(q.end, max_)};
    const std::uint32_t c0 = cell_of(cq.st);
    const std::uint32_t c1 = cell_of(cq.end);
    for (std::uint32_t c = c0; c <= c1; ++c) {
        const std::uint64_t cst = cell_start(c);
        const std::uint64_t cen = cell_end(c);
        const bool contained = cq.st <= cst && cen <= cq.end;
        const std::uint64_t before = st.comparisons;
        for (const Interval& s : cells_[c]) {
            if (!contained) {
                // Boundary cell: verify overlap before the reference test.
                ++st.comparisons;
                if (s.st > cq.end) continue;
                ++st.comparisons;
                if (s.end < cq.st) continue;
            }
            // Reference value: report s only from the cell containing
            // max(s.st, q.st); every other overlapped cell stays silent.
            ++st.comparisons;
            const std::uint64_t v = std::max(s.st, cq.st);
            if (v >= cst && v <= cen) {
                out.push_back(s.id);
                ++st.results;
            }
        }
        if (st.comparisons != before) ++st.partitions_compared;
    }
}

std::vector<RecordId> Grid1D::query(QueryRange q) const {
    std::vector<RecordId> out;
    query(q, out);
    return out;
}

}  // namespace hint
