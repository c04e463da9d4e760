#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "hint/core.hpp"

namespace hint::detail {

struct RowFull {
    RecordId id;
    std::uint64_t st;
    std::uint64_t end;
};
struct RowIdSt {
    RecordId id;
    std::uint64_t st;
};
struct RowIdEnd {
    RecordId id;
    std::uint64_t end;
};

// Storage for one subdivision at one level, rows of all partitions
// concatenated in offset order (the level directory holds run bounds).
//
// Two layouts: a dedicated ids array with separate endpoint columns (SoA),
// or interleaved rows (AoS). Under storage truncation only the fields the
// subdivision's comparisons can ever touch are kept; accessors for absent
// fields exist so that generic scan code compiles, but are never reached.
class SubColumns {
  public:
    enum class Repr : std::uint8_t {
        kSoA,
        kRowsFull,
        kRowsIdSt,
        kRowsIdEnd,
        kRowsIdOnly,
    };

    void configure(bool ids_column, bool needs_st, bool needs_end) {
        if (ids_column) {
            repr_ = Repr::kSoA;
            has_st_ = needs_st;
            has_end_ = needs_end;
        } else if (needs_st && needs_end) {
            repr_ = Repr::kRowsFull;
        } else if (needs_st) {
            repr_ = Repr::kRowsIdSt;
        } else if (needs_end) {
            repr_ = Repr::kRowsIdEnd;
        } else {
            repr_ = Repr::kRowsIdOnly;
        }
    }

    Repr repr() const { return repr_; }
    bool has_st() const {
        return repr_ == Repr::kRowsFull || repr_ == Repr::kRowsIdSt ||
               (repr_ == Repr::kSoA && has_st_);
    }
    bool has_end() const {
        return repr_ == Repr::kRowsFull || repr_ == Repr::kRowsIdEnd ||
               (repr_ == Repr::kSoA && has_end_);
    }

    void push(RecordId id, std::uint64_t st, std::uint64_t end) {
        switch (repr_) {
            case Repr::kSoA:
                ids_.push_back(id);
                if (has_st_) sts_.push_back(st);
                if (has_end_) ends_.push_back(end);
                break;
            case Repr::kRowsFull: full_.push_back({id, st, end}); break;
            case Repr::kRowsIdSt: id_st_.push_back({id, st}); break;
            case Repr::kRowsIdEnd: id_end_.push_back({id, end}); break;
            case Repr::kRowsIdOnly: ids_.push_back(id); break;
        }
    }

    std::size_t size() const {
        switch (repr_) {
            case Repr::kRowsFull: return full_.size();
            case Repr::kRowsIdSt: return id_st_.size();
            case Repr::kRowsIdEnd: return id_end_.size();
            default: return ids_.size();
        }
    }

    std::uint64_t bytes() const {
        return ids_.size() * sizeof(RecordId) + sts_.size() * sizeof(std::uint64_t) +
               ends_.size() * sizeof(std::uint64_t) + full_.size() * sizeof(RowFull) +
               id_st_.size() * sizeof(RowIdSt) + id_end_.size() * sizeof(RowIdEnd);
    }

    void shrink() {
        ids_.shrink_to_fit();
        sts_.shrink_to_fit();
        ends_.shrink_to_fit();
        full_.shrink_to_fit();
        id_st_.shrink_to_fit();
        id_end_.shrink_to_fit();
    }

    // ----- typed views ------------------------------------------------

    struct SoaView {
        const RecordId* ids;
        const std::uint64_t* sts;
        const std::uint64_t* ends;
        RecordId id(std::size_t i) const { return ids[i]; }
        std::uint64_t st(std::size_t i) const { return sts[i]; }
        std::uint64_t end(std::size_t i) const { return ends[i]; }
    };
    struct FullView {
        const RowFull* rows;
        RecordId id(std::size_t i) const { return rows[i].id; }
        std::uint64_t st(std::size_t i) const { return rows[i].st; }
        std::uint64_t end(std::size_t i) const { return rows[i].end; }
    };
    struct IdStView {
        const RowIdSt* rows;
        RecordId id(std::size_t i) const { return rows[i].id; }
        std::uint64_t st(std::size_t i) const { return rows[i].st; }
        std::uint64_t end(std::size_t) const {
            assert(!"end column absent");
            return 0;
        }
    };
    struct IdEndView {
        const RowIdEnd* rows;
        RecordId id(std::size_t i) const { return rows[i].id; }
        std::uint64_t st(std::size_t) const {
            assert(!"st column absent");
            return 0;
        }
        std::uint64_t end(std::size_t i) const { return rows[i].end; }
    };
    struct IdOnlyView {
        const RecordId* ids;
        RecordId id(std::size_t i) const { return ids[i]; }
        std::uint64_t st(std::size_t) const {
            assert(!"st column absent");
            return 0;
        }
        std::uint64_t end(std::size_t) const {
            assert(!"end column absent");
            return 0;
        }
    };

    // Dispatches once per run; the visitor's loops then run on a concrete
    // layout with no per-element branching.
    template <typename Visitor>
    decltype(auto) visit(Visitor&& v) const {
        switch (repr_) {
            case Repr::kSoA:
                return v(SoaView{ids_.data(), sts_.data(), ends_.data()});
            case Repr::kRowsFull: return v(FullView{full_.data()});
            case Repr::kRowsIdSt: return v(IdStView{id_st_.data()});
            case Repr::kRowsIdEnd: return v(IdEndView{id_end_.data()});
            default: return v(IdOnlyView{ids_.data()});
        }
    }

  private:
    Repr repr_ = Repr::kSoA;
    bool has_st_ = true;
    bool has_end_ = true;
    std::vector<RecordId> ids_;
    std::vector<std::uint64_t> sts_;
    std::vector<std::uint64_t> ends_;
    std::vector<RowFull> full_;
    std::vector<RowIdSt> id_st_;
    std::vector<RowIdEnd> id_end_;
};

}  // namespace hint::detail
