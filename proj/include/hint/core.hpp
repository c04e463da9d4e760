#pragma once

#include <cassert>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace hint {

// Record identifier. One reserved value marks logical deletions and is never
// assigned to a live record.
using RecordId = std::uint64_t;
inline constexpr RecordId kTombstoneId = std::numeric_limits<RecordId>::max();

// Closed interval [st, end] in raw domain units, attached to a record.
struct Interval {
    RecordId id = 0;
    std::uint64_t st = 0;
    std::uint64_t end = 0;

    friend bool operator==(const Interval&, const Interval&) = default;
};

// Closed query range; st == end encodes a stabbing query.
struct QueryRange {
    std::uint64_t st = 0;
    std::uint64_t end = 0;

    friend bool operator==(const QueryRange&, const QueryRange&) = default;
};

inline bool overlaps(const Interval& s, const QueryRange& q) {
    return s.st <= q.end && q.st <= s.end;
}

// k-bit prefix of an m-bit value.
inline std::uint64_t prefix(int k, std::uint64_t x, int m) {
    assert(k >= 0 && k <= m);
    assert(m >= 64 || x < (std::uint64_t{1} << m));
    return x >> (m - k);
}

// Linear rescaling of raw endpoints into the index domain [0, 2^m - 1].
//
// The mapping is monotone non-decreasing and covering: a raw interval is
// contained in the raw preimage of its mapped interval, so routing queries by
// mapped prefixes can never lose results.
class DomainMapper {
  public:
    static constexpr int kMaxBits = 30;

    DomainMapper(std::uint64_t min_x, std::uint64_t max_x, int m)
        : min_x_(min_x), max_x_(max_x), m_(m) {
        if (min_x > max_x)
            throw std::invalid_argument("DomainMapper: min_x > max_x");
        if (m < 1 || m > kMaxBits)
            throw std::invalid_argument("DomainMapper: m out of [1," +
                                        std::to_string(kMaxBits) + "]");
    }

    std::uint64_t min_x() const { return min_x_; }
    std::uint64_t max_x() const { return max_x_; }
    int m() const { return m_; }
    std::uint64_t domain_size() const { return std::uint64_t{1} << m_; }

    // f(x) = floor((x - min) / (max - min) * (2^m - 1)); 0 on a degenerate
    // single-point domain. Throws std::out_of_range outside [min, max].
    std::uint64_t value(std::uint64_t x) const {
        if (x < min_x_ || x > max_x_)
            throw std::out_of_range("DomainMapper: value outside raw domain");
        if (min_x_ == max_x_) return 0;
        const unsigned __int128 num =
            static_cast<unsigned __int128>(x - min_x_) * (domain_size() - 1);
        return static_cast<std::uint64_t>(num / (max_x_ - min_x_));
    }

    std::uint64_t clamp(std::uint64_t x) const {
        if (x < min_x_) return min_x_;
        if (x > max_x_) return max_x_;
        return x;
    }

    // Mapped image [f(st), f(end)] of a raw interval.
    std::pair<std::uint64_t, std::uint64_t> map(const Interval& s) const {
        return {value(s.st), value(s.end)};
    }

    friend bool operator==(const DomainMapper&, const DomainMapper&) = default;

  private:
    std::uint64_t min_x_;
    std::uint64_t max_x_;
    int m_;
};

}  // namespace hint
