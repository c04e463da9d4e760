#include <doctest.h>

#include "hint/core.hpp"
#include "hint/grid.hpp"
#include "hint/rng.hpp"

using namespace hint;

TEST_CASE("map_value matches the worked rescaling example") {
    // Raw domain [0,63] onto 4 bits: [21,38] lands on [5,9].
    const DomainMapper mapper(0, 63, 4);
    CHECK(mapper.value(21) == 5);
    CHECK(mapper.value(38) == 9);
    CHECK(mapper.value(0) == 0);
    CHECK(mapper.value(63) == 15);
}

TEST_CASE("map_value degenerate single-point domain") {
    const DomainMapper mapper(7, 7, 4);
    CHECK(mapper.value(7) == 0);
}

TEST_CASE("map_value rejects values outside the raw domain") {
    const DomainMapper mapper(10, 20, 4);
    CHECK_THROWS_AS(mapper.value(9), std::out_of_range);
    CHECK_THROWS_AS(mapper.value(21), std::out_of_range);
    CHECK(mapper.clamp(9) == 10);
    CHECK(mapper.clamp(25) == 20);
}

TEST_CASE("DomainMapper validates its parameters") {
    CHECK_THROWS_AS(DomainMapper(5, 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(DomainMapper(0, 10, 0), std::invalid_argument);
    CHECK_THROWS_AS(DomainMapper(0, 10, 31), std::invalid_argument);
}

TEST_CASE("prefix") {
    CHECK(prefix(3, 9, 4) == 4);   // 0b1001 -> 0b100
    CHECK(prefix(4, 5, 4) == 5);   // k = m is the identity
    CHECK(prefix(0, 13, 4) == 0);  // 0-bit prefix
}

TEST_CASE("prefix equality identifies the level-k partition (exhaustive, m <= 8)") {
    for (int m = 1; m <= 8; ++m) {
        const std::uint64_t domain = std::uint64_t{1} << m;
        for (int k = 0; k <= m; ++k) {
            const std::uint64_t cell = std::uint64_t{1} << (m - k);
            for (std::uint64_t x = 0; x < domain; ++x) {
                // Same partition iff same floor division by the cell width.
                CHECK(prefix(k, x, m) == x / cell);
            }
        }
    }
}

TEST_CASE("map_value is non-decreasing over the whole input range") {
    const DomainMapper mapper(3, 1003, 6);
    std::uint64_t prev = 0;
    for (std::uint64_t x = 3; x <= 1003; ++x) {
        const std::uint64_t v = mapper.value(x);
        CHECK(v >= prev);
        CHECK(v <= 63);
        prev = v;
    }
}

TEST_CASE("map_interval covers the raw interval: overlap is preserved") {
    const DomainMapper mapper(0, 63, 4);
    CHECK(mapper.map(Interval{0, 21, 38}) == std::pair<std::uint64_t, std::uint64_t>{5, 9});
    CHECK(mapper.map(Interval{0, 0, 0}) == std::pair<std::uint64_t, std::uint64_t>{0, 0});
    CHECK(mapper.map(Interval{0, 63, 63}) ==
          std::pair<std::uint64_t, std::uint64_t>{15, 15});

    // Random raw pairs: if the raw intervals overlap, the mapped ones must.
    Rng rng(7);
    const DomainMapper wide(100, 1'000'000, 10);
    for (int i = 0; i < 2000; ++i) {
        auto draw = [&] {
            std::uint64_t a = 100 + rng.next_below(999'901);
            std::uint64_t b = 100 + rng.next_below(999'901);
            if (a > b) std::swap(a, b);
            return Interval{0, a, b};
        };
        const Interval x = draw();
        const Interval y = draw();
        if (x.st <= y.end && y.st <= x.end) {
            const auto mx = wide.map(x);
            const auto my = wide.map(y);
            CHECK(mx.first <= my.second);
            CHECK(my.first <= mx.second);
        }
    }
}
