#include <doctest.h>

#include "hint/grid.hpp"
#include "test_util.hpp"

using namespace hint;
using namespace hint::test;

TEST_CASE("brute force basics") {
    CHECK(brute_force_query({}, {3, 5}).empty());

    const std::vector<Interval> set{{1, 0, 4}, {2, 6, 8}, {3, 12, 20}};
    CHECK(brute_force_query(set, {9, 11}).empty());  // disjoint from all
    CHECK(sorted(brute_force_query(set, {4, 6})) == std::vector<RecordId>{1, 2});
    CHECK(sorted(brute_force_query(set, {0, 100})) == std::vector<RecordId>{1, 2, 3});
}

TEST_CASE("grid build validates p and assigns an interval to every overlapped cell") {
    const std::vector<Interval> set{{1, 0, 99}};
    CHECK_THROWS_AS(Grid1D(set, 0), std::invalid_argument);

    // p=1: one cell holding everything.
    Grid1D one(set, 1);
    CHECK(one.stored_entries() == 1);

    // An interval spanning the whole domain appears p times.
    const std::vector<Interval> wide{{1, 0, 999}, {2, 0, 0}, {3, 999, 999}};
    Grid1D grid(wide, 8);
    CHECK(grid.stored_entries() == 8 + 1 + 1);
}

TEST_CASE("grid per-cell membership equals an independent recomputation") {
    Rng rng(11);
    const auto set = random_intervals(rng, 400, 9999, 700);
    Grid1D grid(set, 16);
    for (std::uint32_t c = 0; c < 16; ++c) {
        const QueryRange cell_span{grid.cell_start(c), grid.cell_end(c)};
        // Count intervals overlapping the cell span directly.
        std::size_t expect = brute_force_query(set, cell_span).size();
        std::size_t have = 0;
        for (const Interval& s : set)
            if (grid.cell_of(s.st) <= c && c <= grid.cell_of(s.end)) ++have;
        CHECK(have == expect);
    }
}

TEST_CASE("reference value reports an interval exactly once") {
    // Four cells over [0,39]; an interval crossing several cells must be
    // reported only by the cell holding max(s.st, q.st).
    const std::vector<Interval> set{{4, 12, 35}, {1, 0, 3}, {2, 22, 24}};
    Grid1D grid(set, 4);
    const auto got = grid.query({15, 33});
    CHECK(std::count(got.begin(), got.end(), RecordId{4}) == 1);
    CHECK(sorted(got) == std::vector<RecordId>{2, 4});
}

TEST_CASE("query inside one cell is a plain filtered scan") {
    const std::vector<Interval> set{{1, 0, 9}, {2, 5, 6}, {3, 30, 39}};
    Grid1D grid(set, 4);
    CHECK(sorted(grid.query({5, 6})) == std::vector<RecordId>{1, 2});
}

TEST_CASE("grid equals brute force for random inputs and many p") {
    Rng rng(23);
    const auto set = random_intervals(rng, 1000, 65535, 4000);
    const auto queries = random_queries(rng, 300, 65535, 3000);
    for (std::uint32_t p : {1u, 2u, 7u, 64u, 1024u}) {
        Grid1D grid(set, p);
        for (const QueryRange& q : queries) {
            const auto got = grid.query(q);
            // Duplicate-freedom without any dedup set.
            auto srt = sorted(got);
            CHECK(std::adjacent_find(srt.begin(), srt.end()) == srt.end());
            CHECK(srt == oracle(set, q));
        }
    }
}

TEST_CASE("grid replication grows with interval length") {
    Rng rng(31);
    const auto short_set = random_intervals(rng, 2000, 65535, 16);
    const auto long_set = random_intervals(rng, 2000, 65535, 8192);
    CHECK(Grid1D(long_set, 256).replication() > Grid1D(short_set, 256).replication());
}
