#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "hint/workload.hpp"
#include "test_util.hpp"

using namespace hint;
using namespace hint::test;

namespace {

WorkloadSpec small_spec() {
    WorkloadSpec spec;
    spec.domain_len = 1 << 20;
    spec.n = 20'000;
    spec.query_count = 500;
    return spec;
}

double zeta(double alpha, std::uint64_t terms) {
    double z = 0;
    for (std::uint64_t x = 1; x <= terms; ++x) z += std::pow(static_cast<double>(x), -alpha);
    return z;
}

std::filesystem::path tmp_path(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("generation is deterministic under the seed") {
    const WorkloadSpec spec = small_spec();
    const auto a = gen_intervals(spec);
    const auto b = gen_intervals(spec);
    CHECK(a == b);
    const auto qa = gen_queries(spec, a);
    const auto qb = gen_queries(spec, b);
    CHECK(qa == qb);

    WorkloadSpec other = spec;
    other.seed = spec.seed + 1;
    CHECK(gen_intervals(other) != a);
}

TEST_CASE("all generated intervals lie inside the domain") {
    WorkloadSpec spec = small_spec();
    spec.sigma = 1e9;  // push many midpoints out of range: clipping must hold
    const auto set = gen_intervals(spec);
    CHECK(set.size() == spec.n);
    for (const Interval& s : set) {
        CHECK(s.st <= s.end);
        CHECK(s.end < spec.domain_len);
    }
}

TEST_CASE("zipf head mass: alpha=1.8 puts most intervals at length 1") {
    WorkloadSpec spec = small_spec();
    spec.n = 100'000;
    spec.alpha = 1.8;
    const auto set = gen_intervals(spec);
    std::size_t unit = 0;
    for (const Interval& s : set)
        if (s.end == s.st) ++unit;
    const double mass = static_cast<double>(unit) / static_cast<double>(set.size());
    CHECK(mass > 0.5);
    // Within +-5% (relative) of 1/zeta(1.8).
    const double expect = 1.0 / zeta(1.8, 2'000'000);
    CHECK(mass == doctest::Approx(expect).epsilon(0.05));
}

TEST_CASE("tiny sigma concentrates midpoints at the domain middle") {
    WorkloadSpec spec = small_spec();
    spec.sigma = 1e-6;
    spec.alpha = 1.8;
    const auto set = gen_intervals(spec);
    const std::uint64_t mu = (spec.domain_len - 1) / 2;
    for (const Interval& s : set) {
        const std::uint64_t mid = s.st + (s.end - s.st) / 2;
        CHECK(mid >= mu - 1);
        CHECK(mid <= mu + 1);
    }
}

TEST_CASE("query extents") {
    WorkloadSpec spec = small_spec();
    spec.query_extent_pct = 0.0;
    const auto set = gen_intervals(spec);
    for (const QueryRange& q : gen_queries(spec, set)) CHECK(q.st == q.end);

    // Default 0.1% of a 128M domain is 128,000 raw units.
    WorkloadSpec paper;
    paper.domain_len = 128'000'000;
    paper.query_extent_pct = 0.001;
    CHECK(paper.query_extent() == 128'000);
}

TEST_CASE("uniform query positions cover the domain") {
    WorkloadSpec spec = small_spec();
    spec.query_position = WorkloadSpec::Position::kUniform;
    spec.query_count = 20'000;
    const auto queries = gen_queries(spec, {});
    // Coarse coverage check: each decile of the domain gets its share.
    std::array<int, 10> bins{};
    for (const QueryRange& q : queries)
        ++bins[static_cast<std::size_t>(10 * (static_cast<double>(q.st) /
                                              static_cast<double>(spec.domain_len)))];
    for (int count : bins) CHECK(count > static_cast<int>(spec.query_count) / 20);
}

TEST_CASE("spec validation") {
    WorkloadSpec spec = small_spec();
    spec.alpha = 1.0;
    CHECK_THROWS_AS(gen_intervals(spec), std::invalid_argument);
    spec = small_spec();
    spec.sigma = 0;
    CHECK_THROWS_AS(gen_intervals(spec), std::invalid_argument);
    spec = small_spec();
    spec.query_extent_pct = 1.5;
    CHECK_THROWS_AS(gen_queries(spec, {}), std::invalid_argument);
}

TEST_CASE("dataset round trip across formats") {
    Rng rng(5);
    const auto set = random_intervals(rng, 500, 99999, 1000);
    for (const char* name : {"hint_wl.tsv", "hint_wl.csv", "hint_wl.tsv.gz"}) {
        const auto path = tmp_path(name);
        save_intervals(path.string(), set);
        CHECK(load_intervals(path.string()) == set);
        std::filesystem::remove(path);
    }
}

TEST_CASE("query file round trip") {
    Rng rng(6);
    const auto queries = random_queries(rng, 200, 99999, 512);
    const auto path = tmp_path("hint_q.tsv");
    save_queries(path.string(), queries);
    CHECK(load_queries(path.string()) == queries);
    std::filesystem::remove(path);
}

TEST_CASE("malformed dataset lines are rejected with the line number") {
    const auto path = tmp_path("hint_bad.tsv");
    {
        std::ofstream out(path);
        out << "0\t1\t5\n";
        out << "3\t10\t5\n";  // start > end
    }
    CHECK_THROWS_WITH_AS(load_intervals(path.string()),
                         doctest::Contains(":2:"), std::runtime_error);
    {
        std::ofstream out(path);
        out << "0\t1\n";  // missing field
    }
    CHECK_THROWS_WITH_AS(load_intervals(path.string()),
                         doctest::Contains(":1:"), std::runtime_error);
    {
        std::ofstream out(path);
        out << "a\t1\t5\n";  // non-numeric
    }
    CHECK_THROWS_AS(load_intervals(path.string()), std::runtime_error);
    std::filesystem::remove(path);
}

TEST_CASE("empty file loads as an empty set") {
    const auto path = tmp_path("hint_empty.tsv");
    std::ofstream(path).close();
    CHECK(load_intervals(path.string()).empty());
    std::filesystem::remove(path);
}
