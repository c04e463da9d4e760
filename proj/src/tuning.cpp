#include "hint/tuning.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "hint/rng.hpp"

namespace hint {

DatasetStats DatasetStats::from(std::span<const Interval> intervals,
                                double query_extent) {
    if (intervals.empty())
        throw std::invalid_argument("DatasetStats: empty dataset");
    std::uint64_t lo = intervals[0].st;
    std::uint64_t hi = intervals[0].end;
    double length_sum = 0;
    for (const Interval& s : intervals) {
        lo = std::min(lo, s.st);
        hi = std::max(hi, s.end);
        length_sum += static_cast<double>(s.end - s.st);
    }
    DatasetStats stats;
    stats.n = static_cast<double>(intervals.size());
    stats.lambda_s = length_sum / stats.n;
    stats.lambda_q = query_extent;
    stats.domain_span = static_cast<double>(hi - lo);
    stats.m_prime = 1;
    while ((std::uint64_t{1} << stats.m_prime) < hi - lo + 1 && stats.m_prime < 62)
        ++stats.m_prime;
    return stats;
}

void DatasetStats::validate() const {
    if (!(n > 0)) throw std::invalid_argument("DatasetStats: n must be positive");
    if (domain_span <= 0)
        throw std::invalid_argument("DatasetStats: empty domain span");
    if (lambda_s < 0 || lambda_q < 0 || lambda_s > domain_span || lambda_q > domain_span)
        throw std::invalid_argument("DatasetStats: lengths out of range");
    if (m_prime < 1) throw std::invalid_argument("DatasetStats: m_prime < 1");
}

double estimate_result_size(const DatasetStats& stats) {
    stats.validate();
    return stats.n * (stats.lambda_s + stats.lambda_q) / stats.domain_span;
}

double estimate_query_cost(const DatasetStats& stats, const CostCoefficients& coeffs,
                           int m) {
    if (m < 1) throw std::invalid_argument("estimate_query_cost: m < 1");
    const double per_partition = stats.n / std::exp2(m);
    const double cmp_cost = coeffs.beta_cmp * per_partition;
    // Accesses below zero are meaningless; the comparison term already covers
    // those few results.
    const double accessed = std::max(0.0, estimate_result_size(stats) - 2.0 * per_partition);
    return cmp_cost + coeffs.beta_acc * accessed;
}

int estimate_m_opt(const DatasetStats& stats, const CostCoefficients& coeffs,
                   double tolerance) {
    if (!(tolerance > 0)) throw std::invalid_argument("estimate_m_opt: tolerance <= 0");
    stats.validate();
    const double reference = estimate_query_cost(stats, coeffs, stats.m_prime);
    for (int m = 1; m < stats.m_prime; ++m) {
        if (estimate_query_cost(stats, coeffs, m) <= reference * (1.0 + tolerance))
            return m;
    }
    return stats.m_prime;
}

double predict_replication(double lambda_s, int m_prime, int m) {
    const double lambda = std::max(lambda_s, 1.0);  // unit-length floor
    const double mapped = lambda * std::exp2(m - m_prime);
    return std::max(1.0, std::log2(mapped + 1.0));
}

namespace {

inline void do_not_optimize(std::uint64_t& v) {
    asm volatile("" : "+r"(v) : : "memory");
}

}  // namespace

CostCoefficients calibrate_betas(std::uint64_t sample_size) {
    if (sample_size == 0)
        throw std::invalid_argument("calibrate_betas: sample_size must be > 0");
    using clock = std::chrono::steady_clock;

    // beta_cmp is the per-element cost of a comparing scan (an endpoint test
    // with data-dependent branching deciding whether the id is collected, as
    // in a boundary partition); beta_acc the per-element cost of collecting
    // ids with no test at all. The pivot sits at the median so the branch is
    // unpredictable.
    Rng rng(0x5eedULL);
    std::vector<std::uint64_t> values(sample_size);
    for (auto& v : values) v = rng.next_u64();

    double best_cmp = 0;
    double best_acc = 0;
    std::vector<std::uint64_t> sink_buf;
    sink_buf.reserve(sample_size);
    const std::uint64_t pivot = std::uint64_t{1} << 63;
    for (int round = 0; round < 3; ++round) {
        sink_buf.clear();
        std::uint64_t checksum = 0;
        auto t0 = clock::now();
        for (std::uint64_t v : values) {
            if (v >= pivot) {
                sink_buf.push_back(v);
                checksum += v;
            }
        }
        auto t1 = clock::now();
        do_not_optimize(checksum);
        const double cmp =
            std::chrono::duration<double>(t1 - t0).count() / static_cast<double>(sample_size);

        sink_buf.clear();
        checksum = 0;
        t0 = clock::now();
        for (std::uint64_t v : values) {
            sink_buf.push_back(v);
            checksum += v;
        }
        t1 = clock::now();
        do_not_optimize(checksum);
        const double acc =
            std::chrono::duration<double>(t1 - t0).count() / static_cast<double>(sample_size);

        if (round == 0 || cmp < best_cmp) best_cmp = cmp;
        if (round == 0 || acc < best_acc) best_acc = acc;
    }
    CostCoefficients coeffs;
    coeffs.beta_cmp = std::max(best_cmp, 1e-12);
    coeffs.beta_acc = std::max(best_acc, 1e-12);
    return coeffs;
}

}  // namespace hint
