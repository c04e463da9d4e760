#pragma once

#include <cstdint>
#include <span>

#include "hint/core.hpp"

namespace hint {

// Workload summary feeding the level-count model: cardinality, mean interval
// length, mean query extent, domain span, and the raw-domain bit width.
struct DatasetStats {
    double n = 0;
    double lambda_s = 0;   // mean interval length, raw units
    double lambda_q = 0;   // mean query extent, raw units
    double domain_span = 0;  // max end - min st
    int m_prime = 1;       // bits covering the raw domain

    static DatasetStats from(std::span<const Interval> intervals,
                             double query_extent);
    void validate() const;
};

// Machine-dependent unit costs. The defaults model a comparison/access cost
// ratio of about 3, representative of commodity hardware; calibrate_betas()
// measures the actual machine.
struct CostCoefficients {
    double beta_cmp = 3.05e-9;  // seconds per endpoint comparison
    double beta_acc = 1.00e-9;  // seconds per comparison-free result access
};

// Expected results per query: n * (lambda_s + lambda_q) / span.
double estimate_result_size(const DatasetStats& stats);

// Expected seconds per query at level count m: comparisons concentrate in
// the two boundary partitions of the bottom level (n / 2^m entries each),
// everything else is sequential access to results.
double estimate_query_cost(const DatasetStats& stats, const CostCoefficients& coeffs,
                           int m);

// Smallest m whose modeled cost converges (one-sided, within tolerance) to
// the cost of the comparison-free m = m_prime configuration.
int estimate_m_opt(const DatasetStats& stats, const CostCoefficients& coeffs,
                   double tolerance = 0.03);

// Expected index entries per interval of mean length lambda (>= 1 raw unit)
// at level count m over an m_prime-bit raw domain; never below one entry.
double predict_replication(double lambda_s, int m_prime, int m);

// Times a tight comparison loop and a tight result-append loop over
// sample_size elements. Single-threaded by contract.
CostCoefficients calibrate_betas(std::uint64_t sample_size);

}  // namespace hint
