#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hint/core.hpp"
#include "hint/grid.hpp"
#include "hint/hint.hpp"
#include "hint/hint_m.hpp"
#include "hint/hybrid.hpp"
#include "hint/stats.hpp"

namespace hint::bench {

enum class IndexKind { kBrute, kGrid, kHint, kHintM, kHybrid };

IndexKind parse_index_kind(const std::string& name);
std::string to_string(IndexKind kind);

struct RunParams {
    int m = 10;               // hint / hintm / hybrid
    std::uint32_t p = 1024;   // grid
    BuildOptions options;
    double merge_threshold = 0.10;  // hybrid
};

// Uniform front over the five index kinds under measurement.
class AnyIndex {
  public:
    static AnyIndex build(IndexKind kind, std::span<const Interval> intervals,
                          const RunParams& params);
    static AnyIndex adopt(HintMIndex&& index);

    IndexKind kind() const { return kind_; }
    void query(QueryRange q, std::vector<RecordId>& out, QueryStats* stats) const;
    std::uint64_t index_bytes() const;
    double replication() const;

    const HintMIndex* hintm() const { return hintm_ ? &*hintm_ : nullptr; }

  private:
    explicit AnyIndex(IndexKind kind) : kind_(kind) {}

    IndexKind kind_;
    std::vector<Interval> brute_;
    std::optional<Grid1D> grid_;
    std::optional<HintIndex> hint_;
    std::optional<HintMIndex> hintm_;
    std::unique_ptr<HybridIndex> hybrid_;  // shared_mutex member: not movable
};

struct QueryRunResult {
    double best_qps = 0;
    double mean_qps = 0;
    double mean_comparisons = 0;
    double mean_partitions_compared = 0;
    double mean_results = 0;
    std::uint64_t checksum = 0;
};

// One warm-up pass (which also collects counters and the checksum), then
// `repeats` timed passes; best-of and mean throughput are both reported.
// threads > 1 splits each timed pass across concurrent readers; acceptance
// numbers never use it.
QueryRunResult run_queries(const AnyIndex& index, std::span<const QueryRange> queries,
                           int repeats, int threads = 1);

struct MixedResult {
    double query_qps = 0;
    double insert_qps = 0;
    double delete_qps = 0;
    double total_seconds = 0;
    std::uint64_t checksum = 0;
};

// Report rows with a fixed schema; the writer prepends a version comment and
// the header when creating the file and appends otherwise.
struct ReportRow {
    std::string cmd;
    std::string index;
    std::string params;
    std::string dataset;
    std::uint64_t n = 0;
    std::uint64_t query_count = 0;
    int repeats = 0;
    double build_seconds = 0;
    std::uint64_t index_bytes = 0;
    double replication = 0;
    double throughput_best = 0;
    double throughput_mean = 0;
    double mean_comparisons = 0;
    double mean_partitions_compared = 0;
    double mean_results = 0;
    std::uint64_t checksum = 0;
    std::string op;
    std::uint64_t op_count = 0;
    double op_throughput = 0;
};

extern const char* const kReportSchemaComment;
extern const char* const kReportHeader;

std::string to_csv(const ReportRow& row);
void append_report(const std::string& path, std::span<const ReportRow> rows);

std::uint64_t fold_checksum(std::uint64_t checksum, std::span<const RecordId> ids);

}  // namespace hint::bench
