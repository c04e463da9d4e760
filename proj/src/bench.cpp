#include "hint/bench.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "hint/grid.hpp"
#include "hint/rng.hpp"

namespace hint::bench {

IndexKind parse_index_kind(const std::string& name) {
    if (name == "brute") return IndexKind::kBrute;
    if (name == "grid") return IndexKind::kGrid;
    if (name == "hint") return IndexKind::kHint;
    if (name == "hintm") return IndexKind::kHintM;
    if (name == "hybrid") return IndexKind::kHybrid;
    throw std::invalid_argument("unknown index kind: " + name);
}

std::string to_string(IndexKind kind) {
    switch (kind) {
        case IndexKind::kBrute: return "brute";
        case IndexKind::kGrid: return "grid";
        case IndexKind::kHint: return "hint";
        case IndexKind::kHintM: return "hintm";
        case IndexKind::kHybrid: return "hybrid";
    }
    return "?";
}

AnyIndex AnyIndex::build(IndexKind kind, std::span<const Interval> intervals,
                         const RunParams& params) {
    AnyIndex index(kind);
    switch (kind) {
        case IndexKind::kBrute:
            index.brute_.assign(intervals.begin(), intervals.end());
            break;
        case IndexKind::kGrid:
            index.grid_.emplace(intervals, params.p);
            break;
        case IndexKind::kHint:
            index.hint_.emplace(HintIndex::build(intervals, params.m));
            break;
        case IndexKind::kHintM:
            index.hintm_.emplace(HintMIndex::build(
                intervals, HintMIndex::fit_mapper(intervals, params.m), params.options));
            break;
        case IndexKind::kHybrid:
            index.hybrid_ = std::make_unique<HybridIndex>(
                intervals, HintMIndex::fit_mapper(intervals, params.m), params.options,
                params.merge_threshold);
            break;
    }
    return index;
}

AnyIndex AnyIndex::adopt(HintMIndex&& index) {
    AnyIndex any(IndexKind::kHintM);
    any.hintm_.emplace(std::move(index));
    return any;
}

void AnyIndex::query(QueryRange q, std::vector<RecordId>& out, QueryStats* stats) const {
    switch (kind_) {
        case IndexKind::kBrute: {
            QueryStats local;
            QueryStats& st = stats ? *stats : local;
            st = QueryStats{};
            for (const Interval& s : brute_) {
                st.comparisons += 2;
                if (overlaps(s, q)) {
                    out.push_back(s.id);
                    ++st.results;
                }
            }
            break;
        }
        case IndexKind::kGrid: grid_->query(q, out, stats); break;
        case IndexKind::kHint: hint_->query(q, out, stats); break;
        case IndexKind::kHintM: hintm_->query(q, out, stats); break;
        case IndexKind::kHybrid: hybrid_->query(q, out, stats); break;
    }
}

std::uint64_t AnyIndex::index_bytes() const {
    switch (kind_) {
        case IndexKind::kBrute: return brute_.size() * sizeof(Interval);
        case IndexKind::kGrid: return grid_->index_bytes();
        case IndexKind::kHint: return hint_->index_bytes();
        case IndexKind::kHintM: return hintm_->index_bytes();
        case IndexKind::kHybrid: return hybrid_->index_bytes();
    }
    return 0;
}

double AnyIndex::replication() const {
    switch (kind_) {
        case IndexKind::kBrute: return 1.0;
        case IndexKind::kGrid: return grid_->replication();
        case IndexKind::kHint: return hint_->replication();
        case IndexKind::kHintM: return hintm_->replication_live();
        case IndexKind::kHybrid: {
            const std::uint64_t live = hybrid_->live_count();
            return live == 0 ? 0.0
                             : static_cast<double>(hybrid_->total_entries()) /
                                   static_cast<double>(live);
        }
    }
    return 0;
}

std::uint64_t fold_checksum(std::uint64_t checksum, std::span<const RecordId> ids) {
    for (RecordId id : ids) checksum += mix_id(id);
    return checksum;
}

QueryRunResult run_queries(const AnyIndex& index, std::span<const QueryRange> queries,
                           int repeats, int threads) {
    if (queries.empty()) throw std::invalid_argument("run_queries: no queries");
    if (repeats < 1) throw std::invalid_argument("run_queries: repeats < 1");
    if (threads < 1) throw std::invalid_argument("run_queries: threads < 1");
    using clock = std::chrono::steady_clock;
    QueryRunResult result;

    // Warm-up doubles as the instrumented pass.
    std::vector<RecordId> out;
    QueryStats totals;
    for (const QueryRange& q : queries) {
        out.clear();
        QueryStats stats;
        index.query(q, out, &stats);
        totals += stats;
        result.checksum = fold_checksum(result.checksum, out);
    }
    const double nq = static_cast<double>(queries.size());
    result.mean_comparisons = static_cast<double>(totals.comparisons) / nq;
    result.mean_partitions_compared =
        static_cast<double>(totals.partitions_compared) / nq;
    result.mean_results = static_cast<double>(totals.results) / nq;

    auto run_pass = [&]() -> std::uint64_t {
        if (threads == 1) {
            std::uint64_t fold = 0;
            for (const QueryRange& q : queries) {
                out.clear();
                index.query(q, out, nullptr);
                fold = fold_checksum(fold, out);
            }
            return fold;
        }
        std::vector<std::uint64_t> folds(threads, 0);
        std::vector<std::thread> workers;
        const std::size_t chunk = (queries.size() + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            workers.emplace_back([&, t] {
                std::vector<RecordId> local;
                const std::size_t lo = std::min(queries.size(), t * chunk);
                const std::size_t hi = std::min(queries.size(), lo + chunk);
                std::uint64_t fold = 0;
                for (std::size_t i = lo; i < hi; ++i) {
                    local.clear();
                    index.query(queries[i], local, nullptr);
                    fold = fold_checksum(fold, local);
                }
                folds[t] = fold;
            });
        }
        std::uint64_t fold = 0;
        for (auto& w : workers) w.join();
        for (std::uint64_t f : folds) fold += f;
        return fold;
    };

    double time_sum = 0;
    double time_best = 0;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = clock::now();
        const std::uint64_t fold = run_pass();
        const auto t1 = clock::now();
        if (fold != result.checksum)
            throw std::runtime_error("run_queries: nondeterministic answers");
        const double seconds = std::chrono::duration<double>(t1 - t0).count();
        time_sum += seconds;
        if (r == 0 || seconds < time_best) time_best = seconds;
    }
    result.best_qps = nq / time_best;
    result.mean_qps = nq / (time_sum / repeats);
    return result;
}

const char* const kReportSchemaComment = "# hint-bench csv v1";
const char* const kReportHeader =
    "cmd,index,params,dataset,n,query_count,repeats,build_seconds,index_bytes,"
    "replication,throughput_best,throughput_mean,mean_comparisons,"
    "mean_partitions_compared,mean_results,checksum,op,op_count,op_throughput";

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

std::string to_csv(const ReportRow& r) {
    std::string line;
    line += r.cmd;
    line += ',';
    line += r.index;
    line += ',';
    line += r.params;
    line += ',';
    line += r.dataset;
    line += ',';
    line += std::to_string(r.n);
    line += ',';
    line += std::to_string(r.query_count);
    line += ',';
    line += std::to_string(r.repeats);
    line += ',';
    line += fmt_double(r.build_seconds);
    line += ',';
    line += std::to_string(r.index_bytes);
    line += ',';
    line += fmt_double(r.replication);
    line += ',';
    line += fmt_double(r.throughput_best);
    line += ',';
    line += fmt_double(r.throughput_mean);
    line += ',';
    line += fmt_double(r.mean_comparisons);
    line += ',';
    line += fmt_double(r.mean_partitions_compared);
    line += ',';
    line += fmt_double(r.mean_results);
    line += ',';
    line += std::to_string(r.checksum);
    line += ',';
    line += r.op;
    line += ',';
    line += std::to_string(r.op_count);
    line += ',';
    line += fmt_double(r.op_throughput);
    return line;
}

void append_report(const std::string& path, std::span<const ReportRow> rows) {
    bool fresh = false;
    {
        std::ifstream probe(path, std::ios::binary);
        fresh = !probe.good() || probe.peek() == std::ifstream::traits_type::eof();
    }
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open report file " + path);
    if (fresh) out << kReportSchemaComment << '\n' << kReportHeader << '\n';
    for (const ReportRow& row : rows) out << to_csv(row) << '\n';
    if (!out) throw std::runtime_error("report write failed");
}

}  // namespace hint::bench
