#include "hint/workload.hpp"

#include <zlib.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <memory>
#include <stdexcept>

#include "hint/rng.hpp"

namespace hint {

void WorkloadSpec::validate() const {
    if (domain_len < 1) throw std::invalid_argument("workload: domain_len must be >= 1");
    if (!(alpha > 1.0)) throw std::invalid_argument("workload: alpha must be > 1");
    if (!(sigma > 0.0)) throw std::invalid_argument("workload: sigma must be > 0");
    if (query_extent_pct < 0.0 || query_extent_pct > 1.0)
        throw std::invalid_argument("workload: query_extent_pct must be in [0,1]");
}

std::uint64_t WorkloadSpec::query_extent() const {
    return static_cast<std::uint64_t>(
        std::llround(query_extent_pct * static_cast<double>(domain_len)));
}

std::vector<Interval> gen_intervals(const WorkloadSpec& spec) {
    spec.validate();
    Rng rng(spec.seed);
    const double mu = static_cast<double>(spec.domain_len - 1) / 2.0;
    const std::uint64_t dmax = spec.domain_len - 1;
    std::vector<Interval> out;
    out.reserve(spec.n);
    for (std::uint64_t i = 0; i < spec.n; ++i) {
        const std::uint64_t len = rng.next_zipf(spec.alpha, spec.domain_len);
        const double mid = rng.next_normal(mu, spec.sigma);
        // Clip to the domain rather than rejecting, so n is preserved.
        const double st_f = std::floor(mid) - std::floor((len - 1) / 2.0);
        std::int64_t st = static_cast<std::int64_t>(st_f);
        std::int64_t en = st + static_cast<std::int64_t>(len) - 1;
        st = std::clamp<std::int64_t>(st, 0, static_cast<std::int64_t>(dmax));
        en = std::clamp<std::int64_t>(en, 0, static_cast<std::int64_t>(dmax));
        out.push_back(Interval{i, static_cast<std::uint64_t>(st),
                               static_cast<std::uint64_t>(en)});
    }
    return out;
}

std::vector<QueryRange> gen_queries(const WorkloadSpec& spec,
                                    std::span<const Interval> dataset) {
    spec.validate();
    Rng rng(spec.seed ^ 0x71ee2147c915b0d5ULL);  // independent stream
    const std::uint64_t extent = spec.query_extent();
    const std::uint64_t dmax = spec.domain_len - 1;
    const std::uint64_t max_start = extent > dmax ? 0 : dmax - extent;
    const bool follow_data =
        spec.query_position == WorkloadSpec::Position::kDataFollowing && !dataset.empty();
    std::vector<QueryRange> out;
    out.reserve(spec.query_count);
    for (std::uint64_t i = 0; i < spec.query_count; ++i) {
        std::uint64_t st;
        if (follow_data) {
            const Interval& s = dataset[rng.next_below(dataset.size())];
            const std::uint64_t mid = s.st + (s.end - s.st) / 2;
            const std::uint64_t half = extent / 2;
            st = mid > half ? mid - half : 0;
            st = std::min(st, max_start);
        } else {
            st = max_start == 0 ? 0 : rng.next_below(max_start + 1);
        }
        out.push_back(QueryRange{st, st + extent});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dataset I/O
// ---------------------------------------------------------------------------

namespace {

bool ends_with(const std::string& s, const char* suffix) {
    const std::size_t n = std::strlen(suffix);
    return s.size() >= n && s.compare(s.size() - n, n, suffix) == 0;
}

char separator_for(const std::string& path) {
    std::string p = path;
    if (ends_with(p, ".gz")) p = p.substr(0, p.size() - 3);
    return ends_with(p, ".csv") ? ',' : '\t';
}

// Line source over plain or gzip files. zlib's gzFile reads both.
class LineReader {
  public:
    explicit LineReader(const std::string& path) : path_(path) {
        file_ = gzopen(path.c_str(), "rb");
        if (!file_) throw std::runtime_error("cannot open " + path);
    }
    ~LineReader() { gzclose(file_); }
    LineReader(const LineReader&) = delete;
    LineReader& operator=(const LineReader&) = delete;

    bool next(std::string& line) {
        line.clear();
        char buf[4096];
        bool got = false;
        while (gzgets(file_, buf, sizeof buf)) {
            got = true;
            line += buf;
            if (!line.empty() && line.back() == '\n') {
                line.pop_back();
                if (!line.empty() && line.back() == '\r') line.pop_back();
                return true;
            }
        }
        return got;
    }

    const std::string& path() const { return path_; }

  private:
    std::string path_;
    gzFile file_;
};

class LineWriter {
  public:
    explicit LineWriter(const std::string& path) : gzip_(ends_with(path, ".gz")) {
        if (gzip_) {
            gz_ = gzopen(path.c_str(), "wb");
            if (!gz_) throw std::runtime_error("cannot open " + path);
        } else {
            f_ = std::fopen(path.c_str(), "wb");
            if (!f_) throw std::runtime_error("cannot open " + path);
        }
    }
    ~LineWriter() {
        if (gzip_) gzclose(gz_);
        else std::fclose(f_);
    }
    LineWriter(const LineWriter&) = delete;
    LineWriter& operator=(const LineWriter&) = delete;

    void write(const std::string& line) {
        if (gzip_) {
            if (gzwrite(gz_, line.data(), static_cast<unsigned>(line.size())) <= 0)
                throw std::runtime_error("write failed");
        } else {
            if (std::fwrite(line.data(), 1, line.size(), f_) != line.size())
                throw std::runtime_error("write failed");
        }
    }

  private:
    bool gzip_;
    gzFile gz_ = nullptr;
    std::FILE* f_ = nullptr;
};

std::uint64_t parse_u64(const std::string& field, const std::string& path,
                        std::size_t lineno) {
    if (field.empty())
        throw std::runtime_error(path + ":" + std::to_string(lineno) + ": empty field");
    std::uint64_t v = 0;
    for (char c : field) {
        if (c < '0' || c > '9')
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": not an unsigned integer: '" + field + "'");
        const std::uint64_t d = static_cast<std::uint64_t>(c - '0');
        if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10)
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": overflow");
        v = v * 10 + d;
    }
    return v;
}

std::vector<std::string> split_fields(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

std::vector<Interval> load_intervals(const std::string& path) {
    LineReader in(path);
    const char sep = separator_for(path);
    std::vector<Interval> out;
    std::string line;
    std::size_t lineno = 0;
    while (in.next(line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto fields = split_fields(line, sep);
        if (fields.size() != 3)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected 3 fields, got " +
                                     std::to_string(fields.size()));
        Interval s{parse_u64(fields[0], path, lineno),
                   parse_u64(fields[1], path, lineno),
                   parse_u64(fields[2], path, lineno)};
        if (s.st > s.end)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": interval start exceeds end");
        out.push_back(s);
    }
    return out;
}

void save_intervals(const std::string& path, std::span<const Interval> intervals) {
    LineWriter out(path);
    const char sep = separator_for(path);
    std::string line;
    for (const Interval& s : intervals) {
        line = std::to_string(s.id);
        line += sep;
        line += std::to_string(s.st);
        line += sep;
        line += std::to_string(s.end);
        line += '\n';
        out.write(line);
    }
}

std::vector<QueryRange> load_queries(const std::string& path) {
    LineReader in(path);
    const char sep = separator_for(path);
    std::vector<QueryRange> out;
    std::string line;
    std::size_t lineno = 0;
    while (in.next(line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto fields = split_fields(line, sep);
        if (fields.size() != 2)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected 2 fields, got " +
                                     std::to_string(fields.size()));
        QueryRange q{parse_u64(fields[0], path, lineno),
                     parse_u64(fields[1], path, lineno)};
        if (q.st > q.end)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": query start exceeds end");
        out.push_back(q);
    }
    return out;
}

void save_queries(const std::string& path, std::span<const QueryRange> queries) {
    LineWriter out(path);
    const char sep = separator_for(path);
    std::string line;
    for (const QueryRange& q : queries) {
        line = std::to_string(q.st);
        line += sep;
        line += std::to_string(q.end);
        line += '\n';
        out.write(line);
    }
}

}  // namespace hint
