#include "hint/snapshot.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace hint {

namespace {

constexpr char kMagic[6] = {'H', 'I', 'N', 'T', 'M', '1'};
constexpr std::uint32_t kVersion = 1;

void put_bytes(std::ostream& out, const void* p, std::size_t n) {
    out.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
}

void put_u8(std::ostream& out, std::uint8_t v) { put_bytes(out, &v, 1); }

void put_u32(std::ostream& out, std::uint32_t v) {
    char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    put_bytes(out, b, 4);
}

void put_u64(std::ostream& out, std::uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    put_bytes(out, b, 8);
}

void put_i64(std::ostream& out, std::int64_t v) {
    put_u64(out, static_cast<std::uint64_t>(v));
}

void get_bytes(std::istream& in, void* p, std::size_t n) {
    in.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
    if (!in) throw std::runtime_error("snapshot: truncated input");
}

std::uint8_t get_u8(std::istream& in) {
    std::uint8_t v;
    get_bytes(in, &v, 1);
    return v;
}

std::uint32_t get_u32(std::istream& in) {
    unsigned char b[4];
    get_bytes(in, b, 4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
    return v;
}

std::uint64_t get_u64(std::istream& in) {
    unsigned char b[8];
    get_bytes(in, b, 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return v;
}

std::int64_t get_i64(std::istream& in) {
    return static_cast<std::int64_t>(get_u64(in));
}

void put_id_counts(std::ostream& out,
                   const std::unordered_map<RecordId, std::uint32_t>& map) {
    std::vector<std::pair<RecordId, std::uint32_t>> pairs(map.begin(), map.end());
    std::sort(pairs.begin(), pairs.end());
    put_u64(out, pairs.size());
    for (const auto& [id, count] : pairs) {
        put_u64(out, id);
        put_u32(out, count);
    }
}

void get_id_counts(std::istream& in,
                   std::unordered_map<RecordId, std::uint32_t>& map) {
    const std::uint64_t n = get_u64(in);
    map.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const RecordId id = get_u64(in);
        map.emplace(id, get_u32(in));
    }
}

}  // namespace

void save_snapshot(const HintMIndex& index, std::ostream& out) {
    if (index.layout() != HintMIndex::Layout::kOptimized)
        throw std::invalid_argument("snapshot: only the optimized layout persists");
    put_bytes(out, kMagic, sizeof kMagic);
    put_u32(out, kVersion);
    put_u32(out, static_cast<std::uint32_t>(index.m()));
    put_u64(out, index.mapper_.min_x());
    put_u64(out, index.mapper_.max_x());
    const BuildOptions& o = index.options_;
    put_u8(out, static_cast<std::uint8_t>((o.sorted ? 1 : 0) | (o.storage_opt ? 2 : 0) |
                                          (o.ids_column ? 4 : 0) | (o.sparse_dir ? 8 : 0)));
    put_u32(out, static_cast<std::uint32_t>(o.binary_search_threshold));
    put_id_counts(out, index.live_entries_);
    put_id_counts(out, index.dead_entries_);

    for (const auto& level : index.opt_.levels) {
        put_u64(out, level.dir.size());
        for (const auto& entry : level.dir) {
            put_u64(out, entry.offset);
            for (int k = 0; k < kSubdivisionCount; ++k) put_u64(out, entry.begin[k]);
            put_i64(out, entry.up);
        }
        for (int k = 0; k < kSubdivisionCount; ++k) {
            const auto& col = level.cols[k];
            put_u8(out, static_cast<std::uint8_t>(col.repr()));
            put_u64(out, col.size());
            const bool has_st = col.has_st();
            const bool has_end = col.has_end();
            col.visit([&](auto view) {
                for (std::uint64_t i = 0; i < col.size(); ++i) {
                    put_u64(out, view.id(i));
                    if (has_st) put_u64(out, view.st(i));
                    if (has_end) put_u64(out, view.end(i));
                }
            });
        }
    }
    if (!out) throw std::runtime_error("snapshot: write failed");
}

HintMIndex load_snapshot(std::istream& in) {
    char magic[6];
    get_bytes(in, magic, sizeof magic);
    if (std::memcmp(magic, kMagic, sizeof magic) != 0)
        throw std::runtime_error("snapshot: bad magic");
    if (get_u32(in) != kVersion) throw std::runtime_error("snapshot: unknown version");
    const int m = static_cast<int>(get_u32(in));
    const std::uint64_t min_x = get_u64(in);
    const std::uint64_t max_x = get_u64(in);
    const std::uint8_t bits = get_u8(in);
    BuildOptions options;
    options.sorted = bits & 1;
    options.storage_opt = bits & 2;
    options.ids_column = bits & 4;
    options.sparse_dir = bits & 8;
    options.binary_search_threshold = static_cast<int>(get_u32(in));

    HintMIndex index(HintMIndex::Layout::kOptimized, DomainMapper(min_x, max_x, m),
                     options);
    get_id_counts(in, index.live_entries_);
    get_id_counts(in, index.dead_entries_);
    for (const auto& [id, count] : index.live_entries_) index.total_entries_ += count;
    for (const auto& [id, count] : index.dead_entries_) {
        index.total_entries_ += count;
        index.dead_entry_sum_ += count;
        index.tombstones_.insert(id);
    }

    index.opt_.levels.resize(m + 1);
    for (auto& level : index.opt_.levels) {
        level.dir.resize(get_u64(in));
        for (auto& entry : level.dir) {
            entry.offset = get_u64(in);
            for (int k = 0; k < kSubdivisionCount; ++k) entry.begin[k] = get_u64(in);
            entry.up = get_i64(in);
        }
        for (int k = 0; k < kSubdivisionCount; ++k) {
            const auto kind = static_cast<SubdivisionKind>(k);
            auto& col = level.cols[k];
            col.configure(options.ids_column,
                          !options.storage_opt || subdivision_needs_st(kind),
                          !options.storage_opt || subdivision_needs_end(kind));
            if (static_cast<detail::SubColumns::Repr>(get_u8(in)) != col.repr())
                throw std::runtime_error("snapshot: layout mismatch");
            const std::uint64_t count = get_u64(in);
            const bool has_st = col.has_st();
            const bool has_end = col.has_end();
            for (std::uint64_t i = 0; i < count; ++i) {
                const RecordId id = get_u64(in);
                const std::uint64_t st = has_st ? get_u64(in) : 0;
                const std::uint64_t end = has_end ? get_u64(in) : 0;
                col.push(id, st, end);
            }
        }
    }
    return index;
}

void save_snapshot_file(const HintMIndex& index, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("snapshot: cannot open " + path);
    save_snapshot(index, out);
}

HintMIndex load_snapshot_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("snapshot: cannot open " + path);
    return load_snapshot(in);
}

}  // namespace hint
