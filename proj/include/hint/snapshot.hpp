#pragma once

#include <iosfwd>
#include <string>

#include "hint/hint_m.hpp"

namespace hint {

// Versioned binary container for an optimized index: magic "HINTM1", then
// little-endian header (mapper, options), tombstones, and per level the
// directory followed by per-subdivision column lengths and columns. The
// format is documented in the README; it is an internal benchmark-reuse
// format, not compatible with anything external. Appendable-layout indexes
// are transient and refuse to serialize.
void save_snapshot(const HintMIndex& index, std::ostream& out);
HintMIndex load_snapshot(std::istream& in);

void save_snapshot_file(const HintMIndex& index, const std::string& path);
HintMIndex load_snapshot_file(const std::string& path);

}  // namespace hint
