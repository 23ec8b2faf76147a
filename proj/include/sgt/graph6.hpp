#pragma once

#include <string>

#include "sgt/graph.hpp"

namespace sgt {

/// graph6 text encoding: a size prefix (single byte n+63 for n <= 62,
/// '~' + three bytes for 63 <= n <= 258047), then the upper triangle of the
/// adjacency matrix read column by column (x01, x02, x12, x03, ...), packed
/// big-endian six bits per byte with each byte offset by 63 and the last
/// byte zero-padded.
std::string emit_graph6(const Graph& g);

/// Inverse of emit_graph6. Throws std::invalid_argument on bytes outside
/// 63..126, truncated or overlong payloads, or nonzero padding.
Graph parse_graph6(const std::string& text);

}  // namespace sgt
