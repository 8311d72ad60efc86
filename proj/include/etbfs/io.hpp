#pragma once

#include <string>

#include "etbfs/types.hpp"

namespace etbfs {

enum class GraphFormat { kBinary, kText };

/// Binary graph layout: 4-byte magic "ETG1", then little-endian unsigned
/// 64-bit vertex_count and edge_count, then edge_count (src, dst) pairs of
/// little-endian unsigned 64-bit values. Byte-exact round trips.
///
/// Text layout: one "src dst" decimal pair per line; lines starting with
/// '#' are comments. Writing emits a "# vertices N" comment so isolated
/// trailing vertices survive the round trip; reading honors that comment
/// and otherwise infers vertex_count as max endpoint + 1.
///
/// Read errors (bad magic, truncation, endpoints at or above vertex_count,
/// malformed lines) throw std::runtime_error naming the path and the byte
/// offset or line number.
void write_graph(const std::string& path, const EdgeList& edges, GraphFormat format);
EdgeList read_graph(const std::string& path, GraphFormat format);

/// Parent tree file: 4-byte magic "ETT1", then little-endian unsigned
/// 64-bit vertex_count and root, then vertex_count little-endian unsigned
/// 64-bit parent slots (all-ones for unreached).
void write_tree(const std::string& path, const BfsTree& tree);
BfsTree read_tree(const std::string& path);

/// Maps "binary" / "text" to GraphFormat; throws std::invalid_argument on
/// anything else.
GraphFormat parse_graph_format(const std::string& name);

}  // namespace etbfs
