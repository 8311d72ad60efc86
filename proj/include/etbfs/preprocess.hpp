#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "etbfs/types.hpp"

namespace etbfs {

/// Neighbor lists split for bottom-up probing. For every vertex the single
/// highest-degree neighbor (in_plus) is probed first; the remaining
/// neighbors (in_minus) are stored sorted descending by their degree, ties
/// broken by ascending index, and scanned with early exit.
///
/// When neighbor_limit != kNoVertex only neighbors below the limit are
/// included; kernels that run on the core block of a relaid-out graph build
/// the split with neighbor_limit = core_vertex_count so tree indices never
/// surface during probing.
struct DegreeSplitAdjacency {
  std::vector<vertex_t> in_plus;             // kNoVertex where no neighbor qualifies
  std::vector<std::uint64_t> minus_offsets;  // vertex_count + 1 entries
  std::vector<vertex_t> minus_cols;
  vertex_t neighbor_limit = kNoVertex;

  std::span<const vertex_t> in_minus(vertex_t v) const {
    return {minus_cols.data() + minus_offsets[v], minus_cols.data() + minus_offsets[v + 1]};
  }
};

/// Vertex-range partition into segment_count contiguous segments with the
/// per-segment outgoing adjacency materialized: out_neighbors(k, v) lists
/// the neighbors of v that fall inside segment k, for every vertex v.
/// Incoming adjacency of a segment vertex is the full neighbor list of the
/// base graph; in_neighbors checks the membership precondition.
struct SegmentPartition {
  std::uint64_t segment_count = 1;
  std::vector<std::uint64_t> boundaries;  // segment_count + 1 vertex ids
  std::vector<std::vector<std::uint64_t>> out_offsets;  // per segment, vertex_count + 1
  std::vector<std::vector<vertex_t>> out_cols;

  std::span<const vertex_t> out_neighbors(std::uint64_t k, vertex_t v) const {
    return {out_cols[k].data() + out_offsets[k][v], out_cols[k].data() + out_offsets[k][v + 1]};
  }
  std::span<const vertex_t> in_neighbors(const CsrGraph& base, std::uint64_t k, vertex_t w) const;
};

/// Result of the static round-robin shuffle: the input ids redistributed
/// over segment_count interleaved segments (segment k occupies
/// [segment_offsets[k], segment_offsets[k+1]) of shuffled_ids), plus the
/// position permutation with shuffled_ids[p] == sorted_ids[new2old[p]].
struct SrrsResult {
  std::vector<vertex_t> shuffled_ids;
  std::vector<std::uint64_t> new2old;
  std::vector<std::uint64_t> segment_offsets;
};

/// Compacted graph without zero-degree vertices. old2new maps dropped
/// vertices to kNoVertex.
struct CompactResult {
  CsrGraph graph;
  std::vector<vertex_t> new2old;
  std::vector<vertex_t> old2new;
};

/// Splits every neighbor list into its highest-degree member and the
/// descending-degree remainder. Neighbors >= neighbor_limit are dropped
/// from both parts (kNoVertex = keep everything).
DegreeSplitAdjacency split_degree_aware(const CsrGraph& graph, vertex_t neighbor_limit = kNoVertex);

/// Cuts [0, vertex_count) into l segments, V_k = [k*n/l, (k+1)*n/l), and
/// materializes each segment's filtered out-adjacency.
/// Throws std::invalid_argument when l == 0 or l > vertex_count.
SegmentPartition partition_segments(const CsrGraph& graph, std::uint64_t l);

/// Round-robin redistribution of a descending-degree id sequence: position p
/// of segment tid receives sorted_ids[tid + segment_count * p]. Leftover
/// ids when the length is not divisible (the lowest-degree tail) are
/// appended round robin, one to each of the first segments; each segment
/// therefore stays sorted descending by degree.
/// Throws std::invalid_argument when segment_count == 0.
SrrsResult srrs_shuffle(const std::vector<vertex_t>& sorted_ids, std::uint64_t segment_count);

/// Drops all zero-degree vertices, preserving the relative order of the
/// rest.
CompactResult remove_zero_vertices(const CsrGraph& graph);

/// Permutation (new index -> old index) sorting all vertices descending by
/// degree, ties broken by ascending index.
std::vector<vertex_t> degree_sort_permutation(const CsrGraph& graph);

}  // namespace etbfs
