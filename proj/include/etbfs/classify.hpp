#pragma once

#include <cstdint>
#include <vector>

#include "etbfs/types.hpp"

namespace etbfs {

/// Per-type vertex totals of a classification.
struct TypeCounts {
  std::uint64_t core_internal = 0;
  std::uint64_t core_edge = 0;
  std::uint64_t tree_internal = 0;
  std::uint64_t tree_leaf = 0;
  std::uint64_t vertex_zero = 0;

  std::uint64_t total() const {
    return core_internal + core_edge + tree_internal + tree_leaf + vertex_zero;
  }
  std::uint64_t core() const { return core_internal + core_edge; }
  std::uint64_t tree() const { return tree_internal + tree_leaf; }
};

/// Classifies every vertex by peeling low-degree vertices bottom up.
///
/// Degree-0 vertices become VZ and degree-1 vertices TL, decrementing their
/// neighbors' live degree counts. Remaining vertices whose live degree drops
/// to one (or whose neighbors were all stripped in earlier rounds) become TI,
/// round by round, until the peel reaches height `mh`; mh == -1 peels to the
/// fixpoint, mh == 0 marks leaves only and never produces TI vertices.
/// Finally every untouched vertex that lost a neighbor becomes CE.
std::vector<VertexType> classify_vertices(const CsrGraph& graph, std::int64_t mh);

/// Peak height: the smallest mh for which classify_vertices(graph, mh)
/// equals the fixpoint classification, i.e. the number of TI peeling rounds
/// that discover at least one vertex.
std::uint64_t compute_peak_height(const CsrGraph& graph);

TypeCounts count_types(const std::vector<VertexType>& types);

}  // namespace etbfs
