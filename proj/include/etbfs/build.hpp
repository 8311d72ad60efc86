#pragma once

#include <cstdint>
#include <vector>

#include "etbfs/types.hpp"

namespace etbfs {

/// Edges dropped while cleaning a raw edge list.
struct BuildStats {
  std::uint64_t dropped_self_loops = 0;
  std::uint64_t dropped_duplicates = 0;
};

/// Builds a symmetric, deduplicated, self-loop-free CSR from raw tuples.
/// Neighbor lists come out sorted ascending. Throws std::invalid_argument
/// naming the offending edge index if an endpoint is out of range.
CsrGraph build_csr(const EdgeList& edges, BuildStats* stats = nullptr);

/// Emits each undirected edge once as (min, max), sorted. Feeding the result
/// back through build_csr reproduces the graph.
EdgeList to_edge_list(const CsrGraph& graph);

/// BFS levels implied by a parent tree: level[root] = 0, children one deeper,
/// kUnreached where parent is unset. Throws std::invalid_argument if
/// parent[root] != root, a parent index is out of range, a chain hits an
/// unset parent, or a chain cycles.
std::vector<std::uint64_t> derive_levels(const BfsTree& tree);

/// Relabels a graph through a permutation: new vertex i is old vertex
/// new2old[i]. Neighbor lists are re-sorted ascending in the new space.
CsrGraph relabel_graph(const CsrGraph& graph, const std::vector<vertex_t>& new2old);

/// Inverts a permutation given as new2old.
std::vector<vertex_t> invert_permutation(const std::vector<vertex_t>& new2old);

}  // namespace etbfs
