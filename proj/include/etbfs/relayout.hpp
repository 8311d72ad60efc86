#pragma once

#include <cstdint>

#include "etbfs/types.hpp"

namespace etbfs {

/// Summary of the edge tree size distribution, as printed by the classify
/// subcommand.
struct EdgeTreeStats {
  std::uint64_t tree_count = 0;
  std::uint64_t tree_vertex_total = 0;        // == EdgeTreeList entry count
  std::uint64_t attached_core_edge_count = 0; // distinct core edge vertices
  std::uint64_t max_size = 0;
  std::uint64_t min_size = 0;
  double mean_size = 0.0;
};

/// Renumbers the graph so that core vertices (CORE_INTERNAL / CORE_EDGE)
/// occupy [0, core_vertex_count), sorted descending by degree with ascending
/// index as tie break, and tree / isolated vertices occupy the block above.
///
/// Tree vertices are numbered per tree in BFS order from the tree root, so
/// every tree parent gets a smaller new index than its children and the
/// extracted edge tree list comes out sorted by destination. Trees attached
/// to a core edge vertex are laid out first (in the order their core edge
/// vertices appear in the core block), then whole-component trees, then
/// isolated vertices.
///
/// Because every core index is below every tree index and neighbor lists are
/// re-sorted ascending in the new space, each vertex's core neighbors form a
/// prefix of its neighbor list; kernels restricted to the core stop at the
/// first neighbor >= core_vertex_count.
///
/// mh is recorded in the result and must be the bound passed to
/// classify_vertices when producing types.
///
/// Throws std::invalid_argument if types.size() != graph.vertex_count.
ClassifiedGraph relayout_csr(const CsrGraph& graph, const std::vector<VertexType>& types,
                             std::int64_t mh = -1);

/// Extracts one (src, dst, core_edge) entry per tree vertex of cg, sorted
/// ascending by dst. src is dst's unique tree parent; for a tree attached to
/// the core, the root's src is its core edge vertex and core_edge names that
/// vertex for every entry of the tree. Roots of whole-component trees carry
/// a src == dst self entry with core_edge == kNoVertex.
///
/// Throws std::runtime_error if cg is not actually tree-shaped where its
/// types claim it is: a cycle through tree vertices, a tree vertex adjacent
/// to CORE_INTERNAL, or a tree touching more than one core vertex.
EdgeTreeList extract_edge_tree_list(const ClassifiedGraph& cg);

/// Size distribution over the trees of an edge tree list.
EdgeTreeStats edge_tree_stats(const EdgeTreeList& etl, std::uint64_t core_vertex_count);

/// Applies the static round-robin shuffle to the core block of cg, leaving
/// tree and isolated indices untouched. The core block must be sorted
/// descending by degree (as relayout_csr leaves it); afterwards each of the
/// segment_count interleaved segments carries a descending degree sequence.
/// new2old / old2new are recomposed so they still map to the original graph.
///
/// Must run before extract_edge_tree_list: it renumbers core edge vertices.
ClassifiedGraph shuffle_core_block(const ClassifiedGraph& cg, std::uint64_t segment_count);

}  // namespace etbfs
