#pragma once

#include "etbfs/bfs.hpp"
#include "etbfs/bitmap.hpp"
#include "etbfs/types.hpp"

namespace etbfs {

/// Kernel run over the core block inside et_bfs.
enum class CoreKernel {
  kTopDown,            // pure top-down levels
  kHybrid,             // direction-optimizing with the classic bottom-up
  kDegreeAware,        // direction-optimizing with the two-pass bottom-up
  kBlockSearch,        // standalone block sweeps to fixpoint
  kHybridBlockSearch,  // direction-optimizing with block-sweep bottom-up
};

/// How tree vertices get their parents after the core traversal.
enum class TreeReplay {
  kTeet,   // guard on the tree's core edge vertex; works for any height
  kTeolv,  // guard on each entry's src; valid only for height-0 layouts
};

/// Sequential replay of all edge tree edges: for each entry whose tree's
/// core edge vertex is visited, parent[dst] <- src unless dst already has a
/// parent (entries on the start-in-tree path are pre-parented and must
/// survive). Entries of whole-component trees (sentinel core_edge) are
/// skipped; such trees are reachable only when the start lies inside them,
/// and then their parents are already set.
void teet(const EdgeTreeList& etl, const Bitmap& visited, std::vector<vertex_t>& parent);

/// Leaves-only replay for height-0 layouts: the guard tests visited(src)
/// directly, since every leaf's parent is the core edge vertex itself.
/// Whole-component pairs guard on their root, which is visited only when
/// the traversal started inside the pair.
void teolv(const EdgeTreeList& etl, const Bitmap& visited, std::vector<vertex_t>& parent);

/// BFS restricted to the edge tree containing start: orients parents away
/// from start across the whole tree and returns the tree's core edge vertex
/// with its parent set to the adjacent tree vertex. Returns kNoVertex when
/// the component is a pure tree (every vertex then has a parent).
/// Throws std::invalid_argument when start is not a tree vertex.
vertex_t traverse_return_core_edge(const ClassifiedGraph& cg, vertex_t start, BfsTree& tree);

/// Composite traversal over a relaid-out graph: resolve a start inside an
/// edge tree to its core edge vertex, run the core kernel over
/// [0, core_vertex_count) only, then replay the edge tree list.
///
/// split is required by the degree-aware and block-search core kernels and
/// must have been built with neighbor_limit == core_vertex_count. kTeolv
/// requires cg.mh == 0. Both violations throw std::invalid_argument before
/// any traversal work.
BfsTree et_bfs(const ClassifiedGraph& cg, const EdgeTreeList& etl, vertex_t start,
               CoreKernel kernel = CoreKernel::kHybrid, TreeReplay replay = TreeReplay::kTeet,
               const DegreeSplitAdjacency* split = nullptr, const HybridPolicy& policy = {},
               KernelStats* stats = nullptr);

}  // namespace etbfs
