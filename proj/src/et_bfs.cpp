#include "etbfs/et_bfs.hpp"

#include <stdexcept>

namespace etbfs {
namespace {

bool is_tree(VertexType t) {
  return t == VertexType::kTreeInternal || t == VertexType::kTreeLeaf;
}

}  // namespace

void teet(const EdgeTreeList& etl, const Bitmap& visited, std::vector<vertex_t>& parent) {
  const auto count = static_cast<std::int64_t>(etl.entries.size());
  // Every entry writes its own dst, so contiguous chunks are independent.
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    const EdgeTreeEntry& e = etl.entries[static_cast<std::size_t>(i)];
    if (e.core_edge == kNoVertex) continue;
    if (visited.get(e.core_edge) && parent[e.dst] == kNoVertex) parent[e.dst] = e.src;
  }
}

void teolv(const EdgeTreeList& etl, const Bitmap& visited, std::vector<vertex_t>& parent) {
  const auto count = static_cast<std::int64_t>(etl.entries.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    const EdgeTreeEntry& e = etl.entries[static_cast<std::size_t>(i)];
    if (visited.get(e.src) && parent[e.dst] == kNoVertex) parent[e.dst] = e.src;
  }
}

vertex_t traverse_return_core_edge(const ClassifiedGraph& cg, vertex_t start, BfsTree& tree) {
  if (start >= cg.graph.vertex_count || !is_tree(cg.vertex_type[start]))
    throw std::invalid_argument("traverse_return_core_edge: start is not a tree vertex");

  const std::uint64_t core = cg.core_vertex_count;
  tree.parent[start] = start;
  vertex_t core_edge = kNoVertex;
  std::vector<vertex_t> queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const vertex_t u = queue[head];
    for (vertex_t w : cg.graph.neighbors(u)) {
      if (w < core) {
        // The unique attachment of this tree; its parent points back in.
        core_edge = w;
        tree.parent[w] = u;
        continue;
      }
      if (tree.parent[w] != kNoVertex) continue;
      tree.parent[w] = u;
      queue.push_back(w);
    }
  }
  return core_edge;
}

BfsTree et_bfs(const ClassifiedGraph& cg, const EdgeTreeList& etl, vertex_t start,
               CoreKernel kernel, TreeReplay replay, const DegreeSplitAdjacency* split,
               const HybridPolicy& policy, KernelStats* stats) {
  const CsrGraph& graph = cg.graph;
  const std::uint64_t n = graph.vertex_count;
  const auto core = static_cast<vertex_t>(cg.core_vertex_count);
  if (start >= n) throw std::invalid_argument("et_bfs: start out of range");
  if (replay == TreeReplay::kTeolv && cg.mh != 0)
    throw std::invalid_argument("et_bfs: leaves-only replay needs a height-0 classification");

  const bool needs_split = kernel == CoreKernel::kDegreeAware ||
                           kernel == CoreKernel::kBlockSearch ||
                           kernel == CoreKernel::kHybridBlockSearch;
  if (needs_split) {
    if (split == nullptr) throw std::invalid_argument("et_bfs: kernel needs a degree split");
    const bool covers_core =
        split->neighbor_limit == core || (split->neighbor_limit == kNoVertex && core == n);
    if (split->in_plus.size() != n || !covers_core)
      throw std::invalid_argument("et_bfs: split does not match the core block");
  }

  BfsTree tree;
  tree.root = start;
  tree.parent.assign(n, kNoVertex);

  vertex_t effective = start;
  if (cg.vertex_type[start] == VertexType::kVertexZero) {
    tree.parent[start] = start;
    return tree;
  }
  if (is_tree(cg.vertex_type[start])) {
    effective = traverse_return_core_edge(cg, start, tree);
    if (effective == kNoVertex) return tree;  // whole component was one tree
  } else {
    tree.parent[start] = start;
  }

  FrontierState state(n);
  state.visited.set(effective);
  state.current.set(effective);
  switch (kernel) {
    case CoreKernel::kTopDown:
      run_top_down(graph, state, tree.parent, core, stats);
      break;
    case CoreKernel::kHybrid:
      run_hybrid(graph, nullptr, BottomUpKind::kClassic, state, tree.parent, core, policy, stats);
      break;
    case CoreKernel::kDegreeAware:
      run_hybrid(graph, split, BottomUpKind::kDegreeAware, state, tree.parent, core, policy,
                 stats);
      break;
    case CoreKernel::kBlockSearch:
      run_block_search(graph, *split, state, tree.parent, core, stats);
      break;
    case CoreKernel::kHybridBlockSearch:
      run_hybrid(graph, split, BottomUpKind::kBlockSearch, state, tree.parent, core, policy,
                 stats);
      break;
  }

  if (replay == TreeReplay::kTeet)
    teet(etl, state.visited, tree.parent);
  else
    teolv(etl, state.visited, tree.parent);
  return tree;
}

}  // namespace etbfs
