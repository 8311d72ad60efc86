#include "etbfs/classify.hpp"

#include <stdexcept>

namespace etbfs {
namespace {

// Single sequential sweep implementation shared by classification and peak
// height. Returns the number of TI rounds that found at least one vertex.
std::uint64_t peel(const CsrGraph& graph, std::int64_t mh, std::vector<VertexType>& type) {
  const std::uint64_t n = graph.vertex_count;
  type.assign(n, VertexType::kCoreInternal);

  std::vector<std::uint64_t> num_pre(graph.degrees);
  std::vector<std::uint64_t> num_new(graph.degrees);

  bool found = false;
  for (vertex_t v = 0; v < n; ++v) {
    if (num_pre[v] == 0) {
      type[v] = VertexType::kVertexZero;
    } else if (num_pre[v] == 1) {
      type[v] = VertexType::kTreeLeaf;
      for (vertex_t w : graph.neighbors(v)) --num_new[w];
      found = true;
    }
  }

  std::uint64_t productive_rounds = 0;
  std::int64_t height_current = 1;
  while (found && (mh == -1 || height_current <= mh)) {
    found = false;
    num_pre = num_new;
    for (vertex_t v = 0; v < n; ++v) {
      if (type[v] != VertexType::kCoreInternal) continue;
      // num_new is read live, so a round can strip a whole chain; the
      // num_pre == 0 arm catches vertices emptied in earlier rounds.
      if (num_pre[v] == 0 || num_new[v] == 1) {
        type[v] = VertexType::kTreeInternal;
        for (vertex_t w : graph.neighbors(v)) --num_new[w];
        found = true;
      }
    }
    if (found) ++productive_rounds;
    ++height_current;
  }

  for (vertex_t v = 0; v < n; ++v) {
    if (type[v] == VertexType::kCoreInternal && num_new[v] != graph.degrees[v])
      type[v] = VertexType::kCoreEdge;
  }
  return productive_rounds;
}

}  // namespace

std::vector<VertexType> classify_vertices(const CsrGraph& graph, std::int64_t mh) {
  if (mh < -1) throw std::invalid_argument("classify_vertices: mh must be -1 or >= 0");
  std::vector<VertexType> type;
  peel(graph, mh, type);
  return type;
}

std::uint64_t compute_peak_height(const CsrGraph& graph) {
  std::vector<VertexType> type;
  return peel(graph, -1, type);
}

TypeCounts count_types(const std::vector<VertexType>& types) {
  TypeCounts counts;
  for (VertexType t : types) {
    switch (t) {
      case VertexType::kCoreInternal: ++counts.core_internal; break;
      case VertexType::kCoreEdge: ++counts.core_edge; break;
      case VertexType::kTreeInternal: ++counts.tree_internal; break;
      case VertexType::kTreeLeaf: ++counts.tree_leaf; break;
      case VertexType::kVertexZero: ++counts.vertex_zero; break;
    }
  }
  return counts;
}

}  // namespace etbfs
