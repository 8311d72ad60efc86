#include "etbfs/build.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace etbfs {

const char* to_string(VertexType t) {
  switch (t) {
    case VertexType::kCoreInternal: return "CI";
    case VertexType::kCoreEdge: return "CE";
    case VertexType::kTreeInternal: return "TI";
    case VertexType::kTreeLeaf: return "TL";
    case VertexType::kVertexZero: return "VZ";
  }
  return "?";
}

CsrGraph build_csr(const EdgeList& edges, BuildStats* stats) {
  const std::uint64_t n = edges.vertex_count;
  if (n > kMaxVertexCount)
    throw std::invalid_argument("build_csr: vertex count exceeds 2^48");

  for (std::size_t i = 0; i < edges.edges.size(); ++i) {
    const Edge& e = edges.edges[i];
    if (e.src >= n || e.dst >= n)
      throw std::invalid_argument("build_csr: endpoint out of range at edge index " +
                                  std::to_string(i));
  }

  BuildStats local;
  CsrGraph g;
  g.vertex_count = n;
  g.row_offsets.assign(n + 1, 0);

  // Count directed slots, skipping self loops.
  for (const Edge& e : edges.edges) {
    if (e.src == e.dst) {
      ++local.dropped_self_loops;
      continue;
    }
    ++g.row_offsets[e.src + 1];
    ++g.row_offsets[e.dst + 1];
  }
  std::partial_sum(g.row_offsets.begin(), g.row_offsets.end(), g.row_offsets.begin());

  g.col_indices.resize(g.row_offsets[n]);
  std::vector<std::uint64_t> cursor(g.row_offsets.begin(), g.row_offsets.end() - 1);
  for (const Edge& e : edges.edges) {
    if (e.src == e.dst) continue;
    g.col_indices[cursor[e.src]++] = e.dst;
    g.col_indices[cursor[e.dst]++] = e.src;
  }

  // Sort each list and squeeze out duplicates in place, then compact.
  std::vector<std::uint64_t> new_offsets(n + 1, 0);
  for (vertex_t v = 0; v < n; ++v) {
    auto begin = g.col_indices.begin() + static_cast<std::ptrdiff_t>(g.row_offsets[v]);
    auto end = g.col_indices.begin() + static_cast<std::ptrdiff_t>(g.row_offsets[v + 1]);
    std::sort(begin, end);
    auto unique_end = std::unique(begin, end);
    const auto kept = static_cast<std::uint64_t>(unique_end - begin);
    local.dropped_duplicates += static_cast<std::uint64_t>(end - unique_end);
    new_offsets[v + 1] = kept;
  }
  std::partial_sum(new_offsets.begin(), new_offsets.end(), new_offsets.begin());

  std::vector<vertex_t> compacted(new_offsets[n]);
  for (vertex_t v = 0; v < n; ++v) {
    const std::uint64_t count = new_offsets[v + 1] - new_offsets[v];
    std::copy_n(g.col_indices.begin() + static_cast<std::ptrdiff_t>(g.row_offsets[v]), count,
                compacted.begin() + static_cast<std::ptrdiff_t>(new_offsets[v]));
  }
  g.col_indices = std::move(compacted);
  g.row_offsets = std::move(new_offsets);

  // Duplicates were counted per direction; report undirected drops.
  local.dropped_duplicates /= 2;

  g.degrees.resize(n);
  for (vertex_t v = 0; v < n; ++v) g.degrees[v] = g.row_offsets[v + 1] - g.row_offsets[v];

  if (stats) *stats = local;
  return g;
}

EdgeList to_edge_list(const CsrGraph& graph) {
  EdgeList out;
  out.vertex_count = graph.vertex_count;
  out.edges.reserve(graph.undirected_edge_count());
  for (vertex_t v = 0; v < graph.vertex_count; ++v)
    for (vertex_t w : graph.neighbors(v))
      if (v < w) out.edges.push_back({v, w});
  return out;
}

std::vector<std::uint64_t> derive_levels(const BfsTree& tree) {
  const std::uint64_t n = tree.parent.size();
  if (tree.root >= n) throw std::invalid_argument("derive_levels: root out of range");
  if (tree.parent[tree.root] != tree.root)
    throw std::invalid_argument("derive_levels: parent[root] != root");

  std::vector<std::uint64_t> level(n, kUnreached);
  level[tree.root] = 0;

  std::vector<vertex_t> chain;
  for (vertex_t v = 0; v < n; ++v) {
    if (tree.parent[v] == kNoVertex || level[v] != kUnreached) continue;
    chain.clear();
    vertex_t cur = v;
    while (level[cur] == kUnreached) {
      const vertex_t p = tree.parent[cur];
      if (p == kNoVertex)
        throw std::invalid_argument("derive_levels: chain from vertex " + std::to_string(v) +
                                    " hits an unset parent");
      if (p >= n)
        throw std::invalid_argument("derive_levels: parent index out of range at vertex " +
                                    std::to_string(cur));
      chain.push_back(cur);
      if (chain.size() > n)
        throw std::invalid_argument("derive_levels: cycle in parent chain from vertex " +
                                    std::to_string(v));
      cur = p;
    }
    std::uint64_t depth = level[cur];
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) level[*it] = ++depth;
  }
  return level;
}

std::vector<vertex_t> invert_permutation(const std::vector<vertex_t>& new2old) {
  std::vector<vertex_t> old2new(new2old.size(), kNoVertex);
  for (std::size_t i = 0; i < new2old.size(); ++i) {
    const vertex_t old_id = new2old[i];
    if (old_id >= new2old.size() || old2new[old_id] != kNoVertex)
      throw std::invalid_argument("invert_permutation: input is not a permutation");
    old2new[old_id] = static_cast<vertex_t>(i);
  }
  return old2new;
}

CsrGraph relabel_graph(const CsrGraph& graph, const std::vector<vertex_t>& new2old) {
  if (new2old.size() != graph.vertex_count)
    throw std::invalid_argument("relabel_graph: permutation size mismatch");
  const std::vector<vertex_t> old2new = invert_permutation(new2old);

  const std::uint64_t n = graph.vertex_count;
  CsrGraph out;
  out.vertex_count = n;
  out.row_offsets.assign(n + 1, 0);
  for (vertex_t v = 0; v < n; ++v) out.row_offsets[v + 1] = graph.degrees[new2old[v]];
  std::partial_sum(out.row_offsets.begin(), out.row_offsets.end(), out.row_offsets.begin());

  out.col_indices.resize(out.row_offsets[n]);
  out.degrees.resize(n);
  for (vertex_t v = 0; v < n; ++v) {
    auto begin = out.col_indices.begin() + static_cast<std::ptrdiff_t>(out.row_offsets[v]);
    auto it = begin;
    for (vertex_t w : graph.neighbors(new2old[v])) *it++ = old2new[w];
    std::sort(begin, it);
    out.degrees[v] = out.row_offsets[v + 1] - out.row_offsets[v];
  }
  return out;
}

}  // namespace etbfs
