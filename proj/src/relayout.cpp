#include "etbfs/relayout.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "etbfs/build.hpp"
#include "etbfs/preprocess.hpp"

namespace etbfs {
namespace {

bool is_core(VertexType t) {
  return t == VertexType::kCoreInternal || t == VertexType::kCoreEdge;
}

bool is_tree(VertexType t) {
  return t == VertexType::kTreeInternal || t == VertexType::kTreeLeaf;
}

}  // namespace

ClassifiedGraph relayout_csr(const CsrGraph& graph, const std::vector<VertexType>& types,
                             std::int64_t mh) {
  const std::uint64_t n = graph.vertex_count;
  if (types.size() != n)
    throw std::invalid_argument("relayout_csr: types length does not match vertex count");

  std::vector<vertex_t> new2old;
  new2old.reserve(n);
  for (vertex_t v = 0; v < n; ++v)
    if (is_core(types[v])) new2old.push_back(v);
  const std::uint64_t core_count = new2old.size();
  std::sort(new2old.begin(), new2old.end(), [&](vertex_t a, vertex_t b) {
    if (graph.degrees[a] != graph.degrees[b]) return graph.degrees[a] > graph.degrees[b];
    return a < b;
  });

  // Tree vertices follow the core block one tree at a time, each tree in BFS
  // order from its root, so parents always receive smaller indices than
  // their children.
  std::vector<char> placed(n, 0);
  std::vector<vertex_t> queue;
  auto place_tree = [&](vertex_t root) {
    placed[root] = 1;
    queue.clear();
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const vertex_t u = queue[head];
      new2old.push_back(u);
      for (vertex_t w : graph.neighbors(u)) {
        if (is_tree(types[w]) && !placed[w]) {
          placed[w] = 1;
          queue.push_back(w);
        }
      }
    }
  };

  // Trees hanging off the core first, grouped by the core block order of
  // their attachment vertex.
  for (std::uint64_t i = 0; i < core_count; ++i) {
    const vertex_t c = new2old[i];
    if (types[c] != VertexType::kCoreEdge) continue;
    for (vertex_t w : graph.neighbors(c))
      if (is_tree(types[w]) && !placed[w]) place_tree(w);
  }
  // Whole-component trees, rooted at the vertex that ends up with the
  // smallest new index.
  for (vertex_t v = 0; v < n; ++v)
    if (is_tree(types[v]) && !placed[v]) place_tree(v);
  // Isolated vertices close the index space.
  for (vertex_t v = 0; v < n; ++v)
    if (types[v] == VertexType::kVertexZero) new2old.push_back(v);

  ClassifiedGraph cg;
  cg.new2old = std::move(new2old);
  cg.old2new = invert_permutation(cg.new2old);
  cg.graph = relabel_graph(graph, cg.new2old);
  cg.vertex_type.resize(n);
  for (std::uint64_t i = 0; i < n; ++i) cg.vertex_type[i] = types[cg.new2old[i]];
  cg.core_vertex_count = core_count;
  cg.mh = mh;
  return cg;
}

EdgeTreeList extract_edge_tree_list(const ClassifiedGraph& cg) {
  const CsrGraph& g = cg.graph;
  const std::uint64_t n = g.vertex_count;
  const std::uint64_t core = cg.core_vertex_count;
  if (cg.vertex_type.size() != n)
    throw std::invalid_argument("extract_edge_tree_list: types length does not match vertex count");

  EdgeTreeList etl;
  std::vector<char> placed(n, 0);
  std::vector<vertex_t> parent(n, kNoVertex);
  std::vector<vertex_t> queue;

  // Orients the tree containing root away from root. core_edge is kNoVertex
  // for whole-component trees; the caller has already claimed root and
  // appended its entry.
  auto walk_tree = [&](vertex_t root, vertex_t core_edge) {
    queue.clear();
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const vertex_t u = queue[head];
      for (vertex_t w : g.neighbors(u)) {
        if (w < core) {
          // Only the root may touch the core, and only at the one core edge
          // vertex this tree hangs from.
          if (u != root || w != core_edge)
            throw std::runtime_error(
                "extract_edge_tree_list: edge tree touches the core more than once");
          continue;
        }
        if (!is_tree(cg.vertex_type[w]))
          throw std::runtime_error(
              "extract_edge_tree_list: isolated-typed vertex has incident edges");
        if (placed[w]) {
          if (w != parent[u])
            throw std::runtime_error("extract_edge_tree_list: cycle through tree vertices");
          continue;
        }
        placed[w] = 1;
        parent[w] = u;
        etl.entries.push_back({u, w, core_edge});
        queue.push_back(w);
      }
    }
  };

  // Trees attached to the core: every tree neighbor of a core edge vertex
  // roots its own tree.
  for (vertex_t c = 0; c < core; ++c) {
    if (cg.vertex_type[c] != VertexType::kCoreEdge) continue;
    for (vertex_t w : g.neighbors(c)) {
      if (w < core) continue;
      if (!is_tree(cg.vertex_type[w]))
        throw std::runtime_error(
            "extract_edge_tree_list: isolated-typed vertex has incident edges");
      if (placed[w])
        throw std::runtime_error(
            "extract_edge_tree_list: edge tree touches the core more than once");
      placed[w] = 1;
      parent[w] = c;
      etl.entries.push_back({c, w, c});
      walk_tree(w, c);
    }
  }
  // Whole-component trees: root carries a self entry with no core edge.
  for (vertex_t v = core; v < n; ++v) {
    if (!is_tree(cg.vertex_type[v]) || placed[v]) continue;
    placed[v] = 1;
    parent[v] = v;
    etl.entries.push_back({v, v, kNoVertex});
    walk_tree(v, kNoVertex);
  }

  std::uint64_t tree_typed = 0;
  for (VertexType t : cg.vertex_type) tree_typed += is_tree(t);
  if (etl.entries.size() != tree_typed)
    throw std::runtime_error("extract_edge_tree_list: classification does not match layout");

  std::sort(etl.entries.begin(), etl.entries.end(),
            [](const EdgeTreeEntry& a, const EdgeTreeEntry& b) { return a.dst < b.dst; });
  return etl;
}

EdgeTreeStats edge_tree_stats(const EdgeTreeList& etl, std::uint64_t core_vertex_count) {
  EdgeTreeStats s;
  s.tree_vertex_total = etl.entries.size();
  if (etl.entries.empty()) return s;

  // Entries are sorted by dst and every parent index is smaller than its
  // child's, so one forward scan can bucket each vertex into its tree root.
  std::unordered_map<vertex_t, vertex_t> root_of;
  std::unordered_map<vertex_t, std::uint64_t> size_of;
  std::unordered_set<vertex_t> core_edges;
  root_of.reserve(etl.entries.size());
  for (const EdgeTreeEntry& e : etl.entries) {
    vertex_t root;
    if (e.src == e.dst || e.src < core_vertex_count) {
      root = e.dst;
    } else {
      auto it = root_of.find(e.src);
      if (it == root_of.end())
        throw std::runtime_error("edge_tree_stats: entry references a parent not yet seen");
      root = it->second;
    }
    root_of.emplace(e.dst, root);
    ++size_of[root];
    if (e.core_edge != kNoVertex) core_edges.insert(e.core_edge);
  }

  s.tree_count = size_of.size();
  s.attached_core_edge_count = core_edges.size();
  s.min_size = ~std::uint64_t{0};
  for (const auto& [root, size] : size_of) {
    s.max_size = std::max(s.max_size, size);
    s.min_size = std::min(s.min_size, size);
  }
  s.mean_size = static_cast<double>(s.tree_vertex_total) / static_cast<double>(s.tree_count);
  return s;
}

ClassifiedGraph shuffle_core_block(const ClassifiedGraph& cg, std::uint64_t segment_count) {
  const std::uint64_t n = cg.graph.vertex_count;
  std::vector<vertex_t> core_ids(cg.core_vertex_count);
  std::iota(core_ids.begin(), core_ids.end(), vertex_t{0});
  const SrrsResult shuffled = srrs_shuffle(core_ids, segment_count);

  // The shuffle permutes only the core block; everything above keeps its
  // index, so the edge tree layout properties survive.
  std::vector<vertex_t> step_new2old(n);
  std::copy(shuffled.shuffled_ids.begin(), shuffled.shuffled_ids.end(), step_new2old.begin());
  std::iota(step_new2old.begin() + cg.core_vertex_count, step_new2old.end(),
            vertex_t{cg.core_vertex_count});

  ClassifiedGraph out;
  out.graph = relabel_graph(cg.graph, step_new2old);
  out.vertex_type.resize(n);
  out.new2old.resize(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    out.vertex_type[i] = cg.vertex_type[step_new2old[i]];
    out.new2old[i] = cg.new2old[step_new2old[i]];
  }
  out.old2new = invert_permutation(out.new2old);
  out.core_vertex_count = cg.core_vertex_count;
  out.mh = cg.mh;
  return out;
}

}  // namespace etbfs
