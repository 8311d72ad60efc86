#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace etbfs {

using vertex_t = std::uint64_t;

/// Absent-vertex sentinel. Used for unset parent slots, for "no core edge
/// vertex" in edge tree entries, and for holes in index maps.
inline constexpr vertex_t kNoVertex = ~vertex_t{0};

/// Level of a vertex outside the traversed component.
inline constexpr std::uint64_t kUnreached = ~std::uint64_t{0};

/// Declared upper bound on vertex counts; file formats store 64-bit indices.
inline constexpr vertex_t kMaxVertexCount = vertex_t{1} << 48;

struct Edge {
  vertex_t src = 0;
  vertex_t dst = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Raw edge tuples straight from a generator or a file. May contain
/// duplicates and self loops; build_csr drops both.
struct EdgeList {
  std::uint64_t vertex_count = 0;
  std::vector<Edge> edges;
};

/// Undirected graph in compressed sparse row form: symmetric, self-loop
/// free, deduplicated. Neighbor lists are sorted ascending after build;
/// preprocessing steps that relabel vertices keep them sorted in the new
/// index space.
struct CsrGraph {
  std::uint64_t vertex_count = 0;
  std::vector<std::uint64_t> row_offsets;  // vertex_count + 1 entries
  std::vector<vertex_t> col_indices;       // 2 * undirected edge count
  std::vector<std::uint64_t> degrees;      // row_offsets[v+1] - row_offsets[v]

  std::span<const vertex_t> neighbors(vertex_t v) const {
    return {col_indices.data() + row_offsets[v],
            col_indices.data() + row_offsets[v + 1]};
  }
  std::uint64_t directed_edge_count() const { return col_indices.size(); }
  std::uint64_t undirected_edge_count() const { return col_indices.size() / 2; }
};

/// Five-way vertex taxonomy: the core subgraph (internal and edge vertices),
/// the edge trees hanging off it (internal and leaf vertices), and isolated
/// vertices.
enum class VertexType : std::uint8_t {
  kCoreInternal,
  kCoreEdge,
  kTreeInternal,
  kTreeLeaf,
  kVertexZero,
};

const char* to_string(VertexType t);

/// A classified graph relaid out so that core vertices occupy indices
/// [0, core_vertex_count) and tree/isolated vertices sit above them.
/// new2old/old2new are mutually inverse permutations between the relaid
/// index space and the input graph's.
struct ClassifiedGraph {
  CsrGraph graph;
  std::vector<VertexType> vertex_type;  // indexed by new ids
  std::vector<vertex_t> new2old;
  std::vector<vertex_t> old2new;
  std::uint64_t core_vertex_count = 0;
  std::int64_t mh = -1;  // height bound used for classification; -1 = full
};

/// One edge tree edge, replayed sequentially during traversal. dst is the
/// tree vertex, src its unique tree parent, core_edge the tree's core edge
/// vertex (kNoVertex for trees that form their own component; the root of
/// such a tree carries a src == dst self entry).
struct EdgeTreeEntry {
  vertex_t src = 0;
  vertex_t dst = 0;
  vertex_t core_edge = kNoVertex;
  friend bool operator==(const EdgeTreeEntry&, const EdgeTreeEntry&) = default;
};

/// All edge tree edges, sorted ascending by dst; one entry per tree vertex.
struct EdgeTreeList {
  std::vector<EdgeTreeEntry> entries;
};

/// Output contract of every BFS kernel: parent[root] == root, kNoVertex
/// outside the traversed component.
struct BfsTree {
  std::vector<vertex_t> parent;
  vertex_t root = 0;
};

}  // namespace etbfs
