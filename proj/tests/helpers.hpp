#pragma once

// Shared fixtures for the test binaries: tiny graph builders, an
// independent reference BFS over adjacency sets, and level-exactness
// checks. Everything here works straight off raw edge tuples so the
// library's CSR code is never part of its own oracle.

#include <cstdint>
#include <deque>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"

#include "etbfs/types.hpp"

namespace test {

using etbfs::Edge;
using etbfs::EdgeList;
using etbfs::kNoVertex;
using etbfs::kUnreached;
using etbfs::vertex_t;

inline EdgeList make_edges(std::uint64_t n,
                           std::initializer_list<std::pair<vertex_t, vertex_t>> pairs) {
  EdgeList out;
  out.vertex_count = n;
  for (const auto& [u, v] : pairs) out.edges.push_back({u, v});
  return out;
}

inline EdgeList path_graph(std::uint64_t n) {
  EdgeList out;
  out.vertex_count = n;
  for (vertex_t v = 0; v + 1 < n; ++v) out.edges.push_back({v, v + 1});
  return out;
}

inline EdgeList cycle_graph(std::uint64_t n) {
  EdgeList out = path_graph(n);
  if (n >= 3) out.edges.push_back({n - 1, 0});
  return out;
}

// Center is vertex 0.
inline EdgeList star_graph(std::uint64_t n) {
  EdgeList out;
  out.vertex_count = n;
  for (vertex_t v = 1; v < n; ++v) out.edges.push_back({0, v});
  return out;
}

inline EdgeList complete_graph(std::uint64_t n) {
  EdgeList out;
  out.vertex_count = n;
  for (vertex_t u = 0; u < n; ++u)
    for (vertex_t v = u + 1; v < n; ++v) out.edges.push_back({u, v});
  return out;
}

// Perfect-ish binary tree: vertex v's children are 2v+1 and 2v+2.
inline EdgeList binary_tree(std::uint64_t n) {
  EdgeList out;
  out.vertex_count = n;
  for (vertex_t v = 1; v < n; ++v) out.edges.push_back({(v - 1) / 2, v});
  return out;
}

// Raw tuples with duplicates and self loops left in, as a generator would
// emit them. mt19937_64 keeps the corpus identical on every run.
inline EdgeList random_edge_list(std::uint64_t n, std::uint64_t tuples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  EdgeList out;
  out.vertex_count = n;
  for (std::uint64_t i = 0; i < tuples; ++i)
    out.edges.push_back({rng() % n, rng() % n});
  return out;
}

// Simple-graph adjacency built independently of the library: sets drop the
// duplicates, explicit compare drops the self loops.
inline std::vector<std::set<vertex_t>> adjacency_sets(const EdgeList& edges) {
  std::vector<std::set<vertex_t>> adj(edges.vertex_count);
  for (const Edge& e : edges.edges) {
    if (e.src == e.dst) continue;
    adj[e.src].insert(e.dst);
    adj[e.dst].insert(e.src);
  }
  return adj;
}

// Textbook queue BFS over adjacency sets.
inline std::vector<std::uint64_t> reference_levels(const std::vector<std::set<vertex_t>>& adj,
                                                   vertex_t root) {
  std::vector<std::uint64_t> level(adj.size(), kUnreached);
  std::deque<vertex_t> queue;
  level[root] = 0;
  queue.push_back(root);
  while (!queue.empty()) {
    const vertex_t v = queue.front();
    queue.pop_front();
    for (vertex_t w : adj[v])
      if (level[w] == kUnreached) {
        level[w] = level[v] + 1;
        queue.push_back(w);
      }
  }
  return level;
}

// Levels implied by a parent array, computed by fixpoint iteration rather
// than by chain walking so it shares no code with the library.
inline std::vector<std::uint64_t> levels_from_parents(const etbfs::BfsTree& tree) {
  const std::uint64_t n = tree.parent.size();
  std::vector<std::uint64_t> level(n, kUnreached);
  REQUIRE(tree.root < n);
  REQUIRE(tree.parent[tree.root] == tree.root);
  level[tree.root] = 0;
  bool changed = true;
  std::uint64_t sweeps = 0;
  while (changed) {
    REQUIRE(sweeps++ <= n);  // a cycle would otherwise spin forever
    changed = false;
    for (vertex_t v = 0; v < n; ++v) {
      if (v == tree.root || tree.parent[v] == kNoVertex) continue;
      REQUIRE(tree.parent[v] < n);
      const std::uint64_t pl = level[tree.parent[v]];
      if (pl != kUnreached && level[v] != pl + 1) {
        level[v] = pl + 1;
        changed = true;
      }
    }
  }
  for (vertex_t v = 0; v < n; ++v)
    if (tree.parent[v] != kNoVertex) REQUIRE(level[v] != kUnreached);
  return level;
}

// Full exactness check of a kernel result against the reference BFS:
// level-for-level equality plus the parent-is-a-neighbor property.
inline void check_tree_exact(const EdgeList& edges, const etbfs::BfsTree& tree, vertex_t root) {
  const auto adj = adjacency_sets(edges);
  REQUIRE(tree.parent.size() == edges.vertex_count);
  REQUIRE(tree.root == root);
  const auto expect = reference_levels(adj, root);
  const auto got = levels_from_parents(tree);
  CHECK(got == expect);
  for (vertex_t v = 0; v < edges.vertex_count; ++v) {
    if (v == root || tree.parent[v] == kNoVertex) continue;
    CHECK(adj[v].count(tree.parent[v]) == 1);
  }
}

// Deterministic spread of up to k distinct roots across [0, n).
inline std::vector<vertex_t> pick_roots(std::uint64_t n, std::uint64_t k) {
  std::set<vertex_t> picked;
  for (std::uint64_t i = 0; i < k && n > 0; ++i) picked.insert(i * (n - 1) / (k > 1 ? k - 1 : 1));
  return {picked.begin(), picked.end()};
}

// Mixed bag of shapes for unit-level kernel checks.
inline std::vector<EdgeList> small_corpus() {
  std::vector<EdgeList> corpus;
  corpus.push_back(path_graph(1));
  corpus.push_back(path_graph(2));
  corpus.push_back(path_graph(9));
  corpus.push_back(cycle_graph(8));
  corpus.push_back(star_graph(17));
  corpus.push_back(complete_graph(6));
  corpus.push_back(binary_tree(31));
  corpus.push_back(make_edges(6, {}));                      // all isolated
  corpus.push_back(make_edges(7, {{0, 1}, {2, 3}, {3, 4}}));  // disconnected + isolated
  for (std::uint64_t seed = 1; seed <= 10; ++seed)
    corpus.push_back(random_edge_list(20 + seed * 13, 30 + seed * 40, seed));
  return corpus;
}

}  // namespace test
