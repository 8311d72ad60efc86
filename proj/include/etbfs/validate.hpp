#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "etbfs/types.hpp"

namespace etbfs {

/// Rule ids used by validate_bfs_tree, following the usual breadth-first
/// spanning tree checklist.
enum : int {
  kRuleRootParent = 1,     // parent[root] == root
  kRuleChains = 2,         // parent chains acyclic, ending at the root
  kRuleParentEdge = 3,     // every (child, parent) pair is a graph edge
  kRuleLevelSpan = 4,      // graph edges span at most one level
  kRuleReachedSet = 5,     // reached set equals the root's component
};

struct ValidationFailure {
  int rule = 0;
  vertex_t where = kNoVertex;
  std::string message;
};

struct ValidationReport {
  bool passed = true;
  std::vector<ValidationFailure> failures;
  std::uint64_t reached_count = 0;
  /// Undirected edges inside the traversed component: half the degree sum of
  /// reached vertices. This is the numerator of the GTEPS metric.
  std::uint64_t traversed_edge_count = 0;
};

/// Textbook sequential queue BFS; kUnreached outside root's component.
std::vector<std::uint64_t> oracle_bfs(const CsrGraph& graph, vertex_t root);

/// Levels derived from a validated parent tree: kUnreached where the parent
/// is unset. Use oracle_bfs for ground truth; this reads the tree as-is.
std::vector<std::uint64_t> tree_levels(const BfsTree& tree);

/// Checks the five spanning tree rules; failures are reported (capped per
/// rule), never thrown. Throws std::invalid_argument only if the tree's
/// parent array does not match the graph's vertex count.
ValidationReport validate_bfs_tree(const CsrGraph& graph, const BfsTree& tree);

/// Maps a tree produced in a relabeled index space back to the original
/// space through the new2old permutation.
BfsTree translate_tree(const BfsTree& tree, const std::vector<vertex_t>& new2old);

}  // namespace etbfs
