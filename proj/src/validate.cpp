#include "etbfs/validate.hpp"

#include <algorithm>
#include <stdexcept>

namespace etbfs {
namespace {

constexpr std::uint64_t kFailureCapPerRule = 25;

struct LevelWalk {
  std::vector<std::uint64_t> level;       // kUnreached where unset or broken
  std::vector<vertex_t> cycle_reps;       // one representative per bad walk
  std::vector<vertex_t> broken_reps;
};

// Memoized parent-chain walker, tolerant of malformed trees: vertices on
// cyclic or dead-ended chains keep kUnreached and are reported once.
LevelWalk walk_levels(const BfsTree& tree) {
  const std::uint64_t n = tree.parent.size();
  LevelWalk walk;
  walk.level.assign(n, kUnreached);
  // 0 = untouched, 1 = resolved, 2 = bad, 3 = on the current path
  std::vector<char> state(n, 0);
  if (tree.root < n && tree.parent[tree.root] == tree.root) {
    walk.level[tree.root] = 0;
    state[tree.root] = 1;
  }

  std::vector<vertex_t> path;
  for (vertex_t v = 0; v < n; ++v) {
    if (tree.parent[v] == kNoVertex || state[v] != 0) continue;
    path.clear();
    vertex_t x = v;
    bool good = false;
    std::uint64_t base = 0;
    for (;;) {
      if (state[x] == 1) {
        base = walk.level[x];
        good = true;
        break;
      }
      if (state[x] == 2) break;
      if (state[x] == 3) {
        if (walk.cycle_reps.size() < kFailureCapPerRule) walk.cycle_reps.push_back(x);
        break;
      }
      const vertex_t p = tree.parent[x];
      if (p == kNoVertex || p >= n) {
        if (walk.broken_reps.size() < kFailureCapPerRule) walk.broken_reps.push_back(x);
        break;
      }
      state[x] = 3;
      path.push_back(x);
      x = p;
    }
    for (std::size_t i = path.size(); i-- > 0;) {
      const vertex_t y = path[i];
      if (good) {
        walk.level[y] = base + (path.size() - i);
        state[y] = 1;
      } else {
        state[y] = 2;
      }
    }
  }
  return walk;
}

bool edge_exists(const CsrGraph& graph, vertex_t a, vertex_t b) {
  const auto nbrs = graph.neighbors(a);
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

}  // namespace

std::vector<std::uint64_t> oracle_bfs(const CsrGraph& graph, vertex_t root) {
  if (root >= graph.vertex_count) throw std::invalid_argument("oracle_bfs: root out of range");
  std::vector<std::uint64_t> level(graph.vertex_count, kUnreached);
  std::vector<vertex_t> queue{root};
  level[root] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const vertex_t u = queue[head];
    for (vertex_t w : graph.neighbors(u)) {
      if (level[w] != kUnreached) continue;
      level[w] = level[u] + 1;
      queue.push_back(w);
    }
  }
  return level;
}

std::vector<std::uint64_t> tree_levels(const BfsTree& tree) { return walk_levels(tree).level; }

ValidationReport validate_bfs_tree(const CsrGraph& graph, const BfsTree& tree) {
  const std::uint64_t n = graph.vertex_count;
  if (tree.parent.size() != n)
    throw std::invalid_argument("validate_bfs_tree: tree does not match graph vertex count");
  if (tree.root >= n) throw std::invalid_argument("validate_bfs_tree: root out of range");

  ValidationReport report;
  std::uint64_t per_rule[kRuleReachedSet + 1] = {};
  const auto fail = [&](int rule, vertex_t where, std::string message) {
    report.passed = false;
    if (per_rule[rule]++ < kFailureCapPerRule)
      report.failures.push_back({rule, where, std::move(message)});
  };

  // Rule 1: the root parents itself.
  if (tree.parent[tree.root] != tree.root)
    fail(kRuleRootParent, tree.root, "root is not its own parent");

  // Rule 2: chains terminate at the root without cycles.
  const LevelWalk walk = walk_levels(tree);
  for (vertex_t v : walk.cycle_reps) fail(kRuleChains, v, "parent chain contains a cycle");
  for (vertex_t v : walk.broken_reps)
    fail(kRuleChains, v, "parent chain dead-ends before the root");

  // Rule 3: every parent link is a graph edge.
  for (vertex_t v = 0; v < n; ++v) {
    const vertex_t p = tree.parent[v];
    if (p == kNoVertex || (v == tree.root && p == v)) continue;
    if (p >= n)
      fail(kRuleParentEdge, v, "parent is not a vertex");
    else if (!edge_exists(graph, v, p))
      fail(kRuleParentEdge, v, "parent is not a neighbor");
  }

  // Rule 4: no graph edge spans more than one level.
  for (vertex_t v = 0; v < n; ++v) {
    if (walk.level[v] == kUnreached) continue;
    for (vertex_t w : graph.neighbors(v)) {
      if (w <= v || walk.level[w] == kUnreached) continue;
      const std::uint64_t lo = std::min(walk.level[v], walk.level[w]);
      const std::uint64_t hi = std::max(walk.level[v], walk.level[w]);
      if (hi - lo > 1) fail(kRuleLevelSpan, v, "edge spans more than one level");
    }
  }

  // Rule 5: the reached set is exactly the root's component.
  const std::vector<std::uint64_t> oracle = oracle_bfs(graph, tree.root);
  for (vertex_t v = 0; v < n; ++v) {
    const bool in_tree = tree.parent[v] != kNoVertex;
    const bool in_component = oracle[v] != kUnreached;
    if (in_tree && !in_component)
      fail(kRuleReachedSet, v, "vertex outside the root's component has a parent");
    else if (!in_tree && in_component)
      fail(kRuleReachedSet, v, "component vertex missing from the tree");
  }

  for (vertex_t v = 0; v < n; ++v) {
    if (tree.parent[v] == kNoVertex) continue;
    ++report.reached_count;
    report.traversed_edge_count += graph.degrees[v];
  }
  report.traversed_edge_count /= 2;
  return report;
}

BfsTree translate_tree(const BfsTree& tree, const std::vector<vertex_t>& new2old) {
  const std::uint64_t n = new2old.size();
  if (tree.parent.size() != n)
    throw std::invalid_argument("translate_tree: permutation does not match tree");
  BfsTree out;
  out.parent.assign(n, kNoVertex);
  for (vertex_t v = 0; v < n; ++v) {
    const vertex_t p = tree.parent[v];
    if (p == kNoVertex) continue;
    if (p >= n) throw std::invalid_argument("translate_tree: parent index out of range");
    out.parent[new2old[v]] = new2old[p];
  }
  if (tree.root >= n) throw std::invalid_argument("translate_tree: root out of range");
  out.root = new2old[tree.root];
  return out;
}

}  // namespace etbfs
