#include "etbfs/bfs.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace etbfs {
namespace {

constexpr std::uint64_t kWordBits = Bitmap::kWordBits;

std::uint64_t words_for(vertex_t limit) { return (limit + kWordBits - 1) / kWordBits; }

BfsTree seeded_tree(const CsrGraph& graph, vertex_t root, FrontierState& state) {
  if (root >= graph.vertex_count) throw std::invalid_argument("bfs: root out of range");
  BfsTree tree;
  tree.root = root;
  tree.parent.assign(graph.vertex_count, kNoVertex);
  tree.parent[root] = root;
  state = FrontierState(graph.vertex_count);
  state.visited.set(root);
  state.current.set(root);
  return tree;
}

void check_full_split(const CsrGraph& graph, const DegreeSplitAdjacency& split) {
  if (split.in_plus.size() != graph.vertex_count)
    throw std::invalid_argument("bfs: split size does not match graph");
  if (split.neighbor_limit != kNoVertex && split.neighbor_limit < graph.vertex_count)
    throw std::invalid_argument("bfs: split excludes neighbors the traversal needs");
}

void record_level(KernelStats* stats, char direction) {
  if (!stats) return;
  ++stats->levels;
  if (direction == 'b') ++stats->bottom_up_levels;
  stats->direction_trace.push_back(direction);
}

}  // namespace

std::pair<std::uint32_t, std::uint64_t> block_search_unvisited(std::uint64_t not_visited) {
  assert(not_visited != 0);
  const std::uint64_t bit = not_visited & (~not_visited + 1);
  const auto pos = static_cast<std::uint32_t>(std::popcount(bit - 1));
  return {pos, not_visited & ~bit};
}

std::uint64_t restricted_edge_count(const CsrGraph& graph, vertex_t limit) {
  if (limit >= graph.vertex_count) return graph.directed_edge_count();
  std::uint64_t total = 0;
  for (vertex_t v = 0; v < limit; ++v) {
    const auto nbrs = graph.neighbors(v);
    total += static_cast<std::uint64_t>(
        std::lower_bound(nbrs.begin(), nbrs.end(), limit) - nbrs.begin());
  }
  return total;
}

StepResult top_down_step(const CsrGraph& graph, FrontierState& state,
                         std::vector<vertex_t>& parent, vertex_t limit, KernelStats* stats) {
  (void)stats;
  const auto words = static_cast<std::int64_t>(words_for(limit));
  std::uint64_t claimed = 0;
  std::uint64_t scout = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : claimed, scout)
  for (std::int64_t wi = 0; wi < words; ++wi) {
    std::uint64_t word = state.current.word(static_cast<std::uint64_t>(wi));
    while (word != 0) {
      const auto p = static_cast<std::uint64_t>(std::countr_zero(word));
      word &= word - 1;
      const vertex_t v = static_cast<vertex_t>(wi) * kWordBits + p;
      for (vertex_t w : graph.neighbors(v)) {
        if (w >= limit) break;
        if (!state.visited.get_atomic(w) && state.visited.set_atomic(w)) {
          parent[w] = v;
          state.next.set_atomic(w);
          ++claimed;
          scout += graph.degrees[w];
        }
      }
    }
  }
  return {claimed, scout};
}

StepResult bottom_up_step(const CsrGraph& graph, FrontierState& state,
                          std::vector<vertex_t>& parent, vertex_t limit, KernelStats* stats) {
  const auto n = static_cast<std::int64_t>(limit);
  std::uint64_t claimed = 0;
  std::uint64_t probes = 0;
#pragma omp parallel for schedule(dynamic, 1024) reduction(+ : claimed, probes)
  for (std::int64_t sv = 0; sv < n; ++sv) {
    const auto w = static_cast<vertex_t>(sv);
    if (state.visited.get_atomic(w)) continue;
    for (vertex_t x : graph.neighbors(w)) {
      if (x >= limit) break;
      ++probes;
      if (state.current.get(x)) {
        parent[w] = x;
        state.visited.set_atomic(w);
        state.next.set_atomic(w);
        ++claimed;
        break;
      }
    }
  }
  if (stats) stats->probes += probes;
  return {claimed, 0};
}

StepResult degree_aware_step(const CsrGraph& graph, const DegreeSplitAdjacency& split,
                             FrontierState& state, std::vector<vertex_t>& parent, vertex_t limit,
                             KernelStats* stats) {
  (void)graph;
  const auto n = static_cast<std::int64_t>(limit);
  std::uint64_t claimed = 0;
  std::uint64_t probes = 0;
  // Pass one: probe only the highest-degree neighbor.
#pragma omp parallel for schedule(dynamic, 1024) reduction(+ : claimed, probes)
  for (std::int64_t sv = 0; sv < n; ++sv) {
    const auto w = static_cast<vertex_t>(sv);
    if (state.visited.get_atomic(w)) continue;
    const vertex_t x = split.in_plus[w];
    if (x == kNoVertex) continue;
    assert(x < limit);
    ++probes;
    if (state.current.get(x)) {
      parent[w] = x;
      state.visited.set_atomic(w);
      state.next.set_atomic(w);
      ++claimed;
    }
  }
  // Pass two: the descending-degree remainder with early exit.
#pragma omp parallel for schedule(dynamic, 1024) reduction(+ : claimed, probes)
  for (std::int64_t sv = 0; sv < n; ++sv) {
    const auto w = static_cast<vertex_t>(sv);
    if (state.visited.get_atomic(w)) continue;
    for (vertex_t x : split.in_minus(w)) {
      ++probes;
      if (state.current.get(x)) {
        parent[w] = x;
        state.visited.set_atomic(w);
        state.next.set_atomic(w);
        ++claimed;
        break;
      }
    }
  }
  if (stats) stats->probes += probes;
  return {claimed, 0};
}

StepResult block_search_step(const CsrGraph& graph, const DegreeSplitAdjacency& split,
                             FrontierState& state, std::vector<vertex_t>& parent, vertex_t limit,
                             KernelStats* stats) {
  (void)graph;
  const auto blocks = static_cast<std::int64_t>(words_for(limit));
  std::uint64_t claimed = 0;
  std::uint64_t probes = 0;
  std::uint64_t skips = 0;
  // Probes test the pre-step visited set, which stays frozen for the whole
  // sweep: claims go to next and are folded into visited afterwards. An
  // unvisited vertex can only have visited neighbors on the most recent
  // level, so adopting any of them preserves exact BFS levels.
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : claimed, probes, skips)
  for (std::int64_t bi = 0; bi < blocks; ++bi) {
    const std::uint64_t base = static_cast<std::uint64_t>(bi) * kWordBits;
    std::uint64_t visit_word = state.visited.word(static_cast<std::uint64_t>(bi));
    // Tail bits past the traversal range read as permanently visited.
    if (base + kWordBits > limit) visit_word |= ~std::uint64_t{0} << (limit - base);
    std::uint64_t not_visited = ~visit_word;
    if (not_visited == 0) {
      ++skips;
      continue;
    }
    std::uint64_t claims = 0;
    while (not_visited != 0) {
      const auto [pos, rest] = block_search_unvisited(not_visited);
      not_visited = rest;
      const vertex_t w = base + pos;
      vertex_t found = kNoVertex;
      const vertex_t plus = split.in_plus[w];
      if (plus != kNoVertex) {
        ++probes;
        if (state.visited.get(plus)) found = plus;
      }
      if (found == kNoVertex) {
        for (vertex_t x : split.in_minus(w)) {
          ++probes;
          if (state.visited.get(x)) {
            found = x;
            break;
          }
        }
      }
      if (found != kNoVertex) {
        parent[w] = found;
        claims |= std::uint64_t{1} << pos;
        ++claimed;
      }
    }
    // One write-back per block; blocks own disjoint words.
    if (claims != 0)
      state.next.set_word(static_cast<std::uint64_t>(bi),
                          state.next.word(static_cast<std::uint64_t>(bi)) | claims);
  }
  const std::uint64_t words = words_for(limit);
  for (std::uint64_t wi = 0; wi < words; ++wi) {
    const std::uint64_t nw = state.next.word(wi);
    if (nw != 0) state.visited.set_word(wi, state.visited.word(wi) | nw);
  }
  if (stats) {
    stats->probes += probes;
    stats->skipped_blocks += skips;
  }
  return {claimed, 0};
}

void run_top_down(const CsrGraph& graph, FrontierState& state, std::vector<vertex_t>& parent,
                  vertex_t limit, KernelStats* stats) {
  for (;;) {
    const StepResult res = top_down_step(graph, state, parent, limit, stats);
    record_level(stats, 't');
    state.advance_level();
    if (res.claimed == 0) break;
  }
}

void run_hybrid(const CsrGraph& graph, const DegreeSplitAdjacency* split, BottomUpKind kind,
                FrontierState& state, std::vector<vertex_t>& parent, vertex_t limit,
                const HybridPolicy& policy, KernelStats* stats) {
  if (kind != BottomUpKind::kClassic && split == nullptr)
    throw std::invalid_argument("run_hybrid: bottom-up kind needs a degree split");
  if (!(policy.alpha > 0.0) || !(policy.beta > 0.0))
    throw std::invalid_argument("run_hybrid: alpha and beta must be positive");

  // Measure the caller-provided seed frontier.
  std::uint64_t frontier_count = 0;
  std::uint64_t scout = 0;
  const std::uint64_t words = words_for(limit);
  for (std::uint64_t wi = 0; wi < words; ++wi) {
    std::uint64_t word = state.current.word(wi);
    while (word != 0) {
      const auto p = static_cast<std::uint64_t>(std::countr_zero(word));
      word &= word - 1;
      ++frontier_count;
      scout += graph.degrees[wi * kWordBits + p];
    }
  }
  double edges_to_check = static_cast<double>(restricted_edge_count(graph, limit));

  const auto bottom_up = [&]() -> StepResult {
    switch (kind) {
      case BottomUpKind::kClassic:
        return bottom_up_step(graph, state, parent, limit, stats);
      case BottomUpKind::kDegreeAware:
        return degree_aware_step(graph, *split, state, parent, limit, stats);
      case BottomUpKind::kBlockSearch:
        return block_search_step(graph, *split, state, parent, limit, stats);
    }
    return {};
  };

  while (frontier_count > 0) {
    if (static_cast<double>(scout) > edges_to_check / policy.alpha) {
      // Bottom-up phase: sweep while the frontier keeps growing or stays
      // above vertex_count / beta.
      std::uint64_t awake = frontier_count;
      std::uint64_t previous;
      do {
        previous = awake;
        const StepResult res = bottom_up();
        record_level(stats, 'b');
        state.advance_level();
        awake = res.claimed;
      } while (awake > 0 && (awake >= previous ||
                             static_cast<double>(awake) >
                                 static_cast<double>(limit) / policy.beta));
      frontier_count = awake;
      scout = 1;  // force one top-down level before another switch
    } else {
      edges_to_check -= static_cast<double>(scout);
      const StepResult res = top_down_step(graph, state, parent, limit, stats);
      record_level(stats, 't');
      state.advance_level();
      frontier_count = res.claimed;
      scout = res.scout;
    }
  }
}

void run_block_search(const CsrGraph& graph, const DegreeSplitAdjacency& split,
                      FrontierState& state, std::vector<vertex_t>& parent, vertex_t limit,
                      KernelStats* stats) {
  for (;;) {
    const StepResult res = block_search_step(graph, split, state, parent, limit, stats);
    record_level(stats, 'b');
    state.advance_level();
    if (res.claimed == 0) break;
  }
}

BfsTree bfs_top_down(const CsrGraph& graph, vertex_t root, KernelStats* stats) {
  FrontierState state;
  BfsTree tree = seeded_tree(graph, root, state);
  run_top_down(graph, state, tree.parent, graph.vertex_count, stats);
  return tree;
}

BfsTree bfs_hybrid(const CsrGraph& graph, vertex_t root, const HybridPolicy& policy,
                   KernelStats* stats) {
  FrontierState state;
  BfsTree tree = seeded_tree(graph, root, state);
  run_hybrid(graph, nullptr, BottomUpKind::kClassic, state, tree.parent, graph.vertex_count,
             policy, stats);
  return tree;
}

BfsTree bfs_degree_aware(const CsrGraph& graph, const DegreeSplitAdjacency& split, vertex_t root,
                         const HybridPolicy& policy, KernelStats* stats) {
  check_full_split(graph, split);
  FrontierState state;
  BfsTree tree = seeded_tree(graph, root, state);
  run_hybrid(graph, &split, BottomUpKind::kDegreeAware, state, tree.parent, graph.vertex_count,
             policy, stats);
  return tree;
}

BfsTree bfs_block_search(const CsrGraph& graph, const DegreeSplitAdjacency& split, vertex_t root,
                         KernelStats* stats) {
  check_full_split(graph, split);
  FrontierState state;
  BfsTree tree = seeded_tree(graph, root, state);
  run_block_search(graph, split, state, tree.parent, graph.vertex_count, stats);
  return tree;
}

}  // namespace etbfs
