#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "etbfs/bitmap.hpp"
#include "etbfs/preprocess.hpp"
#include "etbfs/types.hpp"

namespace etbfs {

/// Direction switch thresholds for the hybrid driver. The driver goes
/// bottom-up when the frontier's out-edge count exceeds (remaining
/// unexplored edges) / alpha, and returns to top-down once the frontier both
/// shrinks and falls below vertex_count / beta. Large alpha switches
/// eagerly; alpha near zero never switches (pure top-down).
struct HybridPolicy {
  double alpha = 14.0;
  double beta = 24.0;
};

/// Optional kernel instrumentation. Counters are exact when running
/// single-threaded; levels and the direction trace are thread-count
/// invariant.
struct KernelStats {
  std::uint64_t levels = 0;
  std::uint64_t bottom_up_levels = 0;
  std::uint64_t probes = 0;          // bottom-up neighbor probes
  std::uint64_t skipped_blocks = 0;  // fully visited blocks skipped
  std::string direction_trace;       // one char per level: 't' or 'b'
};

/// Which bottom-up phase the hybrid driver runs.
enum class BottomUpKind {
  kClassic,      // per-vertex neighbor scan probing the current frontier
  kDegreeAware,  // highest-degree probe pass, then descending remainder
  kBlockSearch,  // 64-vertex block word scan with merged degree-aware probe
};

/// Isolates the lowest set bit of a not-yet-visited mask: returns its
/// position and the mask with that bit cleared. The mask must be nonzero.
std::pair<std::uint32_t, std::uint64_t> block_search_unvisited(std::uint64_t not_visited);

// ---------------------------------------------------------------------------
// Whole-traversal kernels. Each returns a parent tree with
// parent[root] == root and kNoVertex outside root's component.

BfsTree bfs_top_down(const CsrGraph& graph, vertex_t root, KernelStats* stats = nullptr);

BfsTree bfs_hybrid(const CsrGraph& graph, vertex_t root, const HybridPolicy& policy = {},
                   KernelStats* stats = nullptr);

/// Hybrid driver whose bottom-up phases run the two-pass degree-aware scan.
/// The split must cover the full graph (no neighbor limit).
BfsTree bfs_degree_aware(const CsrGraph& graph, const DegreeSplitAdjacency& split, vertex_t root,
                         const HybridPolicy& policy = {}, KernelStats* stats = nullptr);

/// Standalone block-search traversal: the root seeds the visited bitmap and
/// every later level is one block sweep, repeated to fixpoint, with no
/// top-down phase at all.
BfsTree bfs_block_search(const CsrGraph& graph, const DegreeSplitAdjacency& split, vertex_t root,
                         KernelStats* stats = nullptr);

// ---------------------------------------------------------------------------
// Step and driver layer. All functions restrict the traversal to vertex
// indices below limit: frontier members are below it and neighbors at or
// above it are skipped (neighbor lists are sorted, so such neighbors form a
// suffix). Passing limit = vertex_count traverses everything. Steps expect
// parents of frontier vertices to be set, leave visited and next updated
// with this level's claims, and never touch current; callers advance levels
// via state.advance_level().

struct StepResult {
  std::uint64_t claimed = 0;  // vertices newly visited this step
  std::uint64_t scout = 0;    // degree sum of claimed vertices (top-down only)
};

StepResult top_down_step(const CsrGraph& graph, FrontierState& state,
                         std::vector<vertex_t>& parent, vertex_t limit,
                         KernelStats* stats = nullptr);

/// One classic bottom-up step: every unvisited vertex scans its neighbors in
/// index order and adopts the first one present in the current frontier.
StepResult bottom_up_step(const CsrGraph& graph, FrontierState& state,
                          std::vector<vertex_t>& parent, vertex_t limit,
                          KernelStats* stats = nullptr);

/// Degree-aware bottom-up step: pass one probes each unvisited vertex's
/// single highest-degree neighbor against the current frontier; pass two
/// scans the descending-degree remainder with early exit.
StepResult degree_aware_step(const CsrGraph& graph, const DegreeSplitAdjacency& split,
                             FrontierState& state, std::vector<vertex_t>& parent, vertex_t limit,
                             KernelStats* stats = nullptr);

/// Block-search bottom-up step: walks 64-vertex blocks, skipping fully
/// visited words; each unvisited vertex gets the merged degree-aware probe
/// against the pre-step visited set, and each block's claims are written
/// back as one word. Claimed vertices enter next (and visited) as usual, so
/// the step composes with the hybrid driver.
StepResult block_search_step(const CsrGraph& graph, const DegreeSplitAdjacency& split,
                             FrontierState& state, std::vector<vertex_t>& parent, vertex_t limit,
                             KernelStats* stats = nullptr);

/// Runs top-down steps until the frontier empties.
void run_top_down(const CsrGraph& graph, FrontierState& state, std::vector<vertex_t>& parent,
                  vertex_t limit, KernelStats* stats = nullptr);

/// Runs the direction-optimizing loop until the frontier empties, using the
/// selected bottom-up step (split may be null for kClassic).
void run_hybrid(const CsrGraph& graph, const DegreeSplitAdjacency* split, BottomUpKind kind,
                FrontierState& state, std::vector<vertex_t>& parent, vertex_t limit,
                const HybridPolicy& policy, KernelStats* stats = nullptr);

/// Runs block-search steps to fixpoint (the standalone form).
void run_block_search(const CsrGraph& graph, const DegreeSplitAdjacency& split,
                      FrontierState& state, std::vector<vertex_t>& parent, vertex_t limit,
                      KernelStats* stats = nullptr);

/// Directed edge count of the subgraph induced by [0, limit); the hybrid
/// switch heuristic's notion of "edges to check".
std::uint64_t restricted_edge_count(const CsrGraph& graph, vertex_t limit);

}  // namespace etbfs
