#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "etbfs/bfs.hpp"
#include "etbfs/et_bfs.hpp"
#include "etbfs/types.hpp"

namespace etbfs {

enum class KernelChoice { kTopDown, kHybrid, kDegreeAware, kBlockSearch, kEtBfs };

const char* to_string(KernelChoice kernel);

/// Maps the CLI kernel names (top-down, hybrid, degree-aware, block-search,
/// et-bfs) to KernelChoice; throws std::invalid_argument otherwise.
KernelChoice parse_kernel(const std::string& name);

/// Benchmark configuration. The optimization flags assemble the
/// preprocessing pipeline and adjust the bottom-up phase:
///  - rm_zero: drop isolated vertices before anything else
///  - round_robin: redistribute the degree-sorted ids over `segments`
///    interleaved segments (the whole graph, or the core block under et)
///  - degree_aware / block_search: bottom-up phase selection for hybrid or
///    the et core kernel (mutually exclusive)
///  - et: classify, relay out, and replay edge trees (implied by
///    kernel = et-bfs)
struct BenchConfig {
  KernelChoice kernel = KernelChoice::kHybrid;
  std::int64_t mh = -1;
  std::uint64_t roots = 64;
  std::uint64_t seed = 1;  // root-selection seed
  std::uint64_t threads = 1;
  HybridPolicy policy;
  TreeReplay replay = TreeReplay::kTeet;
  bool rm_zero = false;
  bool round_robin = false;
  bool degree_aware = false;
  bool block_search = false;
  bool et = false;
  std::uint64_t segments = 0;  // 0 = use the thread count
  std::string tree_out;        // non-empty: write the first root's tree here
};

struct RootResult {
  vertex_t root = 0;  // original index space
  double seconds = 0.0;
  std::uint64_t traversed_edges = 0;
  double gteps = 0.0;
  bool valid = false;
};

struct BenchReport {
  BenchConfig config;
  std::vector<RootResult> per_root;
  double mean_gteps = 0.0;
  double min_gteps = 0.0;
  double max_gteps = 0.0;
  double harmonic_mean_seconds = 0.0;
  double preprocessing_seconds = 0.0;  // everything from edge list to ready structures
  std::uint64_t vertex_count = 0;
  std::uint64_t undirected_edge_count = 0;
  bool all_valid = false;
};

/// traversed_edges / elapsed / 1e9. Throws std::invalid_argument when
/// elapsed <= 0.
double compute_gteps(std::uint64_t traversed_edges, double elapsed_seconds);

/// Draws `count` roots uniformly from the vertices with degree >= 1,
/// redrawing on zero-degree hits and on repeats while distinct choices
/// remain. Deterministic in seed. Throws std::runtime_error when no vertex
/// qualifies.
std::vector<vertex_t> select_roots(const CsrGraph& graph, std::uint64_t count, std::uint64_t seed);

/// Builds the pipeline the config implies, runs and times one traversal per
/// root (preprocessing excluded), validates every tree in the original index
/// space, and aggregates GTEPS. Configuration conflicts (both bottom-up
/// flags, bottom-up flags on top-down, leaves-only replay without mh = 0 or
/// without et) throw std::invalid_argument before any work.
BenchReport run_benchmark(const EdgeList& edges, const BenchConfig& config);

/// Versioned machine-readable rendering of a report.
std::string report_to_json(const BenchReport& report);

/// Human-readable table rendering of a report.
std::string report_to_text(const BenchReport& report);

}  // namespace etbfs
