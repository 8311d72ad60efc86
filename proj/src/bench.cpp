#include "etbfs/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"

#include "etbfs/build.hpp"
#include "etbfs/classify.hpp"
#include "etbfs/io.hpp"
#include "etbfs/preprocess.hpp"
#include "etbfs/relayout.hpp"
#include "etbfs/rng.hpp"
#include "etbfs/validate.hpp"

namespace etbfs {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Everything run_benchmark prepares before the timed traversals.
struct Pipeline {
  CsrGraph graph;      // final traversal space (non-et kernels)
  ClassifiedGraph cg;  // final traversal space (et mode)
  EdgeTreeList etl;
  DegreeSplitAdjacency split;
  bool have_split = false;
  bool et_mode = false;
  CoreKernel core_kernel = CoreKernel::kHybrid;
  std::vector<vertex_t> final2orig;  // final index -> original index
  std::vector<vertex_t> orig2final;  // kNoVertex where dropped
  std::uint64_t original_vertex_count = 0;
};

void check_config(const BenchConfig& config) {
  if (config.roots == 0) throw std::invalid_argument("bench: roots must be >= 1");
  if (config.threads == 0) throw std::invalid_argument("bench: threads must be >= 1");
  if (config.degree_aware && config.block_search)
    throw std::invalid_argument("bench: degree-aware and block-search are mutually exclusive");
  if (config.kernel == KernelChoice::kTopDown && (config.degree_aware || config.block_search))
    throw std::invalid_argument("bench: top-down has no bottom-up phase to adjust");
  const bool et_mode = config.et || config.kernel == KernelChoice::kEtBfs;
  if (config.replay == TreeReplay::kTeolv) {
    if (!et_mode) throw std::invalid_argument("bench: leaves-only replay requires et");
    if (config.mh != 0)
      throw std::invalid_argument("bench: leaves-only replay requires mh = 0");
  }
  if (config.mh < -1) throw std::invalid_argument("bench: mh must be -1 or >= 0");
}

CoreKernel core_kernel_for(const BenchConfig& config) {
  switch (config.kernel) {
    case KernelChoice::kTopDown:
      return CoreKernel::kTopDown;
    case KernelChoice::kDegreeAware:
      return CoreKernel::kDegreeAware;
    case KernelChoice::kBlockSearch:
      return CoreKernel::kBlockSearch;
    case KernelChoice::kHybrid:
    case KernelChoice::kEtBfs:
      if (config.degree_aware) return CoreKernel::kDegreeAware;
      if (config.block_search) return CoreKernel::kHybridBlockSearch;
      return CoreKernel::kHybrid;
  }
  return CoreKernel::kHybrid;
}

bool wants_split(const BenchConfig& config) {
  return config.kernel == KernelChoice::kDegreeAware ||
         config.kernel == KernelChoice::kBlockSearch || config.degree_aware ||
         config.block_search;
}

Pipeline build_pipeline(const CsrGraph& base, const BenchConfig& config) {
  Pipeline p;
  p.et_mode = config.et || config.kernel == KernelChoice::kEtBfs;
  p.core_kernel = core_kernel_for(config);
  const std::uint64_t segments = config.segments != 0 ? config.segments : config.threads;

  CsrGraph g = base;
  p.original_vertex_count = g.vertex_count;
  p.final2orig.resize(g.vertex_count);
  for (vertex_t v = 0; v < g.vertex_count; ++v) p.final2orig[v] = v;

  if (config.rm_zero) {
    CompactResult compact = remove_zero_vertices(g);
    g = std::move(compact.graph);
    p.final2orig = std::move(compact.new2old);
  }

  if (p.et_mode) {
    const std::vector<VertexType> types = classify_vertices(g, config.mh);
    ClassifiedGraph cg = relayout_csr(g, types, config.mh);
    if (config.round_robin) cg = shuffle_core_block(cg, segments);
    // Compose through the rm-zero map so final2orig reaches the original
    // space in one hop.
    std::vector<vertex_t> composed(cg.new2old.size());
    for (std::uint64_t i = 0; i < cg.new2old.size(); ++i)
      composed[i] = p.final2orig[cg.new2old[i]];
    p.final2orig = std::move(composed);
    p.etl = extract_edge_tree_list(cg);
    if (wants_split(config)) {
      p.split = split_degree_aware(cg.graph, cg.core_vertex_count);
      p.have_split = true;
    }
    p.cg = std::move(cg);
  } else {
    if (config.round_robin) {
      const std::vector<vertex_t> by_degree = degree_sort_permutation(g);
      const SrrsResult shuffled = srrs_shuffle(by_degree, segments);
      g = relabel_graph(g, shuffled.shuffled_ids);
      std::vector<vertex_t> composed(shuffled.shuffled_ids.size());
      for (std::uint64_t i = 0; i < composed.size(); ++i)
        composed[i] = p.final2orig[shuffled.shuffled_ids[i]];
      p.final2orig = std::move(composed);
    }
    if (wants_split(config)) {
      p.split = split_degree_aware(g);
      p.have_split = true;
    }
    p.graph = std::move(g);
  }

  p.orig2final.assign(p.original_vertex_count, kNoVertex);
  for (std::uint64_t i = 0; i < p.final2orig.size(); ++i) p.orig2final[p.final2orig[i]] = i;
  return p;
}

BfsTree traverse(const Pipeline& p, const BenchConfig& config, vertex_t root) {
  if (p.et_mode)
    return et_bfs(p.cg, p.etl, root, p.core_kernel, config.replay,
                  p.have_split ? &p.split : nullptr, config.policy);
  switch (config.kernel) {
    case KernelChoice::kTopDown:
      return bfs_top_down(p.graph, root);
    case KernelChoice::kDegreeAware:
      return bfs_degree_aware(p.graph, p.split, root, config.policy);
    case KernelChoice::kBlockSearch:
      return bfs_block_search(p.graph, p.split, root);
    case KernelChoice::kHybrid: {
      if (config.degree_aware) return bfs_degree_aware(p.graph, p.split, root, config.policy);
      if (config.block_search) {
        BfsTree tree;
        tree.root = root;
        tree.parent.assign(p.graph.vertex_count, kNoVertex);
        tree.parent[root] = root;
        FrontierState state(p.graph.vertex_count);
        state.visited.set(root);
        state.current.set(root);
        run_hybrid(p.graph, &p.split, BottomUpKind::kBlockSearch, state, tree.parent,
                   p.graph.vertex_count, config.policy);
        return tree;
      }
      return bfs_hybrid(p.graph, root, config.policy);
    }
    case KernelChoice::kEtBfs:
      break;  // unreachable: et_mode above
  }
  throw std::logic_error("bench: unhandled kernel");
}

// Lifts a final-space tree into the original index space; dropped vertices
// stay unreached.
BfsTree lift_tree(const BfsTree& tree, const std::vector<vertex_t>& final2orig,
                  std::uint64_t original_vertex_count) {
  BfsTree out;
  out.parent.assign(original_vertex_count, kNoVertex);
  for (std::uint64_t v = 0; v < tree.parent.size(); ++v) {
    const vertex_t parent = tree.parent[v];
    if (parent == kNoVertex) continue;
    out.parent[final2orig[v]] = final2orig[parent];
  }
  out.root = final2orig[tree.root];
  return out;
}

}  // namespace

const char* to_string(KernelChoice kernel) {
  switch (kernel) {
    case KernelChoice::kTopDown: return "top-down";
    case KernelChoice::kHybrid: return "hybrid";
    case KernelChoice::kDegreeAware: return "degree-aware";
    case KernelChoice::kBlockSearch: return "block-search";
    case KernelChoice::kEtBfs: return "et-bfs";
  }
  return "?";
}

KernelChoice parse_kernel(const std::string& name) {
  if (name == "top-down") return KernelChoice::kTopDown;
  if (name == "hybrid") return KernelChoice::kHybrid;
  if (name == "degree-aware") return KernelChoice::kDegreeAware;
  if (name == "block-search") return KernelChoice::kBlockSearch;
  if (name == "et-bfs") return KernelChoice::kEtBfs;
  throw std::invalid_argument("unknown kernel \"" + name +
                              "\" (top-down, hybrid, degree-aware, block-search, et-bfs)");
}

double compute_gteps(std::uint64_t traversed_edges, double elapsed_seconds) {
  if (!(elapsed_seconds > 0.0))
    throw std::invalid_argument("compute_gteps: elapsed time must be positive");
  return static_cast<double>(traversed_edges) / elapsed_seconds / 1e9;
}

std::vector<vertex_t> select_roots(const CsrGraph& graph, std::uint64_t count,
                                   std::uint64_t seed) {
  if (count == 0) throw std::invalid_argument("select_roots: count must be >= 1");
  std::uint64_t eligible = 0;
  for (std::uint64_t d : graph.degrees) eligible += d > 0;
  if (eligible == 0)
    throw std::runtime_error("select_roots: graph has no vertex with degree >= 1");

  std::vector<vertex_t> roots;
  roots.reserve(count);
  std::vector<char> taken(graph.vertex_count, 0);
  std::uint64_t distinct = 0;
  std::uint64_t state = seed;
  while (roots.size() < count) {
    const vertex_t v = splitmix64(state) % graph.vertex_count;
    if (graph.degrees[v] == 0) continue;
    // Redraw repeats while unpicked eligible vertices remain.
    if (taken[v] && distinct < eligible) continue;
    if (!taken[v]) {
      taken[v] = 1;
      ++distinct;
    }
    roots.push_back(v);
  }
  return roots;
}

BenchReport run_benchmark(const EdgeList& edges, const BenchConfig& config) {
  check_config(config);
#ifdef _OPENMP
  omp_set_num_threads(static_cast<int>(config.threads));
#endif

  BenchReport report;
  report.config = config;

  const auto preprocess_start = Clock::now();
  const CsrGraph original = build_csr(edges);
  const Pipeline pipeline = build_pipeline(original, config);
  report.preprocessing_seconds = seconds_since(preprocess_start);

  // Roots are drawn in the original space so every kernel sees the same set.
  report.vertex_count = original.vertex_count;
  report.undirected_edge_count = original.undirected_edge_count();
  const std::vector<vertex_t> roots = select_roots(original, config.roots, config.seed);

  report.all_valid = true;
  double gteps_sum = 0.0;
  double inv_time_sum = 0.0;
  for (vertex_t root : roots) {
    const vertex_t final_root = pipeline.orig2final[root];

    const auto start = Clock::now();
    const BfsTree tree = traverse(pipeline, config, final_root);
    const double elapsed = seconds_since(start);

    const BfsTree lifted =
        lift_tree(tree, pipeline.final2orig, pipeline.original_vertex_count);
    const ValidationReport validation = validate_bfs_tree(original, lifted);
    if (!config.tree_out.empty() && report.per_root.empty())
      write_tree(config.tree_out, lifted);

    RootResult result;
    result.root = root;
    result.seconds = elapsed;
    result.traversed_edges = validation.traversed_edge_count;
    result.gteps = compute_gteps(validation.traversed_edge_count, elapsed);
    result.valid = validation.passed;
    report.all_valid = report.all_valid && validation.passed;
    gteps_sum += result.gteps;
    inv_time_sum += 1.0 / elapsed;
    report.per_root.push_back(result);
  }

  report.mean_gteps = gteps_sum / static_cast<double>(report.per_root.size());
  const auto [min_it, max_it] =
      std::minmax_element(report.per_root.begin(), report.per_root.end(),
                          [](const RootResult& a, const RootResult& b) { return a.gteps < b.gteps; });
  report.min_gteps = min_it->gteps;
  report.max_gteps = max_it->gteps;
  report.harmonic_mean_seconds = static_cast<double>(report.per_root.size()) / inv_time_sum;
  return report;
}

std::string report_to_json(const BenchReport& report) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["config"] = {
      {"kernel", to_string(report.config.kernel)},
      {"mh", report.config.mh},
      {"roots", report.config.roots},
      {"seed", report.config.seed},
      {"threads", report.config.threads},
      {"alpha", report.config.policy.alpha},
      {"beta", report.config.policy.beta},
      {"replay", report.config.replay == TreeReplay::kTeolv ? "teolv" : "teet"},
      {"rm_zero", report.config.rm_zero},
      {"round_robin", report.config.round_robin},
      {"degree_aware", report.config.degree_aware},
      {"block_search", report.config.block_search},
      {"et", report.config.et},
      {"segments", report.config.segments},
  };
  j["graph"] = {
      {"vertex_count", report.vertex_count},
      {"undirected_edge_count", report.undirected_edge_count},
  };
  j["aggregate"] = {
      {"mean_gteps", report.mean_gteps},
      {"min_gteps", report.min_gteps},
      {"max_gteps", report.max_gteps},
      {"harmonic_mean_seconds", report.harmonic_mean_seconds},
      {"preprocessing_seconds", report.preprocessing_seconds},
      {"all_valid", report.all_valid},
  };
  j["per_root"] = nlohmann::json::array();
  for (const RootResult& r : report.per_root) {
    j["per_root"].push_back({
        {"root", r.root},
        {"seconds", r.seconds},
        {"traversed_edges", r.traversed_edges},
        {"gteps", r.gteps},
        {"valid", r.valid},
    });
  }
  return j.dump(2);
}

std::string report_to_text(const BenchReport& report) {
  std::ostringstream out;
  out << "kernel " << to_string(report.config.kernel);
  if (report.config.et && report.config.kernel != KernelChoice::kEtBfs) out << "+et";
  if (report.config.rm_zero) out << "+rm-zero";
  if (report.config.round_robin) out << "+round-robin";
  if (report.config.degree_aware) out << "+degree-aware";
  if (report.config.block_search) out << "+block-search";
  out << "  threads " << report.config.threads << "  mh " << report.config.mh << "\n";
  out << "graph: " << report.vertex_count << " vertices, " << report.undirected_edge_count
      << " undirected edges\n";
  out << "preprocessing: " << report.preprocessing_seconds << " s\n";
  out << std::setw(12) << "root" << std::setw(14) << "seconds" << std::setw(14) << "edges"
      << std::setw(12) << "GTEPS" << std::setw(7) << "valid" << "\n";
  for (const RootResult& r : report.per_root) {
    out << std::setw(12) << r.root << std::setw(14) << std::setprecision(5) << r.seconds
        << std::setw(14) << r.traversed_edges << std::setw(12) << std::setprecision(5) << r.gteps
        << std::setw(7) << (r.valid ? "yes" : "NO") << "\n";
  }
  out << "mean " << report.mean_gteps << " GTEPS  (min " << report.min_gteps << ", max "
      << report.max_gteps << ")  harmonic-mean time " << report.harmonic_mean_seconds << " s\n";
  out << (report.all_valid ? "all trees valid" : "VALIDATION FAILURES PRESENT") << "\n";
  return out.str();
}

}  // namespace etbfs
