#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"

#include "etbfs/bench.hpp"
#include "etbfs/build.hpp"
#include "etbfs/classify.hpp"
#include "etbfs/io.hpp"
#include "etbfs/kronecker.hpp"
#include "etbfs/relayout.hpp"
#include "etbfs/validate.hpp"

namespace {

constexpr std::uint64_t kMinBenchVertices = 1024;  // matches the scale >= 10 guard

etbfs::EdgeList load_edges(const std::string& path, const std::string& format) {
  return etbfs::read_graph(path, etbfs::parse_graph_format(format));
}

int cmd_generate(std::uint32_t scale, std::uint64_t edgefactor, std::uint64_t seed, double a,
                 double b, double c, double d, const std::string& out,
                 const std::string& format) {
  etbfs::KroneckerParams params;
  params.scale = scale;
  params.edgefactor = edgefactor;
  params.seed = seed;
  params.a = a;
  params.b = b;
  params.c = c;
  params.d = d;
  const etbfs::EdgeList edges = etbfs::generate_kronecker(params);
  etbfs::write_graph(out, edges, etbfs::parse_graph_format(format));
  std::cout << "wrote " << out << ": " << edges.vertex_count << " vertices, "
            << edges.edges.size() << " raw edge tuples\n";
  return 0;
}

int cmd_classify(const std::string& graph_path, const std::string& format, std::int64_t mh) {
  const etbfs::EdgeList edges = load_edges(graph_path, format);
  const etbfs::CsrGraph graph = etbfs::build_csr(edges);
  const std::vector<etbfs::VertexType> types = etbfs::classify_vertices(graph, mh);
  const etbfs::TypeCounts counts = etbfs::count_types(types);
  const std::uint64_t ph = etbfs::compute_peak_height(graph);

  const etbfs::ClassifiedGraph cg = etbfs::relayout_csr(graph, types, mh);
  const etbfs::EdgeTreeList etl = etbfs::extract_edge_tree_list(cg);
  const etbfs::EdgeTreeStats stats = etbfs::edge_tree_stats(etl, cg.core_vertex_count);

  std::cout << "vertices " << graph.vertex_count << ", undirected edges "
            << graph.undirected_edge_count() << "\n";
  std::cout << "mh " << mh << ", peak height " << ph << "\n";
  std::cout << "core-internal " << counts.core_internal << "\n";
  std::cout << "core-edge     " << counts.core_edge << "\n";
  std::cout << "tree-internal " << counts.tree_internal << "\n";
  std::cout << "tree-leaf     " << counts.tree_leaf << "\n";
  std::cout << "isolated      " << counts.vertex_zero << "\n";
  std::cout << "edge trees: " << stats.tree_count << " trees over " << stats.tree_vertex_total
            << " vertices, attached to " << stats.attached_core_edge_count
            << " distinct core-edge vertices\n";
  if (stats.tree_count > 0)
    std::cout << "tree size mean " << stats.mean_size << ", max " << stats.max_size << ", min "
              << stats.min_size << "\n";
  return 0;
}

int cmd_validate(const std::string& graph_path, const std::string& format,
                 const std::string& tree_path) {
  const etbfs::EdgeList edges = load_edges(graph_path, format);
  const etbfs::CsrGraph graph = etbfs::build_csr(edges);
  const etbfs::BfsTree tree = etbfs::read_tree(tree_path);
  const etbfs::ValidationReport report = etbfs::validate_bfs_tree(graph, tree);

  std::cout << "root " << tree.root << "\n";
  std::cout << "reached " << report.reached_count << " vertices, "
            << report.traversed_edge_count << " undirected edges\n";
  for (const etbfs::ValidationFailure& f : report.failures)
    std::cout << "rule " << f.rule << " failed at vertex " << f.where << ": " << f.message
              << "\n";
  std::cout << (report.passed ? "PASS" : "FAIL") << "\n";
  return report.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge-tree BFS library benchmark harness"};
  app.require_subcommand(1);

  // generate
  std::uint32_t gen_scale = 16;
  std::uint64_t gen_edgefactor = 16;
  std::uint64_t gen_seed = 1;
  double gen_a = 0.57, gen_b = 0.19, gen_c = 0.19, gen_d = 0.05;
  std::string gen_out;
  std::string gen_format = "binary";
  auto* generate = app.add_subcommand("generate", "Generate a Kronecker graph file");
  generate->add_option("--scale", gen_scale, "log2 of the vertex count")->required();
  generate->add_option("--edgefactor", gen_edgefactor, "edge tuples per vertex");
  generate->add_option("--seed", gen_seed, "generator seed");
  generate->add_option("--a", gen_a, "top-left quadrant probability");
  generate->add_option("--b", gen_b, "top-right quadrant probability");
  generate->add_option("--c", gen_c, "bottom-left quadrant probability");
  generate->add_option("--d", gen_d, "bottom-right quadrant probability");
  generate->add_option("--out", gen_out, "output path")->required();
  generate->add_option("--format", gen_format, "binary or text");

  // classify
  std::string cls_graph;
  std::string cls_format = "binary";
  std::int64_t cls_mh = -1;
  auto* classify = app.add_subcommand("classify", "Report vertex classes and edge tree stats");
  classify->add_option("--graph", cls_graph, "graph file")->required();
  classify->add_option("--format", cls_format, "binary or text");
  classify->add_option("--mh", cls_mh, "height bound, -1 for full peeling");

  // bench
  std::string bench_graph;
  std::string bench_format = "binary";
  std::uint32_t bench_scale = 0;
  std::uint64_t bench_edgefactor = 16;
  std::uint64_t bench_gen_seed = 1;
  std::string bench_kernel = "hybrid";
  std::string bench_replay = "teet";
  std::string bench_out;
  etbfs::BenchConfig config;
  std::uint64_t bench_threads = 0;
  auto* bench = app.add_subcommand("bench", "Run the multi-root traversal benchmark");
  auto* bench_graph_opt = bench->add_option("--graph", bench_graph, "graph file to load");
  auto* bench_scale_opt =
      bench->add_option("--scale", bench_scale, "generate a Kronecker graph of this scale");
  bench_graph_opt->excludes(bench_scale_opt);
  bench->add_option("--format", bench_format, "graph file format");
  bench->add_option("--edgefactor", bench_edgefactor, "edge tuples per vertex when generating");
  bench->add_option("--gen-seed", bench_gen_seed, "generator seed when generating");
  bench->add_option("--kernel", bench_kernel,
                    "top-down, hybrid, degree-aware, block-search, or et-bfs");
  bench->add_option("--mh", config.mh, "height bound for et classification");
  bench->add_option("--roots", config.roots, "number of BFS roots");
  bench->add_option("--seed", config.seed, "root selection seed");
  bench->add_option("--threads", bench_threads, "worker count (0 = all hardware threads)");
  bench->add_option("--alpha", config.policy.alpha, "hybrid switch factor (growing frontier)");
  bench->add_option("--beta", config.policy.beta, "hybrid switch factor (shrinking frontier)");
  bench->add_option("--replay", bench_replay, "edge tree replay: teet or teolv");
  bench->add_option("--segments", config.segments, "round-robin segment count (0 = threads)");
  bench->add_flag("--rm-zero", config.rm_zero, "drop isolated vertices first");
  bench->add_flag("--round-robin", config.round_robin, "degree-balanced round-robin shuffle");
  bench->add_flag("--degree-aware", config.degree_aware, "degree-aware bottom-up phase");
  bench->add_flag("--block-search", config.block_search, "block-search bottom-up phase");
  bench->add_flag("--et", config.et, "edge tree decomposition pipeline");
  bench->add_option("--out", bench_out, "write the JSON report here");
  bench->add_option("--tree-out", config.tree_out, "write the first root's parent tree here");

  // validate
  std::string val_graph;
  std::string val_format = "binary";
  std::string val_tree;
  auto* validate = app.add_subcommand("validate", "Check a parent tree against a graph");
  validate->add_option("--graph", val_graph, "graph file")->required();
  validate->add_option("--format", val_format, "binary or text");
  validate->add_option("--tree", val_tree, "tree file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed())
      return cmd_generate(gen_scale, gen_edgefactor, gen_seed, gen_a, gen_b, gen_c, gen_d,
                          gen_out, gen_format);
    if (classify->parsed()) return cmd_classify(cls_graph, cls_format, cls_mh);
    if (validate->parsed()) return cmd_validate(val_graph, val_format, val_tree);

    // bench
    etbfs::EdgeList edges;
    if (!bench_graph.empty()) {
      edges = load_edges(bench_graph, bench_format);
      if (edges.vertex_count < kMinBenchVertices)
        throw std::invalid_argument("bench: graph too small to time meaningfully (need >= " +
                                    std::to_string(kMinBenchVertices) + " vertices)");
    } else if (bench_scale_opt->count() > 0) {
      if (bench_scale < 10)
        throw std::invalid_argument("bench: scale must be >= 10 for a measurable run");
      etbfs::KroneckerParams params;
      params.scale = bench_scale;
      params.edgefactor = bench_edgefactor;
      params.seed = bench_gen_seed;
      edges = etbfs::generate_kronecker(params);
    } else {
      throw std::invalid_argument("bench: provide --graph or --scale");
    }

    config.kernel = etbfs::parse_kernel(bench_kernel);
    if (bench_replay == "teet")
      config.replay = etbfs::TreeReplay::kTeet;
    else if (bench_replay == "teolv")
      config.replay = etbfs::TreeReplay::kTeolv;
    else
      throw std::invalid_argument("bench: replay must be teet or teolv");
    config.threads = bench_threads != 0
                         ? bench_threads
                         : std::max(1u, std::thread::hardware_concurrency());

    const etbfs::BenchReport report = etbfs::run_benchmark(edges, config);
    std::cout << etbfs::report_to_text(report);
    if (!bench_out.empty()) {
      std::ofstream out(bench_out, std::ios::trunc);
      if (!out) throw std::runtime_error(bench_out + ": cannot open for writing");
      out << etbfs::report_to_json(report) << "\n";
    }
    return report.all_valid ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
