// Acceptance gate: runs the eight release criteria end to end and prints one
// PASS/FAIL line per criterion. Exits with the number of failed criteria.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <omp.h>

#include "etbfs/bench.hpp"
#include "etbfs/bfs.hpp"
#include "etbfs/build.hpp"
#include "etbfs/classify.hpp"
#include "etbfs/et_bfs.hpp"
#include "etbfs/kronecker.hpp"
#include "etbfs/preprocess.hpp"
#include "etbfs/relayout.hpp"
#include "etbfs/validate.hpp"

using namespace etbfs;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects the first failure of a criterion; later ones are only counted.
struct Gate {
  bool ok = true;
  std::uint64_t failures = 0;
  std::string first_problem;

  void expect(bool condition, const std::string& problem) {
    if (condition) return;
    ++failures;
    if (ok) {
      ok = false;
      first_problem = problem;
    }
  }
};

struct NamedGraph {
  std::string name;
  EdgeList edges;
};

EdgeList path_edges(std::uint64_t n) {
  EdgeList list;
  list.vertex_count = n;
  for (vertex_t v = 0; v + 1 < n; ++v) list.edges.push_back({v, v + 1});
  return list;
}

EdgeList cycle_edges(std::uint64_t n) {
  EdgeList list = path_edges(n);
  if (n >= 3) list.edges.push_back({n - 1, 0});
  return list;
}

EdgeList star_edges(std::uint64_t n) {
  EdgeList list;
  list.vertex_count = n;
  for (vertex_t v = 1; v < n; ++v) list.edges.push_back({0, v});
  return list;
}

EdgeList clique_edges(std::uint64_t n, vertex_t base = 0) {
  EdgeList list;
  list.vertex_count = base + n;
  for (vertex_t a = 0; a < n; ++a)
    for (vertex_t b = a + 1; b < n; ++b) list.edges.push_back({base + a, base + b});
  return list;
}

EdgeList binary_tree_edges(std::uint64_t n) {
  EdgeList list;
  list.vertex_count = n;
  for (vertex_t v = 1; v < n; ++v) list.edges.push_back({(v - 1) / 2, v});
  return list;
}

EdgeList random_tree_edges(std::uint64_t n, std::uint64_t seed) {
  EdgeList list;
  list.vertex_count = n;
  std::mt19937_64 rng(seed);
  for (vertex_t v = 1; v < n; ++v) list.edges.push_back({rng() % v, v});
  return list;
}

EdgeList random_pairs(std::uint64_t n, std::uint64_t count, std::uint64_t seed) {
  EdgeList list;
  list.vertex_count = n;
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < count; ++i) list.edges.push_back({rng() % n, rng() % n});
  return list;
}

EdgeList disjoint_union(const EdgeList& a, const EdgeList& b) {
  EdgeList out = a;
  out.vertex_count = a.vertex_count + b.vertex_count;
  for (const Edge& e : b.edges)
    out.edges.push_back({e.src + a.vertex_count, e.dst + a.vertex_count});
  return out;
}

// The shared graph corpus for criteria 1 and 2: random graphs at several
// densities, power-law generator output, and the usual adversarial shapes.
std::vector<NamedGraph> build_corpus() {
  std::vector<NamedGraph> corpus;
  const auto add = [&](std::string name, EdgeList edges) {
    corpus.push_back({std::move(name), std::move(edges)});
  };

  std::uint64_t seed = 5000;
  for (std::uint64_t n = 2; n <= 200; n += 5) {
    for (double mean_degree : {0.5, 1.0, 4.0, 8.0}) {
      const auto count =
          std::max<std::uint64_t>(1, std::llround(static_cast<double>(n) * mean_degree / 2.0));
      add("random-n" + std::to_string(n) + "-d" + std::to_string(mean_degree),
          random_pairs(n, count, ++seed));
    }
  }

  for (std::uint32_t scale = 4; scale <= 14; ++scale) {
    for (std::uint64_t ef : {4, 8, 16}) {
      KroneckerParams params;
      params.scale = scale;
      params.edgefactor = ef;
      params.seed = 100 * scale + ef;
      add("kron-s" + std::to_string(scale) + "-ef" + std::to_string(ef),
          generate_kronecker(params));
    }
  }

  for (std::uint64_t n : {1, 2, 3, 5, 9, 17, 33, 100}) add("path-" + std::to_string(n), path_edges(n));
  for (std::uint64_t n : {2, 5, 17, 64, 200}) add("star-" + std::to_string(n), star_edges(n));
  for (std::uint64_t n : {3, 4, 8, 50, 101}) add("cycle-" + std::to_string(n), cycle_edges(n));
  for (std::uint64_t n : {7, 15, 63, 127}) add("btree-" + std::to_string(n), binary_tree_edges(n));
  for (std::uint64_t n : {10, 40, 120, 200})
    add("rtree-" + std::to_string(n), random_tree_edges(n, 777 + n));

  add("two-paths", disjoint_union(path_edges(5), path_edges(7)));
  add("cycle-plus-star", disjoint_union(cycle_edges(6), star_edges(8)));
  add("two-cliques", disjoint_union(clique_edges(5), clique_edges(4)));
  add("blob-plus-tail", [] {
    EdgeList blob = random_pairs(30, 60, 404);
    blob.vertex_count = 45;  // 15 isolated vertices appended
    return blob;
  }());
  add("three-paths", disjoint_union(disjoint_union(path_edges(3), path_edges(3)), path_edges(3)));
  add("blob-pair", disjoint_union(random_pairs(25, 50, 405), random_pairs(20, 30, 406)));

  for (std::uint64_t n : {0, 1, 4, 16}) {
    EdgeList empty;
    empty.vertex_count = n;
    add("edgeless-" + std::to_string(n), std::move(empty));
  }
  return corpus;
}

std::vector<vertex_t> spread_roots(std::uint64_t n, std::uint64_t k) {
  std::vector<vertex_t> roots;
  if (n == 0) return roots;
  if (n <= k) {
    for (vertex_t v = 0; v < n; ++v) roots.push_back(v);
    return roots;
  }
  std::set<vertex_t> picked;
  for (std::uint64_t i = 0; i < k; ++i) picked.insert(i * (n - 1) / (k - 1));
  roots.assign(picked.begin(), picked.end());
  return roots;
}

bool has_rule(const ValidationReport& report, int rule) {
  return std::any_of(report.failures.begin(), report.failures.end(),
                     [rule](const ValidationFailure& f) { return f.rule == rule; });
}

// Structural scan of one classification: every tree component must be an
// actual tree, touch the core at most once, and touch it only through a
// core-edge vertex.
void scan_tree_components(const CsrGraph& g, const std::vector<VertexType>& types, Gate& gate,
                          const std::string& label) {
  const auto is_tree = [&](vertex_t v) {
    return types[v] == VertexType::kTreeInternal || types[v] == VertexType::kTreeLeaf;
  };
  std::vector<char> seen(g.vertex_count, 0);
  for (vertex_t start = 0; start < g.vertex_count; ++start) {
    if (!is_tree(start) || seen[start]) continue;
    std::vector<vertex_t> component{start};
    seen[start] = 1;
    std::uint64_t internal_ends = 0;
    std::uint64_t core_incident = 0;
    for (std::size_t head = 0; head < component.size(); ++head) {
      const vertex_t v = component[head];
      for (vertex_t w : g.neighbors(v)) {
        if (is_tree(w)) {
          ++internal_ends;
          if (!seen[w]) {
            seen[w] = 1;
            component.push_back(w);
          }
        } else {
          ++core_incident;
          gate.expect(types[w] == VertexType::kCoreEdge,
                      label + ": tree vertex adjacent to a non-core-edge core vertex");
        }
      }
    }
    gate.expect(internal_ends == 2 * (component.size() - 1),
                label + ": tree component is not a tree");
    gate.expect(core_incident <= 1, label + ": tree component touches the core more than once");
  }
}

std::string format_seconds(double s) {
  std::ostringstream out;
  out.precision(1);
  out << std::fixed << s << " s";
  return out.str();
}

void report(int id, const std::string& title, const Gate& gate, const std::string& detail) {
  if (gate.ok)
    std::cout << "PASS criterion-" << id << " " << title << " (" << detail << ")" << std::endl;
  else
    std::cout << "FAIL criterion-" << id << " " << title << ": " << gate.first_problem << " ["
              << gate.failures << " failed checks; " << detail << "]" << std::endl;
}

// ---------------------------------------------------------------------------
// Criterion 1: every kernel matches the oracle exactly on the whole corpus.
// ---------------------------------------------------------------------------
Gate criterion_1(const std::vector<NamedGraph>& corpus) {
  Gate gate;
  const auto start = Clock::now();
  std::uint64_t graph_count = 0;
  std::uint64_t root_count = 0;

  constexpr CoreKernel kCoreKernels[] = {CoreKernel::kTopDown, CoreKernel::kHybrid,
                                         CoreKernel::kDegreeAware, CoreKernel::kBlockSearch,
                                         CoreKernel::kHybridBlockSearch};

  for (const NamedGraph& entry : corpus) {
    ++graph_count;
    const CsrGraph g = build_csr(entry.edges);
    const DegreeSplitAdjacency whole_split = split_degree_aware(g);

    // Distinct height bounds to lay the graph out under: 0, 1, and the full
    // peel height.
    std::set<std::int64_t> bounds{0, 1,
                                  static_cast<std::int64_t>(compute_peak_height(g))};
    struct Layout {
      std::int64_t mh;
      ClassifiedGraph cg;
      EdgeTreeList etl;
      DegreeSplitAdjacency split;
    };
    std::vector<Layout> layouts;
    for (std::int64_t mh : bounds) {
      Layout layout;
      layout.mh = mh;
      layout.cg = relayout_csr(g, classify_vertices(g, mh), mh);
      layout.etl = extract_edge_tree_list(layout.cg);
      layout.split = split_degree_aware(layout.cg.graph, layout.cg.core_vertex_count);
      layouts.push_back(std::move(layout));
    }

    std::uint64_t rotation = graph_count;
    for (vertex_t root : spread_roots(g.vertex_count, 4)) {
      ++root_count;
      ++rotation;
      const std::vector<std::uint64_t> oracle = oracle_bfs(g, root);
      const auto check_tree = [&](const BfsTree& tree, const std::string& what) {
        gate.expect(tree_levels(tree) == oracle,
                    entry.name + " root " + std::to_string(root) + " " + what +
                        ": levels differ from oracle");
        gate.expect(validate_bfs_tree(g, tree).passed,
                    entry.name + " root " + std::to_string(root) + " " + what +
                        ": validation failed");
      };

      check_tree(bfs_top_down(g, root), "top-down");
      check_tree(bfs_hybrid(g, root), "hybrid");
      check_tree(bfs_degree_aware(g, whole_split, root), "degree-aware");
      check_tree(bfs_block_search(g, whole_split, root), "block-search");

      for (const Layout& layout : layouts) {
        // Rotate the core kernel so each one also runs under the composite.
        const CoreKernel core = kCoreKernels[rotation % std::size(kCoreKernels)];
        const vertex_t new_root = layout.cg.old2new[root];
        const BfsTree teet_tree =
            et_bfs(layout.cg, layout.etl, new_root, core, TreeReplay::kTeet, &layout.split);
        check_tree(translate_tree(teet_tree, layout.cg.new2old),
                   "et-bfs/teet mh=" + std::to_string(layout.mh));
        if (layout.mh == 0) {
          const BfsTree teolv_tree =
              et_bfs(layout.cg, layout.etl, new_root, core, TreeReplay::kTeolv, &layout.split);
          check_tree(translate_tree(teolv_tree, layout.cg.new2old), "et-bfs/teolv mh=0");
        }
      }
    }
  }

  const double elapsed = seconds_since(start);
  gate.expect(graph_count >= 200, "corpus holds fewer than 200 graphs");
  gate.expect(elapsed < 120.0, "runtime " + format_seconds(elapsed) + " exceeds 2 minutes");
  return gate;
}

// ---------------------------------------------------------------------------
// Criterion 2: classification invariants on the corpus and at scale 20.
// ---------------------------------------------------------------------------
void check_classification(const CsrGraph& g, std::int64_t mh, bool with_layout, Gate& gate,
                          const std::string& label) {
  const std::vector<VertexType> types = classify_vertices(g, mh);
  const TypeCounts counts = count_types(types);
  gate.expect(counts.total() == g.vertex_count, label + ": type counts do not sum to |V|");
  if (mh == 0) gate.expect(counts.tree_internal == 0, label + ": height 0 produced TI vertices");
  scan_tree_components(g, types, gate, label);
  if (with_layout) {
    const ClassifiedGraph cg = relayout_csr(g, types, mh);
    const EdgeTreeList etl = extract_edge_tree_list(cg);
    gate.expect(etl.entries.size() == counts.tree(),
                label + ": edge tree list length != TI + TL");
  }
}

Gate criterion_2(const std::vector<NamedGraph>& corpus) {
  Gate gate;
  for (const NamedGraph& entry : corpus) {
    const CsrGraph g = build_csr(entry.edges);
    for (std::int64_t mh : {-1, 0, 1}) check_classification(g, mh, true, gate, entry.name);
  }
  {
    KroneckerParams params;
    params.scale = 20;
    params.edgefactor = 16;
    params.seed = 1;
    const CsrGraph g = build_csr(generate_kronecker(params));
    check_classification(g, -1, true, gate, "kron-s20-ef16");
    check_classification(g, 0, true, gate, "kron-s20-ef16");
  }
  return gate;
}

// ---------------------------------------------------------------------------
// Criterion 3: power-law type proportions and peel height at scale 20.
// ---------------------------------------------------------------------------
Gate criterion_3(std::string& detail) {
  Gate gate;
  const auto start = Clock::now();
  std::ostringstream summary;
  for (std::uint64_t seed : {1, 2, 3}) {
    if (seed > 1) summary << " ";
    KroneckerParams params;
    params.scale = 20;
    params.edgefactor = 16;
    params.seed = seed;
    const CsrGraph g = build_csr(generate_kronecker(params));
    const TypeCounts counts = count_types(classify_vertices(g, -1));
    const double fraction = static_cast<double>(counts.tree_leaf + counts.vertex_zero) /
                            static_cast<double>(g.vertex_count);
    const std::uint64_t ph = compute_peak_height(g);
    summary << "seed " << seed << ": leaf+isolated " << fraction << ", height " << ph << ";";
    gate.expect(fraction >= 0.50 && fraction <= 0.75,
                "seed " + std::to_string(seed) + ": leaf+isolated fraction " +
                    std::to_string(fraction) + " outside [0.50, 0.75]");
    gate.expect(ph <= 4, "seed " + std::to_string(seed) + ": peel height " + std::to_string(ph) +
                             " exceeds 4");
  }
  const double elapsed = seconds_since(start);
  gate.expect(elapsed < 180.0, "runtime " + format_seconds(elapsed) + " exceeds 3 minutes");
  detail = summary.str() + " " + format_seconds(elapsed);
  return gate;
}

// ---------------------------------------------------------------------------
// Criterion 4: the bit-scan step against a loop oracle.
// ---------------------------------------------------------------------------
Gate criterion_4() {
  Gate gate;
  const auto check_mask = [&](std::uint64_t mask) {
    std::uint32_t lowest = 0;
    while (!((mask >> lowest) & 1)) ++lowest;
    const auto [position, rest] = block_search_unvisited(mask);
    gate.expect(position == lowest, "wrong bit position for mask " + std::to_string(mask));
    gate.expect(rest == (mask & (mask - 1)), "wrong residual for mask " + std::to_string(mask));
  };
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << 16); ++mask) check_mask(mask);
  std::mt19937_64 rng(271828);
  for (std::uint64_t i = 0; i < 1'000'000; ++i) {
    std::uint64_t mask = rng();
    while (mask == 0) mask = rng();
    check_mask(mask);
  }
  return gate;
}

// ---------------------------------------------------------------------------
// Criterion 5: traversal on the relaid-out graph matches the original.
// ---------------------------------------------------------------------------
Gate criterion_5() {
  Gate gate;
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t n = 50 + rng() % 351;
    const EdgeList edges = random_pairs(n, 3 * n, rng());
    const CsrGraph g = build_csr(edges);
    const std::int64_t mh = (i % 3) - 1;  // -1, 0, 1
    const ClassifiedGraph cg = relayout_csr(g, classify_vertices(g, mh), mh);
    for (vertex_t root : spread_roots(n, 3)) {
      const std::vector<std::uint64_t> expected = oracle_bfs(g, root);
      const BfsTree relaid = bfs_hybrid(cg.graph, cg.old2new[root]);
      const std::vector<std::uint64_t> levels = tree_levels(relaid);
      bool match = true;
      for (vertex_t v = 0; v < n && match; ++v) match = levels[v] == expected[cg.new2old[v]];
      gate.expect(match, "graph " + std::to_string(i) + " root " + std::to_string(root) +
                             ": relaid-out levels differ");
    }
  }
  return gate;
}

// ---------------------------------------------------------------------------
// Criterion 6: identical results at 1, 2, and 8 workers.
// ---------------------------------------------------------------------------
Gate criterion_6() {
  Gate gate;
  KroneckerParams params;
  params.scale = 12;
  params.edgefactor = 8;
  params.seed = 7;

  omp_set_num_threads(1);
  const EdgeList base_edges = generate_kronecker(params);
  const CsrGraph g = build_csr(base_edges);
  const std::vector<VertexType> base_types = classify_vertices(g, -1);
  const ClassifiedGraph base_cg = relayout_csr(g, base_types, -1);
  const DegreeSplitAdjacency base_split = split_degree_aware(g);

  const std::vector<vertex_t> roots = spread_roots(g.vertex_count, 4);
  std::vector<std::vector<std::uint64_t>> base_levels;
  std::vector<std::uint64_t> base_traversed;
  for (vertex_t root : roots) {
    for (int variant = 0; variant < 3; ++variant) {
      const BfsTree tree = variant == 0   ? bfs_hybrid(g, root)
                           : variant == 1 ? bfs_block_search(g, base_split, root)
                                          : translate_tree(
                                                et_bfs(base_cg, extract_edge_tree_list(base_cg),
                                                       base_cg.old2new[root]),
                                                base_cg.new2old);
      base_levels.push_back(tree_levels(tree));
      base_traversed.push_back(validate_bfs_tree(g, tree).traversed_edge_count);
    }
  }

  for (int workers : {2, 8}) {
    omp_set_num_threads(workers);
    const std::string w = std::to_string(workers);
    gate.expect(generate_kronecker(params).edges == base_edges.edges,
                w + " workers: generated edges differ");
    gate.expect(classify_vertices(g, -1) == base_types, w + " workers: classification differs");
    const ClassifiedGraph cg = relayout_csr(g, base_types, -1);
    gate.expect(cg.new2old == base_cg.new2old, w + " workers: layout permutation differs");
    const DegreeSplitAdjacency split = split_degree_aware(g);
    const EdgeTreeList etl = extract_edge_tree_list(cg);

    std::size_t slot = 0;
    for (vertex_t root : roots) {
      for (int variant = 0; variant < 3; ++variant, ++slot) {
        const BfsTree tree = variant == 0   ? bfs_hybrid(g, root)
                             : variant == 1 ? bfs_block_search(g, split, root)
                                            : translate_tree(
                                                  et_bfs(cg, etl, cg.old2new[root]), cg.new2old);
        gate.expect(tree_levels(tree) == base_levels[slot],
                    w + " workers: levels differ at root " + std::to_string(root));
        gate.expect(validate_bfs_tree(g, tree).traversed_edge_count == base_traversed[slot],
                    w + " workers: traversed-edge count differs at root " + std::to_string(root));
      }
    }
  }
  omp_set_num_threads(1);
  return gate;
}

// ---------------------------------------------------------------------------
// Criterion 7: scale-20 benchmark completes validated; composite kernel does
// not regress; height-0 and full-height layouts perform alike.
// ---------------------------------------------------------------------------
Gate criterion_7(std::string& detail) {
  Gate gate;
  const auto start = Clock::now();
  KroneckerParams params;
  params.scale = 20;
  params.edgefactor = 16;
  params.seed = 1;
  const EdgeList edges = generate_kronecker(params);
  const std::uint64_t ph = compute_peak_height(build_csr(edges));

  const auto run = [&](KernelChoice kernel, std::int64_t mh, TreeReplay replay) {
    BenchConfig config;
    config.kernel = kernel;
    config.mh = mh;
    config.replay = replay;
    config.roots = 64;
    config.seed = 2;
    config.threads = 1;
    const BenchReport report = run_benchmark(edges, config);
    gate.expect(report.all_valid, std::string(to_string(kernel)) + " mh=" + std::to_string(mh) +
                                      ": validation failures");
    return report.mean_gteps;
  };

  run(KernelChoice::kTopDown, -1, TreeReplay::kTeet);
  const double hybrid = run(KernelChoice::kHybrid, -1, TreeReplay::kTeet);
  run(KernelChoice::kDegreeAware, -1, TreeReplay::kTeet);
  run(KernelChoice::kBlockSearch, -1, TreeReplay::kTeet);
  const double composite = run(KernelChoice::kEtBfs, -1, TreeReplay::kTeet);

  const double leaves_only = run(KernelChoice::kEtBfs, 0, TreeReplay::kTeolv);
  const double full_height = run(KernelChoice::kEtBfs, static_cast<std::int64_t>(ph),
                                 TreeReplay::kTeet);

  const double regression = composite / hybrid;
  gate.expect(regression >= 0.85, "composite/hybrid ratio " + std::to_string(regression) +
                                      " below 0.85");
  const double agreement =
      std::min(leaves_only, full_height) / std::max(leaves_only, full_height);
  gate.expect(agreement >= 0.85, "height-0 vs full-height ratio " + std::to_string(agreement) +
                                     " outside 15%");

  const double elapsed = seconds_since(start);
  gate.expect(elapsed < 600.0, "runtime " + format_seconds(elapsed) + " exceeds 10 minutes");

  std::ostringstream summary;
  summary.precision(3);
  summary << "hybrid " << hybrid << " GTEPS, composite " << composite << " GTEPS (ratio "
          << regression << "), height-0 vs full " << agreement << ", " << format_seconds(elapsed);
  detail = summary.str();
  return gate;
}

// ---------------------------------------------------------------------------
// Criterion 8: mutated trees are rejected with the right rule.
// ---------------------------------------------------------------------------
Gate criterion_8() {
  Gate gate;

  struct Base {
    CsrGraph graph;
    BfsTree tree;
  };
  const auto make_base = [](std::uint64_t seed) {
    const std::uint64_t n = 24 + seed % 60;
    EdgeList edges = random_pairs(n, 3 * n, 9000 + seed);
    edges.edges.push_back({0, 1});  // ensure a non-degenerate root exists
    Base base;
    base.graph = build_csr(edges);
    base.tree = bfs_hybrid(base.graph, 0);
    return base;
  };

  const auto expect_rule = [&](const CsrGraph& g, const BfsTree& mutated, int rule,
                               std::uint64_t instance) {
    const ValidationReport report = validate_bfs_tree(g, mutated);
    gate.expect(!report.passed, "rule " + std::to_string(rule) + " instance " +
                                    std::to_string(instance) + ": mutation accepted");
    gate.expect(has_rule(report, rule), "rule " + std::to_string(rule) + " instance " +
                                            std::to_string(instance) + ": wrong rule id");
  };

  for (std::uint64_t i = 0; i < 100; ++i) {
    // Rule 1: the root no longer parents itself.
    {
      Base base = make_base(i);
      base.tree.parent[base.tree.root] = base.graph.neighbors(base.tree.root)[0];
      expect_rule(base.graph, base.tree, kRuleRootParent, i);
    }

    // Rule 2: two reached non-root neighbors point at each other.
    {
      Base base = make_base(i + 100);
      vertex_t u = kNoVertex;
      vertex_t w = kNoVertex;
      for (vertex_t v = 0; v < base.graph.vertex_count && u == kNoVertex; ++v) {
        if (v == base.tree.root || base.tree.parent[v] == kNoVertex) continue;
        for (vertex_t nbr : base.graph.neighbors(v)) {
          if (nbr != base.tree.root && base.tree.parent[nbr] != kNoVertex && nbr != v) {
            u = v;
            w = nbr;
            break;
          }
        }
      }
      gate.expect(u != kNoVertex, "rule 2 instance " + std::to_string(i) + ": no usable edge");
      if (u != kNoVertex) {
        base.tree.parent[u] = w;
        base.tree.parent[w] = u;
        expect_rule(base.graph, base.tree, kRuleChains, i);
      }
    }

    // Rule 3: a reached non-root vertex claims a non-neighbor as parent.
    {
      Base base = make_base(i + 200);
      vertex_t victim = kNoVertex;
      vertex_t impostor = kNoVertex;
      for (vertex_t v = 0; v < base.graph.vertex_count && victim == kNoVertex; ++v) {
        if (v == base.tree.root || base.tree.parent[v] == kNoVertex) continue;
        for (vertex_t p = 0; p < base.graph.vertex_count; ++p) {
          const auto nbrs = base.graph.neighbors(v);
          if (p == v || std::binary_search(nbrs.begin(), nbrs.end(), p)) continue;
          victim = v;
          impostor = p;
          break;
        }
      }
      gate.expect(victim != kNoVertex,
                  "rule 3 instance " + std::to_string(i) + ": no non-neighbor found");
      if (victim != kNoVertex) {
        base.tree.parent[victim] = impostor;
        expect_rule(base.graph, base.tree, kRuleParentEdge, i);
      }
    }

    // Rule 4: a ring tree laid out as one long chain stretches the closing
    // edge across every level.
    {
      const std::uint64_t len = 4 + i;
      const CsrGraph ring = build_csr(cycle_edges(len));
      BfsTree tree;
      tree.root = 0;
      tree.parent.resize(len);
      tree.parent[0] = 0;
      for (vertex_t v = 1; v < len; ++v) tree.parent[v] = v - 1;
      expect_rule(ring, tree, kRuleLevelSpan, i);
    }

    // Rule 5: a childless reached vertex is dropped from the tree.
    {
      Base base = make_base(i + 300);
      std::vector<char> has_child(base.graph.vertex_count, 0);
      for (vertex_t v = 0; v < base.graph.vertex_count; ++v) {
        const vertex_t p = base.tree.parent[v];
        if (p != kNoVertex && v != base.tree.root) has_child[p] = 1;
      }
      vertex_t victim = kNoVertex;
      for (vertex_t v = 0; v < base.graph.vertex_count && victim == kNoVertex; ++v)
        if (v != base.tree.root && base.tree.parent[v] != kNoVertex && !has_child[v]) victim = v;
      gate.expect(victim != kNoVertex,
                  "rule 5 instance " + std::to_string(i) + ": no childless vertex");
      if (victim != kNoVertex) {
        base.tree.parent[victim] = kNoVertex;
        expect_rule(base.graph, base.tree, kRuleReachedSet, i);
      }
    }
  }
  return gate;
}

}  // namespace

int main() {
  omp_set_num_threads(1);
  int failed = 0;
  const auto finish = [&failed](int id, const std::string& title, const Gate& gate,
                                const std::string& detail) {
    report(id, title, gate, detail);
    if (!gate.ok) ++failed;
  };

  const std::vector<NamedGraph> corpus = build_corpus();

  {
    const auto start = Clock::now();
    const Gate gate = criterion_1(corpus);
    finish(1, "kernel-oracle equivalence", gate,
           std::to_string(corpus.size()) + " graphs, " + format_seconds(seconds_since(start)));
  }
  {
    const auto start = Clock::now();
    const Gate gate = criterion_2(corpus);
    finish(2, "classification invariants", gate, format_seconds(seconds_since(start)));
  }
  {
    std::string detail;
    const Gate gate = criterion_3(detail);
    finish(3, "power-law proportions", gate, detail);
  }
  {
    const auto start = Clock::now();
    const Gate gate = criterion_4();
    finish(4, "bit-scan oracle equivalence", gate,
           "65535 exhaustive + 1000000 random masks, " + format_seconds(seconds_since(start)));
  }
  {
    const auto start = Clock::now();
    const Gate gate = criterion_5();
    finish(5, "relayout isomorphism", gate,
           "100 graphs, " + format_seconds(seconds_since(start)));
  }
  {
    const auto start = Clock::now();
    const Gate gate = criterion_6();
    finish(6, "worker-count determinism", gate, format_seconds(seconds_since(start)));
  }
  {
    std::string detail;
    const Gate gate = criterion_7(detail);
    finish(7, "benchmark performance", gate, detail);
  }
  {
    const auto start = Clock::now();
    const Gate gate = criterion_8();
    finish(8, "validator sensitivity", gate,
           "5 rules x 100 mutations, " + format_seconds(seconds_since(start)));
  }
  return failed;
}
