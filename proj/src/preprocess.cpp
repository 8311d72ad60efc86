#include "etbfs/preprocess.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace etbfs {

std::span<const vertex_t> SegmentPartition::in_neighbors(const CsrGraph& base, std::uint64_t k,
                                                         vertex_t w) const {
  if (k >= segment_count || w < boundaries[k] || w >= boundaries[k + 1])
    throw std::invalid_argument("SegmentPartition::in_neighbors: vertex not in segment");
  return base.neighbors(w);
}

DegreeSplitAdjacency split_degree_aware(const CsrGraph& graph, vertex_t neighbor_limit) {
  const std::uint64_t n = graph.vertex_count;
  DegreeSplitAdjacency split;
  split.neighbor_limit = neighbor_limit;
  split.in_plus.assign(n, kNoVertex);
  split.minus_offsets.assign(n + 1, 0);

  // Neighbor lists are sorted ascending, so with a limit the eligible
  // neighbors form a prefix.
  auto eligible = [&](vertex_t v) {
    auto nbrs = graph.neighbors(v);
    if (neighbor_limit == kNoVertex) return nbrs;
    auto end = std::lower_bound(nbrs.begin(), nbrs.end(), neighbor_limit);
    return nbrs.subspan(0, static_cast<std::size_t>(end - nbrs.begin()));
  };

  for (vertex_t v = 0; v < n; ++v) {
    const auto nbrs = eligible(v);
    if (!nbrs.empty()) split.minus_offsets[v + 1] = nbrs.size() - 1;
  }
  std::partial_sum(split.minus_offsets.begin(), split.minus_offsets.end(),
                   split.minus_offsets.begin());
  split.minus_cols.resize(split.minus_offsets[n]);

#pragma omp parallel for schedule(dynamic, 1024)
  for (std::int64_t sv = 0; sv < static_cast<std::int64_t>(n); ++sv) {
    const vertex_t v = static_cast<vertex_t>(sv);
    const auto nbrs = eligible(v);
    if (nbrs.empty()) continue;
    // Highest-degree neighbor wins in_plus; first occurrence keeps the
    // smallest index on ties because ids ascend.
    vertex_t best = nbrs[0];
    for (vertex_t w : nbrs)
      if (graph.degrees[w] > graph.degrees[best]) best = w;
    split.in_plus[v] = best;

    vertex_t* out = split.minus_cols.data() + split.minus_offsets[v];
    bool skipped = false;
    for (vertex_t w : nbrs) {
      if (!skipped && w == best) {
        skipped = true;
        continue;
      }
      *out++ = w;
    }
    std::sort(split.minus_cols.data() + split.minus_offsets[v], out, [&](vertex_t a, vertex_t b) {
      if (graph.degrees[a] != graph.degrees[b]) return graph.degrees[a] > graph.degrees[b];
      return a < b;
    });
  }
  return split;
}

SegmentPartition partition_segments(const CsrGraph& graph, std::uint64_t l) {
  const std::uint64_t n = graph.vertex_count;
  if (l == 0 || l > n)
    throw std::invalid_argument("partition_segments: segment count must be in [1, vertex_count]");

  SegmentPartition part;
  part.segment_count = l;
  part.boundaries.resize(l + 1);
  for (std::uint64_t k = 0; k <= l; ++k) part.boundaries[k] = k * n / l;

  part.out_offsets.assign(l, std::vector<std::uint64_t>(n + 1, 0));
  part.out_cols.resize(l);
  for (std::uint64_t k = 0; k < l; ++k) {
    const vertex_t lo = part.boundaries[k];
    const vertex_t hi = part.boundaries[k + 1];
    auto& offsets = part.out_offsets[k];
    for (vertex_t v = 0; v < n; ++v) {
      // Sorted adjacency: the members of [lo, hi) form one contiguous run.
      auto nbrs = graph.neighbors(v);
      auto first = std::lower_bound(nbrs.begin(), nbrs.end(), lo);
      auto last = std::lower_bound(first, nbrs.end(), hi);
      offsets[v + 1] = static_cast<std::uint64_t>(last - first);
    }
    std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
    part.out_cols[k].resize(offsets[n]);
    for (vertex_t v = 0; v < n; ++v) {
      auto nbrs = graph.neighbors(v);
      auto first = std::lower_bound(nbrs.begin(), nbrs.end(), lo);
      auto last = std::lower_bound(first, nbrs.end(), hi);
      std::copy(first, last, part.out_cols[k].begin() + offsets[v]);
    }
  }
  return part;
}

SrrsResult srrs_shuffle(const std::vector<vertex_t>& sorted_ids, std::uint64_t segment_count) {
  if (segment_count == 0)
    throw std::invalid_argument("srrs_shuffle: segment count must be positive");
  const std::uint64_t n = sorted_ids.size();
  const std::uint64_t per_segment = n / segment_count;
  const std::uint64_t tail = n % segment_count;

  SrrsResult result;
  result.segment_offsets.resize(segment_count + 1);
  result.segment_offsets[0] = 0;
  for (std::uint64_t tid = 0; tid < segment_count; ++tid)
    result.segment_offsets[tid + 1] =
        result.segment_offsets[tid] + per_segment + (tid < tail ? 1 : 0);

  result.new2old.resize(n);
  for (std::uint64_t tid = 0; tid < segment_count; ++tid) {
    std::uint64_t* seg = result.new2old.data() + result.segment_offsets[tid];
    for (std::uint64_t j = 0; j < per_segment; ++j) seg[j] = tid + segment_count * j;
    // The remainder is the lowest-degree tail; handing segment tid leftover
    // tid keeps every segment descending by degree.
    if (tid < tail) seg[per_segment] = segment_count * per_segment + tid;
  }

  result.shuffled_ids.resize(n);
  for (std::uint64_t p = 0; p < n; ++p) result.shuffled_ids[p] = sorted_ids[result.new2old[p]];
  return result;
}

CompactResult remove_zero_vertices(const CsrGraph& graph) {
  const std::uint64_t n = graph.vertex_count;
  CompactResult result;
  result.old2new.assign(n, kNoVertex);
  for (vertex_t v = 0; v < n; ++v) {
    if (graph.degrees[v] == 0) continue;
    result.old2new[v] = result.new2old.size();
    result.new2old.push_back(v);
  }

  const std::uint64_t m = result.new2old.size();
  result.graph.vertex_count = m;
  result.graph.row_offsets.resize(m + 1);
  result.graph.row_offsets[0] = 0;
  result.graph.degrees.resize(m);
  result.graph.col_indices.reserve(graph.directed_edge_count());
  for (std::uint64_t i = 0; i < m; ++i) {
    const vertex_t old = result.new2old[i];
    // Every neighbor has degree >= 1, so the remap below is always defined.
    for (vertex_t w : graph.neighbors(old))
      result.graph.col_indices.push_back(result.old2new[w]);
    result.graph.row_offsets[i + 1] = result.graph.col_indices.size();
    result.graph.degrees[i] = graph.degrees[old];
  }
  return result;
}

std::vector<vertex_t> degree_sort_permutation(const CsrGraph& graph) {
  std::vector<vertex_t> new2old(graph.vertex_count);
  std::iota(new2old.begin(), new2old.end(), vertex_t{0});
  std::sort(new2old.begin(), new2old.end(), [&](vertex_t a, vertex_t b) {
    if (graph.degrees[a] != graph.degrees[b]) return graph.degrees[a] > graph.degrees[b];
    return a < b;
  });
  return new2old;
}

}  // namespace etbfs
