#include "etbfs/kronecker.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include <unistd.h>

#include "etbfs/rng.hpp"

namespace etbfs {
namespace {

std::uint64_t physical_memory_bytes() {
  const long pages = sysconf(_SC_PHYS_PAGES);
  const long page_size = sysconf(_SC_PAGE_SIZE);
  if (pages <= 0 || page_size <= 0) return ~std::uint64_t{0};
  return static_cast<std::uint64_t>(pages) * static_cast<std::uint64_t>(page_size);
}

}  // namespace

EdgeList generate_kronecker(const KroneckerParams& params) {
  if (params.scale > 48) throw std::invalid_argument("generate_kronecker: scale > 48");
  if (params.edgefactor < 1) throw std::invalid_argument("generate_kronecker: edgefactor < 1");
  if (std::fabs(params.a + params.b + params.c + params.d - 1.0) > 1e-12)
    throw std::invalid_argument("generate_kronecker: probabilities must sum to 1");

  const std::uint64_t n = std::uint64_t{1} << params.scale;
  const std::uint64_t tuple_count = n * params.edgefactor;
  if (tuple_count / params.edgefactor != n)
    throw std::runtime_error("generate_kronecker: tuple count overflows");
  if (tuple_count > physical_memory_bytes() / sizeof(Edge))
    throw std::runtime_error("generate_kronecker: edge list would exceed physical memory");

  EdgeList out;
  out.vertex_count = n;
  out.edges.resize(tuple_count);

  const double ab = params.a + params.b;
  const double abc = ab + params.c;
  Edge* const edges = out.edges.data();

#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(tuple_count); ++i) {
    // Per-tuple stream keyed by (seed, index); the mixing constant keeps
    // consecutive indices from producing correlated states.
    std::uint64_t state = params.seed ^ (static_cast<std::uint64_t>(i) * 0x2545f4914f6cdd1dull);
    vertex_t src = 0;
    vertex_t dst = 0;
    for (std::uint32_t level = 0; level < params.scale; ++level) {
      const double u = uniform01(state);
      src <<= 1;
      dst <<= 1;
      if (u < params.a) {
        // top-left quadrant
      } else if (u < ab) {
        dst |= 1;
      } else if (u < abc) {
        src |= 1;
      } else {
        src |= 1;
        dst |= 1;
      }
    }
    edges[i] = {src, dst};
  }
  return out;
}

}  // namespace etbfs
