#pragma once

#include <cstdint>

#include "etbfs/types.hpp"

namespace etbfs {

/// Kronecker (R-MAT) generator parameters. Defaults follow the Graph500
/// input protocol: edgefactor 16 and quadrant probabilities
/// (A, B, C, D) = (0.57, 0.19, 0.19, 0.05).
struct KroneckerParams {
  std::uint32_t scale = 0;
  std::uint64_t edgefactor = 16;
  double a = 0.57;
  double b = 0.19;
  double c = 0.19;
  double d = 0.05;
  std::uint64_t seed = 0;
};

/// Generates 2^scale * edgefactor raw edge tuples over 2^scale vertices.
///
/// Each tuple descends `scale` levels of the recursion, picking a quadrant
/// with probability (a, b, c, d) per level. The random stream of tuple i is
/// derived from (seed, i) with a SplitMix64 counter generator, so output is
/// byte-identical across runs and thread counts and the generation loop
/// parallelizes over index ranges. Vertex labels are not scrambled
/// afterwards; self loops and duplicates are left for build_csr to drop.
///
/// Throws std::invalid_argument if scale > 48, edgefactor < 1, or the
/// probabilities do not sum to 1 (1e-12); throws std::runtime_error before
/// allocating if the tuple array would not fit in physical memory.
EdgeList generate_kronecker(const KroneckerParams& params);

}  // namespace etbfs
