#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mub/geometry.hpp"
#include "mub/gf.hpp"

namespace mub {

/// Affine plane of order N: N^2 points indexed 0..N^2-1 (point (x, y) is
/// rank(x)*N + rank(y)), N^2+N lines of N points each.
struct AffinePlane {
  int64_t order = 2;
  int64_t p = 2;  // characteristic, for the p-rank invariant
  std::vector<std::vector<int32_t>> lines;
  std::string provenance;
};

/// Translation plane with lines x = b and y = Mx + b; the N+1 parallel
/// classes correspond to the spread members.
AffinePlane plane_from_spreadset(const SpreadSet& k);

/// Plane with lines x = b and y = f(x+a) + b for a planar value table f.
AffinePlane plane_from_planar(const Field& f, std::span<const int64_t> table);

struct PlaneCheckOptions {
  bool exhaustive = true;
  uint64_t seed = 0;
  int64_t samples = 10000;
};

/// Counts and line sizes always; the two-points-one-line axiom exhaustively
/// or on seeded random point pairs.
CheckReport verify_plane_axioms(const AffinePlane& plane, const PlaneCheckOptions& opts);

/// Rank over Z_p of the N^2 x (N^2+N) point-line incidence matrix.
int64_t plane_p_rank(const AffinePlane& plane);

}  // namespace mub
