#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mub/frames.hpp"
#include "mub/planes.hpp"

namespace mub {

struct GeneratorVerdict {
  char type = 'X';  // 'X' or 'Z'
  int index = 0;
  bool fixes_all = false;
};

/// Inequivalence-witness record: a pure function of the MUB set (plus an
/// attached plane); two sets with different records are inequivalent, equal
/// records are inconclusive.
struct InvariantRecord {
  std::string id;
  std::string family;
  std::vector<std::pair<std::string, std::string>> params;  // sorted by key
  int64_t dim = 0;
  int64_t frame_count = 0;
  bool invariance_overall = false;
  std::vector<GeneratorVerdict> invariance;
  std::optional<int64_t> plane_rank;

  std::string serialize() const;  // flat key=value block, stable key order
};

/// Checks apply_weyl(w, F) = F as 1-space sets for every frame F and every
/// standard generator w in {X(e_i), Z(e_i)}. Passing certifies invariance
/// under the standard extraspecial group; failing certifies only that this
/// standard presentation fails.
CheckReport standard_invariance_test(const MubSet& m);
std::vector<GeneratorVerdict> standard_invariance_details(const MubSet& m);

/// For planar-function MUB sets: the diagonal group generated by
/// e_x -> zeta^(c.x) e_x and e_x -> zeta^(c.f(x)) e_x must have exactly N
/// fixed 1-spaces (the standard ones) and one orbit of size N^2.
CheckReport planar_orbit_check(const MubSet& m);

InvariantRecord invariant_battery(const MubSet& m, const AffinePlane* plane = nullptr);

}  // namespace mub
