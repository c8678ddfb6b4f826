#pragma once

#include <string>
#include <vector>

#include "mub/frames.hpp"
#include "mub/geometry.hpp"
#include "mub/planes.hpp"

namespace mub {

// Line-based decimal text formats; serialization is byte-stable so verified
// files can be diffed and round-tripped.

std::string serialize_mubset(const MubSet& m);
MubSet parse_mubset(const std::string& text);

struct SpreadFileData {
  bool orthogonal = false;
  int64_t p = 2;
  int n = 1;
  std::vector<Subspace> members;
};

std::string serialize_spread(const SymplecticSpread& s);
std::string serialize_orthospread(const OrthogonalSpread& s);
SpreadFileData parse_spread(const std::string& text);

std::string serialize_plane(const AffinePlane& plane);
AffinePlane parse_plane(const std::string& text);

/// All N(N+1) unnormalized vectors of a complete set, row by row, entries as
/// comma-joined coefficient lists; the header records the 1/sqrt(N) convention.
std::string export_vectors(const MubSet& m);

/// First token of the file: MUBSET, SPREAD, ORTHOSPREAD, PLANE or FIELD.
std::string sniff_format(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace mub
