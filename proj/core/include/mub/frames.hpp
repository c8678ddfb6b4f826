#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mub/cyclo.hpp"
#include "mub/families.hpp"
#include "mub/geometry.hpp"

namespace mub {

struct Provenance {
  std::string family;
  std::map<std::string, std::string> params;
};

/// N pairwise orthogonal 1-spaces of C^N (or R^N), in one of three encodings:
///  - standard: the coordinate 1-spaces <e_v>;
///  - exponent: row a is the unnormalized vector (root^e[a][0], ..., root^e[a][N-1]);
///  - dense: rows of exact cyclotomic integers (character-projection output).
/// Exponent rows have squared norm N; dense rows are content-reduced, and all
/// checks on them use the scale-free form of unbiasedness.
struct Orthoframe {
  enum class Kind : uint8_t { standard, exponent, dense };

  Kind kind = Kind::standard;
  Root root;
  int64_t dim = 0;
  std::string label = "standard";
  std::vector<uint8_t> exps;                // exponent kind: dim*dim, row-major
  std::vector<std::vector<CycInt>> rows;    // dense kind

  uint8_t exp_at(int64_t a, int64_t v) const { return exps[static_cast<size_t>(a * dim + v)]; }

  /// Row a as a vector of cyclotomic integers, whatever the encoding.
  std::vector<CycInt> row_vector(int64_t a) const;
};

Orthoframe standard_frame(int64_t n, Root root);
Orthoframe exponent_frame(Root root, int64_t n, std::vector<uint8_t> exps, std::string label);

/// Ordered collection of pairwise unbiased orthoframes of C^N (R^N when
/// `real`, where the bound drops to N/2 + 1).
struct MubSet {
  int64_t p = 2;
  int n = 1;
  int64_t dim = 2;
  bool real = false;
  Root root;
  std::vector<Orthoframe> frames;
  Provenance prov;

  int64_t bound() const { return real ? dim / 2 + 1 : dim + 1; }
  bool complete() const { return static_cast<int64_t>(frames.size()) == bound(); }
};

/// F_infinity plus one frame per matrix M with exponents a.v + v.Mv/2 (mod p).
MubSet frames_from_spreadset_odd(const SpreadSet& k);

/// Binary case: exponents of i are 2 a.v + v^T M v evaluated with the 0/1
/// entries lifted to Z_4.
MubSet frames_from_spreadset_binary(const SpreadSet& k);

MubSet frames_from_exponents(const ExponentFamily& fam);

enum class EigenContext { complex_odd, complex_binary, real_binary };

/// Joint-eigenvector frame of the abelian operator group lifted from a
/// totally isotropic (totally singular, in the real context) n-space:
/// character projection |A|^-1 sum chi(g)^-1 g applied to seed basis vectors,
/// first nonzero projection per character, exact arithmetic throughout.
Orthoframe eigenframe(const Subspace& a, EigenContext ctx);

enum class VerifyMode { all_pairs, difference_class };

/// Exact MUB verification: every frame is an orthoframe and every cross pair
/// of rows has squared inner-product magnitude N (scale-free form when rows
/// are not unit-entry). Difference-class mode checks one representative per
/// class d = a - a' after validating the a-linear exponent shape; all-pairs
/// works on anything. Thread count never changes the verdict or the report.
CheckReport verify_mub_set(const MubSet& m, VerifyMode mode, int threads = 1);

struct WeylOperator {
  enum class Type : uint8_t { X, Z };
  Type type = Type::X;
  std::vector<int32_t> b;
};

/// X(b) permutes coordinates v -> v+b; Z(b) multiplies coordinate v by
/// root^(b.v) (doubled in the fourth-root encoding).
Orthoframe apply_weyl(const WeylOperator& w, const Orthoframe& f);

/// Equality of the two N-element sets of 1-spaces.
bool frames_equal_as_sets(const Orthoframe& f1, const Orthoframe& f2);

/// Canonical byte encoding of the 1-space set; equal fingerprints are
/// equivalent to frames_equal_as_sets within a fixed dimension and root.
std::vector<int64_t> frame_fingerprint(const Orthoframe& f);

}  // namespace mub
