#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mub/modp.hpp"

namespace mub {

/// Verdict of an exact verifier. A failing report always carries at least one
/// witness in `details`.
struct CheckReport {
  std::string name;
  bool pass = false;
  std::vector<std::string> details;

  void add(const std::string& finding) { details.push_back(finding); }
};

/// Z_p^(2n) with the alternating form ((a,b),(c,d)) = a.d - b.c, the
/// commutator form of the Weyl operator group.
struct SymplecticSpace {
  int64_t p = 2;
  int n = 1;

  int dim() const { return 2 * n; }
};

int32_t symplectic_form(const SymplecticSpace& s, std::span<const int32_t> u,
                        std::span<const int32_t> v);

/// Binary quadratic form Qbar(a,b) = a.b on Z_2^(2n); polarizes to the
/// alternating form.
struct QuadraticSpace {
  int n = 1;  // ambient dimension 2n, p = 2

  int dim() const { return 2 * n; }
};

int32_t quadratic_form_binary(std::span<const int32_t> v);

/// k-dimensional subspace of Z_p^ambient, carried by its reduced row echelon
/// basis so subspace equality is row equality.
struct Subspace {
  int64_t p = 2;
  int ambient = 0;
  MatZp rows;  // k x ambient, RREF

  int dim() const { return rows.rows; }
  bool operator==(const Subspace& o) const { return p == o.p && ambient == o.ambient && rows == o.rows; }
};

Subspace make_subspace(int64_t p, int ambient, MatZp basis_rows);
int intersection_dim(const Subspace& a, const Subspace& b);
bool contains_vector(const Subspace& s, std::span<const int32_t> v);

struct SymplecticSpread {
  SymplecticSpace space;
  std::vector<Subspace> members;
};

struct OrthogonalSpread {
  QuadraticSpace space;
  std::vector<Subspace> members;
};

/// The set K of p^n symmetric n x n matrices over Z_p whose pairwise
/// differences are nonsingular; 0+V is the implicit extra spread member.
struct SpreadSet {
  int64_t p = 2;
  int n = 1;
  std::vector<MatZp> matrices;

  int64_t expected_count() const;
};

CheckReport verify_symplectic_spread(const SymplecticSpread& spread);
CheckReport verify_orthogonal_spread(const OrthogonalSpread& spread);
CheckReport verify_spread_set(const SpreadSet& k);

SymplecticSpread spread_from_spreadset(const SpreadSet& k);

/// Normal form of a spread at a distinguished pair of members: a symplectic
/// change of basis sends (first, second) to (V+0, 0+V) and every other member
/// becomes the graph of a symmetric matrix.
SpreadSet spreadset_from_spread(const SymplecticSpread& spread, const Subspace& first,
                                const Subspace& second);

/// Spread set of a commutative semifield multiplication on Z_p^n, given as a
/// table mult[rank(x)][rank(y)] = rank(x*y): M(b)_ij = b.(e_i*e_j).
SpreadSet semifield_to_spreadset(int64_t p, int n,
                                 const std::vector<std::vector<int64_t>>& mult);

/// Depth-first search for orthogonal spreads of Z_2^(2n), n even, 2n <= 8.
/// Deterministic: members and spreads are produced in lexicographic order of
/// their echelon bases.
std::vector<OrthogonalSpread> search_orthogonal_spreads(int n, int limit);

/// All totally singular n-spaces of Z_2^(2n) in lexicographic order.
std::vector<Subspace> totally_singular_spaces(int n);

}  // namespace mub
