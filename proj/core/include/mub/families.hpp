#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mub/cyclo.hpp"
#include "mub/geometry.hpp"
#include "mub/gf.hpp"

namespace mub {

/// Frame family given by exponent rules E_b(a, v) = pairing(a, v) + theta_b(v)
/// with the pairing linear in a; this shape is what the difference-class
/// verifier relies on. Row and column indices are field elements mapped
/// through a fixed linear coordinatization (self-dual when one exists).
struct ExponentFamily {
  int64_t p = 3;
  int n = 1;
  int64_t N = 3;
  Root root;
  std::string family;
  std::map<std::string, std::string> params;

  std::vector<uint8_t> pairing;              // N*N: pairing[a*N+v], values mod p
  std::vector<std::vector<uint8_t>> thetas;  // one table of length N per label
  std::vector<std::string> labels;

  uint8_t pairing_at(int64_t a, int64_t v) const {
    return pairing[static_cast<size_t>(a * N + v)];
  }
};

/// Field multiplication maps x -> mx written in a self-dual basis. Exists for
/// p = 2 (any n) and p odd with n odd; for p odd with n even use
/// desarguesian_exponents instead.
SpreadSet desarguesian(int64_t p, int n);

/// The binary spread with members x = 0 and y = m^2 x + m T(x) + T(mx),
/// m in GF(2^n), for odd n > 3, written over Z_2 via a self-dual basis.
SymplecticSpread kantor_binary(int n);

/// E_b(a,x) = T(ax) + T(b x^(p^(n-s)+1) + b^(p^s) x^(p^s+1)) / 2 for an odd
/// prime p, odd n, 1 <= s < n/2 with gcd(s, n) = 1.
ExponentFamily bkl_exponents(int64_t p, int n, int s);

/// E_b(a,v) = T(av) + T(b f(v)) with the planar function f(x) = x^((3^k+1)/2)
/// on GF(3^n), n odd >= 5, gcd(k, 2n) = 1, k != +-1 (mod 2n).
ExponentFamily planar_exponents(int n, int64_t k);

/// E_m(a,x) = T(ax) + T(m x^2) / 2 (the s = 0 degeneration; works for any
/// odd p including n even, where no self-dual basis exists).
ExponentFamily desarguesian_exponents(int64_t p, int n);

/// Reads the symmetric matrix of each theta_b back off the exponent tables
/// (theta must be a quadratic form in the index digits; verified). Fails for
/// families that do not come from a spread, e.g. the planar one.
SpreadSet spreadset_from_exponent_family(const ExponentFamily& fam);

/// Index map used by the exponent families: idx[rank(x)] = table index of x.
std::vector<int64_t> family_index_map(const Field& f);

}  // namespace mub
