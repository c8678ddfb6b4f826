#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mub/modp.hpp"

namespace mub {

class Field;

/// Element of GF(p^n), stored as its coefficient vector in the power basis
/// 1, t, ..., t^(n-1). Coefficients are reduced to [0, p).
class GFElement {
 public:
  GFElement() = default;
  GFElement(const Field* field, std::vector<int32_t> coeffs);

  const Field* field() const { return field_; }
  const std::vector<int32_t>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  bool is_one() const;

  /// Position of this element in the lexicographic ordering of coefficient
  /// vectors (constant term most significant).
  int64_t rank() const;

  GFElement operator+(const GFElement& o) const;
  GFElement operator-(const GFElement& o) const;
  GFElement operator-() const;
  GFElement operator*(const GFElement& o) const;
  GFElement inverse() const;
  GFElement pow(int64_t e) const;
  GFElement frobenius(int j) const;  // x -> x^(p^j)

  bool operator==(const GFElement& o) const;
  bool operator!=(const GFElement& o) const { return !(*this == o); }

 private:
  const Field* field_ = nullptr;
  std::vector<int32_t> coeffs_;
};

/// GF(p^n) presented as Z_p[t]/(modulus). The modulus is monic of degree n,
/// given constant term first, and is checked for irreducibility by trial
/// division at construction.
class Field {
 public:
  Field(int64_t p, int n);  // lexicographically smallest monic irreducible modulus
  Field(int64_t p, int n, std::vector<int32_t> modulus);

  int64_t p() const { return p_; }
  int n() const { return n_; }
  int64_t size() const { return size_; }  // p^n
  const std::vector<int32_t>& modulus() const { return modulus_; }

  GFElement zero() const;
  GFElement one() const;
  GFElement element(std::vector<int32_t> coeffs) const;
  GFElement from_rank(int64_t r) const;
  GFElement from_int(int64_t k) const;  // k mod p, embedded in the prime field
  GFElement generator_t() const;        // the class of t

  bool same_as(const Field& o) const;

  /// `FIELD p=<p> n=<n> modulus=<c0,...,cn>`
  std::string serialize() const;
  static Field parse(const std::string& line);

 private:
  int64_t p_ = 2;
  int n_ = 1;
  int64_t size_ = 2;
  std::vector<int32_t> modulus_;  // length n+1, constant first, leading 1
};

/// T(x) = sum of x^(p^j), j = 0..n-1; Z_p-linear and onto Z_p.
int32_t trace(const GFElement& x);

/// A Z_p-basis of the field together with its trace-form Gram matrix
/// gram[i][j] = T(b_i * b_j).
struct Basis {
  const Field* field = nullptr;
  std::vector<GFElement> vectors;
  MatZp gram;
};

Basis power_basis(const Field& f);

/// Trace-dual of the given basis: T(b_i * d_j) = delta_ij.
Basis dual_basis(const Field& f, const Basis& b);

/// Basis with gram = identity. Exists for p = 2 (any n) and p odd with n odd;
/// throws NoSelfDualBasis when the congruence reduction certifies impossibility.
Basis self_dual_basis(const Field& f);

struct PlanarResult {
  bool planar = false;
  // witness on failure: f(x+a) - f(x) = b has `count` solutions, count != 1
  int64_t a_rank = 0;
  int64_t b_rank = 0;
  int64_t count = 0;
};

/// Planarity test for a value table f: GF(p^n) -> GF(p^n), indexed by rank.
/// True iff x -> f(x+a) - f(x) is a bijection for every a != 0.
PlanarResult is_planar(const Field& f, std::span<const int64_t> table);

}  // namespace mub
