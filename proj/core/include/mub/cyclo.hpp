#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mub {

/// Root of unity the arithmetic is taken over: a primitive p-th root zeta(p)
/// for odd p, or i (the fourth root) for the binary constructions.
struct Root {
  enum class Type : uint8_t { zeta, fourth };

  Type type = Type::fourth;
  int64_t p = 0;  // prime, meaningful for zeta only

  static Root zeta(int64_t p);
  static Root fourth_root() { return Root{Type::fourth, 0}; }

  /// Multiplicative order of the root: p for zeta(p), 4 for i.
  int64_t order() const { return type == Type::fourth ? 4 : p; }

  bool operator==(const Root&) const = default;
  std::string to_string() const;
};

/// Exact element of Z[zeta_p] or Z[i], kept in canonical form: for zeta(p)
/// the coefficient of zeta^(p-1) is reduced to 0 via 1 + zeta + ... +
/// zeta^(p-1) = 0, so equality is coefficient equality.
class CycInt {
 public:
  CycInt() = default;
  explicit CycInt(Root r);
  static CycInt integer(Root r, int64_t k);
  static CycInt root_power(Root r, int64_t e);

  const Root& root() const { return root_; }
  std::span<const int64_t> coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool operator==(const CycInt& o) const { return root_ == o.root_ && coeffs_ == o.coeffs_; }
  bool operator!=(const CycInt& o) const { return !(*this == o); }

  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt operator+(const CycInt& o) const;
  CycInt operator-(const CycInt& o) const;
  CycInt operator-() const;
  CycInt operator*(const CycInt& o) const;
  CycInt conj() const;

  /// Multiply by root^e (an exponent shift; exact and cheap).
  CycInt times_root_power(int64_t e) const;
  void scale(int64_t k);

  /// gcd of the coefficients; 0 for the zero element.
  int64_t content() const;
  void divide_by(int64_t k);

  /// The value as a rational integer, if it is one.
  std::optional<int64_t> as_integer() const;

  std::string to_string() const;

 private:
  void canonicalize();

  Root root_;
  std::vector<int64_t> coeffs_;  // length p for zeta, length 2 (re, im) for i
};

CycInt hermitian_inner(std::span<const CycInt> v, std::span<const CycInt> w);

/// True iff z * conj(z) equals the given rational integer.
bool squared_magnitude_is(const CycInt& z, int64_t target);

}  // namespace mub
