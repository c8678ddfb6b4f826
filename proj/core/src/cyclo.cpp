#include "mub/cyclo.hpp"

#include <numeric>
#include <sstream>

#include "mub/errors.hpp"
#include "mub/modp.hpp"

namespace mub {

Root Root::zeta(int64_t p) {
  if (!is_prime(p) || p == 2) fail(Errc::BadParameters, "zeta(p) requires an odd prime");
  return Root{Type::zeta, p};
}

std::string Root::to_string() const {
  return type == Type::fourth ? "i" : "zeta(" + std::to_string(p) + ")";
}

CycInt::CycInt(Root r) : root_(r) {
  coeffs_.assign(static_cast<size_t>(r.type == Root::Type::fourth ? 2 : r.p), 0);
}

CycInt CycInt::integer(Root r, int64_t k) {
  CycInt z(r);
  z.coeffs_[0] = k;
  return z;
}

CycInt CycInt::root_power(Root r, int64_t e) {
  CycInt z(r);
  const int64_t ord = r.order();
  e %= ord;
  if (e < 0) e += ord;
  if (r.type == Root::Type::fourth) {
    switch (e) {
      case 0: z.coeffs_[0] = 1; break;
      case 1: z.coeffs_[1] = 1; break;
      case 2: z.coeffs_[0] = -1; break;
      case 3: z.coeffs_[1] = -1; break;
    }
  } else {
    z.coeffs_[static_cast<size_t>(e)] = 1;
    z.canonicalize();
  }
  return z;
}

void CycInt::canonicalize() {
  if (root_.type == Root::Type::fourth) return;
  const int64_t last = coeffs_.back();
  if (last == 0) return;
  for (auto& c : coeffs_) c -= last;
}

bool CycInt::is_zero() const {
  for (int64_t c : coeffs_)
    if (c != 0) return false;
  return true;
}

static void check_roots(const CycInt& a, const CycInt& b) {
  if (!(a.root() == b.root())) fail(Errc::RootMismatch, "operands have different roots of unity");
}

CycInt& CycInt::operator+=(const CycInt& o) {
  check_roots(*this, o);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  check_roots(*this, o);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycInt CycInt::operator+(const CycInt& o) const {
  CycInt r = *this;
  r += o;
  return r;
}

CycInt CycInt::operator-(const CycInt& o) const {
  CycInt r = *this;
  r -= o;
  return r;
}

CycInt CycInt::operator-() const {
  CycInt r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
  check_roots(*this, o);
  CycInt r(root_);
  if (root_.type == Root::Type::fourth) {
    r.coeffs_[0] = coeffs_[0] * o.coeffs_[0] - coeffs_[1] * o.coeffs_[1];
    r.coeffs_[1] = coeffs_[0] * o.coeffs_[1] + coeffs_[1] * o.coeffs_[0];
    return r;
  }
  const size_t p = coeffs_.size();
  for (size_t i = 0; i < p; ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < p; ++j) {
      if (o.coeffs_[j] == 0) continue;
      size_t k = i + j;
      if (k >= p) k -= p;
      r.coeffs_[k] += coeffs_[i] * o.coeffs_[j];
    }
  }
  r.canonicalize();
  return r;
}

CycInt CycInt::conj() const {
  CycInt r(root_);
  if (root_.type == Root::Type::fourth) {
    r.coeffs_[0] = coeffs_[0];
    r.coeffs_[1] = -coeffs_[1];
    return r;
  }
  const size_t p = coeffs_.size();
  for (size_t j = 0; j < p; ++j) r.coeffs_[(p - j) % p] = coeffs_[j];
  r.canonicalize();
  return r;
}

CycInt CycInt::times_root_power(int64_t e) const {
  return *this * root_power(root_, e);
}

void CycInt::scale(int64_t k) {
  for (auto& c : coeffs_) c *= k;
}

int64_t CycInt::content() const {
  int64_t g = 0;
  for (int64_t c : coeffs_) g = std::gcd(g, c < 0 ? -c : c);
  return g;
}

void CycInt::divide_by(int64_t k) {
  for (auto& c : coeffs_) {
    if (c % k != 0) fail(Errc::BadParameters, "coefficient not divisible");
    c /= k;
  }
}

std::optional<int64_t> CycInt::as_integer() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return std::nullopt;
  return coeffs_[0];
}

std::string CycInt::to_string() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ',';
    os << coeffs_[i];
  }
  os << ']' << (root_.type == Root::Type::fourth ? "_i" : "_z" + std::to_string(root_.p));
  return os.str();
}

CycInt hermitian_inner(std::span<const CycInt> v, std::span<const CycInt> w) {
  if (v.size() != w.size()) fail(Errc::LengthMismatch, "inner product of unequal lengths");
  if (v.empty()) fail(Errc::LengthMismatch, "inner product of empty vectors");
  CycInt acc(v[0].root());
  for (size_t i = 0; i < v.size(); ++i) acc += v[i] * w[i].conj();
  return acc;
}

bool squared_magnitude_is(const CycInt& z, int64_t target) {
  return z * z.conj() == CycInt::integer(z.root(), target);
}

}  // namespace mub
