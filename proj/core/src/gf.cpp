#include "mub/gf.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "mub/errors.hpp"

namespace mub {

namespace {

// Polynomials over Z_p as coefficient vectors, constant term first.
using Poly = std::vector<int32_t>;

void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = static_cast<int32_t>((c[i + j] + static_cast<int64_t>(a[i]) * b[j]) % p);
  }
  return c;
}

// Remainder of a modulo the monic polynomial m.
Poly poly_rem(Poly a, const Poly& m, int64_t p) {
  poly_trim(a);
  const size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const int64_t lead = a.back();
    if (lead != 0) {
      const size_t shift = a.size() - 1 - dm;
      for (size_t i = 0; i <= dm; ++i) {
        int64_t v = a[shift + i] - lead * m[i] % p;
        v %= p;
        if (v < 0) v += p;
        a[shift + i] = static_cast<int32_t>(v);
      }
    }
    a.pop_back();
    poly_trim(a);
  }
  return a;
}

// Divisibility by non-monic divisors is reduced to the monic case.
bool poly_divisible(const Poly& a, Poly d, int64_t p) {
  poly_trim(d);
  if (d.empty()) return false;
  const int64_t inv = mod_inv(d.back(), p);
  for (auto& c : d) c = static_cast<int32_t>(c * inv % p);
  Poly r = poly_rem(a, d, p);
  return r.empty();
}

bool poly_irreducible(const Poly& m, int64_t p) {
  const int deg = static_cast<int>(m.size()) - 1;
  if (deg <= 0) return false;
  if (deg == 1) return true;
  // trial division by every monic polynomial of degree 1..deg/2
  for (int d = 1; 2 * d <= deg; ++d) {
    int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int64_t r = 0; r < count; ++r) {
      Poly div(static_cast<size_t>(d) + 1, 0);
      int64_t t = r;
      for (int i = 0; i < d; ++i) {
        div[static_cast<size_t>(i)] = static_cast<int32_t>(t % p);
        t /= p;
      }
      div[static_cast<size_t>(d)] = 1;
      if (poly_divisible(m, div, p)) return false;
    }
  }
  return true;
}

Poly default_modulus(int64_t p, int n) {
  if (n == 1) return {0, 1};  // t itself: GF(p) = Z_p[t]/(t)
  int64_t count = 1;
  for (int i = 0; i < n; ++i) count *= p;
  // lexicographic order on (c_0, ..., c_{n-1}), constant term most significant
  for (int64_t r = 0; r < count; ++r) {
    std::vector<int32_t> low = from_lex_rank(r, n, p);
    Poly m(static_cast<size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)] = low[static_cast<size_t>(i)];
    m[static_cast<size_t>(n)] = 1;
    if (poly_irreducible(m, p)) return m;
  }
  fail(Errc::ReduciblePolynomial, "no irreducible polynomial found (unreachable)");
}

int64_t sqrt_mod(int64_t a, int64_t p) {
  a %= p;
  if (a < 0) a += p;
  for (int64_t r = 0; r < p; ++r)
    if (r * r % p == a) return r;
  return -1;
}

GFElement scale(const GFElement& x, int64_t c) {
  std::vector<int32_t> v = x.coeffs();
  const int64_t p = x.field()->p();
  c %= p;
  if (c < 0) c += p;
  for (auto& e : v) e = static_cast<int32_t>(e * c % p);
  return {x.field(), std::move(v)};
}

}  // namespace

GFElement::GFElement(const Field* field, std::vector<int32_t> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != field_->n())
    fail(Errc::DegreeMismatch, "coefficient vector has wrong length");
  for (auto& c : coeffs_) {
    c = static_cast<int32_t>(c % field_->p());
    if (c < 0) c += static_cast<int32_t>(field_->p());
  }
}

bool GFElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](int32_t c) { return c == 0; });
}

bool GFElement::is_one() const {
  if (coeffs_.empty() || coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](int32_t c) { return c == 0; });
}

int64_t GFElement::rank() const { return lex_rank(coeffs_, field_->p()); }

static void check_same_field(const GFElement& a, const GFElement& b) {
  if (a.field() == nullptr || b.field() == nullptr || !a.field()->same_as(*b.field()))
    fail(Errc::FieldMismatch, "operands live in different fields");
}

GFElement GFElement::operator+(const GFElement& o) const {
  check_same_field(*this, o);
  std::vector<int32_t> v(coeffs_.size());
  const auto p = static_cast<int32_t>(field_->p());
  for (size_t i = 0; i < v.size(); ++i) {
    v[i] = coeffs_[i] + o.coeffs_[i];
    if (v[i] >= p) v[i] -= p;
  }
  return {field_, std::move(v)};
}

GFElement GFElement::operator-(const GFElement& o) const {
  check_same_field(*this, o);
  std::vector<int32_t> v(coeffs_.size());
  const auto p = static_cast<int32_t>(field_->p());
  for (size_t i = 0; i < v.size(); ++i) {
    v[i] = coeffs_[i] - o.coeffs_[i];
    if (v[i] < 0) v[i] += p;
  }
  return {field_, std::move(v)};
}

GFElement GFElement::operator-() const {
  std::vector<int32_t> v(coeffs_.size());
  const auto p = static_cast<int32_t>(field_->p());
  for (size_t i = 0; i < v.size(); ++i) v[i] = coeffs_[i] == 0 ? 0 : p - coeffs_[i];
  return {field_, std::move(v)};
}

GFElement GFElement::operator*(const GFElement& o) const {
  check_same_field(*this, o);
  Poly prod = poly_mul(coeffs_, o.coeffs_, field_->p());
  Poly rem = poly_rem(std::move(prod), field_->modulus(), field_->p());
  rem.resize(static_cast<size_t>(field_->n()), 0);
  return {field_, std::move(rem)};
}

GFElement GFElement::inverse() const {
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of 0");
  return pow(field_->size() - 2);
}

GFElement GFElement::pow(int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  GFElement r = field_->one();
  GFElement b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

GFElement GFElement::frobenius(int j) const {
  const int n = field_->n();
  j %= n;
  if (j < 0) j += n;
  GFElement r = *this;
  for (int i = 0; i < j; ++i) r = r.pow(field_->p());
  return r;
}

bool GFElement::operator==(const GFElement& o) const {
  return field_ != nullptr && o.field_ != nullptr && field_->same_as(*o.field_) &&
         coeffs_ == o.coeffs_;
}

Field::Field(int64_t p, int n) : Field(p, n, default_modulus(p, n)) {}

Field::Field(int64_t p, int n, std::vector<int32_t> modulus) : p_(p), n_(n), modulus_(std::move(modulus)) {
  if (!is_prime(p_)) fail(Errc::NonPrime, std::to_string(p_) + " is not prime");
  if (n_ < 1) fail(Errc::DegreeMismatch, "extension degree must be >= 1");
  if (static_cast<int>(modulus_.size()) != n_ + 1)
    fail(Errc::DegreeMismatch, "modulus must have degree n");
  for (auto& c : modulus_) {
    c = static_cast<int32_t>(c % p_);
    if (c < 0) c += static_cast<int32_t>(p_);
  }
  if (modulus_.back() != 1) fail(Errc::DegreeMismatch, "modulus must be monic");
  if (n_ > 1 && !poly_irreducible(modulus_, p_))
    fail(Errc::ReduciblePolynomial, "modulus is reducible over Z_p");
  size_ = 1;
  for (int i = 0; i < n_; ++i) size_ *= p_;
}

GFElement Field::zero() const { return {this, std::vector<int32_t>(static_cast<size_t>(n_), 0)}; }

GFElement Field::one() const { return from_int(1); }

GFElement Field::element(std::vector<int32_t> coeffs) const { return {this, std::move(coeffs)}; }

GFElement Field::from_rank(int64_t r) const { return {this, from_lex_rank(r, n_, p_)}; }

GFElement Field::from_int(int64_t k) const {
  std::vector<int32_t> v(static_cast<size_t>(n_), 0);
  k %= p_;
  if (k < 0) k += p_;
  v[0] = static_cast<int32_t>(k);
  return {this, std::move(v)};
}

GFElement Field::generator_t() const {
  if (n_ == 1) fail(Errc::DegreeMismatch, "prime field has no generator t");
  std::vector<int32_t> v(static_cast<size_t>(n_), 0);
  v[1] = 1;
  return {this, std::move(v)};
}

bool Field::same_as(const Field& o) const {
  return p_ == o.p_ && n_ == o.n_ && modulus_ == o.modulus_;
}

std::string Field::serialize() const {
  std::ostringstream os;
  os << "FIELD p=" << p_ << " n=" << n_ << " modulus=";
  for (size_t i = 0; i < modulus_.size(); ++i) {
    if (i) os << ',';
    os << modulus_[i];
  }
  return os.str();
}

Field Field::parse(const std::string& line) {
  std::istringstream is(line);
  std::string tag, ptok, ntok, mtok;
  is >> tag >> ptok >> ntok >> mtok;
  if (tag != "FIELD" || ptok.rfind("p=", 0) != 0 || ntok.rfind("n=", 0) != 0 ||
      mtok.rfind("modulus=", 0) != 0)
    fail(Errc::ParseError, "malformed FIELD line: " + line);
  const int64_t p = std::stoll(ptok.substr(2));
  const int n = std::stoi(ntok.substr(2));
  std::vector<int32_t> modulus;
  std::istringstream ms(mtok.substr(8));
  std::string piece;
  while (std::getline(ms, piece, ',')) modulus.push_back(static_cast<int32_t>(std::stol(piece)));
  return {p, n, std::move(modulus)};
}

int32_t trace(const GFElement& x) {
  const Field& f = *x.field();
  GFElement acc = x;
  GFElement xp = x;
  for (int j = 1; j < f.n(); ++j) {
    xp = xp.pow(f.p());
    acc = acc + xp;
  }
  // the trace lands in the prime field
  for (size_t i = 1; i < acc.coeffs().size(); ++i) assert(acc.coeffs()[i] == 0);
  return acc.coeffs()[0];
}

Basis power_basis(const Field& f) {
  Basis b;
  b.field = &f;
  for (int i = 0; i < f.n(); ++i) {
    std::vector<int32_t> v(static_cast<size_t>(f.n()), 0);
    v[static_cast<size_t>(i)] = 1;
    b.vectors.push_back(f.element(std::move(v)));
  }
  b.gram = MatZp::zero(f.p(), f.n(), f.n());
  for (int i = 0; i < f.n(); ++i)
    for (int j = 0; j < f.n(); ++j) b.gram.at(i, j) = trace(b.vectors[i] * b.vectors[j]);
  return b;
}

Basis dual_basis(const Field& f, const Basis& basis) {
  // Row i of the inverse Gram gives the coordinates of the dual vector d_i
  // in terms of the original basis: T(b_j * sum_k inv[i][k] b_k) = delta_ij.
  MatZp inv = mat_inverse(basis.gram);
  Basis d;
  d.field = &f;
  for (int i = 0; i < f.n(); ++i) {
    GFElement v = f.zero();
    for (int k = 0; k < f.n(); ++k) v = v + scale(basis.vectors[static_cast<size_t>(k)], inv.at(i, k));
    d.vectors.push_back(v);
  }
  d.gram = MatZp::zero(f.p(), f.n(), f.n());
  for (int i = 0; i < f.n(); ++i)
    for (int j = 0; j < f.n(); ++j) d.gram.at(i, j) = trace(d.vectors[i] * d.vectors[j]);
  return d;
}

Basis self_dual_basis(const Field& f) {
  const int64_t p = f.p();
  const int n = f.n();
  auto form = [](const GFElement& x, const GFElement& y) { return trace(x * y); };

  std::vector<GFElement> remaining;
  for (int i = 0; i < n; ++i) {
    std::vector<int32_t> v(static_cast<size_t>(n), 0);
    v[static_cast<size_t>(i)] = 1;
    remaining.push_back(f.element(std::move(v)));
  }
  std::vector<GFElement> finished;
  std::vector<int64_t> diag;  // form(z, z) per finished vector, before normalization

  while (!remaining.empty()) {
    int idx = -1;
    for (size_t i = 0; i < remaining.size(); ++i) {
      if (form(remaining[i], remaining[i]) != 0) { idx = static_cast<int>(i); break; }
    }
    if (idx < 0 && p > 2) {
      // zero diagonal: mix two rows with nonzero pairing; 2*form(ri,rj) != 0 for odd p
      bool fixed = false;
      for (size_t i = 0; i < remaining.size() && !fixed; ++i) {
        for (size_t j = i + 1; j < remaining.size() && !fixed; ++j) {
          if (form(remaining[i], remaining[j]) != 0) {
            remaining[i] = remaining[i] + remaining[j];
            idx = static_cast<int>(i);
            fixed = true;
          }
        }
      }
      if (!fixed) fail(Errc::NoSelfDualBasis, "trace form degenerate (unreachable)");
    }
    if (idx < 0 && p == 2) {
      // The remaining block is alternating. Pull back one finished pivot b and
      // a hyperbolic pair (u, v); {b+u, b+u+v, b+v} is orthonormal and spans
      // the same 3-space.
      if (finished.empty()) fail(Errc::NoSelfDualBasis, "alternating block with no pivot (unreachable)");
      GFElement u = remaining[0];
      int vj = -1;
      for (size_t j = 1; j < remaining.size(); ++j)
        if (form(u, remaining[j]) != 0) { vj = static_cast<int>(j); break; }
      if (vj < 0) fail(Errc::NoSelfDualBasis, "degenerate alternating block (unreachable)");
      GFElement v = remaining[static_cast<size_t>(vj)];
      GFElement b = finished.back();
      finished.pop_back();
      diag.pop_back();
      GFElement c1 = b + u, c2 = b + u + v, c3 = b + v;
      remaining.erase(remaining.begin() + vj);
      remaining.erase(remaining.begin());
      for (auto& w : remaining)
        w = w + scale(c1, form(w, c1)) + scale(c2, form(w, c2)) + scale(c3, form(w, c3));
      for (const auto& c : {c1, c2, c3}) {
        finished.push_back(c);
        diag.push_back(1);
      }
      continue;
    }
    GFElement z = remaining[static_cast<size_t>(idx)];
    remaining.erase(remaining.begin() + idx);
    const int64_t d = form(z, z);
    const int64_t dinv = mod_inv(d, p);
    for (auto& w : remaining) {
      const int64_t c = form(w, z) * dinv % p;
      w = w - scale(z, c);
    }
    finished.push_back(z);
    diag.push_back(d);
  }

  if (p > 2) {
    // Normalize square diagonal entries; pair up the non-square ones.
    std::vector<size_t> nonsquare;
    for (size_t i = 0; i < finished.size(); ++i) {
      const int64_t r = sqrt_mod(diag[i], p);
      if (r >= 0) {
        finished[i] = scale(finished[i], mod_inv(r, p));
        diag[i] = 1;
      } else {
        nonsquare.push_back(i);
      }
    }
    if (nonsquare.size() % 2 != 0)
      fail(Errc::NoSelfDualBasis,
           "congruence reduction leaves an unpaired non-square diagonal entry (p odd, n even)");
    for (size_t k = 0; k + 1 < nonsquare.size(); k += 2) {
      const size_t i = nonsquare[k], j = nonsquare[k + 1];
      const int64_t di = diag[i], dj = diag[j];
      int64_t x = -1, y = -1;
      for (int64_t xx = 0; xx < p && x < 0; ++xx)
        for (int64_t yy = 0; yy < p; ++yy)
          if ((di * xx % p * xx + dj * yy % p * yy) % p == 1) { x = xx; y = yy; break; }
      if (x < 0) fail(Errc::NoSelfDualBasis, "binary form fails to represent 1 (unreachable)");
      GFElement z1 = scale(finished[i], x) + scale(finished[j], y);
      // orthogonal complement direction inside the 2-space; its norm is di*dj
      GFElement z2 = scale(finished[i], (p - dj % p) * y % p) + scale(finished[j], di * x % p);
      const int64_t s = sqrt_mod(di * dj % p, p);
      if (s < 0) fail(Errc::NoSelfDualBasis, "product of non-squares is not square (unreachable)");
      z2 = scale(z2, mod_inv(s, p));
      finished[i] = z1;
      finished[j] = z2;
      diag[i] = diag[j] = 1;
    }
  }

  Basis b;
  b.field = &f;
  b.vectors = std::move(finished);
  b.gram = MatZp::zero(p, n, n);
  MatZp coords = MatZp::zero(p, n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      b.gram.at(i, j) = trace(b.vectors[static_cast<size_t>(i)] * b.vectors[static_cast<size_t>(j)]);
      coords.at(i, j) = b.vectors[static_cast<size_t>(i)].coeffs()[static_cast<size_t>(j)];
    }
  }
  if (b.gram != MatZp::identity(p, n) || rank_of(coords) != n)
    fail(Errc::NoSelfDualBasis, "reduction did not reach the identity Gram matrix");
  return b;
}

PlanarResult is_planar(const Field& f, std::span<const int64_t> table) {
  const int64_t N = f.size();
  if (static_cast<int64_t>(table.size()) != N)
    fail(Errc::MalformedTable, "value table must have p^n entries");
  for (int64_t v : table)
    if (v < 0 || v >= N) fail(Errc::MalformedTable, "value table entry out of range");

  std::vector<int64_t> counts(static_cast<size_t>(N));
  for (int64_t ar = 1; ar < N; ++ar) {
    const GFElement a = f.from_rank(ar);
    std::fill(counts.begin(), counts.end(), 0);
    for (int64_t xr = 0; xr < N; ++xr) {
      const GFElement x = f.from_rank(xr);
      const int64_t shifted = (x + a).rank();
      const GFElement d = f.from_rank(table[static_cast<size_t>(shifted)]) -
                          f.from_rank(table[static_cast<size_t>(xr)]);
      ++counts[static_cast<size_t>(d.rank())];
    }
    for (int64_t br = 0; br < N; ++br) {
      if (counts[static_cast<size_t>(br)] != 1)
        return {false, ar, br, counts[static_cast<size_t>(br)]};
    }
  }
  return {true, 0, 0, 1};
}

}  // namespace mub
