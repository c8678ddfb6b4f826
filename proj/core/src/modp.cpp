#include "mub/modp.hpp"

#include "mub/errors.hpp"

namespace mub {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NonPrime: return "NonPrime";
    case Errc::ReduciblePolynomial: return "ReduciblePolynomial";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NoSelfDualBasis: return "NoSelfDualBasis";
    case Errc::MalformedTable: return "MalformedTable";
    case Errc::RootMismatch: return "RootMismatch";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotIsotropic: return "NotIsotropic";
    case Errc::NotSingular: return "NotSingular";
    case Errc::InvalidSpreadSet: return "InvalidSpreadSet";
    case Errc::MembersNotInSpread: return "MembersNotInSpread";
    case Errc::NotCommutative: return "NotCommutative";
    case Errc::ZeroDivisor: return "ZeroDivisor";
    case Errc::BadDegree: return "BadDegree";
    case Errc::BadParameters: return "BadParameters";
    case Errc::NotPlanar: return "NotPlanar";
    case Errc::WrongCharacteristic: return "WrongCharacteristic";
    case Errc::WrongProvenance: return "WrongProvenance";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
  }
  return "Error";
}

int64_t mod_pow(int64_t base, int64_t exp, int64_t m) {
  base %= m;
  if (base < 0) base += m;
  int64_t r = 1 % m;
  while (exp > 0) {
    if (exp & 1) r = r * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return r;
}

int64_t mod_inv(int64_t a, int64_t p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) fail(Errc::DivisionByZero, "inverse of 0 mod " + std::to_string(p));
  // extended Euclid
  int64_t r0 = p, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    int64_t q = r0 / r1;
    int64_t r2 = r0 - q * r1;
    int64_t t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  if (r0 != 1) fail(Errc::DivisionByZero, std::to_string(a) + " not invertible mod " + std::to_string(p));
  t0 %= p;
  if (t0 < 0) t0 += p;
  return t0;
}

bool is_prime(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int64_t lex_rank(std::span<const int32_t> v, int64_t p) {
  int64_t r = 0;
  for (int32_t c : v) r = r * p + c;
  return r;
}

std::vector<int32_t> from_lex_rank(int64_t r, int len, int64_t p) {
  std::vector<int32_t> v(static_cast<size_t>(len));
  for (int i = len - 1; i >= 0; --i) {
    v[static_cast<size_t>(i)] = static_cast<int32_t>(r % p);
    r /= p;
  }
  return v;
}

int32_t dot_mod(std::span<const int32_t> a, std::span<const int32_t> b, int64_t p) {
  if (a.size() != b.size()) fail(Errc::DimensionMismatch, "dot product of unequal lengths");
  int64_t s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += static_cast<int64_t>(a[i]) * b[i];
  return static_cast<int32_t>(s % p);
}

MatZp MatZp::zero(int64_t p, int rows, int cols) {
  MatZp m;
  m.p = p;
  m.rows = rows;
  m.cols = cols;
  m.a.assign(static_cast<size_t>(rows) * cols, 0);
  return m;
}

MatZp MatZp::identity(int64_t p, int n) {
  MatZp m = zero(p, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

int rref_in_place(MatZp& m) {
  const int64_t p = m.p;
  int pivot_row = 0;
  for (int col = 0; col < m.cols && pivot_row < m.rows; ++col) {
    int sel = -1;
    for (int r = pivot_row; r < m.rows; ++r) {
      if (m.at(r, col) != 0) { sel = r; break; }
    }
    if (sel < 0) continue;
    if (sel != pivot_row) {
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(pivot_row, c));
    }
    const int64_t inv = mod_inv(m.at(pivot_row, col), p);
    for (int c = col; c < m.cols; ++c)
      m.at(pivot_row, c) = static_cast<int32_t>(m.at(pivot_row, c) * inv % p);
    for (int r = 0; r < m.rows; ++r) {
      if (r == pivot_row) continue;
      const int64_t f = m.at(r, col);
      if (f == 0) continue;
      for (int c = col; c < m.cols; ++c) {
        int64_t v = m.at(r, c) - f * m.at(pivot_row, c) % p;
        v %= p;
        if (v < 0) v += p;
        m.at(r, c) = static_cast<int32_t>(v);
      }
    }
    ++pivot_row;
  }
  return pivot_row;
}

int rank_of(MatZp m) { return rref_in_place(m); }

int32_t det_mod(MatZp m) {
  if (m.rows != m.cols) fail(Errc::DimensionMismatch, "determinant of non-square matrix");
  const int64_t p = m.p;
  int64_t det = 1;
  for (int col = 0; col < m.cols; ++col) {
    int sel = -1;
    for (int r = col; r < m.rows; ++r)
      if (m.at(r, col) != 0) { sel = r; break; }
    if (sel < 0) return 0;
    if (sel != col) {
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(col, c));
      det = p - det;
    }
    det = det * m.at(col, col) % p;
    const int64_t inv = mod_inv(m.at(col, col), p);
    for (int r = col + 1; r < m.rows; ++r) {
      const int64_t f = m.at(r, col) * inv % p;
      if (f == 0) continue;
      for (int c = col; c < m.cols; ++c) {
        int64_t v = m.at(r, c) - f * m.at(col, c) % p;
        v %= p;
        if (v < 0) v += p;
        m.at(r, c) = static_cast<int32_t>(v);
      }
    }
  }
  return static_cast<int32_t>(det % p);
}

bool is_nonsingular(const MatZp& m) { return det_mod(m) != 0; }

MatZp mat_mul(const MatZp& a, const MatZp& b) {
  if (a.cols != b.rows || a.p != b.p) fail(Errc::DimensionMismatch, "matrix product shape mismatch");
  MatZp c = MatZp::zero(a.p, a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int k = 0; k < a.cols; ++k) {
      const int64_t f = a.at(i, k);
      if (f == 0) continue;
      for (int j = 0; j < b.cols; ++j) {
        c.at(i, j) = static_cast<int32_t>((c.at(i, j) + f * b.at(k, j)) % a.p);
      }
    }
  }
  return c;
}

MatZp mat_inverse(const MatZp& m) {
  if (m.rows != m.cols) fail(Errc::DimensionMismatch, "inverse of non-square matrix");
  MatZp aug = MatZp::zero(m.p, m.rows, 2 * m.cols);
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols + r) = 1;
  }
  if (rref_in_place(aug) != m.rows) fail(Errc::DimensionMismatch, "matrix not invertible");
  MatZp inv = MatZp::zero(m.p, m.rows, m.cols);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) inv.at(r, c) = aug.at(r, m.cols + c);
  return inv;
}

MatZp transpose(const MatZp& m) {
  MatZp t = MatZp::zero(m.p, m.cols, m.rows);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
  return t;
}

MatZp stack_rows(const MatZp& top, const MatZp& bottom) {
  if (top.cols != bottom.cols || top.p != bottom.p)
    fail(Errc::DimensionMismatch, "stacking matrices of unequal width");
  MatZp s = MatZp::zero(top.p, top.rows + bottom.rows, top.cols);
  std::copy(top.a.begin(), top.a.end(), s.a.begin());
  std::copy(bottom.a.begin(), bottom.a.end(), s.a.begin() + top.a.size());
  return s;
}

}  // namespace mub
