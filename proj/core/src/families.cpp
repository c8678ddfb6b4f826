#include "mub/families.hpp"

#include <numeric>

#include "mub/errors.hpp"

namespace mub {

namespace {

int64_t ipow(int64_t b, int e) {
  int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::string rank_label(const char* prefix, int64_t r) {
  return std::string(prefix) + "=" + std::to_string(r);
}

// Pairing table pairing[idx(a)][idx(v)] = T(a v).
std::vector<uint8_t> trace_pairing(const Field& f, const std::vector<int64_t>& idx) {
  const int64_t N = f.size();
  std::vector<uint8_t> pairing(static_cast<size_t>(N * N));
  std::vector<GFElement> elems;
  elems.reserve(static_cast<size_t>(N));
  for (int64_t r = 0; r < N; ++r) elems.push_back(f.from_rank(r));
  for (int64_t ar = 0; ar < N; ++ar)
    for (int64_t vr = 0; vr < N; ++vr)
      pairing[static_cast<size_t>(idx[static_cast<size_t>(ar)] * N + idx[static_cast<size_t>(vr)])] =
          static_cast<uint8_t>(trace(elems[static_cast<size_t>(ar)] * elems[static_cast<size_t>(vr)]));
  return pairing;
}

}  // namespace

std::vector<int64_t> family_index_map(const Field& f) {
  const int64_t N = f.size();
  std::vector<int64_t> idx(static_cast<size_t>(N));
  if (f.p() == 2 || f.n() % 2 == 1) {
    // coordinates in a self-dual basis: idx(x) = lex rank of (T(x b_1), ...)
    const Basis b = self_dual_basis(f);
    std::vector<int32_t> coords(static_cast<size_t>(f.n()));
    for (int64_t r = 0; r < N; ++r) {
      const GFElement x = f.from_rank(r);
      for (int i = 0; i < f.n(); ++i)
        coords[static_cast<size_t>(i)] = trace(x * b.vectors[static_cast<size_t>(i)]);
      idx[static_cast<size_t>(r)] = lex_rank(coords, f.p());
    }
  } else {
    std::iota(idx.begin(), idx.end(), 0);  // power-basis coefficients
  }
  return idx;
}

SpreadSet desarguesian(int64_t p, int n) {
  const Field f(p, n);
  const Basis b = self_dual_basis(f);  // throws NoSelfDualBasis for p odd, n even
  SpreadSet k;
  k.p = p;
  k.n = n;
  for (int64_t mr = 0; mr < f.size(); ++mr) {
    const GFElement m = f.from_rank(mr);
    MatZp mat = MatZp::zero(p, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        mat.at(i, j) = trace(m * b.vectors[static_cast<size_t>(i)] * b.vectors[static_cast<size_t>(j)]);
    k.matrices.push_back(std::move(mat));
  }
  CheckReport chk = verify_spread_set(k);
  if (!chk.pass) fail(Errc::InvalidSpreadSet, chk.details[0]);
  return k;
}

SymplecticSpread kantor_binary(int n) {
  if (n % 2 == 0 || n <= 3)
    fail(Errc::BadDegree, "requires odd n > 3 (got n = " + std::to_string(n) + ")");
  const Field f(2, n);
  const Basis basis = self_dual_basis(f);

  auto phi = [&](const GFElement& m, const GFElement& x) {
    // m^2 x + m T(x) + T(mx), the trace values read as 0/1 field elements
    GFElement r = m * m * x;
    if (trace(x) != 0) r = r + m;
    if (trace(m * x) != 0) r = r + f.one();
    return r;
  };

  SymplecticSpread spread;
  spread.space = SymplecticSpace{2, n};
  MatZp zero_v = MatZp::zero(2, n, 2 * n);
  for (int i = 0; i < n; ++i) zero_v.at(i, n + i) = 1;
  spread.members.push_back(make_subspace(2, 2 * n, std::move(zero_v)));  // x = 0

  for (int64_t mr = 0; mr < f.size(); ++mr) {
    const GFElement m = f.from_rank(mr);
    MatZp rows = MatZp::zero(2, n, 2 * n);
    for (int i = 0; i < n; ++i) {
      rows.at(i, i) = 1;
      const GFElement img = phi(m, basis.vectors[static_cast<size_t>(i)]);
      for (int j = 0; j < n; ++j)
        rows.at(i, n + j) = trace(img * basis.vectors[static_cast<size_t>(j)]);
    }
    spread.members.push_back(make_subspace(2, 2 * n, std::move(rows)));
  }
  return spread;
}

ExponentFamily bkl_exponents(int64_t p, int n, int s) {
  if (p == 2 || !is_prime(p)) fail(Errc::BadParameters, "p must be an odd prime");
  if (n % 2 == 0) fail(Errc::BadParameters, "n must be odd");
  if (s < 1 || 2 * s >= n)
    fail(Errc::BadParameters, "s must satisfy 1 <= s < n/2 (got s = " + std::to_string(s) + ")");
  if (std::gcd(static_cast<int64_t>(s), static_cast<int64_t>(n)) != 1)
    fail(Errc::BadParameters, "s must be relatively prime to n");

  const Field f(p, n);
  const int64_t N = f.size();
  const int64_t inv2 = mod_inv(2, p);
  const std::vector<int64_t> idx = family_index_map(f);

  ExponentFamily fam;
  fam.p = p;
  fam.n = n;
  fam.N = N;
  fam.root = Root::zeta(p);
  fam.family = "bkl";
  fam.params = {{"p", std::to_string(p)}, {"n", std::to_string(n)}, {"s", std::to_string(s)}};
  fam.pairing = trace_pairing(f, idx);

  std::vector<GFElement> u, w;  // x^(p^(n-s)+1), x^(p^s+1)
  for (int64_t xr = 0; xr < N; ++xr) {
    const GFElement x = f.from_rank(xr);
    u.push_back(x.frobenius(n - s) * x);
    w.push_back(x.frobenius(s) * x);
  }
  for (int64_t br = 0; br < N; ++br) {
    const GFElement b = f.from_rank(br);
    const GFElement bps = b.frobenius(s);
    std::vector<uint8_t> theta(static_cast<size_t>(N));
    for (int64_t xr = 0; xr < N; ++xr) {
      const int64_t t = trace(b * u[static_cast<size_t>(xr)]) + trace(bps * w[static_cast<size_t>(xr)]);
      theta[static_cast<size_t>(idx[static_cast<size_t>(xr)])] =
          static_cast<uint8_t>(t % p * inv2 % p);
    }
    fam.thetas.push_back(std::move(theta));
    fam.labels.push_back(rank_label("b", br));
  }
  return fam;
}

ExponentFamily planar_exponents(int n, int64_t k) {
  if (n < 5 || n % 2 == 0) fail(Errc::BadParameters, "n must be odd and >= 5");
  const int64_t two_n = 2 * n;
  if (k < 1 || std::gcd(k, two_n) != 1)
    fail(Errc::BadParameters, "k must be relatively prime to 2n");
  const int64_t km = k % two_n;
  if (km == 1 || km == two_n - 1)
    fail(Errc::BadParameters, "k must not be congruent to +-1 mod 2n");

  const Field f(3, n);
  const int64_t N = f.size();
  const int64_t e = (ipow(3, static_cast<int>(k)) + 1) / 2;
  const std::vector<int64_t> idx = family_index_map(f);

  std::vector<GFElement> fx;
  std::vector<int64_t> ftable(static_cast<size_t>(N));
  for (int64_t xr = 0; xr < N; ++xr) {
    fx.push_back(f.from_rank(xr).pow(e));
    ftable[static_cast<size_t>(xr)] = fx.back().rank();
  }
  const PlanarResult pr = is_planar(f, ftable);
  if (!pr.planar)
    fail(Errc::NotPlanar, "x^" + std::to_string(e) + " is not planar at a = rank " +
                              std::to_string(pr.a_rank));

  ExponentFamily fam;
  fam.p = 3;
  fam.n = n;
  fam.N = N;
  fam.root = Root::zeta(3);
  fam.family = "planar";
  fam.params = {{"p", "3"}, {"n", std::to_string(n)}, {"k", std::to_string(k)}};
  fam.pairing = trace_pairing(f, idx);

  for (int64_t br = 0; br < N; ++br) {
    const GFElement b = f.from_rank(br);
    std::vector<uint8_t> theta(static_cast<size_t>(N));
    for (int64_t xr = 0; xr < N; ++xr)
      theta[static_cast<size_t>(idx[static_cast<size_t>(xr)])] =
          static_cast<uint8_t>(trace(b * fx[static_cast<size_t>(xr)]));
    fam.thetas.push_back(std::move(theta));
    fam.labels.push_back(rank_label("b", br));
  }
  return fam;
}

ExponentFamily desarguesian_exponents(int64_t p, int n) {
  if (p == 2 || !is_prime(p)) fail(Errc::BadParameters, "p must be an odd prime");
  const Field f(p, n);
  const int64_t N = f.size();
  const int64_t inv2 = mod_inv(2, p);
  const std::vector<int64_t> idx = family_index_map(f);

  ExponentFamily fam;
  fam.p = p;
  fam.n = n;
  fam.N = N;
  fam.root = Root::zeta(p);
  fam.family = "desarguesian";
  fam.params = {{"p", std::to_string(p)}, {"n", std::to_string(n)}};
  fam.pairing = trace_pairing(f, idx);

  for (int64_t mr = 0; mr < N; ++mr) {
    const GFElement m = f.from_rank(mr);
    std::vector<uint8_t> theta(static_cast<size_t>(N));
    for (int64_t xr = 0; xr < N; ++xr) {
      const GFElement x = f.from_rank(xr);
      theta[static_cast<size_t>(idx[static_cast<size_t>(xr)])] =
          static_cast<uint8_t>(static_cast<int64_t>(trace(m * x * x)) * inv2 % p);
    }
    fam.thetas.push_back(std::move(theta));
    fam.labels.push_back(rank_label("m", mr));
  }
  return fam;
}

SpreadSet spreadset_from_exponent_family(const ExponentFamily& fam) {
  if (fam.root.type != Root::Type::zeta)
    fail(Errc::BadParameters, "exponent families are odd-characteristic only");
  const int64_t p = fam.p;
  const int n = fam.n;
  const int64_t N = fam.N;
  const int64_t inv2 = mod_inv(2, p);

  auto unit_index = [&](int i) { return ipow(p, n - 1 - i); };

  SpreadSet k;
  k.p = p;
  k.n = n;
  for (size_t bi = 0; bi < fam.thetas.size(); ++bi) {
    const std::vector<uint8_t>& theta = fam.thetas[bi];
    MatZp m = MatZp::zero(p, n, n);
    for (int i = 0; i < n; ++i) {
      m.at(i, i) = static_cast<int32_t>(2 * theta[static_cast<size_t>(unit_index(i))] % p);
      for (int j = i + 1; j < n; ++j) {
        const int64_t v =
            theta[static_cast<size_t>(unit_index(i) + unit_index(j))] + 2 * p -
            theta[static_cast<size_t>(unit_index(i))] - theta[static_cast<size_t>(unit_index(j))];
        m.at(i, j) = m.at(j, i) = static_cast<int32_t>(v % p);
      }
    }
    // theta must be exactly the quadratic form v.Mv/2 of the extracted matrix
    for (int64_t vr = 0; vr < N; ++vr) {
      const std::vector<int32_t> v = from_lex_rank(vr, n, p);
      int64_t q = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) q += static_cast<int64_t>(v[static_cast<size_t>(i)]) * m.at(i, j) % p * v[static_cast<size_t>(j)];
      q = q % p * inv2 % p;
      if (q != theta[static_cast<size_t>(vr)])
        fail(Errc::BadParameters, "label " + fam.labels[bi] +
                                      ": theta is not a quadratic form in the index digits");
    }
    k.matrices.push_back(std::move(m));
  }
  CheckReport chk = verify_spread_set(k);
  if (!chk.pass) fail(Errc::InvalidSpreadSet, chk.details[0]);
  return k;
}

}  // namespace mub
