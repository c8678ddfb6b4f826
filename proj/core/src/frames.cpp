#include "mub/frames.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <thread>

#include "mub/errors.hpp"

namespace mub {

namespace {

int64_t ipow(int64_t b, int e) {
  int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

int log_base(int64_t value, int64_t p) {
  int n = 0;
  int64_t t = 1;
  while (t < value) {
    t *= p;
    ++n;
  }
  return t == value ? n : -1;
}

int64_t root_char(const Root& r) { return r.type == Root::Type::zeta ? r.p : 2; }

// z = sum_j h[j] root^j from an exponent histogram; exact zero test
bool hist_is_zero(const Root& root, std::span<const int64_t> h) {
  if (root.type == Root::Type::fourth) return h[0] == h[2] && h[1] == h[3];
  for (size_t j = 1; j < h.size(); ++j)
    if (h[j] != h[0]) return false;
  return true;
}

// exact test z * conj(z) == target on the histogram
bool hist_norm_is(const Root& root, std::span<const int64_t> h, int64_t target) {
  if (root.type == Root::Type::fourth) {
    const int64_t re = h[0] - h[2], im = h[1] - h[3];
    return re * re + im * im == target;
  }
  const size_t p = h.size();
  // c_k = sum_j h[j] h[(j-k) mod p]; canonical equality with the integer target
  int64_t c1 = 0;
  for (size_t j = 0; j < p; ++j) c1 += h[j] * h[(j + p - 1) % p];
  for (size_t k = 2; k < p; ++k) {
    int64_t ck = 0;
    for (size_t j = 0; j < p; ++j) ck += h[j] * h[(j + p - k) % p];
    if (ck != c1) return false;
  }
  int64_t c0 = 0;
  for (size_t j = 0; j < p; ++j) c0 += h[j] * h[j];
  return c0 - c1 == target;
}

std::string hist_value_str(const Root& root, std::span<const int64_t> h) {
  CycInt z(root);
  for (size_t j = 0; j < h.size(); ++j)
    if (h[j] != 0) {
      CycInt t = CycInt::root_power(root, static_cast<int64_t>(j));
      t.scale(h[j]);
      z += t;
    }
  return (z * z.conj()).to_string();
}

void run_items(int64_t count, int threads, const std::function<void(int64_t)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (int64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const int workers = static_cast<int>(std::min<int64_t>(threads, count));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int t = 0; t < workers; ++t) {
    const int64_t lo = count * t / workers;
    const int64_t hi = count * (t + 1) / workers;
    pool.emplace_back([&fn, lo, hi] {
      for (int64_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

// canonical representative of the 1-space spanned by a row: multiply by the
// conjugate of the first nonzero entry, then divide out the integer content
std::vector<CycInt> canonical_row(std::vector<CycInt> row) {
  size_t j0 = 0;
  while (j0 < row.size() && row[j0].is_zero()) ++j0;
  if (j0 == row.size()) fail(Errc::BadParameters, "zero row in a frame");
  const CycInt c = row[j0].conj();
  int64_t content = 0;
  for (auto& e : row) {
    e = e * c;
    content = std::gcd(content, e.content());
  }
  if (content > 1)
    for (auto& e : row) e.divide_by(content);
  return row;
}

std::vector<int64_t> dense_fingerprint(const Orthoframe& f) {
  std::vector<std::vector<int64_t>> rows;
  rows.reserve(static_cast<size_t>(f.dim));
  for (int64_t a = 0; a < f.dim; ++a) {
    std::vector<CycInt> row = canonical_row(f.row_vector(a));
    std::vector<int64_t> flat;
    flat.reserve(row.size() * row[0].coeffs().size());
    for (const CycInt& e : row) flat.insert(flat.end(), e.coeffs().begin(), e.coeffs().end());
    rows.push_back(std::move(flat));
  }
  std::sort(rows.begin(), rows.end());
  std::vector<int64_t> out;
  out.push_back(2);  // kind-class tag: dense/materialized
  for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  return out;
}

std::vector<int64_t> exponent_fingerprint(const Orthoframe& f) {
  const int64_t n = f.dim;
  const int64_t ord = f.root.order();
  std::vector<std::vector<uint8_t>> rows(static_cast<size_t>(n));
  for (int64_t a = 0; a < n; ++a) {
    auto& r = rows[static_cast<size_t>(a)];
    r.resize(static_cast<size_t>(n));
    const uint8_t e0 = f.exp_at(a, 0);
    for (int64_t v = 0; v < n; ++v) {
      int d = f.exp_at(a, v) - e0;
      if (d < 0) d += static_cast<int>(ord);
      r[static_cast<size_t>(v)] = static_cast<uint8_t>(d);
    }
  }
  std::sort(rows.begin(), rows.end());
  std::vector<int64_t> out;
  out.push_back(1);  // kind-class tag: exponent
  for (const auto& r : rows)
    for (uint8_t b : r) out.push_back(b);
  return out;
}

}  // namespace

std::vector<CycInt> Orthoframe::row_vector(int64_t a) const {
  std::vector<CycInt> row;
  row.reserve(static_cast<size_t>(dim));
  switch (kind) {
    case Kind::standard:
      for (int64_t v = 0; v < dim; ++v)
        row.push_back(v == a ? CycInt::integer(root, 1) : CycInt(root));
      break;
    case Kind::exponent:
      for (int64_t v = 0; v < dim; ++v) row.push_back(CycInt::root_power(root, exp_at(a, v)));
      break;
    case Kind::dense:
      row = rows[static_cast<size_t>(a)];
      break;
  }
  return row;
}

Orthoframe standard_frame(int64_t n, Root root) {
  Orthoframe f;
  f.kind = Orthoframe::Kind::standard;
  f.root = root;
  f.dim = n;
  f.label = "standard";
  return f;
}

Orthoframe exponent_frame(Root root, int64_t n, std::vector<uint8_t> exps, std::string label) {
  if (static_cast<int64_t>(exps.size()) != n * n)
    fail(Errc::DimensionMismatch, "exponent table must be N x N");
  const int64_t ord = root.order();
  if (ord > 255) fail(Errc::TooLarge, "exponent tables support root orders up to 255");
  for (uint8_t e : exps)
    if (e >= ord) fail(Errc::BadParameters, "exponent out of range for the root");
  Orthoframe f;
  f.kind = Orthoframe::Kind::exponent;
  f.root = root;
  f.dim = n;
  f.exps = std::move(exps);
  f.label = std::move(label);
  return f;
}

MubSet frames_from_spreadset_odd(const SpreadSet& k) {
  if (k.p == 2) fail(Errc::WrongCharacteristic, "use frames_from_spreadset_binary for p = 2");
  CheckReport chk = verify_spread_set(k);
  if (!chk.pass) fail(Errc::InvalidSpreadSet, chk.details[0]);

  const int64_t p = k.p;
  const int n = k.n;
  const int64_t N = ipow(p, n);
  const int64_t inv2 = mod_inv(2, p);
  const Root root = Root::zeta(p);

  MubSet m;
  m.p = p;
  m.n = n;
  m.dim = N;
  m.root = root;
  m.prov.family = "spreadset";
  m.prov.params = {{"p", std::to_string(p)}, {"n", std::to_string(n)}};
  m.frames.push_back(standard_frame(N, root));

  std::vector<std::vector<int32_t>> vecs;
  vecs.reserve(static_cast<size_t>(N));
  for (int64_t v = 0; v < N; ++v) vecs.push_back(from_lex_rank(v, n, p));

  for (size_t mi = 0; mi < k.matrices.size(); ++mi) {
    const MatZp& mat = k.matrices[mi];
    std::vector<int64_t> q(static_cast<size_t>(N));
    for (int64_t v = 0; v < N; ++v) {
      int64_t s = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          s += static_cast<int64_t>(vecs[static_cast<size_t>(v)][static_cast<size_t>(i)]) *
               mat.at(i, j) % p * vecs[static_cast<size_t>(v)][static_cast<size_t>(j)];
      q[static_cast<size_t>(v)] = s % p * inv2 % p;
    }
    std::vector<uint8_t> exps(static_cast<size_t>(N * N));
    for (int64_t a = 0; a < N; ++a)
      for (int64_t v = 0; v < N; ++v)
        exps[static_cast<size_t>(a * N + v)] = static_cast<uint8_t>(
            (dot_mod(vecs[static_cast<size_t>(a)], vecs[static_cast<size_t>(v)], p) +
             q[static_cast<size_t>(v)]) %
            p);
    m.frames.push_back(exponent_frame(root, N, std::move(exps), "M=" + std::to_string(mi)));
  }
  return m;
}

MubSet frames_from_spreadset_binary(const SpreadSet& k) {
  if (k.p != 2) fail(Errc::WrongCharacteristic, "binary construction requires p = 2");
  CheckReport chk = verify_spread_set(k);
  if (!chk.pass) fail(Errc::InvalidSpreadSet, chk.details[0]);

  const int n = k.n;
  const int64_t N = ipow(2, n);
  const Root root = Root::fourth_root();

  MubSet m;
  m.p = 2;
  m.n = n;
  m.dim = N;
  m.root = root;
  m.prov.family = "spreadset";
  m.prov.params = {{"p", "2"}, {"n", std::to_string(n)}};
  m.frames.push_back(standard_frame(N, root));

  std::vector<std::vector<int32_t>> vecs;
  vecs.reserve(static_cast<size_t>(N));
  for (int64_t v = 0; v < N; ++v) vecs.push_back(from_lex_rank(v, n, 2));

  for (size_t mi = 0; mi < k.matrices.size(); ++mi) {
    const MatZp& mat = k.matrices[mi];
    // v^T M v with 0/1 entries read inside Z_4
    std::vector<int64_t> q4(static_cast<size_t>(N));
    for (int64_t v = 0; v < N; ++v) {
      int64_t s = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          s += static_cast<int64_t>(vecs[static_cast<size_t>(v)][static_cast<size_t>(i)]) *
               mat.at(i, j) * vecs[static_cast<size_t>(v)][static_cast<size_t>(j)];
      q4[static_cast<size_t>(v)] = s % 4;
    }
    std::vector<uint8_t> exps(static_cast<size_t>(N * N));
    for (int64_t a = 0; a < N; ++a)
      for (int64_t v = 0; v < N; ++v) {
        int64_t dot = 0;
        for (int i = 0; i < n; ++i)
          dot += static_cast<int64_t>(vecs[static_cast<size_t>(a)][static_cast<size_t>(i)]) *
                 vecs[static_cast<size_t>(v)][static_cast<size_t>(i)];
        exps[static_cast<size_t>(a * N + v)] =
            static_cast<uint8_t>((2 * dot + q4[static_cast<size_t>(v)]) % 4);
      }
    m.frames.push_back(exponent_frame(root, N, std::move(exps), "M=" + std::to_string(mi)));
  }
  return m;
}

MubSet frames_from_exponents(const ExponentFamily& fam) {
  const int64_t N = fam.N;
  MubSet m;
  m.p = fam.p;
  m.n = fam.n;
  m.dim = N;
  m.root = fam.root;
  m.prov.family = fam.family;
  m.prov.params = fam.params;
  m.frames.push_back(standard_frame(N, fam.root));
  const int64_t ord = fam.root.order();
  for (size_t bi = 0; bi < fam.thetas.size(); ++bi) {
    std::vector<uint8_t> exps(static_cast<size_t>(N * N));
    const std::vector<uint8_t>& theta = fam.thetas[bi];
    for (int64_t a = 0; a < N; ++a)
      for (int64_t v = 0; v < N; ++v)
        exps[static_cast<size_t>(a * N + v)] = static_cast<uint8_t>(
            (fam.pairing_at(a, v) + theta[static_cast<size_t>(v)]) % ord);
    m.frames.push_back(exponent_frame(fam.root, N, std::move(exps), fam.labels[bi]));
  }
  return m;
}

Orthoframe eigenframe(const Subspace& a, EigenContext ctx) {
  const int64_t p = a.p;
  if (a.ambient % 2 != 0) fail(Errc::DimensionMismatch, "ambient dimension must be 2n");
  const int n = a.ambient / 2;
  if (a.dim() != n) fail(Errc::NotIsotropic, "subspace must be an n-space of Z_p^(2n)");
  if (ctx == EigenContext::complex_odd && p == 2)
    fail(Errc::WrongCharacteristic, "complex-odd context requires odd p");
  if (ctx != EigenContext::complex_odd && p != 2)
    fail(Errc::WrongCharacteristic, "binary context requires p = 2");

  const SymplecticSpace sp{p, n};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (symplectic_form(sp, a.rows.row(i), a.rows.row(j)) != 0)
        fail(Errc::NotIsotropic, "subspace is not totally isotropic");
  if (ctx == EigenContext::real_binary) {
    for (int i = 0; i < n; ++i)
      if (quadratic_form_binary(a.rows.row(i)) != 0)
        fail(Errc::NotSingular, "subspace is not totally singular");
  }

  const Root root = p == 2 ? Root::fourth_root() : Root::zeta(p);
  const int64_t N = ipow(p, n);
  const int64_t ord = root.order();

  // generator W_i = X(a_i) Z(b_i): (W x)[w] = root^phase(b.(w - a)) x[w - a]
  struct Gen {
    std::vector<int32_t> xpart, zpart;
    int terms;                    // p for odd p, 2 for p = 2
    std::vector<int64_t> evals;   // allowed eigenvalue exponents of the root
  };
  std::vector<Gen> gens;
  for (int i = 0; i < n; ++i) {
    Gen g;
    g.xpart.assign(a.rows.row(i).begin(), a.rows.row(i).begin() + n);
    g.zpart.assign(a.rows.row(i).begin() + n, a.rows.row(i).end());
    if (p == 2) {
      g.terms = 2;
      const int q = dot_mod(g.xpart, g.zpart, 2);  // W^2 = (-1)^q I
      g.evals = q == 0 ? std::vector<int64_t>{0, 2} : std::vector<int64_t>{1, 3};
    } else {
      g.terms = static_cast<int>(p);
      for (int64_t t = 0; t < p; ++t) g.evals.push_back(t);
    }
    gens.push_back(std::move(g));
  }

  std::vector<std::vector<int32_t>> coords;
  coords.reserve(static_cast<size_t>(N));
  for (int64_t v = 0; v < N; ++v) coords.push_back(from_lex_rank(v, n, p));

  auto apply_gen = [&](const Gen& g, const std::vector<CycInt>& x) {
    std::vector<CycInt> y(static_cast<size_t>(N), CycInt(root));
    for (int64_t w = 0; w < N; ++w) {
      std::vector<int32_t> src = coords[static_cast<size_t>(w)];
      for (int i = 0; i < n; ++i) {
        src[static_cast<size_t>(i)] =
            static_cast<int32_t>((src[static_cast<size_t>(i)] - g.xpart[static_cast<size_t>(i)] + p) % p);
      }
      const int64_t sr = lex_rank(src, p);
      if (x[static_cast<size_t>(sr)].is_zero()) continue;
      int64_t phase = dot_mod(g.zpart, src, p);
      if (p == 2) phase *= 2;  // (-1)^(b.v) = i^(2 b.v)
      y[static_cast<size_t>(w)] = x[static_cast<size_t>(sr)].times_root_power(phase);
    }
    return y;
  };

  std::vector<std::vector<CycInt>> collected;
  std::vector<int64_t> tuple(static_cast<size_t>(n), 0);
  std::vector<int64_t> choice(static_cast<size_t>(n), 0);
  const int64_t tuple_count = [&] {
    int64_t c = 1;
    for (const Gen& g : gens) c *= static_cast<int64_t>(g.evals.size());
    return c;
  }();

  for (int64_t ti = 0; ti < tuple_count; ++ti) {
    int64_t rest = ti;
    for (int i = n - 1; i >= 0; --i) {
      const auto sz = static_cast<int64_t>(gens[static_cast<size_t>(i)].evals.size());
      choice[static_cast<size_t>(i)] = rest % sz;
      rest /= sz;
    }
    for (int i = 0; i < n; ++i)
      tuple[static_cast<size_t>(i)] =
          gens[static_cast<size_t>(i)].evals[static_cast<size_t>(choice[static_cast<size_t>(i)])];

    for (int64_t seed = 0; seed < N; ++seed) {
      std::vector<CycInt> x(static_cast<size_t>(N), CycInt(root));
      x[static_cast<size_t>(seed)] = CycInt::integer(root, 1);
      for (int i = 0; i < n; ++i) {
        const Gen& g = gens[static_cast<size_t>(i)];
        std::vector<CycInt> acc = x;
        std::vector<CycInt> cur = x;
        for (int kk = 1; kk < g.terms; ++kk) {
          cur = apply_gen(g, cur);
          const int64_t shift = (ord - tuple[static_cast<size_t>(i)] * kk % ord) % ord;
          for (int64_t w = 0; w < N; ++w)
            if (!cur[static_cast<size_t>(w)].is_zero())
              acc[static_cast<size_t>(w)] += cur[static_cast<size_t>(w)].times_root_power(shift);
        }
        x = std::move(acc);
      }
      bool zero = true;
      for (const CycInt& e : x)
        if (!e.is_zero()) { zero = false; break; }
      if (zero) continue;
      int64_t content = 0;
      for (const CycInt& e : x) content = std::gcd(content, e.content());
      if (content > 1)
        for (CycInt& e : x) e.divide_by(content);
      collected.push_back(std::move(x));
      break;
    }
  }
  if (static_cast<int64_t>(collected.size()) != N)
    fail(Errc::BadParameters, "character projection did not produce N joint eigenvectors");

  if (ctx == EigenContext::real_binary) {
    // rescale to squared norm N where an integer scale exists
    for (auto& row : collected) {
      int64_t support = 0;
      for (const CycInt& e : row) {
        if (e.is_zero()) continue;
        ++support;
        if (e.coeffs()[1] != 0) fail(Errc::NotSingular, "real context produced a complex entry");
      }
      const int m = log_base(support, 2);
      if (m >= 0 && (n - m) % 2 == 0) {
        const int64_t scale = ipow(2, (n - m) / 2);
        for (CycInt& e : row) e.scale(scale);
      }
    }
  }

  Orthoframe f;
  f.root = root;
  f.dim = N;
  f.label = "eigenframe";

  if (ctx == EigenContext::real_binary) {
    // keep the scaled vectors; criterion checks read exact norms off the rows
    f.kind = Orthoframe::Kind::dense;
    f.rows = std::move(collected);
    return f;
  }

  // compact encodings when the rows allow it
  bool is_standard = true;
  std::vector<bool> seen(static_cast<size_t>(N), false);
  for (const auto& row : collected) {
    int64_t pos = -1;
    for (int64_t v = 0; v < N && is_standard; ++v) {
      if (row[static_cast<size_t>(v)].is_zero()) continue;
      if (pos >= 0) is_standard = false;
      pos = v;
    }
    if (!is_standard || pos < 0 || seen[static_cast<size_t>(pos)]) {
      is_standard = false;
      break;
    }
    seen[static_cast<size_t>(pos)] = true;
  }
  if (is_standard) {
    f.kind = Orthoframe::Kind::standard;
    return f;
  }

  std::vector<CycInt> powers;
  for (int64_t e = 0; e < ord; ++e) powers.push_back(CycInt::root_power(root, e));
  std::vector<uint8_t> exps(static_cast<size_t>(N * N));
  bool is_exponent = true;
  for (int64_t r = 0; r < N && is_exponent; ++r) {
    for (int64_t v = 0; v < N; ++v) {
      int64_t e = -1;
      for (int64_t t = 0; t < ord; ++t)
        if (collected[static_cast<size_t>(r)][static_cast<size_t>(v)] == powers[static_cast<size_t>(t)]) {
          e = t;
          break;
        }
      if (e < 0) {
        is_exponent = false;
        break;
      }
      exps[static_cast<size_t>(r * N + v)] = static_cast<uint8_t>(e);
    }
  }
  if (is_exponent) {
    f.kind = Orthoframe::Kind::exponent;
    f.exps = std::move(exps);
    return f;
  }
  f.kind = Orthoframe::Kind::dense;
  f.rows = std::move(collected);
  return f;
}

namespace {

struct Findings {
  bool pass = true;
  std::vector<std::string> items;

  void add(const std::string& s) {
    pass = false;
    if (items.size() < 8) items.push_back(s);
  }
};

void merge(CheckReport& rep, std::vector<Findings>& all) {
  for (auto& f : all) {
    if (f.pass) continue;
    rep.pass = false;
    for (auto& s : f.items)
      if (rep.details.size() < 64) rep.details.push_back(std::move(s));
  }
}

}  // namespace

CheckReport verify_mub_set(const MubSet& m, VerifyMode mode, int threads) {
  CheckReport rep{"mub_set", true, {}};
  const int64_t N = m.dim;
  const Root root = m.root;
  const int64_t ord = root.order();
  const int64_t p = m.p;
  const int n = m.n;
  if (ipow(p, n) != N || root_char(root) != p) {
    rep.pass = false;
    rep.add("inconsistent dimension metadata: p^n != N or root mismatch");
    return rep;
  }
  if (m.frames.empty()) {
    rep.pass = false;
    rep.add("no frames");
    return rep;
  }
  if (static_cast<int64_t>(m.frames.size()) > m.bound()) {
    rep.pass = false;
    rep.add("frame count " + std::to_string(m.frames.size()) + " exceeds the bound " +
            std::to_string(m.bound()) + (m.real ? " (= N/2+1 for real frames)" : " (= N+1)"));
  }

  bool any_dense = false;
  int standard_count = 0;
  for (size_t i = 0; i < m.frames.size(); ++i) {
    const Orthoframe& f = m.frames[i];
    if (f.dim != N || !(f.root == root)) {
      rep.pass = false;
      rep.add("frame " + std::to_string(i) + " has mismatched dimension or root");
      return rep;
    }
    if (f.kind == Orthoframe::Kind::dense) any_dense = true;
    if (f.kind == Orthoframe::Kind::standard) ++standard_count;
    if (f.kind == Orthoframe::Kind::exponent) {
      if (static_cast<int64_t>(f.exps.size()) != N * N) {
        rep.pass = false;
        rep.add("frame " + std::to_string(i) + " has a malformed exponent table");
        return rep;
      }
      for (uint8_t e : f.exps)
        if (e >= ord) {
          rep.pass = false;
          rep.add("frame " + std::to_string(i) + " has an exponent out of range");
          return rep;
        }
    }
  }
  if (standard_count > 1) {
    rep.pass = false;
    rep.add("duplicate standard frames (" + std::to_string(standard_count) + ")");
  }

  if (any_dense) {
    // general exact path over cyclotomic entries; scale-free unbiasedness
    // N |<u,w>|^2 == <u,u> <w,w>
    std::vector<std::vector<std::vector<CycInt>>> rows(m.frames.size());
    std::vector<std::vector<CycInt>> norms(m.frames.size());
    for (size_t i = 0; i < m.frames.size(); ++i) {
      for (int64_t a = 0; a < N; ++a) {
        rows[i].push_back(m.frames[i].row_vector(a));
        norms[i].push_back(hermitian_inner(rows[i].back(), rows[i].back()));
      }
    }
    for (size_t i = 0; i < m.frames.size(); ++i) {
      for (int64_t a = 0; a < N && rep.details.size() < 64; ++a) {
        for (int64_t b = a + 1; b < N; ++b) {
          if (!hermitian_inner(rows[i][static_cast<size_t>(a)], rows[i][static_cast<size_t>(b)]).is_zero()) {
            rep.pass = false;
            rep.add("frame " + std::to_string(i) + ": rows " + std::to_string(a) + "," +
                    std::to_string(b) + " not orthogonal");
          }
        }
      }
    }
    const CycInt big_n = CycInt::integer(root, N);
    for (size_t i = 0; i < m.frames.size(); ++i) {
      for (size_t j = i + 1; j < m.frames.size(); ++j) {
        for (int64_t a = 0; a < N && rep.details.size() < 64; ++a) {
          for (int64_t b = 0; b < N; ++b) {
            const CycInt z =
                hermitian_inner(rows[i][static_cast<size_t>(a)], rows[j][static_cast<size_t>(b)]);
            if (big_n * z * z.conj() !=
                norms[i][static_cast<size_t>(a)] * norms[j][static_cast<size_t>(b)]) {
              rep.pass = false;
              rep.add("frames " + std::to_string(i) + "," + std::to_string(j) + " rows " +
                      std::to_string(a) + "," + std::to_string(b) +
                      ": unbiasedness fails, N|z|^2 = " + (big_n * z * z.conj()).to_string());
            }
          }
        }
      }
    }
    if (rep.pass)
      rep.add("frames=" + std::to_string(m.frames.size()) + " dim=" + std::to_string(N) +
              " mode=dense");
    return rep;
  }

  std::vector<size_t> exp_frames;
  for (size_t i = 0; i < m.frames.size(); ++i)
    if (m.frames[i].kind == Orthoframe::Kind::exponent) exp_frames.push_back(i);

  // standard-vs-exponent pairs are unbiased structurally: every cross inner
  // product is a single root of unity and exponent rows have norm N.

  if (mode == VerifyMode::difference_class) {
    if (exp_frames.empty()) {
      if (rep.pass)
        rep.add("frames=" + std::to_string(m.frames.size()) + " dim=" + std::to_string(N));
      return rep;
    }
    // a-linear shape: L[a][v] := e[a][v] - e[0][v] must be digit-linear in a
    // and identical across frames; rows then satisfy
    // inner(row_a^F, row_a'^G) = sum_v root^(L[a-a'][v] + theta_F[v] - theta_G[v]).
    const Orthoframe& f0 = m.frames[exp_frames[0]];
    std::vector<uint8_t> lin(static_cast<size_t>(N * N));
    for (int64_t a = 0; a < N; ++a)
      for (int64_t v = 0; v < N; ++v) {
        int d = f0.exp_at(a, v) - f0.exp_at(0, v);
        if (d < 0) d += static_cast<int>(ord);
        lin[static_cast<size_t>(a * N + v)] = static_cast<uint8_t>(d);
      }
    // digit-linearity against the unit labels
    std::vector<int64_t> unit(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) unit[static_cast<size_t>(i)] = ipow(p, n - 1 - i);
    for (int64_t a = 0; a < N && rep.pass; ++a) {
      const std::vector<int32_t> digits = from_lex_rank(a, n, p);
      for (int64_t v = 0; v < N; ++v) {
        int64_t expect = 0;
        for (int i = 0; i < n; ++i)
          expect += static_cast<int64_t>(digits[static_cast<size_t>(i)]) *
                    lin[static_cast<size_t>(unit[static_cast<size_t>(i)] * N + v)];
        if (expect % ord != lin[static_cast<size_t>(a * N + v)]) {
          rep.pass = false;
          rep.add("frame " + std::to_string(exp_frames[0]) + ": exponent shape not a-linear at row " +
                  std::to_string(a) + " column " + std::to_string(v));
          break;
        }
      }
    }
    for (size_t fi = 1; fi < exp_frames.size() && rep.pass; ++fi) {
      const Orthoframe& f = m.frames[exp_frames[fi]];
      for (int64_t a = 0; a < N && rep.pass; ++a)
        for (int64_t v = 0; v < N; ++v) {
          int d = f.exp_at(a, v) - f.exp_at(0, v);
          if (d < 0) d += static_cast<int>(ord);
          if (static_cast<uint8_t>(d) != lin[static_cast<size_t>(a * N + v)]) {
            rep.pass = false;
            rep.add("frame " + std::to_string(exp_frames[fi]) + ": row " + std::to_string(a) +
                    " does not share the common a-linear shape at column " + std::to_string(v));
            break;
          }
        }
    }
    if (!rep.pass) return rep;

    // orthogonality inside every exponent frame: one class per d != 0
    for (int64_t d = 1; d < N; ++d) {
      std::vector<int64_t> h(static_cast<size_t>(ord), 0);
      for (int64_t v = 0; v < N; ++v) ++h[lin[static_cast<size_t>(d * N + v)]];
      if (!hist_is_zero(root, h)) {
        rep.pass = false;
        rep.add("rows in class d=" + std::to_string(d) +
                " are not orthogonal (shared across exponent frames)");
        if (rep.details.size() >= 16) return rep;
      }
    }

    // cross-frame unbiasedness, one histogram per (pair, class)
    struct Pair {
      size_t f, g;
    };
    std::vector<Pair> pairs;
    for (size_t i = 0; i < exp_frames.size(); ++i)
      for (size_t j = i + 1; j < exp_frames.size(); ++j) pairs.push_back({exp_frames[i], exp_frames[j]});
    std::vector<Findings> results(pairs.size());
    run_items(static_cast<int64_t>(pairs.size()), threads, [&](int64_t idx) {
      const Orthoframe& f = m.frames[pairs[static_cast<size_t>(idx)].f];
      const Orthoframe& g = m.frames[pairs[static_cast<size_t>(idx)].g];
      Findings& out = results[static_cast<size_t>(idx)];
      std::vector<uint8_t> delta(static_cast<size_t>(N));
      for (int64_t v = 0; v < N; ++v) {
        int dd = f.exp_at(0, v) - g.exp_at(0, v);
        if (dd < 0) dd += static_cast<int>(ord);
        delta[static_cast<size_t>(v)] = static_cast<uint8_t>(dd);
      }
      std::vector<int64_t> h(static_cast<size_t>(ord));
      for (int64_t d = 0; d < N; ++d) {
        std::fill(h.begin(), h.end(), 0);
        const uint8_t* lrow = lin.data() + static_cast<size_t>(d * N);
        for (int64_t v = 0; v < N; ++v) {
          int e = lrow[v] + delta[static_cast<size_t>(v)];
          if (e >= ord) e -= static_cast<int>(ord);
          ++h[static_cast<size_t>(e)];
        }
        if (!hist_norm_is(root, h, N)) {
          out.add("frames " + std::to_string(pairs[static_cast<size_t>(idx)].f) + "," +
                  std::to_string(pairs[static_cast<size_t>(idx)].g) + " class d=" + std::to_string(d) +
                  ": |z|^2 = " + hist_value_str(root, h) + ", expected " + std::to_string(N));
          if (out.items.size() >= 4) return;
        }
      }
    });
    merge(rep, results);
    if (rep.pass)
      rep.add("frames=" + std::to_string(m.frames.size()) + " dim=" + std::to_string(N) +
              " classes=" + std::to_string(static_cast<int64_t>(pairs.size()) * N) +
              " mode=difference-class");
    return rep;
  }

  // all-pairs mode
  struct Work {
    size_t f, g;  // f == g: internal orthogonality
  };
  std::vector<Work> work;
  for (size_t i = 0; i < exp_frames.size(); ++i) work.push_back({exp_frames[i], exp_frames[i]});
  for (size_t i = 0; i < exp_frames.size(); ++i)
    for (size_t j = i + 1; j < exp_frames.size(); ++j) work.push_back({exp_frames[i], exp_frames[j]});
  std::vector<Findings> results(work.size());
  run_items(static_cast<int64_t>(work.size()), threads, [&](int64_t idx) {
    const Work& w = work[static_cast<size_t>(idx)];
    const Orthoframe& f = m.frames[w.f];
    const Orthoframe& g = m.frames[w.g];
    Findings& out = results[static_cast<size_t>(idx)];
    std::vector<int64_t> h(static_cast<size_t>(ord));
    if (w.f == w.g) {
      for (int64_t a = 0; a < N; ++a)
        for (int64_t b = a + 1; b < N; ++b) {
          std::fill(h.begin(), h.end(), 0);
          for (int64_t v = 0; v < N; ++v) {
            int e = f.exp_at(a, v) - f.exp_at(b, v);
            if (e < 0) e += static_cast<int>(ord);
            ++h[static_cast<size_t>(e)];
          }
          if (!hist_is_zero(root, h)) {
            out.add("frame " + std::to_string(w.f) + ": rows " + std::to_string(a) + "," +
                    std::to_string(b) + " not orthogonal");
            if (out.items.size() >= 4) return;
          }
        }
      return;
    }
    for (int64_t a = 0; a < N; ++a)
      for (int64_t b = 0; b < N; ++b) {
        std::fill(h.begin(), h.end(), 0);
        for (int64_t v = 0; v < N; ++v) {
          int e = f.exp_at(a, v) - g.exp_at(b, v);
          if (e < 0) e += static_cast<int>(ord);
          ++h[static_cast<size_t>(e)];
        }
        if (!hist_norm_is(root, h, N)) {
          out.add("frames " + std::to_string(w.f) + "," + std::to_string(w.g) + " rows " +
                  std::to_string(a) + "," + std::to_string(b) + ": |z|^2 = " +
                  hist_value_str(root, h) + ", expected " + std::to_string(N));
          if (out.items.size() >= 4) return;
        }
      }
  });
  merge(rep, results);
  if (rep.pass)
    rep.add("frames=" + std::to_string(m.frames.size()) + " dim=" + std::to_string(N) +
            " mode=all-pairs");
  return rep;
}

Orthoframe apply_weyl(const WeylOperator& w, const Orthoframe& f) {
  const int64_t p = root_char(f.root);
  const int n = log_base(f.dim, p);
  if (n < 0 || static_cast<int>(w.b.size()) != n)
    fail(Errc::DimensionMismatch, "operator parameter has the wrong length");
  const int64_t N = f.dim;
  const int64_t ord = f.root.order();

  if (f.kind == Orthoframe::Kind::standard) return f;  // both actions permute or fix <e_v>

  if (f.kind == Orthoframe::Kind::exponent) {
    Orthoframe out = f;
    if (w.type == WeylOperator::Type::X) {
      for (int64_t v = 0; v < N; ++v) {
        std::vector<int32_t> src = from_lex_rank(v, n, p);
        for (int i = 0; i < n; ++i)
          src[static_cast<size_t>(i)] = static_cast<int32_t>(
              (src[static_cast<size_t>(i)] - w.b[static_cast<size_t>(i)] % p + p) % p);
        const int64_t sr = lex_rank(src, p);
        for (int64_t a = 0; a < N; ++a)
          out.exps[static_cast<size_t>(a * N + v)] = f.exp_at(a, sr);
      }
    } else {
      for (int64_t v = 0; v < N; ++v) {
        std::vector<int32_t> vv = from_lex_rank(v, n, p);
        int64_t add = dot_mod(w.b, vv, p);
        if (f.root.type == Root::Type::fourth) add *= 2;
        add %= ord;
        for (int64_t a = 0; a < N; ++a)
          out.exps[static_cast<size_t>(a * N + v)] =
              static_cast<uint8_t>((f.exp_at(a, v) + add) % ord);
      }
    }
    return out;
  }

  Orthoframe out = f;
  if (w.type == WeylOperator::Type::X) {
    for (int64_t a = 0; a < N; ++a)
      for (int64_t v = 0; v < N; ++v) {
        std::vector<int32_t> src = from_lex_rank(v, n, p);
        for (int i = 0; i < n; ++i)
          src[static_cast<size_t>(i)] = static_cast<int32_t>(
              (src[static_cast<size_t>(i)] - w.b[static_cast<size_t>(i)] % p + p) % p);
        out.rows[static_cast<size_t>(a)][static_cast<size_t>(v)] =
            f.rows[static_cast<size_t>(a)][static_cast<size_t>(lex_rank(src, p))];
      }
  } else {
    for (int64_t v = 0; v < N; ++v) {
      std::vector<int32_t> vv = from_lex_rank(v, n, p);
      int64_t add = dot_mod(w.b, vv, p);
      if (f.root.type == Root::Type::fourth) add *= 2;
      for (int64_t a = 0; a < N; ++a)
        out.rows[static_cast<size_t>(a)][static_cast<size_t>(v)] =
            f.rows[static_cast<size_t>(a)][static_cast<size_t>(v)].times_root_power(add);
    }
  }
  return out;
}

std::vector<int64_t> frame_fingerprint(const Orthoframe& f) {
  if (f.kind == Orthoframe::Kind::exponent) return exponent_fingerprint(f);
  return dense_fingerprint(f);
}

bool frames_equal_as_sets(const Orthoframe& f1, const Orthoframe& f2) {
  if (f1.dim != f2.dim) fail(Errc::DimensionMismatch, "frames of different dimensions");
  if (!(f1.root == f2.root)) fail(Errc::RootMismatch, "frames over different roots");
  if (f1.kind == Orthoframe::Kind::standard || f2.kind == Orthoframe::Kind::standard) {
    if (f1.kind == f2.kind) return true;
    // a standard 1-space never lies in a full-support or mixed frame row set
    // unless that frame is the standard set itself; decide via the dense path
    return dense_fingerprint(f1) == dense_fingerprint(f2);
  }
  if (f1.kind == Orthoframe::Kind::exponent && f2.kind == Orthoframe::Kind::exponent)
    return exponent_fingerprint(f1) == exponent_fingerprint(f2);
  return dense_fingerprint(f1) == dense_fingerprint(f2);
}

}  // namespace mub
