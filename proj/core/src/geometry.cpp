#include "mub/geometry.hpp"

#include <algorithm>
#include <sstream>

#include "mub/errors.hpp"

namespace mub {

namespace {

std::string row_to_string(std::span<const int32_t> v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ' ';
    os << v[i];
  }
  return os.str();
}

// all nonzero vectors of the row space, for small member checks
std::vector<std::vector<int32_t>> row_space_vectors(const Subspace& s) {
  const int k = s.dim();
  int64_t count = 1;
  for (int i = 0; i < k; ++i) count *= s.p;
  std::vector<std::vector<int32_t>> out;
  for (int64_t r = 1; r < count; ++r) {
    std::vector<int32_t> combo = from_lex_rank(r, k, s.p);
    std::vector<int32_t> v(static_cast<size_t>(s.ambient), 0);
    for (int i = 0; i < k; ++i) {
      if (combo[static_cast<size_t>(i)] == 0) continue;
      for (int c = 0; c < s.ambient; ++c) {
        v[static_cast<size_t>(c)] = static_cast<int32_t>(
            (v[static_cast<size_t>(c)] + static_cast<int64_t>(combo[static_cast<size_t>(i)]) * s.rows.at(i, c)) % s.p);
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

bool subspace_less(const Subspace& a, const Subspace& b) {
  return a.rows.a < b.rows.a;
}

}  // namespace

int32_t symplectic_form(const SymplecticSpace& s, std::span<const int32_t> u,
                        std::span<const int32_t> v) {
  const int n = s.n;
  if (static_cast<int>(u.size()) != 2 * n || static_cast<int>(v.size()) != 2 * n)
    fail(Errc::DimensionMismatch, "vectors must have length 2n");
  int64_t acc = 0;
  for (int i = 0; i < n; ++i) {
    acc += static_cast<int64_t>(u[static_cast<size_t>(i)]) * v[static_cast<size_t>(n + i)];
    acc -= static_cast<int64_t>(u[static_cast<size_t>(n + i)]) * v[static_cast<size_t>(i)];
  }
  acc %= s.p;
  if (acc < 0) acc += s.p;
  return static_cast<int32_t>(acc);
}

int32_t quadratic_form_binary(std::span<const int32_t> v) {
  if (v.size() % 2 != 0) fail(Errc::DimensionMismatch, "binary quadratic form needs even length");
  const size_t n = v.size() / 2;
  int32_t acc = 0;
  for (size_t i = 0; i < n; ++i) acc ^= (v[i] & v[n + i] & 1);
  return acc;
}

Subspace make_subspace(int64_t p, int ambient, MatZp basis_rows) {
  if (basis_rows.cols != ambient || basis_rows.p != p)
    fail(Errc::DimensionMismatch, "basis rows do not match the ambient space");
  const int k = rref_in_place(basis_rows);
  if (k != basis_rows.rows) {
    MatZp trimmed = MatZp::zero(p, k, ambient);
    std::copy_n(basis_rows.a.begin(), trimmed.a.size(), trimmed.a.begin());
    basis_rows = std::move(trimmed);
  }
  return Subspace{p, ambient, std::move(basis_rows)};
}

int intersection_dim(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient || a.p != b.p)
    fail(Errc::DimensionMismatch, "subspaces of different ambient spaces");
  const int sum = rank_of(stack_rows(a.rows, b.rows));
  return a.dim() + b.dim() - sum;
}

bool contains_vector(const Subspace& s, std::span<const int32_t> v) {
  MatZp ext = MatZp::zero(s.p, s.dim() + 1, s.ambient);
  std::copy(s.rows.a.begin(), s.rows.a.end(), ext.a.begin());
  std::copy(v.begin(), v.end(), ext.a.begin() + s.rows.a.size());
  return rank_of(std::move(ext)) == s.dim();
}

int64_t SpreadSet::expected_count() const {
  int64_t c = 1;
  for (int i = 0; i < n; ++i) c *= p;
  return c;
}

CheckReport verify_symplectic_spread(const SymplecticSpread& spread) {
  CheckReport rep{"symplectic_spread", true, {}};
  const SymplecticSpace& sp = spread.space;
  int64_t N = 1;
  for (int i = 0; i < sp.n; ++i) N *= sp.p;

  if (static_cast<int64_t>(spread.members.size()) != N + 1) {
    rep.pass = false;
    rep.add("member count " + std::to_string(spread.members.size()) + " != p^n+1 = " +
            std::to_string(N + 1));
  }
  for (size_t m = 0; m < spread.members.size(); ++m) {
    const Subspace& s = spread.members[m];
    if (s.ambient != sp.dim() || s.p != sp.p) {
      rep.pass = false;
      rep.add("member " + std::to_string(m) + " lives in the wrong space");
      continue;
    }
    if (s.dim() != sp.n) {
      rep.pass = false;
      rep.add("member " + std::to_string(m) + " has dimension " + std::to_string(s.dim()) +
              " != n");
    }
    for (int i = 0; i < s.dim() && rep.details.size() < 32; ++i) {
      for (int j = i; j < s.dim(); ++j) {
        if (symplectic_form(sp, s.rows.row(i), s.rows.row(j)) != 0) {
          rep.pass = false;
          rep.add("member " + std::to_string(m) + " not totally isotropic: rows " +
                  std::to_string(i) + "," + std::to_string(j) + " pair to nonzero; basis row " +
                  row_to_string(s.rows.row(i)));
        }
      }
    }
  }
  for (size_t m1 = 0; m1 < spread.members.size(); ++m1) {
    for (size_t m2 = m1 + 1; m2 < spread.members.size(); ++m2) {
      if (intersection_dim(spread.members[m1], spread.members[m2]) != 0) {
        rep.pass = false;
        rep.add("members " + std::to_string(m1) + " and " + std::to_string(m2) +
                " intersect nontrivially");
        if (rep.details.size() >= 32) return rep;
      }
    }
  }
  // Partition of the nonzero vectors follows by counting once the above hold.
  if (rep.pass) {
    const int64_t covered = static_cast<int64_t>(spread.members.size()) * (N - 1);
    int64_t total = 1;
    for (int i = 0; i < sp.dim(); ++i) total *= sp.p;
    if (covered != total - 1) {
      rep.pass = false;
      rep.add("covered vector count " + std::to_string(covered) + " != " + std::to_string(total - 1));
    }
  }
  if (rep.pass)
    rep.add("members=" + std::to_string(spread.members.size()) + " p=" + std::to_string(sp.p) +
            " n=" + std::to_string(sp.n) + " partition exact");
  return rep;
}

CheckReport verify_orthogonal_spread(const OrthogonalSpread& spread) {
  CheckReport rep{"orthogonal_spread", true, {}};
  const int n = spread.space.n;
  if (n % 2 != 0) {
    rep.pass = false;
    rep.add("n must be even (n = " + std::to_string(n) + ")");
  }
  const int64_t expected = (1LL << (n - 1)) + 1;
  if (static_cast<int64_t>(spread.members.size()) != expected) {
    rep.pass = false;
    rep.add("member count " + std::to_string(spread.members.size()) + " != 2^(n-1)+1 = " +
            std::to_string(expected));
  }
  const SymplecticSpace sp{2, n};
  for (size_t m = 0; m < spread.members.size(); ++m) {
    const Subspace& s = spread.members[m];
    if (s.p != 2 || s.ambient != 2 * n || s.dim() != n) {
      rep.pass = false;
      rep.add("member " + std::to_string(m) + " is not an n-space of Z_2^(2n)");
      continue;
    }
    // totally singular: Q vanishes on the whole row space (all combinations)
    for (const auto& v : row_space_vectors(s)) {
      if (quadratic_form_binary(v) != 0) {
        rep.pass = false;
        rep.add("member " + std::to_string(m) + " not totally singular at vector " + row_to_string(v));
        break;
      }
    }
    for (int i = 0; i < s.dim(); ++i)
      for (int j = i + 1; j < s.dim(); ++j)
        if (symplectic_form(sp, s.rows.row(i), s.rows.row(j)) != 0) {
          rep.pass = false;
          rep.add("member " + std::to_string(m) + " not totally isotropic (polarization)");
        }
  }
  for (size_t m1 = 0; m1 < spread.members.size(); ++m1)
    for (size_t m2 = m1 + 1; m2 < spread.members.size(); ++m2)
      if (intersection_dim(spread.members[m1], spread.members[m2]) != 0) {
        rep.pass = false;
        rep.add("members " + std::to_string(m1) + " and " + std::to_string(m2) +
                " intersect nontrivially");
        if (rep.details.size() >= 32) return rep;
      }
  if (rep.pass)
    rep.add("members=" + std::to_string(spread.members.size()) + " n=" + std::to_string(n) +
            " totally singular");
  return rep;
}

CheckReport verify_spread_set(const SpreadSet& k) {
  CheckReport rep{"spread_set", true, {}};
  const int64_t N = k.expected_count();
  if (static_cast<int64_t>(k.matrices.size()) != N) {
    rep.pass = false;
    rep.add("matrix count " + std::to_string(k.matrices.size()) + " != p^n = " + std::to_string(N));
  }
  for (size_t i = 0; i < k.matrices.size(); ++i) {
    const MatZp& m = k.matrices[i];
    if (m.rows != k.n || m.cols != k.n || m.p != k.p) {
      rep.pass = false;
      rep.add("matrix " + std::to_string(i) + " has the wrong shape");
      continue;
    }
    for (int r = 0; r < k.n; ++r)
      for (int c = r + 1; c < k.n; ++c)
        if (m.at(r, c) != m.at(c, r)) {
          rep.pass = false;
          rep.add("matrix " + std::to_string(i) + " not symmetric at (" + std::to_string(r) + "," +
                  std::to_string(c) + ")");
        }
  }
  for (size_t i = 0; i < k.matrices.size() && rep.details.size() < 32; ++i) {
    for (size_t j = i + 1; j < k.matrices.size(); ++j) {
      MatZp d = k.matrices[i];
      for (size_t t = 0; t < d.a.size(); ++t) {
        int32_t v = d.a[t] - k.matrices[j].a[t];
        if (v < 0) v += static_cast<int32_t>(k.p);
        d.a[t] = v;
      }
      if (!is_nonsingular(d)) {
        rep.pass = false;
        rep.add("difference of matrices " + std::to_string(i) + " and " + std::to_string(j) +
                " is singular");
        if (rep.details.size() >= 32) break;
      }
    }
  }
  return rep;
}

SymplecticSpread spread_from_spreadset(const SpreadSet& k) {
  CheckReport chk = verify_spread_set(k);
  if (!chk.pass) fail(Errc::InvalidSpreadSet, chk.details.empty() ? "invalid spread set" : chk.details[0]);
  const int n = k.n;
  SymplecticSpread spread;
  spread.space = SymplecticSpace{k.p, n};

  MatZp zero_v = MatZp::zero(k.p, n, 2 * n);
  for (int i = 0; i < n; ++i) zero_v.at(i, n + i) = 1;
  spread.members.push_back(make_subspace(k.p, 2 * n, std::move(zero_v)));  // 0+V

  for (const MatZp& m : k.matrices) {
    MatZp rows = MatZp::zero(k.p, n, 2 * n);
    for (int i = 0; i < n; ++i) {
      rows.at(i, i) = 1;
      for (int j = 0; j < n; ++j) rows.at(i, n + j) = m.at(j, i);  // column i of M
    }
    spread.members.push_back(make_subspace(k.p, 2 * n, std::move(rows)));
  }
  return spread;
}

SpreadSet spreadset_from_spread(const SymplecticSpread& spread, const Subspace& first,
                                const Subspace& second) {
  const SymplecticSpace& sp = spread.space;
  const int n = sp.n;
  auto find_member = [&](const Subspace& s) {
    for (size_t i = 0; i < spread.members.size(); ++i)
      if (spread.members[i] == s) return static_cast<int>(i);
    return -1;
  };
  const int fi = find_member(first), si = find_member(second);
  if (fi < 0 || si < 0 || fi == si)
    fail(Errc::MembersNotInSpread, "distinguished members must be distinct members of the spread");
  if (intersection_dim(first, second) != 0)
    fail(Errc::InvalidSpreadSet, "distinguished members are not complementary");

  // Pair the bases of the two members: G_ij = form(a_i, b_j) is invertible
  // because first + second = Z_p^(2n); replacing b by G^{-1}-combinations makes
  // (a_1..a_n, b'_1..b'_n) a symplectic basis.
  MatZp g = MatZp::zero(sp.p, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.at(i, j) = symplectic_form(sp, first.rows.row(i), second.rows.row(j));
  MatZp ginv = mat_inverse(g);
  MatZp bprime = mat_mul(transpose(ginv), second.rows);  // b'_k = sum_j ginv[j][k] b_j

  MatZp s = MatZp::zero(sp.p, 2 * n, 2 * n);  // columns are the symplectic basis
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < 2 * n; ++r) {
      s.at(r, c) = first.rows.at(c, r);
      s.at(r, n + c) = bprime.at(c, r);
    }
  MatZp t = mat_inverse(s);
  MatZp tt = transpose(t);

  SpreadSet k;
  k.p = sp.p;
  k.n = n;
  for (size_t m = 0; m < spread.members.size(); ++m) {
    if (static_cast<int>(m) == si) continue;
    Subspace img = make_subspace(sp.p, 2 * n, mat_mul(spread.members[m].rows, tt));
    // disjoint from the new 0+V, so the left block of the echelon basis is I
    MatZp mat = MatZp::zero(sp.p, n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (img.rows.at(i, j) != (i == j ? 1 : 0))
          fail(Errc::InvalidSpreadSet, "member does not reduce to a matrix graph");
        mat.at(j, i) = img.rows.at(i, n + j);  // row i = (e_i | M e_i)
      }
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (mat.at(i, j) != mat.at(j, i))
          fail(Errc::InvalidSpreadSet, "graph matrix of a member is not symmetric");
    k.matrices.push_back(std::move(mat));
  }
  CheckReport chk = verify_spread_set(k);
  if (!chk.pass) fail(Errc::InvalidSpreadSet, chk.details.empty() ? "derived set invalid" : chk.details[0]);
  return k;
}

SpreadSet semifield_to_spreadset(int64_t p, int n,
                                 const std::vector<std::vector<int64_t>>& mult) {
  int64_t N = 1;
  for (int i = 0; i < n; ++i) N *= p;
  if (static_cast<int64_t>(mult.size()) != N)
    fail(Errc::MalformedTable, "multiplication table must be p^n x p^n");
  for (const auto& row : mult)
    if (static_cast<int64_t>(row.size()) != N) fail(Errc::MalformedTable, "ragged multiplication table");

  auto rank_add = [&](int64_t a, int64_t b) {
    std::vector<int32_t> va = from_lex_rank(a, n, p), vb = from_lex_rank(b, n, p);
    for (int i = 0; i < n; ++i)
      va[static_cast<size_t>(i)] = static_cast<int32_t>((va[static_cast<size_t>(i)] + vb[static_cast<size_t>(i)]) % p);
    return lex_rank(va, p);
  };
  auto rank_scale = [&](int64_t a, int64_t c) {
    std::vector<int32_t> va = from_lex_rank(a, n, p);
    for (int i = 0; i < n; ++i)
      va[static_cast<size_t>(i)] = static_cast<int32_t>(va[static_cast<size_t>(i)] * c % p);
    return lex_rank(va, p);
  };

  for (int64_t x = 0; x < N; ++x)
    for (int64_t y = 0; y < N; ++y) {
      if (mult[static_cast<size_t>(x)][static_cast<size_t>(y)] !=
          mult[static_cast<size_t>(y)][static_cast<size_t>(x)])
        fail(Errc::NotCommutative, "x*y != y*x at ranks " + std::to_string(x) + "," + std::to_string(y));
      if (x != 0 && y != 0 && mult[static_cast<size_t>(x)][static_cast<size_t>(y)] == 0)
        fail(Errc::ZeroDivisor, "x*y = 0 at ranks " + std::to_string(x) + "," + std::to_string(y));
    }
  // Z_p-bilinearity: additivity and scaling in the left slot (enough, with
  // commutativity, for both slots).
  for (int64_t x = 0; x < N; ++x)
    for (int64_t y = 0; y < N; ++y) {
      for (int64_t z = 0; z < N; ++z) {
        if (mult[static_cast<size_t>(rank_add(x, z))][static_cast<size_t>(y)] !=
            rank_add(mult[static_cast<size_t>(x)][static_cast<size_t>(y)],
                     mult[static_cast<size_t>(z)][static_cast<size_t>(y)]))
          fail(Errc::MalformedTable, "multiplication is not additive");
      }
      for (int64_t c = 0; c < p; ++c)
        if (mult[static_cast<size_t>(rank_scale(x, c))][static_cast<size_t>(y)] !=
            rank_scale(mult[static_cast<size_t>(x)][static_cast<size_t>(y)], c))
          fail(Errc::MalformedTable, "multiplication is not Z_p-homogeneous");
    }

  SpreadSet k;
  k.p = p;
  k.n = n;
  std::vector<int64_t> unit_ranks(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<int32_t> e(static_cast<size_t>(n), 0);
    e[static_cast<size_t>(i)] = 1;
    unit_ranks[static_cast<size_t>(i)] = lex_rank(e, p);
  }
  for (int64_t b = 0; b < N; ++b) {
    std::vector<int32_t> bv = from_lex_rank(b, n, p);
    MatZp m = MatZp::zero(p, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const int64_t prod = mult[static_cast<size_t>(unit_ranks[static_cast<size_t>(i)])]
                                 [static_cast<size_t>(unit_ranks[static_cast<size_t>(j)])];
        std::vector<int32_t> pv = from_lex_rank(prod, n, p);
        m.at(i, j) = dot_mod(bv, pv, p);
      }
    k.matrices.push_back(std::move(m));
  }
  CheckReport chk = verify_spread_set(k);
  if (!chk.pass)
    fail(Errc::InvalidSpreadSet, chk.details.empty() ? "semifield spread set invalid" : chk.details[0]);
  return k;
}

std::vector<Subspace> totally_singular_spaces(int n) {
  const int dim = 2 * n;
  std::vector<Subspace> out;
  // enumerate RREF bases by pivot-column choice and free entries
  std::vector<int> pivots(static_cast<size_t>(n));
  std::function<void(int, int)> choose = [&](int start, int k) {
    if (k == n) {
      // free positions: entries right of each pivot, outside pivot columns,
      // and zero above pivots
      std::vector<std::pair<int, int>> free_pos;
      for (int r = 0; r < n; ++r)
        for (int c = pivots[static_cast<size_t>(r)] + 1; c < dim; ++c) {
          bool is_pivot_col = false;
          for (int r2 = 0; r2 < n; ++r2)
            if (pivots[static_cast<size_t>(r2)] == c) is_pivot_col = true;
          if (!is_pivot_col) free_pos.emplace_back(r, c);
        }
      const size_t f = free_pos.size();
      for (uint64_t mask = 0; mask < (1ULL << f); ++mask) {
        MatZp rows = MatZp::zero(2, n, dim);
        for (int r = 0; r < n; ++r) rows.at(r, pivots[static_cast<size_t>(r)]) = 1;
        for (size_t i = 0; i < f; ++i)
          if (mask & (1ULL << i)) rows.at(free_pos[i].first, free_pos[i].second) = 1;
        // totally singular test over all nonzero combinations
        bool ok = true;
        std::vector<int32_t> v(static_cast<size_t>(dim));
        for (uint32_t combo = 1; combo < (1u << n) && ok; ++combo) {
          std::fill(v.begin(), v.end(), 0);
          for (int r = 0; r < n; ++r)
            if (combo & (1u << r))
              for (int c = 0; c < dim; ++c) v[static_cast<size_t>(c)] ^= rows.at(r, c);
          if (quadratic_form_binary(v) != 0) ok = false;
        }
        if (ok) out.push_back(Subspace{2, dim, std::move(rows)});
      }
      return;
    }
    for (int c = start; c < dim; ++c) {
      pivots[static_cast<size_t>(k)] = c;
      choose(c + 1, k + 1);
    }
  };
  choose(0, 0);
  std::sort(out.begin(), out.end(), subspace_less);
  return out;
}

std::vector<OrthogonalSpread> search_orthogonal_spreads(int n, int limit) {
  if (n % 2 != 0) fail(Errc::BadParameters, "n must be even");
  if (2 * n > 8) fail(Errc::TooLarge, "search supports 2n <= 8 only");
  std::vector<OrthogonalSpread> found;
  if (limit <= 0) return found;

  const std::vector<Subspace> spaces = totally_singular_spaces(n);
  const size_t count = spaces.size();
  std::vector<std::vector<bool>> compatible(count, std::vector<bool>(count, false));
  for (size_t i = 0; i < count; ++i)
    for (size_t j = i + 1; j < count; ++j)
      compatible[i][j] = compatible[j][i] = intersection_dim(spaces[i], spaces[j]) == 0;

  const size_t target = static_cast<size_t>((1LL << (n - 1)) + 1);
  std::vector<size_t> chosen;
  std::function<bool(size_t)> dfs = [&](size_t start) {
    if (chosen.size() == target) {
      OrthogonalSpread s;
      s.space = QuadraticSpace{n};
      for (size_t idx : chosen) s.members.push_back(spaces[idx]);
      found.push_back(std::move(s));
      return static_cast<int>(found.size()) >= limit;
    }
    for (size_t i = start; i < count; ++i) {
      bool ok = true;
      for (size_t idx : chosen)
        if (!compatible[idx][i]) { ok = false; break; }
      if (!ok) continue;
      chosen.push_back(i);
      if (dfs(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  dfs(0);
  return found;
}

}  // namespace mub
