#include "mub/planes.hpp"

#include <algorithm>
#include <random>

#include "mub/errors.hpp"

namespace mub {

namespace {

int64_t ipow(int64_t b, int e) {
  int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

AffinePlane plane_from_spreadset(const SpreadSet& k) {
  CheckReport chk = verify_spread_set(k);
  if (!chk.pass) fail(Errc::InvalidSpreadSet, chk.details[0]);
  const int64_t p = k.p;
  const int n = k.n;
  const int64_t N = ipow(p, n);

  AffinePlane plane;
  plane.order = N;
  plane.p = p;
  plane.provenance = "spreadset p=" + std::to_string(p) + " n=" + std::to_string(n);
  plane.lines.reserve(static_cast<size_t>(N * N + N));

  std::vector<std::vector<int32_t>> vecs;
  vecs.reserve(static_cast<size_t>(N));
  for (int64_t v = 0; v < N; ++v) vecs.push_back(from_lex_rank(v, n, p));

  // vertical class x = b
  for (int64_t b = 0; b < N; ++b) {
    std::vector<int32_t> line;
    line.reserve(static_cast<size_t>(N));
    for (int64_t y = 0; y < N; ++y) line.push_back(static_cast<int32_t>(b * N + y));
    plane.lines.push_back(std::move(line));
  }
  // y = Mx + b
  for (const MatZp& mat : k.matrices) {
    std::vector<int64_t> mx(static_cast<size_t>(N));
    for (int64_t x = 0; x < N; ++x) {
      std::vector<int32_t> img(static_cast<size_t>(n), 0);
      for (int i = 0; i < n; ++i) {
        int64_t s = 0;
        for (int j = 0; j < n; ++j)
          s += static_cast<int64_t>(mat.at(i, j)) * vecs[static_cast<size_t>(x)][static_cast<size_t>(j)];
        img[static_cast<size_t>(i)] = static_cast<int32_t>(s % p);
      }
      mx[static_cast<size_t>(x)] = lex_rank(img, p);
    }
    for (int64_t b = 0; b < N; ++b) {
      const std::vector<int32_t>& bv = vecs[static_cast<size_t>(b)];
      std::vector<int32_t> line;
      line.reserve(static_cast<size_t>(N));
      for (int64_t x = 0; x < N; ++x) {
        std::vector<int32_t> y = from_lex_rank(mx[static_cast<size_t>(x)], n, p);
        for (int i = 0; i < n; ++i)
          y[static_cast<size_t>(i)] =
              static_cast<int32_t>((y[static_cast<size_t>(i)] + bv[static_cast<size_t>(i)]) % p);
        line.push_back(static_cast<int32_t>(x * N + lex_rank(y, p)));
      }
      plane.lines.push_back(std::move(line));
    }
  }
  return plane;
}

AffinePlane plane_from_planar(const Field& f, std::span<const int64_t> table) {
  const PlanarResult pr = is_planar(f, table);
  if (!pr.planar)
    fail(Errc::NotPlanar, "value table is not planar (witness a = rank " +
                              std::to_string(pr.a_rank) + ", b = rank " + std::to_string(pr.b_rank) +
                              ", " + std::to_string(pr.count) + " solutions)");
  const int64_t N = f.size();

  AffinePlane plane;
  plane.order = N;
  plane.p = f.p();
  plane.provenance = "planar p=" + std::to_string(f.p()) + " n=" + std::to_string(f.n());
  plane.lines.reserve(static_cast<size_t>(N * N + N));

  for (int64_t b = 0; b < N; ++b) {
    std::vector<int32_t> line;
    line.reserve(static_cast<size_t>(N));
    for (int64_t y = 0; y < N; ++y) line.push_back(static_cast<int32_t>(b * N + y));
    plane.lines.push_back(std::move(line));
  }
  // y = f(x+a) + b
  for (int64_t ar = 0; ar < N; ++ar) {
    const GFElement a = f.from_rank(ar);
    std::vector<int64_t> fxa(static_cast<size_t>(N));
    for (int64_t xr = 0; xr < N; ++xr)
      fxa[static_cast<size_t>(xr)] = table[static_cast<size_t>((f.from_rank(xr) + a).rank())];
    for (int64_t br = 0; br < N; ++br) {
      const GFElement b = f.from_rank(br);
      std::vector<int32_t> line;
      line.reserve(static_cast<size_t>(N));
      for (int64_t xr = 0; xr < N; ++xr) {
        const int64_t y = (f.from_rank(fxa[static_cast<size_t>(xr)]) + b).rank();
        line.push_back(static_cast<int32_t>(xr * N + y));
      }
      plane.lines.push_back(std::move(line));
    }
  }
  return plane;
}

CheckReport verify_plane_axioms(const AffinePlane& plane, const PlaneCheckOptions& opts) {
  CheckReport rep{"plane_axioms", true, {}};
  const int64_t N = plane.order;
  const int64_t points = N * N;
  if (static_cast<int64_t>(plane.lines.size()) != points + N) {
    rep.pass = false;
    rep.add("line count " + std::to_string(plane.lines.size()) + " != N^2+N = " +
            std::to_string(points + N));
  }
  for (size_t li = 0; li < plane.lines.size(); ++li) {
    const auto& line = plane.lines[li];
    if (static_cast<int64_t>(line.size()) != N) {
      rep.pass = false;
      rep.add("line " + std::to_string(li) + " has " + std::to_string(line.size()) + " points, not N");
      if (rep.details.size() >= 16) return rep;
      continue;
    }
    for (int32_t pt : line)
      if (pt < 0 || pt >= points) {
        rep.pass = false;
        rep.add("line " + std::to_string(li) + " references point " + std::to_string(pt) +
                " out of range");
        if (rep.details.size() >= 16) return rep;
      }
  }
  if (!rep.pass) return rep;

  // incidence lists (also checks the N+1 lines-per-point degree)
  std::vector<std::vector<int32_t>> through(static_cast<size_t>(points));
  for (size_t li = 0; li < plane.lines.size(); ++li)
    for (int32_t pt : plane.lines[li]) through[static_cast<size_t>(pt)].push_back(static_cast<int32_t>(li));
  for (int64_t pt = 0; pt < points; ++pt)
    if (static_cast<int64_t>(through[static_cast<size_t>(pt)].size()) != N + 1) {
      rep.pass = false;
      rep.add("point " + std::to_string(pt) + " lies on " +
              std::to_string(through[static_cast<size_t>(pt)].size()) + " lines, not N+1");
      if (rep.details.size() >= 16) return rep;
    }
  if (!rep.pass) return rep;

  auto common_lines = [&](int64_t p1, int64_t p2) {
    int count = 0;
    const auto& l1 = through[static_cast<size_t>(p1)];
    for (int32_t li : l1) {
      const auto& line = plane.lines[static_cast<size_t>(li)];
      if (std::find(line.begin(), line.end(), static_cast<int32_t>(p2)) != line.end()) ++count;
    }
    return count;
  };

  if (opts.exhaustive) {
    if (N > 64)
      fail(Errc::TooLarge, "exhaustive pair check is for orders <= 64; use sampled mode");
    std::vector<int32_t> pair_count(static_cast<size_t>(points * points), 0);
    for (const auto& line : plane.lines)
      for (size_t i = 0; i < line.size(); ++i)
        for (size_t j = i + 1; j < line.size(); ++j) {
          const int64_t a = std::min(line[i], line[j]);
          const int64_t b = std::max(line[i], line[j]);
          ++pair_count[static_cast<size_t>(a * points + b)];
        }
    for (int64_t a = 0; a < points; ++a)
      for (int64_t b = a + 1; b < points; ++b)
        if (pair_count[static_cast<size_t>(a * points + b)] != 1) {
          rep.pass = false;
          rep.add("points " + std::to_string(a) + "," + std::to_string(b) + " lie on " +
                  std::to_string(pair_count[static_cast<size_t>(a * points + b)]) + " common lines");
          if (rep.details.size() >= 16) return rep;
        }
  } else {
    std::mt19937_64 rng(opts.seed);
    for (int64_t s = 0; s < opts.samples; ++s) {
      const int64_t p1 = static_cast<int64_t>(rng() % static_cast<uint64_t>(points));
      int64_t p2 = static_cast<int64_t>(rng() % static_cast<uint64_t>(points - 1));
      if (p2 >= p1) ++p2;
      const int c = common_lines(p1, p2);
      if (c != 1) {
        rep.pass = false;
        rep.add("points " + std::to_string(p1) + "," + std::to_string(p2) + " lie on " +
                std::to_string(c) + " common lines (sample " + std::to_string(s) + ")");
        if (rep.details.size() >= 16) return rep;
      }
    }
  }
  if (rep.pass)
    rep.add("order=" + std::to_string(N) + " lines=" + std::to_string(plane.lines.size()) +
            (opts.exhaustive ? " pairs=exhaustive" : " pairs=sampled"));
  return rep;
}

int64_t plane_p_rank(const AffinePlane& plane) {
  const int64_t N = plane.order;
  if (N > 64) fail(Errc::TooLarge, "p-rank elimination is for orders <= 64");
  const int64_t points = N * N;
  const int64_t ncols = static_cast<int64_t>(plane.lines.size());
  // eliminate rows = points, columns = lines, over Z_p
  MatZp m = MatZp::zero(plane.p, static_cast<int>(points), static_cast<int>(ncols));
  for (int64_t li = 0; li < ncols; ++li)
    for (int32_t pt : plane.lines[static_cast<size_t>(li)]) m.at(pt, static_cast<int>(li)) = 1;
  return rref_in_place(m);
}

}  // namespace mub
