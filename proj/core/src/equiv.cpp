#include "mub/equiv.hpp"

#include <algorithm>
#include <sstream>

#include "mub/errors.hpp"

namespace mub {

namespace {

int64_t ipow(int64_t b, int e) {
  int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// digitwise addition of lex ranks, the index image of adding field elements
int64_t rank_add(int64_t a, int64_t b, int n, int64_t p) {
  std::vector<int32_t> va = from_lex_rank(a, n, p), vb = from_lex_rank(b, n, p);
  for (int i = 0; i < n; ++i)
    va[static_cast<size_t>(i)] =
        static_cast<int32_t>((va[static_cast<size_t>(i)] + vb[static_cast<size_t>(i)]) % p);
  return lex_rank(va, p);
}

}  // namespace

std::vector<GeneratorVerdict> standard_invariance_details(const MubSet& m) {
  const int n = m.n;
  std::vector<GeneratorVerdict> verdicts;

  std::vector<std::vector<int64_t>> originals;
  originals.reserve(m.frames.size());
  for (const Orthoframe& f : m.frames)
    originals.push_back(f.kind == Orthoframe::Kind::standard ? std::vector<int64_t>{}
                                                             : frame_fingerprint(f));

  for (char type : {'X', 'Z'}) {
    for (int i = 0; i < n; ++i) {
      WeylOperator w;
      w.type = type == 'X' ? WeylOperator::Type::X : WeylOperator::Type::Z;
      w.b.assign(static_cast<size_t>(n), 0);
      w.b[static_cast<size_t>(i)] = 1;
      bool fixes = true;
      for (size_t fi = 0; fi < m.frames.size() && fixes; ++fi) {
        const Orthoframe& f = m.frames[fi];
        if (f.kind == Orthoframe::Kind::standard) continue;  // X permutes, Z fixes <e_v>
        const Orthoframe t = apply_weyl(w, f);
        if (frame_fingerprint(t) != originals[fi]) fixes = false;
      }
      verdicts.push_back({type, i, fixes});
    }
  }
  return verdicts;
}

CheckReport standard_invariance_test(const MubSet& m) {
  CheckReport rep{"standard_invariance", true, {}};
  const std::vector<GeneratorVerdict> verdicts = standard_invariance_details(m);
  for (const GeneratorVerdict& v : verdicts) {
    if (!v.fixes_all) {
      rep.pass = false;
      rep.add(std::string(1, v.type) + "(e_" + std::to_string(v.index) +
              ") moves at least one frame as a 1-space set");
    }
  }
  if (rep.pass) rep.add("all " + std::to_string(verdicts.size()) + " standard generators fix every frame");
  return rep;
}

CheckReport planar_orbit_check(const MubSet& m) {
  if (m.prov.family != "planar")
    fail(Errc::WrongProvenance, "orbit check applies to planar-function MUB sets");
  CheckReport rep{"planar_orbit", true, {}};
  const int n = std::stoi(m.prov.params.at("n"));
  const int64_t k = std::stoll(m.prov.params.at("k"));
  const ExponentFamily fam = planar_exponents(n, k);
  const int64_t N = fam.N;
  const int64_t p = fam.p;
  const int64_t ord = fam.root.order();
  if (m.dim != N || m.frames.size() != static_cast<size_t>(N) + 1) {
    rep.pass = false;
    rep.add("frame collection does not match the planar parameters");
    return rep;
  }
  for (size_t i = 1; i < m.frames.size(); ++i)
    if (m.frames[i].kind != Orthoframe::Kind::exponent) {
      rep.pass = false;
      rep.add("frame " + std::to_string(i) + " is not in exponent form");
      return rep;
    }
  if (m.frames[0].kind != Orthoframe::Kind::standard) {
    rep.pass = false;
    rep.add("frame 0 is not the standard frame");
    return rep;
  }

  const Field field(p, n);
  const std::vector<int64_t> idx = family_index_map(field);

  // generator ranks: the power-basis elements generate (K, +)
  std::vector<int64_t> gen_ranks;
  for (int j = 0; j < n; ++j) gen_ranks.push_back(ipow(p, n - 1 - j));

  // Verified row-level actions:
  //   e_x -> zeta^(T(c x)) e_x sends row a of F[b] to row a + c of F[b];
  //   e_x -> zeta^(T(c f(x))) e_x sends row a of F[b] to row a of F[b + c].
  for (int64_t c : gen_ranks) {
    const int64_t c_idx = idx[static_cast<size_t>(c)];
    const std::vector<uint8_t>& theta_c = fam.thetas[static_cast<size_t>(c)];
    for (int64_t b = 0; b < N; ++b) {
      const Orthoframe& fb = m.frames[static_cast<size_t>(b) + 1];
      const Orthoframe& fbc =
          m.frames[static_cast<size_t>(rank_add(b, c, n, p)) + 1];
      for (int64_t a = 0; a < N; ++a) {
        const int64_t a_shift = rank_add(a, c_idx, n, p);  // indices add digitwise
        for (int64_t v = 0; v < N; ++v) {
          if ((fb.exp_at(a, v) + fam.pairing_at(c_idx, v)) % ord != fb.exp_at(a_shift, v)) {
            rep.pass = false;
            rep.add("x-multiplier generator c=rank " + std::to_string(c) +
                    " does not shift rows inside frame b=" + std::to_string(b));
            return rep;
          }
          if ((fb.exp_at(a, v) + theta_c[static_cast<size_t>(v)]) % ord != fbc.exp_at(a, v)) {
            rep.pass = false;
            rep.add("f-multiplier generator c=rank " + std::to_string(c) +
                    " does not map frame b=" + std::to_string(b) + " onto frame b+c");
            return rep;
          }
        }
      }
    }
  }

  // Standard 1-spaces are singletons: both generator types are diagonal.
  // The verified actions on the N^2 labels (b, a) are (b, a+c) and (b+c, a);
  // the orbit of (0, 0) under the generator moves is the whole label set.
  std::vector<char> visited(static_cast<size_t>(N * N), 0);
  std::vector<int64_t> stack{0};
  visited[0] = 1;
  int64_t orbit = 0;
  while (!stack.empty()) {
    const int64_t cur = stack.back();
    stack.pop_back();
    ++orbit;
    const int64_t b = cur / N, a = cur % N;
    for (int64_t c : gen_ranks) {
      const int64_t moves[2] = {b * N + rank_add(a, idx[static_cast<size_t>(c)], n, p),
                                rank_add(b, c, n, p) * N + a};
      for (int64_t nxt : moves)
        if (!visited[static_cast<size_t>(nxt)]) {
          visited[static_cast<size_t>(nxt)] = 1;
          stack.push_back(nxt);
        }
    }
  }
  if (orbit != N * N) {
    rep.pass = false;
    rep.add("non-standard members split into more than one orbit (size " + std::to_string(orbit) + ")");
    return rep;
  }
  rep.add("orbits: " + std::to_string(N) + " singletons (standard 1-spaces) + 1 orbit of size " +
          std::to_string(N * N));
  return rep;
}

std::string InvariantRecord::serialize() const {
  std::ostringstream os;
  os << "id=" << id << '\n';
  os << "family=" << family << '\n';
  for (const auto& [k, v] : params) os << "param." << k << '=' << v << '\n';
  os << "dim=" << dim << '\n';
  os << "frames=" << frame_count << '\n';
  os << "invariance.overall=" << (invariance_overall ? "pass" : "fail") << '\n';
  for (const GeneratorVerdict& g : invariance)
    os << "invariance." << g.type << g.index << '=' << (g.fixes_all ? "pass" : "fail") << '\n';
  if (plane_rank) os << "plane_p_rank=" << *plane_rank << '\n';
  return os.str();
}

InvariantRecord invariant_battery(const MubSet& m, const AffinePlane* plane) {
  InvariantRecord rec;
  rec.family = m.prov.family.empty() ? "unknown" : m.prov.family;
  for (const auto& [k, v] : m.prov.params) rec.params.emplace_back(k, v);
  std::sort(rec.params.begin(), rec.params.end());
  std::ostringstream id;
  id << rec.family;
  for (const auto& [k, v] : rec.params) id << ':' << k << '=' << v;
  rec.id = id.str();
  rec.dim = m.dim;
  rec.frame_count = static_cast<int64_t>(m.frames.size());
  rec.invariance = standard_invariance_details(m);
  rec.invariance_overall =
      std::all_of(rec.invariance.begin(), rec.invariance.end(),
                  [](const GeneratorVerdict& g) { return g.fixes_all; });
  if (plane != nullptr) rec.plane_rank = plane_p_rank(*plane);
  return rec;
}

}  // namespace mub
