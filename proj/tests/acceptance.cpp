// Acceptance suite: one criterion per numbered block, one PASS/FAIL line each.
// Everything is exact integer arithmetic; the only tolerances are the wall
// clock budgets stated inline.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <mub/equiv.hpp>
#include <mub/errors.hpp>
#include <mub/io.hpp>

using namespace mub;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int g_failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail, double secs) {
  std::printf("CRITERION %d %s %s (%s) [%.1fs]\n", id, pass ? "PASS" : "FAIL", name.c_str(),
              detail.c_str(), secs);
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

void run(int id, const std::string& name, const std::function<bool(std::string&)>& body) {
  const auto t0 = Clock::now();
  std::string detail;
  bool pass = false;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  report(id, name, pass, detail, seconds_since(t0));
}

struct Instance {
  std::string name;
  MubSet mubs;
  SymplecticSpread spread;  // members aligned with mubs.frames
  EigenContext ctx;
};

const std::vector<std::pair<int64_t, int>> kDesarguesianList = {
    {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}};

Instance build_desarguesian(int64_t p, int n) {
  Instance inst;
  inst.name = "desarguesian(" + std::to_string(p) + "," + std::to_string(n) + ")";
  if (p == 2) {
    const SpreadSet k = desarguesian(2, n);
    inst.mubs = frames_from_spreadset_binary(k);
    inst.spread = spread_from_spreadset(k);
    inst.ctx = EigenContext::complex_binary;
  } else if (n % 2 == 1) {
    const SpreadSet k = desarguesian(p, n);
    inst.mubs = frames_from_spreadset_odd(k);
    inst.spread = spread_from_spreadset(k);
    inst.ctx = EigenContext::complex_odd;
  } else {
    const ExponentFamily fam = desarguesian_exponents(p, n);
    inst.mubs = frames_from_exponents(fam);
    inst.spread = spread_from_spreadset(spreadset_from_exponent_family(fam));
    inst.ctx = EigenContext::complex_odd;
  }
  inst.mubs.prov.family = "desarguesian";
  inst.mubs.prov.params = {{"p", std::to_string(p)}, {"n", std::to_string(n)}};
  return inst;
}

Instance build_kantor5() {
  Instance inst;
  inst.name = "kantor(5)";
  const SymplecticSpread spread = kantor_binary(5);
  const SpreadSet k = spreadset_from_spread(spread, spread.members[1], spread.members[0]);
  inst.mubs = frames_from_spreadset_binary(k);
  inst.mubs.prov.family = "kantor";
  inst.mubs.prov.params = {{"n", "5"}, {"p", "2"}};
  inst.spread = spread_from_spreadset(k);
  inst.ctx = EigenContext::complex_binary;
  return inst;
}

Instance build_bkl331() {
  Instance inst;
  inst.name = "bkl(3,3,1)";
  const ExponentFamily fam = bkl_exponents(3, 3, 1);
  inst.mubs = frames_from_exponents(fam);
  inst.spread = spread_from_spreadset(spreadset_from_exponent_family(fam));
  inst.ctx = EigenContext::complex_odd;
  return inst;
}

std::vector<int64_t> planar_table(const Field& f, int64_t k) {
  int64_t e = 1;
  for (int64_t i = 0; i < k; ++i) e *= 3;
  e = (e + 1) / 2;
  std::vector<int64_t> table;
  for (int64_t r = 0; r < f.size(); ++r) table.push_back(f.from_rank(r).pow(e).rank());
  return table;
}

}  // namespace

int main() {
  std::vector<Instance> spread_based;  // criteria 5, 6, 9 reuse these

  // 1. Desarguesian completeness at all listed (p, n), exact all-pairs
  //    verification, <= 60 s per instance, single thread.
  run(1, "desarguesian completeness", [&](std::string& detail) {
    bool ok = true;
    std::ostringstream os;
    for (const auto& [p, n] : kDesarguesianList) {
      const auto t0 = Clock::now();
      Instance inst = build_desarguesian(p, n);
      const int64_t N = inst.mubs.dim;
      const bool frames_ok = static_cast<int64_t>(inst.mubs.frames.size()) == N + 1;
      const CheckReport rep = verify_mub_set(inst.mubs, VerifyMode::all_pairs, 1);
      const double secs = seconds_since(t0);
      const bool in_budget = secs <= 60.0;
      if (!frames_ok || !rep.pass || !in_budget) {
        ok = false;
        os << " " << inst.name << ":FAIL";
        if (!rep.pass && !rep.details.empty()) os << "[" << rep.details[0] << "]";
        if (!in_budget) os << "[over 60s]";
      }
      spread_based.push_back(std::move(inst));
    }
    detail = std::to_string(kDesarguesianList.size()) + " instances, N+1 frames each, exact" + os.str();
    return ok;
  });

  // 2. Kantor family at n = 5.
  run(2, "kantor family n=5", [&](std::string& detail) {
    const SymplecticSpread spread = kantor_binary(5);
    const CheckReport srep = verify_symplectic_spread(spread);
    if (!srep.pass || spread.members.size() != 33) {
      detail = "spread verification failed";
      return false;
    }
    const SpreadSet k = spreadset_from_spread(spread, spread.members[1], spread.members[0]);
    const CheckReport krep = verify_spread_set(k);
    if (!krep.pass || k.matrices.size() != 32) {
      detail = "derived spread set violates the nonsingular-difference condition";
      return false;
    }
    Instance inst = build_kantor5();
    const CheckReport mrep = verify_mub_set(inst.mubs, VerifyMode::all_pairs, 1);
    if (!mrep.pass || inst.mubs.frames.size() != 33) {
      detail = "33-frame MUB set failed exact verification";
      return false;
    }
    // canonical member lists differ from the Desarguesian spread
    std::vector<std::vector<int32_t>> a, b;
    for (const auto& mem : spread.members) a.push_back(mem.rows.a);
    for (const auto& mem : spread_from_spreadset(desarguesian(2, 5)).members) b.push_back(mem.rows.a);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a == b) {
      detail = "kantor spread equals the Desarguesian spread";
      return false;
    }
    spread_based.push_back(std::move(inst));
    detail = "33 members in Z_2^10, spread set exact, 33 MUBs of C^32, spreads differ";
    return true;
  });

  // 3. BKL family at (3,3,1).
  run(3, "bkl family (3,3,1)", [&](std::string& detail) {
    Instance inst = build_bkl331();
    if (inst.mubs.frames.size() != 28) {
      detail = "expected 28 frames";
      return false;
    }
    const CheckReport rep = verify_mub_set(inst.mubs, VerifyMode::all_pairs, 1);
    if (!rep.pass) {
      detail = rep.details.empty() ? "verification failed" : rep.details[0];
      return false;
    }
    const MubSet des = frames_from_spreadset_odd(desarguesian(3, 3));
    if (!frames_equal_as_sets(inst.mubs.frames[1], des.frames[1])) {
      detail = "b=0 frame is not the Fourier frame";
      return false;
    }
    spread_based.push_back(std::move(inst));
    detail = "28 exact MUBs of C^27; b=0 frame = Fourier frame as 1-spaces";
    return true;
  });

  // 4. Planar family at (n,k) = (5,3): full planarity brute force,
  //    difference-class verification, invariance pattern, orbit structure;
  //    <= 10 min single thread.
  MubSet planar_mubs;
  run(4, "planar family (5,3)", [&](std::string& detail) {
    const auto t0 = Clock::now();
    const Field f(3, 5);
    const PlanarResult pr = is_planar(f, planar_table(f, 3));
    if (!pr.planar) {
      detail = "x^14 failed the planarity brute force";
      return false;
    }
    const ExponentFamily fam = planar_exponents(5, 3);
    planar_mubs = frames_from_exponents(fam);
    if (planar_mubs.frames.size() != 244) {
      detail = "expected 244 frames";
      return false;
    }
    const CheckReport rep = verify_mub_set(planar_mubs, VerifyMode::difference_class, 1);
    if (!rep.pass) {
      detail = rep.details.empty() ? "verification failed" : rep.details[0];
      return false;
    }
    const std::vector<GeneratorVerdict> inv = standard_invariance_details(planar_mubs);
    bool x_fails = false, z_all_pass = true;
    for (const GeneratorVerdict& g : inv) {
      if (g.type == 'X' && !g.fixes_all) x_fails = true;
      if (g.type == 'Z' && !g.fixes_all) z_all_pass = false;
    }
    if (!x_fails || !z_all_pass) {
      detail = "invariance pattern wrong: expected X failures and Z passes";
      return false;
    }
    const CheckReport orbits = planar_orbit_check(planar_mubs);
    if (!orbits.pass) {
      detail = orbits.details.empty() ? "orbit check failed" : orbits.details[0];
      return false;
    }
    const double secs = seconds_since(t0);
    if (secs > 600.0) {
      detail = "over the 10-minute budget";
      return false;
    }
    detail = "planarity exact; 244 frames unbiased (difference-class); X fails / Z passes; "
             "243 singletons + one orbit of 59049";
    return true;
  });

  // 5. Oracle equivalence: constructed frames = character-projection frames,
  //    frame by frame, for every family instance with N <= 32.
  run(5, "eigenframe oracle equivalence (N <= 32)", [&](std::string& detail) {
    int frames_checked = 0;
    for (const Instance& inst : spread_based) {
      if (inst.mubs.dim > 32) continue;
      if (inst.mubs.frames.size() != inst.spread.members.size()) {
        detail = inst.name + ": frame/member count mismatch";
        return false;
      }
      for (size_t i = 0; i < inst.spread.members.size(); ++i) {
        const Orthoframe oracle = eigenframe(inst.spread.members[i], inst.ctx);
        if (!frames_equal_as_sets(oracle, inst.mubs.frames[i])) {
          detail = inst.name + ": frame " + std::to_string(i) + " differs from its eigenframe";
          return false;
        }
        ++frames_checked;
      }
    }
    detail = std::to_string(frames_checked) + " frames across " +
             std::to_string(spread_based.size()) + " instances match their eigenframes";
    return true;
  });

  // 6. P-invariance for every spread-based set with N <= 32.
  run(6, "standard-group invariance (N <= 32)", [&](std::string& detail) {
    int sets = 0;
    for (const Instance& inst : spread_based) {
      if (inst.mubs.dim > 32) continue;
      const CheckReport rep = standard_invariance_test(inst.mubs);
      if (!rep.pass) {
        detail = inst.name + ": a standard generator moves a frame";
        return false;
      }
      ++sets;
    }
    detail = "X(e_i), Z(e_i) fix every frame of " + std::to_string(sets) + " spread-based sets";
    return true;
  });

  // 7. Real case at n = 2: orthogonal spread search, real eigenframes with
  //    |z|^2 = 4 on all cross pairs, bound N/2+1 = 3, odd n rejected.
  run(7, "real MUBs of R^4 from an orthogonal spread", [&](std::string& detail) {
    const auto spreads = search_orthogonal_spreads(2, 1);
    if (spreads.size() != 1 || !verify_orthogonal_spread(spreads[0]).pass) {
      detail = "search did not produce a verified orthogonal spread";
      return false;
    }
    MubSet real_set;
    real_set.p = 2;
    real_set.n = 2;
    real_set.dim = 4;
    real_set.real = true;
    real_set.root = Root::fourth_root();
    real_set.prov.family = "orthogonal-spread";
    for (const Subspace& member : spreads[0].members)
      real_set.frames.push_back(eigenframe(member, EigenContext::real_binary));

    for (const Orthoframe& fr : real_set.frames)
      for (int64_t a = 0; a < 4; ++a)
        for (const CycInt& e : fr.row_vector(a))
          if (e.coeffs()[1] != 0) {
            detail = "a frame entry is not real";
            return false;
          }
    for (size_t i = 0; i < real_set.frames.size(); ++i)
      for (size_t j = i + 1; j < real_set.frames.size(); ++j)
        for (int64_t a = 0; a < 4; ++a)
          for (int64_t b = 0; b < 4; ++b) {
            const CycInt z = hermitian_inner(real_set.frames[i].row_vector(a),
                                             real_set.frames[j].row_vector(b));
            if (!squared_magnitude_is(z, 4)) {
              detail = "cross inner product without squared magnitude 4";
              return false;
            }
          }
    if (!verify_mub_set(real_set, VerifyMode::all_pairs, 1).pass) {
      detail = "3-frame real set failed verification";
      return false;
    }

    MubSet overfull = real_set;
    overfull.frames.push_back(overfull.frames[0]);
    overfull.frames.back().label = "fourth";
    const CheckReport rep = verify_mub_set(overfull, VerifyMode::all_pairs, 1);
    bool bound_witness = false;
    for (const auto& d : rep.details)
      if (d.find("bound") != std::string::npos) bound_witness = true;
    if (rep.pass || !bound_witness) {
      detail = "a fourth frame was not rejected by the N/2+1 bound";
      return false;
    }

    OrthogonalSpread odd;
    odd.space = QuadraticSpace{3};
    const CheckReport odd_rep = verify_orthogonal_spread(odd);
    bool even_witness = false;
    for (const auto& d : odd_rep.details)
      if (d.find("even") != std::string::npos) even_witness = true;
    bool search_rejects = false;
    try {
      search_orthogonal_spreads(3, 1);
    } catch (const Error&) {
      search_rejects = true;
    }
    if (odd_rep.pass || !even_witness || !search_rejects) {
      detail = "odd n was not rejected";
      return false;
    }
    detail = "3 real frames, |z|^2 = 4 on 48 cross pairs, bound 3 enforced, n=3 rejected";
    return true;
  });

  // 8. Bound enforcement: appending any of the construction's own frames
  //    (shifted label) to a complete set with N <= 8 fails verification.
  run(8, "appending to a complete set always fails (N <= 8)", [&](std::string& detail) {
    int appended = 0;
    for (const Instance& inst : spread_based) {
      if (inst.mubs.dim > 8) continue;
      for (size_t i = 0; i < inst.mubs.frames.size(); ++i) {
        MubSet extended = inst.mubs;
        extended.frames.push_back(inst.mubs.frames[i]);
        extended.frames.back().label += "+shifted";
        if (verify_mub_set(extended, VerifyMode::all_pairs, 1).pass) {
          detail = inst.name + ": appending frame " + std::to_string(i) + " passed verification";
          return false;
        }
        ++appended;
      }
    }
    detail = std::to_string(appended) + " appended-frame variants all rejected";
    return true;
  });

  // 9. Determinism of the invariant battery: byte-identical records over 3
  //    runs, and verification reports independent of the thread count {1, 4}.
  run(9, "invariant battery determinism", [&](std::string& detail) {
    const AffinePlane des_plane = plane_from_spreadset(desarguesian(2, 5));
    const SymplecticSpread ks = kantor_binary(5);
    const AffinePlane kantor_plane =
        plane_from_spreadset(spreadset_from_spread(ks, ks.members[1], ks.members[0]));

    std::vector<std::pair<const MubSet*, const AffinePlane*>> subjects;
    for (const Instance& inst : spread_based) {
      const AffinePlane* plane = nullptr;
      if (inst.mubs.prov.family == "kantor") plane = &kantor_plane;
      if (inst.mubs.prov.family == "desarguesian" && inst.mubs.dim == 32) plane = &des_plane;
      subjects.emplace_back(&inst.mubs, plane);
    }
    subjects.emplace_back(&planar_mubs, nullptr);

    int64_t des_rank = -1, kantor_rank = -1;
    for (const auto& [mubs, plane] : subjects) {
      std::string first;
      for (int trial = 0; trial < 3; ++trial) {
        const std::string text = invariant_battery(*mubs, plane).serialize();
        if (trial == 0)
          first = text;
        else if (text != first) {
          detail = "record differs across runs for " + mubs->prov.family;
          return false;
        }
      }
      if (plane != nullptr) {
        const InvariantRecord rec = invariant_battery(*mubs, plane);
        if (mubs->prov.family == "kantor") kantor_rank = *rec.plane_rank;
        if (mubs->prov.family == "desarguesian") des_rank = *rec.plane_rank;
      }
      const VerifyMode mode =
          mubs->dim <= 32 ? VerifyMode::all_pairs : VerifyMode::difference_class;
      const CheckReport one = verify_mub_set(*mubs, mode, 1);
      const CheckReport four = verify_mub_set(*mubs, mode, 4);
      if (one.pass != four.pass || one.details != four.details) {
        detail = "verification report depends on the thread count";
        return false;
      }
    }
    detail = std::to_string(subjects.size()) +
             " records stable over 3 runs and threads {1,4}; plane ranks at N=32: desarguesian=" +
             std::to_string(des_rank) + " kantor=" + std::to_string(kantor_rank);
    return true;
  });

  // 10. Negative controls: every verifier fails with a correct witness on a
  //     mutated input.
  run(10, "negative controls carry correct witnesses", [&](std::string& detail) {
    // one exponent bumped
    MubSet corrupted = frames_from_spreadset_odd(desarguesian(3, 3));
    corrupted.frames[2].exps[5] = static_cast<uint8_t>((corrupted.frames[2].exps[5] + 1) % 3);
    bool witness = false;
    for (const VerifyMode mode : {VerifyMode::all_pairs, VerifyMode::difference_class}) {
      const CheckReport rep = verify_mub_set(corrupted, mode, 1);
      if (rep.pass) {
        detail = "bumped exponent passed verification";
        return false;
      }
      for (const auto& d : rep.details)
        if (d.find("frame") != std::string::npos && d.find("2") != std::string::npos) witness = true;
    }
    if (!witness) {
      detail = "missing witness for the corrupted frame";
      return false;
    }

    // one spread member replaced
    SymplecticSpread damaged = spread_from_spreadset(desarguesian(2, 2));
    MatZp rows = MatZp::zero(2, 2, 4);
    rows.at(0, 0) = 1;
    rows.at(1, 2) = 1;  // hyperbolic pair: not totally isotropic
    damaged.members[3] = make_subspace(2, 4, std::move(rows));
    const CheckReport srep = verify_symplectic_spread(damaged);
    bool member_witness = false;
    for (const auto& d : srep.details)
      if (d.find("3") != std::string::npos) member_witness = true;
    if (srep.pass || !member_witness) {
      detail = "replaced spread member not witnessed";
      return false;
    }

    // one plane line deleted
    AffinePlane plane = plane_from_spreadset(desarguesian(3, 1));
    plane.lines.erase(plane.lines.begin() + 7);
    const CheckReport prep = verify_plane_axioms(plane, {});
    if (prep.pass || prep.details.empty()) {
      detail = "deleted line not witnessed";
      return false;
    }

    // one orthogonal-spread member replaced by a non-singular space
    OrthogonalSpread ortho = search_orthogonal_spreads(2, 1)[0];
    MatZp bad = MatZp::zero(2, 2, 4);
    bad.at(0, 0) = bad.at(0, 2) = 1;
    bad.at(1, 1) = bad.at(1, 3) = 1;
    ortho.members[2] = make_subspace(2, 4, std::move(bad));
    const CheckReport orep = verify_orthogonal_spread(ortho);
    if (orep.pass || orep.details.empty()) {
      detail = "non-singular member not witnessed";
      return false;
    }

    detail = "mub/spread/plane/orthospread mutations all fail with witnesses";
    return true;
  });

  std::printf("%s: %d/10 criteria passed\n", g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              10 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
