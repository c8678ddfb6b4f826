#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <mub/errors.hpp>
#include <mub/families.hpp>

using namespace mub;

TEST_CASE("desarguesian: smallest cases") {
  const SpreadSet k21 = desarguesian(2, 1);
  REQUIRE(k21.matrices.size() == 2);
  CHECK(k21.matrices[0].at(0, 0) == 0);
  CHECK(k21.matrices[1].at(0, 0) == 1);

  const SpreadSet k31 = desarguesian(3, 1);
  REQUIRE(k31.matrices.size() == 3);
  for (int64_t m = 0; m < 3; ++m) CHECK(k31.matrices[static_cast<size_t>(m)].at(0, 0) == m);

  const SpreadSet k22 = desarguesian(2, 2);
  CHECK(k22.matrices.size() == 4);
  CHECK(verify_spread_set(k22).pass);
}

TEST_CASE("desarguesian: p odd with even n has no self-dual basis") {
  try {
    desarguesian(3, 2);
    FAIL("expected NoSelfDualBasis");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoSelfDualBasis);
  }
}

TEST_CASE("kantor_binary: degree gate") {
  CHECK_THROWS_AS(kantor_binary(3), Error);
  CHECK_THROWS_AS(kantor_binary(4), Error);
  try {
    kantor_binary(2);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BadDegree);
  }
}

TEST_CASE("kantor_binary(5): a 33-member symplectic spread") {
  const SymplecticSpread s = kantor_binary(5);
  REQUIRE(s.members.size() == 33);
  CHECK(s.space.p == 2);
  CHECK(s.space.n == 5);
  CHECK(verify_symplectic_spread(s).pass);

  // m = 0: all three terms vanish, the member is y = 0
  MatZp v0 = MatZp::zero(2, 5, 10);
  for (int i = 0; i < 5; ++i) v0.at(i, i) = 1;
  CHECK(s.members[1] == make_subspace(2, 10, std::move(v0)));

  // each member map is additive: members are subspaces containing the
  // coordinate image of every x, not only the basis vectors
  const Field f(2, 5);
  const Basis basis = self_dual_basis(f);
  auto coords = [&](const GFElement& x) {
    std::vector<int32_t> c;
    for (int i = 0; i < 5; ++i) c.push_back(trace(x * basis.vectors[static_cast<size_t>(i)]));
    return c;
  };
  for (int64_t mr : {3L, 17L, 30L}) {
    const GFElement m = f.from_rank(mr);
    const Subspace& member = s.members[static_cast<size_t>(mr) + 1];
    for (int64_t xr = 0; xr < 32; ++xr) {
      const GFElement x = f.from_rank(xr);
      GFElement img = m * m * x;
      if (trace(x) != 0) img = img + m;
      if (trace(m * x) != 0) img = img + f.one();
      std::vector<int32_t> vec = coords(x);
      const std::vector<int32_t> yc = coords(img);
      vec.insert(vec.end(), yc.begin(), yc.end());
      CHECK(contains_vector(member, vec));
    }
  }
}

TEST_CASE("kantor_binary(5) differs from the Desarguesian spread as a member set") {
  const SymplecticSpread kantor = kantor_binary(5);
  const SymplecticSpread des = spread_from_spreadset(desarguesian(2, 5));
  std::vector<std::vector<int32_t>> a, b;
  for (const auto& m : kantor.members) a.push_back(m.rows.a);
  for (const auto& m : des.members) b.push_back(m.rows.a);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a != b);
}

TEST_CASE("bkl_exponents: parameter gate") {
  CHECK_THROWS_AS(bkl_exponents(3, 3, 2), Error);  // 2 >= 3/2
  CHECK_THROWS_AS(bkl_exponents(3, 3, 0), Error);  // s = 0 would be Desarguesian
  CHECK_THROWS_AS(bkl_exponents(3, 4, 1), Error);  // even n
  CHECK_THROWS_AS(bkl_exponents(2, 5, 1), Error);  // p = 2
  CHECK_THROWS_AS(bkl_exponents(3, 9, 3), Error);  // gcd(s, n) != 1
  try {
    bkl_exponents(3, 3, 2);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BadParameters);
  }
}

TEST_CASE("bkl_exponents(3,3,1): shape and the b=0 label") {
  const ExponentFamily fam = bkl_exponents(3, 3, 1);
  CHECK(fam.N == 27);
  CHECK(fam.labels.size() == 27);
  CHECK(fam.labels[0] == "b=0");
  // the second term vanishes at b = 0
  for (uint8_t t : fam.thetas[0]) CHECK(t == 0);

  // a-linearity: pairing(a, v) - pairing(a', v) = T((a-a')v)
  const Field f(3, 3);
  const std::vector<int64_t> idx = family_index_map(f);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int64_t a = static_cast<int64_t>(rng() % 27), a2 = static_cast<int64_t>(rng() % 27);
    const int64_t v = static_cast<int64_t>(rng() % 27);
    const GFElement diff = f.from_rank(a) - f.from_rank(a2);
    const int lhs = (fam.pairing_at(idx[static_cast<size_t>(a)], idx[static_cast<size_t>(v)]) -
                     fam.pairing_at(idx[static_cast<size_t>(a2)], idx[static_cast<size_t>(v)]) + 3) %
                    3;
    CHECK(lhs == trace(diff * f.from_rank(v)));
  }
}

TEST_CASE("planar_exponents: parameter gate") {
  CHECK_THROWS_AS(planar_exponents(5, 1), Error);   // k = 1 mod 2n
  CHECK_THROWS_AS(planar_exponents(5, 9), Error);   // k = -1 mod 10
  CHECK_THROWS_AS(planar_exponents(5, 5), Error);   // gcd(5, 10) != 1
  CHECK_THROWS_AS(planar_exponents(4, 3), Error);   // even n
  CHECK_THROWS_AS(planar_exponents(3, 3), Error);   // n < 5
}

TEST_CASE("planar_exponents(5,3) and (5,7) construct") {
  const ExponentFamily fam = planar_exponents(5, 3);
  CHECK(fam.N == 243);
  CHECK(fam.thetas.size() == 243);
  CHECK(fam.family == "planar");
  const ExponentFamily fam7 = planar_exponents(5, 7);
  CHECK(fam7.N == 243);
}

TEST_CASE("desarguesian_exponents works for n even (trace-form path)") {
  const ExponentFamily fam = desarguesian_exponents(3, 2);
  CHECK(fam.N == 9);
  CHECK(fam.labels.size() == 9);  // 10 frames with the standard one
  CHECK(fam.labels[0] == "m=0");
}

TEST_CASE("spreadset_from_exponent_family: Desarguesian matrices match both paths") {
  for (auto [p, n] : std::vector<std::pair<int64_t, int>>{{3, 1}, {3, 3}, {5, 1}, {7, 1}}) {
    const SpreadSet direct = desarguesian(p, n);
    const SpreadSet via_theta = spreadset_from_exponent_family(desarguesian_exponents(p, n));
    REQUIRE(direct.matrices.size() == via_theta.matrices.size());
    for (size_t i = 0; i < direct.matrices.size(); ++i)
      CHECK(direct.matrices[i] == via_theta.matrices[i]);
  }
}

TEST_CASE("spreadset_from_exponent_family: BKL yields a valid spread set") {
  const SpreadSet k = spreadset_from_exponent_family(bkl_exponents(3, 3, 1));
  CHECK(k.matrices.size() == 27);
  CHECK(verify_spread_set(k).pass);
}

TEST_CASE("spreadset_from_exponent_family rejects the planar family") {
  const ExponentFamily fam = planar_exponents(5, 3);
  CHECK_THROWS_AS(spreadset_from_exponent_family(fam), Error);
}
