#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <mub/cyclo.hpp>
#include <mub/errors.hpp>

using namespace mub;

TEST_CASE("defining relation: 1 + zeta + zeta^2 = 0") {
  const Root z3 = Root::zeta(3);
  CycInt s(z3);
  for (int e = 0; e < 3; ++e) s += CycInt::root_power(z3, e);
  CHECK(s.is_zero());
}

TEST_CASE("(1+zeta)(1+zeta^2) = 1 over zeta(3)") {
  const Root z3 = Root::zeta(3);
  const CycInt a = CycInt::integer(z3, 1) + CycInt::root_power(z3, 1);
  CHECK(a * a.conj() == CycInt::integer(z3, 1));
  CHECK(squared_magnitude_is(a, 1));
}

TEST_CASE("fourth root: i*i = -1") {
  const Root i = Root::fourth_root();
  CHECK(CycInt::root_power(i, 1) * CycInt::root_power(i, 1) == CycInt::integer(i, -1));
}

TEST_CASE("root_power reduces exponents") {
  CHECK(CycInt::root_power(Root::zeta(5), 7) == CycInt::root_power(Root::zeta(5), 2));
  CHECK(CycInt::root_power(Root::fourth_root(), 2) == CycInt::integer(Root::fourth_root(), -1));
  CHECK(CycInt::root_power(Root::zeta(3), 0) == CycInt::integer(Root::zeta(3), 1));
}

TEST_CASE("hermitian_inner examples") {
  const Root z3 = Root::zeta(3);
  const std::vector<CycInt> v{CycInt::integer(z3, 1), CycInt::root_power(z3, 1)};
  CHECK(hermitian_inner(v, v) == CycInt::integer(z3, 2));

  const Root i = Root::fourth_root();
  const std::vector<CycInt> a{CycInt::integer(i, 1), CycInt::integer(i, 1)};
  const std::vector<CycInt> b{CycInt::integer(i, 1), CycInt::integer(i, -1)};
  CHECK(hermitian_inner(a, b).is_zero());

  const std::vector<CycInt> c{CycInt::integer(i, 1), CycInt::root_power(i, 1)};
  const CycInt z = hermitian_inner(a, c);  // 1 + conj(i) = 1 - i
  CHECK(squared_magnitude_is(z, 2));
}

TEST_CASE("squared_magnitude_is: quadratic Gauss sum over GF(3)") {
  const Root z3 = Root::zeta(3);
  CycInt gauss(z3);
  for (int v = 0; v < 3; ++v) gauss += CycInt::root_power(z3, v * v % 3);
  CHECK(squared_magnitude_is(gauss, 3));
  // real-integrality: |z|^2 has no zeta coefficients beyond the constant
  const CycInt sq = gauss * gauss.conj();
  const auto cs = sq.coeffs();
  for (size_t j = 1; j < cs.size(); ++j) CHECK(cs[j] == 0);
  CHECK(squared_magnitude_is(CycInt(z3), 0));
}

TEST_CASE("canonical form is unique: a - a = 0 on random values") {
  std::mt19937_64 rng(7);
  for (int64_t p : {3, 5, 7}) {
    const Root r = Root::zeta(p);
    for (int trial = 0; trial < 1000; ++trial) {
      CycInt a(r);
      for (int e = 0; e < p; ++e) {
        CycInt t = CycInt::root_power(r, e);
        t.scale(static_cast<int64_t>(rng() % 19) - 9);
        a += t;
      }
      CHECK((a - a).is_zero());
      CHECK(a.coeffs().back() == 0);  // canonical invariant
    }
  }
}

TEST_CASE("conjugation is an involutive ring homomorphism") {
  std::mt19937_64 rng(11);
  const Root r = Root::zeta(5);
  auto random_cyc = [&] {
    CycInt a(r);
    for (int e = 0; e < 5; ++e) {
      CycInt t = CycInt::root_power(r, e);
      t.scale(static_cast<int64_t>(rng() % 15) - 7);
      a += t;
    }
    return a;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const CycInt a = random_cyc(), b = random_cyc();
    CHECK(a.conj().conj() == a);
    CHECK((a + b).conj() == a.conj() + b.conj());
    CHECK((a * b).conj() == a.conj() * b.conj());
  }
}

TEST_CASE("mismatched roots are rejected") {
  CHECK_THROWS_AS(CycInt::integer(Root::zeta(3), 1) + CycInt::integer(Root::zeta(5), 1), Error);
  const std::vector<CycInt> v{CycInt::integer(Root::zeta(3), 1)};
  const std::vector<CycInt> w{CycInt::integer(Root::zeta(3), 1), CycInt::integer(Root::zeta(3), 1)};
  CHECK_THROWS_AS(hermitian_inner(v, w), Error);
}

TEST_CASE("content and exact division") {
  const Root z3 = Root::zeta(3);
  CycInt a = CycInt::integer(z3, 6);
  CycInt b = CycInt::root_power(z3, 1);
  b.scale(9);
  a += b;
  CHECK(a.content() == 3);
  a.divide_by(3);
  CHECK(a == CycInt::integer(z3, 2) + CycInt::root_power(z3, 1) + CycInt::root_power(z3, 1) +
                 CycInt::root_power(z3, 1));
}
