#include <doctest.h>

#include <random>

#include "qtwist/arith.hpp"
#include "qtwist/lattice.hpp"
#include "qtwist/quaternion.hpp"

using namespace qtwist;

TEST_CASE("kronecker symbol values and multiplicativity") {
  CHECK(kronecker(-3, 2) == -1);
  CHECK(kronecker(-4, 3) == -1);
  CHECK(kronecker(5, 11) == 1);
  CHECK(kronecker(-7, 2) == 1);
  CHECK(kronecker(12, 3) == 0);
  for (std::int64_t a : {-47, -23, -4, -3, 5, 8, 12, 13}) {
    for (std::int64_t m = 1; m < 40; ++m)
      for (std::int64_t n = 1; n < 40; ++n) CHECK(kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n));
  }
}

TEST_CASE("fundamental discriminants") {
  std::vector<std::int64_t> got;
  for (std::int64_t d = -30; d <= 30; ++d)
    if (is_fundamental(d)) got.push_back(d);
  const std::vector<std::int64_t> want{-24, -23, -20, -19, -15, -11, -8, -7, -4, -3, 1, 5, 8, 12, 13, 17, 21, 24, 28, 29};
  CHECK(got == want);
}

TEST_CASE("primes and smallest prime factors") {
  CHECK(primes_up_to(30) == std::vector<std::int64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  auto spf = smallest_prime_factors(100);
  CHECK(spf[91] == 7);
  CHECK(spf[97] == 97);
  CHECK(is_prime(389));
  CHECK_FALSE(is_prime(391));
}

TEST_CASE("hilbert reciprocity and ramification") {
  const auto primes = primes_up_to(60);
  for (std::int64_t a : {-1, -2, -3, 5, -7, 6, -11})
    for (std::int64_t b : {-1, -3, -11, -37, 13, -43, 10}) {
      int prod = hilbert_symbol(a, b, kInfinity);
      for (auto q : primes) prod *= hilbert_symbol(a, b, q);
      CHECK(prod == 1);
    }
  CHECK(ramified_places(-1, -11) == std::vector<std::int64_t>{kInfinity, 11});
  CHECK(ramified_places(-2, -37) == std::vector<std::int64_t>{kInfinity, 37});
  CHECK(ramified_places(-1, -1) == std::vector<std::int64_t>{kInfinity, 2});
}

TEST_CASE("modular helpers") {
  CHECK(mod_floor(-7, 5) == 3);
  CHECK(mod_inverse(3, 11) == 4);
  CHECK(mod_rational(make_rational(1, 2), 7) == 4);
  CHECK(rational_sqrt(make_rational(9, 4)) == make_rational(3, 2));
  CHECK_THROWS_AS(rational_sqrt(make_rational(2)), InvalidArgument);
}

TEST_CASE("quaternion norm is multiplicative") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-9, 9);
  for (auto alg : {QuaternionAlgebra(-1, -11), QuaternionAlgebra(-2, -37), QuaternionAlgebra(-1, -389)}) {
    for (int t = 0; t < 50; ++t) {
      Quaternion x(alg, {make_rational(d(rng), 2), make_rational(d(rng)), make_rational(d(rng), 3), make_rational(d(rng))});
      Quaternion y(alg, {make_rational(d(rng)), make_rational(d(rng), 4), make_rational(d(rng)), make_rational(d(rng))});
      CHECK((x * y).norm() == x.norm() * y.norm());
      CHECK((x * y).conj() == y.conj() * x.conj());
      CHECK(trace_pairing(x, y) == (x * y.conj()).trace());
      if (!x.is_zero()) CHECK(x * x.inverse() == Quaternion(alg, Rational(1)));
    }
  }
}

TEST_CASE("quaternion parsing") {
  QuaternionAlgebra a(-1, -11);
  auto x = parse_quaternion(a, "(1+i+j)/2");
  CHECK(x == Quaternion(a, {make_rational(1, 2), make_rational(1, 2), make_rational(1, 2), Rational(0)}));
  auto y = parse_quaternion(a, "3/4*j - 2k");
  CHECK(y == Quaternion(a, {Rational(0), Rational(0), make_rational(3, 4), Rational(-2)}));
  CHECK(parse_quaternion(a, "i+k").norm() == 12);
  CHECK_THROWS_AS(parse_quaternion(a, "i+z"), InvalidArgument);
}

TEST_CASE("lattice HNF does not depend on the generating set") {
  QuaternionAlgebra a(-1, -11);
  auto q = [&](const char* s) { return parse_quaternion(a, s); };
  auto l1 = QLattice::from_generators(a, {q("1"), q("i"), q("(1+j)/2"), q("(i+k)/2")});
  auto l2 = QLattice::from_generators(a, {q("1+i"), q("i"), q("(1+j)/2+3i"), q("(i+k)/2-(1+j)/2"), q("5")});
  CHECK(l1 == l2);
  CHECK(l1.contains(q("j+k")));
  CHECK_FALSE(l1.contains(q("j/2")));
  CHECK(l1.covolume() == make_rational(1, 4));
}
