#include <doctest.h>

#include <cmath>

#include "qtwist/lvalue.hpp"
#include "qtwist/pipeline.hpp"

using namespace qtwist;

TEST_CASE("Dirichlet coefficients of 11A and 37A") {
  FormContext c11 = load_form(11, nullptr);
  DirichletCoeffs a = load_coeffs(c11, 30, nullptr);
  const std::vector<std::int64_t> want11{1, -2, -1, 2, 1, 2, -2, 0, -2, -2, 1, -2, 4, 4, -1, -4, -2, 4, 0, 2};
  for (std::size_t n = 1; n <= want11.size(); ++n) CHECK(a.a[n] == want11[n - 1]);

  FormContext c37 = load_form(37, nullptr, {-2});
  DirichletCoeffs b = load_coeffs(c37, 30, nullptr);
  const std::vector<std::int64_t> want37{1, -2, -3, 2, -2, 6, -1, 0, 6, 4, -5, -6, -2, 2, 6, -4, 0, -12, 0, -4};
  for (std::size_t n = 1; n <= want37.size(); ++n) CHECK(b.a[n] == want37[n - 1]);
}

TEST_CASE("multiplicative extension") {
  std::vector<std::int64_t> v(13, 0);
  v[2] = -2, v[3] = -1, v[5] = 1, v[7] = -2, v[11] = 1;
  DirichletCoeffs d = extend_coefficients(11, v);
  CHECK(d.a[4] == 2);
  CHECK(d.a[8] == 0);
  CHECK(d.a[9] == -2);
  CHECK(d.a[12] == -2);
}

TEST_CASE("central values") {
  FormContext c11 = load_form(11, nullptr);
  DirichletCoeffs a = load_coeffs(c11, coefficient_bound(11, 200, 1, 1e-13L), nullptr);
  CentralValue v = central_value(a, 1);
  CHECK(std::fabs(v.value - 0.25384186085591068433L) < 1e-12L);
  CHECK(v.epsilon == 1);
  CHECK(v.predicted_epsilon == 1);

  FormContext c37 = load_form(37, nullptr, {-2});
  DirichletCoeffs b = load_coeffs(c37, coefficient_bound(37, 200, 1, 1e-13L), nullptr);
  CHECK(std::fabs(central_value(b, 5).value - 5.354861616647L) < 1e-9L);
  CHECK(std::fabs(central_value(b, 1).value) < 1e-10L);
  CHECK(std::fabs(central_value(b, -139).value) < 1e-10L);
  CHECK_THROWS_AS(central_value(b, 6), InvalidArgument);
}

TEST_CASE("tail bound grows with the conductor") {
  const auto a = terms_needed(11, 5, 1e-13L), b = terms_needed(11, -200, 1e-13L), c = terms_needed(11, -200, 1e-8L);
  CHECK(a < b);
  CHECK(c < b);
}

TEST_CASE("predicted values") {
  CHECK(std::fabs(predicted_value(2.0L, 1, 3, -4) - 9.0L) < 1e-15L);
  CHECK(std::fabs(predicted_value(1.5L, 2, -2, 9) - 4.0L) < 1e-15L);
  CHECK(predicted_value(1.0L, 1, 0, -7) == 0.0L);
  TwistRecord r;
  r.L_theta = 2, r.L_standard = 4;
  CHECK(r.ratio() == 0.5L);
}
