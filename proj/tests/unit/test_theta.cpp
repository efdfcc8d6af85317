#include <doctest.h>

#include <memory>

#include "qtwist/fixtures.hpp"
#include "qtwist/pipeline.hpp"
#include "qtwist/theta.hpp"

using namespace qtwist;

namespace {

RightIdeal published_ideal(const ClassSet& cs, const fixtures::IdealFixture& f) {
  std::vector<Quaternion> gens;
  for (const auto& s : f.basis) gens.push_back(parse_quaternion(cs.algebra, s));
  return RightIdeal{QLattice::from_generators(cs.algebra, gens), Rational(static_cast<long>(f.norm))};
}

const fixtures::ClassFixture& class_fixture(std::int64_t p) {
  for (const auto& f : fixtures::class_fixtures())
    if (f.p == p) return f;
  throw std::logic_error("no fixture");
}

}  // namespace

TEST_CASE("ternary lattices in published bases") {
  for (const auto& lf : fixtures::lattice_fixtures()) {
    ClassSet cs = ideal_classes(lf.p);
    Order o = left_order(published_ideal(cs, class_fixture(lf.p).ideals[lf.ideal]));
    std::vector<Quaternion> basis;
    for (const auto& s : lf.basis) basis.push_back(parse_quaternion(cs.algebra, s));
    TernaryLattice t = ternary_lattice(o, lf.p, basis);
    CHECK(t.qf() == lf.qf);
    // The reduced lattice is the same lattice: same determinant, same minimum count.
    TernaryLattice r = ternary_lattice(o, lf.p);
    CHECK(theta1(r, 60) == theta1(t, 60));
  }
}

TEST_CASE("default S^0 basis of R for p = 11") {
  ClassSet cs = ideal_classes(11);
  CHECK(ternary_lattice(cs.order, 11).qf() == Sextuple{4, 11, 12, 0, 4, 0});
}

TEST_CASE("form determinant is certified") {
  CHECK_NOTHROW(ternary_lattice_from_qf({4, 11, 12, 0, 4, 0}, 11));
  CHECK_THROWS_AS(ternary_lattice_from_qf({4, 11, 13, 0, 4, 0}, 11), DeterminantMismatch);
}

TEST_CASE("theta_1 of the eigenform") {
  FormContext ctx = load_form(11, nullptr);
  ThetaSetup s(ctx.classes, 1);
  const auto& fx = fixtures::series("11A/theta1");
  auto th = theta_eigen(s, ctx.form, fx.bound);
  auto want = fixtures::parse_qseries(fx.series);
  int sign = 0;
  for (std::int64_t n = 1; n <= fx.bound; ++n) {
    const std::int64_t w = want.count(n) ? want.at(n) : 0;
    if (!sign && w) sign = th.coeffs[n] == w ? 1 : -1;
    CHECK(th.coeffs[n] == sign * w);
  }
  CHECK(sign != 0);
}

TEST_CASE("weighted theta for l* = -3 and base point i+k") {
  FormContext ctx = load_form(11, nullptr);
  ThetaOptions o;
  o.weight.b0 = parse_quaternion(ctx.classes->algebra, "i+k");
  o.psi = "chi_p";
  ThetaSetup s(ctx.classes, -3, o);
  REQUIRE(s.weight_l().has_value());
  const WeightL& w = *s.weight_l();
  // With the published representatives, b_2 in the published basis of S_2^0.
  {
    std::vector<RightIdeal> reps;
    for (const auto& f : class_fixture(11).ideals) reps.push_back(published_ideal(*ctx.classes, f));
    auto pub = std::make_shared<const ClassSet>(make_class_set(11, ctx.classes->algebra, ctx.classes->order, reps));
    const auto& lf = fixtures::lattice_fixtures()[1];
    ThetaOptions po = o;
    po.weight.generators[1] = parse_quaternion(pub->algebra, "2");
    for (const auto& q : lf.basis) po.bases[1].push_back(parse_quaternion(pub->algebra, q));
    ThetaSetup ps(pub, -3, po);
    CHECK(ps.lattices()[1].qf() == lf.qf);
    CHECK(ps.weight_l()->n[1] == 2);
    CHECK(ps.weight_l()->b[1] == Coords3{make_rational(-3, 2), Rational(0), Rational(2)});
  }
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& f = fixtures::series(i == 0 ? "11A/theta-3/I1" : "11A/theta-3/I2");
    auto th = s.theta_class(i, f.bound);
    auto want = fixtures::parse_qseries(f.series);
    for (std::int64_t n = 1; n <= f.bound; ++n) CHECK(th.coeffs[n] == (want.count(n) ? want.at(n) : 0));
  }
  // For l = 3 both weights are odd, so only their product is even.
  REQUIRE(s.weight_p().has_value());
  int nonzero = 0;
  enumerate_by_norm(s.lattices()[0], 40, [&](const Vec4& v, std::int64_t) {
    const Vec4 m{-v[0], -v[1], -v[2], 0};
    const int a = omega_l(w, 0, v), b = omega_p(*s.weight_p(), 0, v);
    CHECK(std::abs(a) <= 1);
    CHECK(omega_l(w, 0, m) == -a);
    CHECK(omega_p(*s.weight_p(), 0, m) == -b);
    nonzero += a * b != 0;
  });
  CHECK(nonzero > 0);
}

TEST_CASE("auxiliary discriminant validation") {
  auto cs = std::make_shared<const ClassSet>(ideal_classes(11));
  CHECK_THROWS_AS(ThetaSetup(cs, 3), InvalidArgument);
  CHECK_THROWS_AS(ThetaSetup(cs, -5), InvalidArgument);
  CHECK_THROWS_AS(ThetaSetup(cs, -11), InvalidArgument);
}

TEST_CASE("psi tables") {
  auto chi = psi_table(11, "chi_p");
  for (std::int64_t r = 1; r < 11; ++r) CHECK(chi[r] == kronecker(r, 11));
  CHECK_THROWS_AS(psi_table(11, "nope"), InvalidArgument);
}

TEST_CASE("q-series text round trip") {
  GeneralizedThetaSeries s;
  s.coeffs = {0, -1, 0, 0, -3, 5, 0, 2};
  CHECK(s.str() == "-q-3q^4+5q^5+2q^7+O(q^8)");
  auto m = fixtures::parse_qseries(s.str());
  CHECK(m == std::map<std::int64_t, std::int64_t>{{1, -1}, {4, -3}, {5, 5}, {7, 2}});
}
