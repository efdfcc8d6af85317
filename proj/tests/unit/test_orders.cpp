#include <doctest.h>

#include <memory>
#include <numeric>

#include "qtwist/brandt.hpp"
#include "qtwist/enumerate.hpp"
#include "qtwist/fixtures.hpp"
#include "qtwist/orders.hpp"

using namespace qtwist;

namespace {

std::int64_t sigma_prime_to(std::int64_t m, std::int64_t p) {
  std::int64_t s = 0;
  for (std::int64_t d = 1; d <= m; ++d)
    if (m % d == 0 && d % p != 0) s += d;
  return s;
}

}  // namespace

TEST_CASE("standard orders are maximal with discriminant p") {
  for (std::int64_t p : {3, 5, 11, 13, 37, 43, 389}) {
    auto [alg, order] = standard_order(p);
    CHECK(is_order(order.lattice));
    CHECK(reduced_discriminant(order) == p);
    CHECK(ramified_places(alg.alpha, alg.beta) == std::vector<std::int64_t>{kInfinity, p});
  }
  CHECK_THROWS_AS(standard_order(17), UnsupportedResidueClass);
  CHECK_THROWS_AS(standard_order(15), InvalidArgument);
}

TEST_CASE("class numbers and mass formula") {
  const std::map<std::int64_t, std::size_t> n{{3, 1}, {5, 1}, {11, 2}, {13, 1}, {37, 3}, {43, 4}, {389, 33}};
  for (auto [p, want] : n) {
    ClassSet cs = ideal_classes(p);
    CHECK(cs.size() == want);
    CHECK(cs.mass() == make_rational(p - 1, 24));
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (std::size_t j = i + 1; j < cs.size(); ++j) CHECK_FALSE(is_equivalent(cs.reps[i], cs.reps[j]).has_value());
  }
}

TEST_CASE("published ideals are pairwise inequivalent right ideals") {
  for (const auto& f : fixtures::class_fixtures()) {
    auto [alg, order] = standard_order(f.p);
    ClassSet cs = ideal_classes(f.p);
    REQUIRE(cs.size() == f.ideals.size());
    std::vector<bool> hit(cs.size(), false);
    for (const auto& id : f.ideals) {
      std::vector<Quaternion> gens;
      for (const auto& s : id.basis) gens.push_back(parse_quaternion(alg, s));
      RightIdeal I{QLattice::from_generators(alg, gens), Rational(id.norm)};
      CHECK(ideal_norm(I.lattice, order) == id.norm);
      CHECK(lattice_product(I.lattice, order.lattice) == I.lattice);
      int matches = 0;
      for (std::size_t k = 0; k < cs.size(); ++k)
        if (is_equivalent(I, cs.reps[k])) {
          ++matches;
          hit[k] = true;
        }
      CHECK(matches == 1);
    }
    CHECK(std::count(hit.begin(), hit.end(), true) == static_cast<long>(cs.size()));
  }
}

TEST_CASE("short vector enumeration agrees with a box scan") {
  GramMatrix g;
  g.dim = 3;
  // 4x^2 + 11y^2 + 12z^2 + 4xz
  g.g = {{{8, 0, 4, 0}, {0, 22, 0, 0}, {4, 0, 24, 0}, {0, 0, 0, 0}}};
  const std::int64_t bound = 120;
  std::vector<std::int64_t> fp(bound + 1, 0), box(bound + 1, 0);
  for_each_short_vector(g, bound, [&](const Vec4&, std::int64_t v) { ++fp[v]; });
  for (std::int64_t x = -10; x <= 10; ++x)
    for (std::int64_t y = -10; y <= 10; ++y)
      for (std::int64_t z = -10; z <= 10; ++z) {
        if (!x && !y && !z) continue;
        const std::int64_t v = g.value({x, y, z, 0});
        if (v <= bound) ++box[v];
      }
  for (auto& b : box) b /= 2;
  CHECK(fp == box);
  CHECK(count_by_norm(g, bound, 3) == fp);
}

TEST_CASE("brandt matrices: row sums, symmetry, commutativity") {
  for (std::int64_t p : {11, 37, 43}) {
    auto cs = std::make_shared<const ClassSet>(ideal_classes(p));
    BrandtModule bm(cs, 2);
    const auto& w = cs->unit_halforders;
    std::vector<BrandtMatrix> mats;
    for (std::int64_t m = 1; m <= 12; ++m) {
      BrandtMatrix b = bm.matrix(m);
      if (m == 1) {
        for (std::size_t i = 0; i < b.size(); ++i)
          for (std::size_t j = 0; j < b.size(); ++j) CHECK(b.entries[i][j] == (i == j ? 1 : 0));
      }
      for (std::size_t i = 0; i < b.size(); ++i) {
        CHECK(std::accumulate(b.entries[i].begin(), b.entries[i].end(), std::int64_t{0}) == sigma_prime_to(m, p));
        for (std::size_t j = 0; j < b.size(); ++j) CHECK(b.entries[i][j] * w[j] == b.entries[j][i] * w[i]);
      }
      CHECK(b == brandt_matrix(*cs, m));
      mats.push_back(b);
    }
    auto mul = [](const IntMatrix64& a, const IntMatrix64& b) {
      IntMatrix64 c(a.size(), std::vector<std::int64_t>(a.size(), 0));
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < a.size(); ++k)
          for (std::size_t j = 0; j < a.size(); ++j) c[i][j] += a[i][k] * b[k][j];
      return c;
    };
    CHECK(mul(mats[1].entries, mats[2].entries) == mats[5].entries);      // B2 B3 = B6
    CHECK(mul(mats[1].entries, mats[4].entries) == mul(mats[4].entries, mats[1].entries));
  }
}

TEST_CASE("rational eigensystems") {
  struct Want {
    std::int64_t p;
    std::string label;
    std::map<std::int64_t, std::int64_t> a;
  };
  const std::vector<Want> wants{
      {11, "11A", {{2, -2}, {3, -1}, {5, 1}, {7, -2}}},
      {37, "37A", {{2, -2}, {3, -3}, {5, -2}, {7, -1}}},
      {37, "37B", {{2, 0}, {3, 1}, {5, 0}, {7, -1}}},
      {43, "43A", {{2, -2}, {3, -2}, {5, -4}, {7, 0}}},
  };
  for (const auto& want : wants) {
    auto cs = std::make_shared<const ClassSet>(ideal_classes(want.p));
    BrandtModule bm(cs);
    auto systems = eigensystems(bm, default_split_primes(want.p));
    const EigenSystem* e = nullptr;
    for (const auto& s : systems)
      if (s.label == want.label) e = &s;
    REQUIRE(e != nullptr);
    for (auto [q, a] : want.a) CHECK(hecke_eigenvalue(*e, bm, q) == a);
    CHECK(e->height > 0);
    CHECK(&select_form(systems, {want.a.at(2), want.a.at(3)}) == e);
  }
}
