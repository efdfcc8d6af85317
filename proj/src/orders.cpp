#include "qtwist/orders.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace qtwist {

Quaternion ReducedNormForm::element(const Vec4& coords) const {
  Quaternion x(basis.front().algebra());
  for (std::size_t r = 0; r < basis.size(); ++r)
    if (coords[r] != 0) x = x + basis[r] * Rational(static_cast<long>(coords[r]));
  return x;
}

ReducedNormForm reduce_norm_form(const std::vector<Quaternion>& basis, const Rational& scale) {
  const std::size_t n = basis.size();
  IntMatrix gram(n, std::vector<Integer>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      Rational v = trace_pairing(basis[a], basis[b]) / scale;
      if (v.get_den() != 1) throw VerificationFailure("reduce_norm_form: scaled norm form is not integral");
      gram[a][b] = gram[b][a] = v.get_num();
    }
  IntMatrix u = lll_reduce(gram);
  ReducedNormForm out;
  out.scale = scale;
  out.gram = GramMatrix::from(transform_gram(gram, u));
  for (std::size_t r = 0; r < n; ++r) {
    Quaternion x(basis.front().algebra());
    for (std::size_t c = 0; c < n; ++c)
      if (sgn(u[r][c]) != 0) x = x + basis[c] * Rational(u[r][c]);
    out.basis.push_back(x);
  }
  return out;
}

ReducedNormForm reduce_norm_form(const QLattice& lattice, const Rational& scale) {
  auto b = lattice.basis();
  return reduce_norm_form(std::vector<Quaternion>(b.begin(), b.end()), scale);
}

bool is_order(const QLattice& lattice) {
  const auto& alg = lattice.algebra();
  if (!lattice.contains(Quaternion(alg, Rational(1)))) return false;
  auto b = lattice.basis();
  for (const auto& x : b) {
    auto [n, t] = norm_trace(x);
    if (n.get_den() != 1 || t.get_den() != 1) return false;
    for (const auto& y : b)
      if (!lattice.contains(x * y)) return false;
  }
  return true;
}

Integer reduced_discriminant(const Order& order) {
  auto g = order.lattice.trace_gram();
  // Exact 4x4 determinant by fraction-free elimination over Q.
  Rational det = 1;
  for (int c = 0; c < 4; ++c) {
    int piv = c;
    while (piv < 4 && sgn(g[piv][c]) == 0) ++piv;
    if (piv == 4) return 0;
    if (piv != c) {
      std::swap(g[piv], g[c]);
      det = -det;
    }
    det *= g[c][c];
    for (int r = c + 1; r < 4; ++r) {
      Rational f = g[r][c] / g[c][c];
      for (int k = c; k < 4; ++k) g[r][k] -= f * g[c][k];
    }
  }
  Rational root = rational_sqrt(abs(det));
  if (root.get_den() != 1) throw VerificationFailure("reduced_discriminant: non-integral discriminant");
  return root.get_num();
}

std::pair<QuaternionAlgebra, Order> standard_order(std::int64_t p) {
  if (p < 3 || !is_prime(p)) throw InvalidArgument("standard_order: p must be an odd prime");
  auto certify = [p](const QuaternionAlgebra& alg, const QLattice& lat) {
    if (!is_order(lat)) return false;
    if (reduced_discriminant(Order{lat}) != p) return false;
    auto places = ramified_places(alg.alpha, alg.beta);
    return places == std::vector<std::int64_t>{kInfinity, p};
  };
  if (p % 4 == 3) {
    QuaternionAlgebra alg(-1, -p);
    QLattice lat = QLattice::from_generators(
        alg, {parse_quaternion(alg, "1"), parse_quaternion(alg, "i"), parse_quaternion(alg, "(1+j)/2"),
              parse_quaternion(alg, "(i+k)/2")});
    if (!certify(alg, lat)) throw VerificationFailure("standard_order: candidate order failed certification");
    return {alg, Order{lat}};
  }
  if (p % 8 == 5) {
    QuaternionAlgebra alg(-2, -p);
    // a = 3 first, then 1, 5, 7, ...
    for (std::int64_t k = 0; k < 4 * p; ++k) {
      const std::int64_t a = k == 0 ? 3 : (k == 1 ? 1 : 2 * k + 1);
      QLattice lat = QLattice::from_generators(
          alg, {parse_quaternion(alg, "1"), parse_quaternion(alg, "i"), parse_quaternion(alg, "(1+i+j)/2"),
                parse_quaternion(alg, "(2+" + std::to_string(a) + "i+k)/4")});
      if (certify(alg, lat)) return {alg, Order{lat}};
    }
    throw VerificationFailure("standard_order: no certified order found for p = " + std::to_string(p));
  }
  throw UnsupportedResidueClass("standard_order: p = " + std::to_string(p) + " is 1 mod 8");
}

Rational ideal_norm(const QLattice& ideal, const Order& order) {
  return rational_sqrt(ideal.covolume() / order.lattice.covolume());
}

Order left_order(const RightIdeal& ideal) {
  QLattice prod = lattice_product(ideal.lattice, ideal.lattice.conj());
  return Order{prod.scaled(Rational(1) / ideal.norm)};
}

std::optional<Quaternion> is_equivalent(const RightIdeal& i, const RightIdeal& j) {
  QLattice l = lattice_product(j.lattice, i.lattice.conj());
  ReducedNormForm form = reduce_norm_form(l, i.norm * j.norm);
  std::optional<Quaternion> witness;
  for_each_short_vector(form.gram, 1, [&](const Vec4& x, std::int64_t v) {
    if (witness || v != 1) return;
    witness = form.element(x) / i.norm;
  });
  if (!witness) return std::nullopt;
  std::vector<Quaternion> gens;
  for (const auto& e : i.lattice.basis()) gens.push_back(*witness * e);
  if (!(QLattice::from_generators(i.lattice.algebra(), gens) == j.lattice))
    throw VerificationFailure("is_equivalent: norm-one witness does not map I onto J");
  return witness;
}

std::int64_t unit_half_order(const Order& order) {
  ReducedNormForm form = reduce_norm_form(order.lattice, Rational(1));
  std::int64_t count = 0;
  for_each_short_vector(form.gram, 1, [&](const Vec4&, std::int64_t v) { count += (v == 1); });
  return count;
}

std::vector<RightIdeal> neighbours(const RightIdeal& ideal, const Order& order, std::int64_t q) {
  const auto& alg = ideal.lattice.algebra();
  auto ib = ideal.lattice.basis();
  auto rb = order.lattice.basis();
  std::set<QLattice> seen;
  std::vector<RightIdeal> out;
  const Rational qq(static_cast<long>(q));
  std::array<std::int64_t, 4> c{};
  const std::int64_t total = q * q * q * q;
  for (std::int64_t code = 1; code < total; ++code) {
    std::int64_t rest = code;
    for (int t = 0; t < 4; ++t) {
      c[t] = rest % q;
      rest /= q;
    }
    Quaternion x(alg);
    for (int t = 0; t < 4; ++t)
      if (c[t] != 0) x = x + ib[t] * Rational(static_cast<long>(c[t]));
    Rational rel = x.norm() / ideal.norm;
    if (rel.get_den() != 1) throw VerificationFailure("neighbours: element norm not divisible by N(I)");
    if (mpz_divisible_ui_p(rel.get_num_mpz_t(), static_cast<unsigned long>(q)) == 0) continue;
    std::vector<Quaternion> gens;
    for (const auto& r : rb) gens.push_back(x * r);
    for (const auto& e : ib) gens.push_back(e * qq);
    QLattice j = QLattice::from_generators(alg, gens);
    if (!seen.insert(j).second) continue;
    out.push_back(RightIdeal{j, ideal.norm * qq});
  }
  for (const auto& j : out)
    if (ideal_norm(j.lattice, order) != j.norm)
      throw VerificationFailure("neighbours: sub-ideal has unexpected norm");
  return out;
}

Rational ClassSet::mass() const {
  Rational m = 0;
  for (auto w : unit_halforders) m += Rational(1, 2 * w);
  return m;
}

ClassSet make_class_set(std::int64_t p, const QuaternionAlgebra& algebra, const Order& order,
                        std::vector<RightIdeal> reps) {
  ClassSet cs;
  cs.p = p;
  cs.algebra = algebra;
  cs.order = order;
  cs.reps = std::move(reps);
  for (const auto& r : cs.reps) {
    Order lo = left_order(r);
    cs.unit_halforders.push_back(unit_half_order(lo));
    cs.left_orders.push_back(std::move(lo));
  }
  return cs;
}

ClassSet ideal_classes(std::int64_t p) {
  auto [alg, order] = standard_order(p);
  const Rational target = make_rational(p - 1, 24);
  std::vector<RightIdeal> reps{RightIdeal{order.lattice, Rational(1)}};
  Rational mass = Rational(1, 2 * unit_half_order(order));
  for (std::int64_t q : primes_up_to(50)) {
    if (q == p || mass == target) continue;
    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < reps.size(); ++i) queue.push_back(i);
    while (!queue.empty() && mass < target) {
      RightIdeal current = reps[queue.front()];
      queue.pop_front();
      for (auto& cand : neighbours(current, order, q)) {
        bool known = false;
        for (const auto& r : reps)
          if (is_equivalent(r, cand)) {
            known = true;
            break;
          }
        if (known) continue;
        mass += Rational(1, 2 * unit_half_order(left_order(cand)));
        if (mass > target)
          throw NonTermination("ideal_classes: mass exceeded (p-1)/24; equivalence test is unreliable");
        reps.push_back(std::move(cand));
        queue.push_back(reps.size() - 1);
        if (mass == target) break;
      }
    }
  }
  if (mass != target) throw NonTermination("ideal_classes: mass formula not reached for p = " + std::to_string(p));
  std::sort(reps.begin() + 1, reps.end(), [](const RightIdeal& a, const RightIdeal& b) {
    if (a.norm != b.norm) return a.norm < b.norm;
    return a.lattice < b.lattice;
  });
  return make_class_set(p, alg, order, std::move(reps));
}

std::vector<LocalGenerator> local_generators(const RightIdeal& ideal, std::int64_t modulus, std::int64_t bound) {
  ReducedNormForm form = reduce_norm_form(ideal.lattice, ideal.norm);
  std::vector<std::pair<std::int64_t, Vec4>> found;
  for_each_short_vector(form.gram, bound, [&](const Vec4& x, std::int64_t v) {
    if (std::gcd(v, modulus) == 1) found.emplace_back(v, x);
  });
  std::sort(found.begin(), found.end());
  std::vector<LocalGenerator> out;
  for (const auto& [v, x] : found) out.push_back(LocalGenerator{form.element(x), Integer(static_cast<long>(v))});
  return out;
}

LocalGenerator local_generator(const RightIdeal& ideal, std::int64_t modulus) {
  for (std::int64_t bound = 4; bound <= (std::int64_t{1} << 40); bound *= 4) {
    auto gens = local_generators(ideal, modulus, bound);
    if (!gens.empty()) return gens.front();
  }
  throw SearchExhausted("local_generator: no element with norm prime to the modulus");
}

}  // namespace qtwist
