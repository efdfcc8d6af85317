#include "qtwist/theta.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>
#include <tuple>

#include "qtwist/linalg.hpp"

namespace qtwist {

namespace {

Integer det3(const GramMatrix& g) {
  auto e = [&](int a, int b) { return Integer(static_cast<long>(g.g[a][b])); };
  return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
         e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
}

void certify(const GramMatrix& g, std::int64_t p) {
  if (g.dim != 3) throw DeterminantMismatch("ternary lattice must have rank 3");
  const Integer expected = Integer(32) * p * p;
  const Integer d = det3(g);
  if (d != expected)
    throw DeterminantMismatch("ternary lattice: det(gram) = " + d.get_str() + ", expected " + expected.get_str());
}

GramMatrix gram_of(const std::vector<Quaternion>& basis) {
  IntMatrix m(3, std::vector<Integer>(3));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      Rational v = trace_pairing(basis[a], basis[b]);
      if (v.get_den() != 1) throw VerificationFailure("ternary lattice: non-integral pairing");
      m[a][b] = v.get_num();
    }
  return GramMatrix::from(m);
}

std::vector<Quaternion> trace_zero_basis(const Order& order) {
  const auto& alg = order.lattice.algebra();
  std::vector<Quaternion> gens{Quaternion(alg, Rational(1))};
  for (const auto& e : order.lattice.basis()) gens.push_back(e * Rational(2));
  QLattice zr = QLattice::from_generators(alg, gens);
  std::vector<Quaternion> out;
  for (int r = 1; r < 4; ++r) {
    Quaternion b = zr.basis_element(r);
    if (sgn(b[0]) != 0) throw VerificationFailure("ternary lattice: HNF row is not trace zero");
    out.push_back(b);
  }
  return out;
}

bool coprime_den(const Rational& x, std::int64_t m) {
  Integer g;
  mpz_gcd_ui(g.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(m));
  return g == 1;
}

}  // namespace

Sextuple TernaryLattice::qf() const {
  const auto& g = gram.g;
  return {g[0][0] / 2, g[1][1] / 2, g[2][2] / 2, g[1][2], g[0][2], g[0][1]};
}

Coords3 TernaryLattice::coordinates(const Quaternion& b) const {
  if (basis.size() != 3) throw InvalidArgument("TernaryLattice::coordinates: lattice has no quaternion basis");
  if (sgn(b[0]) != 0) throw InvalidArgument("TernaryLattice::coordinates: element is not trace zero");
  QMatrix a(3, QVector(3));
  QVector rhs(3);
  for (int c = 0; c < 3; ++c) {
    for (int r = 0; r < 3; ++r) a[c][r] = basis[r][c + 1];
    rhs[c] = b[c + 1];
  }
  auto x = solve(a, rhs);
  if (x.empty()) throw VerificationFailure("TernaryLattice::coordinates: degenerate basis");
  return {x[0], x[1], x[2]};
}

Quaternion TernaryLattice::element(const Coords3& c) const {
  if (basis.size() != 3) throw InvalidArgument("TernaryLattice::element: lattice has no quaternion basis");
  return basis[0] * c[0] + basis[1] * c[1] + basis[2] * c[2];
}

TernaryLattice ternary_lattice(const Order& order, std::int64_t p) {
  ReducedNormForm f = reduce_norm_form(trace_zero_basis(order), Rational(1));
  TernaryLattice t{f.gram, f.basis};
  // Sign choice for e1, e2: largest (A23, A13, A12).
  TernaryLattice best = t;
  for (int mask = 1; mask < 4; ++mask) {
    TernaryLattice c = t;
    for (int r = 0; r < 2; ++r)
      if (mask >> r & 1) {
        c.basis[r] = -c.basis[r];
        for (int s = 0; s < 3; ++s)
          if (s != r) c.gram.g[r][s] = c.gram.g[s][r] = -c.gram.g[r][s];
      }
    auto a = c.qf(), b = best.qf();
    if (std::make_tuple(a[3], a[4], a[5]) > std::make_tuple(b[3], b[4], b[5])) best = c;
  }
  t = best;
  certify(t.gram, p);
  return t;
}

TernaryLattice ternary_lattice(const Order& order, std::int64_t p, const std::vector<Quaternion>& basis) {
  if (basis.size() != 3) throw InvalidArgument("ternary_lattice: basis must have 3 elements");
  TernaryLattice canonical = ternary_lattice(order, p);
  TernaryLattice t{gram_of(basis), basis};
  for (const auto& b : basis) {
    for (const auto& c : canonical.coordinates(b))
      if (c.get_den() != 1) throw InvalidArgument("ternary_lattice: basis element " + b.str() + " is not in S^0");
  }
  certify(t.gram, p);
  return t;
}

TernaryLattice ternary_lattice_from_qf(const Sextuple& qf, std::int64_t p) {
  IntMatrix m(3, std::vector<Integer>(3));
  for (int a = 0; a < 3; ++a) m[a][a] = Integer(static_cast<long>(2 * qf[a]));
  m[1][2] = m[2][1] = Integer(static_cast<long>(qf[3]));
  m[0][2] = m[2][0] = Integer(static_cast<long>(qf[4]));
  m[0][1] = m[1][0] = Integer(static_cast<long>(qf[5]));
  TernaryLattice t{GramMatrix::from(m), {}};
  certify(t.gram, p);
  return t;
}

Rational GeneralizedThetaSeries::coefficient(std::int64_t n) const {
  if (n == 0) return constant;
  if (n < 0 || n > bound()) throw InvalidArgument("GeneralizedThetaSeries::coefficient: index out of range");
  return Rational(static_cast<long>(coeffs[n]));
}

std::string GeneralizedThetaSeries::str(std::int64_t upto) const {
  if (upto < 0 || upto > bound()) upto = bound();
  std::ostringstream os;
  bool first = true;
  if (sgn(constant) != 0) {
    os << to_string(constant);
    first = false;
  }
  for (std::int64_t n = 1; n <= upto; ++n) {
    const std::int64_t c = coeffs[n];
    if (c == 0) continue;
    if (c < 0)
      os << "-";
    else if (!first)
      os << "+";
    if (c != 1 && c != -1) os << (c < 0 ? -c : c);
    os << "q";
    if (n != 1) os << "^" << n;
    first = false;
  }
  if (first) os << "0";
  os << "+O(q^" << upto + 1 << ")";
  return os.str();
}

Quaternion canonical_b0(const TernaryLattice& s, std::int64_t l, std::int64_t p, bool require_p_coprime) {
  for (std::int64_t bound = 4 * l; bound < (std::int64_t{1} << 40); bound *= 2) {
    std::optional<std::pair<std::int64_t, Vec4>> best;
    enumerate_by_norm(s, bound, [&](const Vec4& v, std::int64_t n) {
      if (n % l != 0) return;
      if (require_p_coprime && n % p == 0) return;
      if (v[0] % l == 0 && v[1] % l == 0 && v[2] % l == 0) return;
      std::pair<std::int64_t, Vec4> cand{n, v};
      if (!best || cand < *best) best = cand;
    });
    if (best) return s.element({Rational(static_cast<long>(best->second[0])), Rational(static_cast<long>(best->second[1])),
                                Rational(static_cast<long>(best->second[2]))});
  }
  throw SearchExhausted("canonical_b0: no admissible base point");
}

WeightL weight_l_from_coords(std::int64_t l, const std::vector<TernaryLattice>& lattices, const std::vector<Coords3>& b,
                             const std::vector<Integer>& n) {
  if (l < 3 || !is_prime(l)) throw InvalidArgument("weight: l must be an odd prime");
  if (b.size() != lattices.size() || n.size() != lattices.size())
    throw InvalidArgument("weight: one base point and one n per class required");
  WeightL w;
  w.l = l;
  w.chi.resize(static_cast<std::size_t>(l));
  for (std::int64_t t = 0; t < l; ++t) w.chi[t] = kronecker(t, l);
  w.b = b;
  w.n = n;
  for (std::size_t i = 0; i < lattices.size(); ++i) {
    WeightLClass c;
    c.gram = lattices[i].gram;
    const Integer nm = n[i] % Integer(static_cast<long>(l));
    c.chi_n = w.chi[mod_floor(nm.get_si(), l)];
    if (c.chi_n == 0) throw InvalidArgument("weight: l divides n_i");
    bool nonzero = false;
    for (int r = 0; r < 3; ++r) {
      if (!coprime_den(b[i][r], l)) throw InvalidArgument("weight: base point has a denominator divisible by l");
      c.coords[r] = mod_rational(b[i][r], l);
      nonzero = nonzero || c.coords[r] != 0;
    }
    if (!nonzero) throw InvalidArgument("weight: base point lies in l*S^0");
    Rational nb = 0;
    for (int r = 0; r < 3; ++r) {
      Rational s = 0;
      for (int t = 0; t < 3; ++t) s += b[i][t] * Rational(static_cast<long>(c.gram.g[t][r]));
      c.pair[r] = mod_rational(s, l);
      nb += s * b[i][r];
    }
    if (mod_rational(nb / 2, l) != 0) throw InvalidArgument("weight: l does not divide N(b_i)");
    w.classes.push_back(c);
  }
  return w;
}

WeightL build_weight_l(const ClassSet& classes, const std::vector<TernaryLattice>& lattices, std::int64_t l,
                       const WeightOptions& opts) {
  const std::int64_t p = classes.p;
  if (l == p) throw InvalidArgument("build_weight_l: l must differ from p");
  const std::int64_t modulus = opts.require_p_coprime ? l * p : l;
  Quaternion b0 = opts.b0 ? *opts.b0 : canonical_b0(lattices[0], l, p, opts.require_p_coprime);
  if (!(b0.algebra() == classes.algebra)) throw InvalidArgument("build_weight_l: b0 lives in another algebra");
  if (sgn(b0[0]) != 0) throw InvalidArgument("build_weight_l: b0 must have trace zero");
  for (const auto& c : lattices[0].coordinates(b0))
    if (!coprime_den(c, modulus)) throw InvalidArgument("build_weight_l: b0 is not integral at l (or p)");
  const Rational nb0 = b0.norm();
  if (mod_rational(nb0, l) != 0) throw InvalidArgument("build_weight_l: l must divide N(b0)");
  if (opts.require_p_coprime && mod_rational(nb0, p) == 0) throw InvalidArgument("build_weight_l: p divides N(b0)");

  std::vector<Coords3> b;
  std::vector<Integer> n;
  std::vector<Quaternion> xs;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const RightIdeal& ideal = classes.reps[i];
    Quaternion x(classes.algebra);
    Integer ni;
    if (auto it = opts.generators.find(i); it != opts.generators.end()) {
      x = it->second;
      if (!ideal.lattice.contains(x)) throw InvalidArgument("build_weight_l: generator " + x.str() + " is not in I_i");
      Rational q = x.norm() / ideal.norm;
      if (q.get_den() != 1) throw InvalidArgument("build_weight_l: generator norm not divisible by N(I_i)");
      ni = q.get_num();
    } else {
      LocalGenerator g = local_generator(ideal, modulus);
      x = g.x;
      ni = g.n;
    }
    if (gcd(ni, Integer(static_cast<long>(modulus))) != 1)
      throw InvalidArgument("build_weight_l: generator norm not prime to l (or p)");
    Quaternion bi = x * b0 * x.inverse();
    Coords3 c = lattices[i].coordinates(bi);
    for (const auto& r : c)
      if (!coprime_den(r, modulus)) throw VerificationFailure("build_weight_l: b_i not integral at l");
    xs.push_back(x);
    n.push_back(ni);
    b.push_back(c);
  }
  WeightL w = weight_l_from_coords(l, lattices, b, n);
  w.b0 = b0;
  w.x = std::move(xs);
  return w;
}

std::string default_psi(std::int64_t p) { return p % 4 == 3 ? "chi_p" : "step"; }

std::vector<int> psi_table(std::int64_t p, const std::string& name) {
  std::vector<int> psi(static_cast<std::size_t>(p), 0);
  if (name == "chi_p") {
    for (std::int64_t t = 0; t < p; ++t) psi[t] = kronecker(t, p);
  } else if (name == "step") {
    for (std::int64_t t = 1; t < p; ++t) psi[t] = 2 * t < p ? 1 : -1;
  } else {
    throw InvalidArgument("psi_table: unknown psi '" + name + "' (use chi_p or step)");
  }
  for (std::int64_t t = 1; t < p; ++t)
    if (psi[t] != -psi[p - t]) throw InvalidArgument("psi_table: psi is not odd for this p");
  return psi;
}

WeightP build_weight_p(const std::vector<TernaryLattice>& lattices, const WeightL& wl, std::int64_t p,
                       const std::vector<int>& psi) {
  if (static_cast<std::int64_t>(psi.size()) != p) throw InvalidArgument("build_weight_p: psi must have p entries");
  for (std::int64_t t = 1; t < p; ++t)
    if (std::abs(psi[t]) != 1 || psi[t] != -psi[p - t]) throw InvalidArgument("build_weight_p: psi must be odd and unimodular");
  WeightP w;
  w.p = p;
  w.psi = psi;
  for (std::size_t i = 0; i < lattices.size(); ++i) {
    std::array<std::int64_t, 3> pr{};
    for (int r = 0; r < 3; ++r) {
      Rational s = 0;
      for (int t = 0; t < 3; ++t) {
        if (!coprime_den(wl.b[i][t], p)) throw InvalidArgument("build_weight_p: b_i not integral at p");
        s += wl.b[i][t] * Rational(static_cast<long>(lattices[i].gram.g[t][r]));
      }
      pr[r] = mod_rational(s, p);
    }
    w.pair.push_back(pr);
  }
  return w;
}

int omega_l(const WeightL& w, std::size_t i, const Vec4& v) {
  const WeightLClass& c = w.classes[i];
  const std::int64_t l = w.l;
  if (c.gram.value(v) % l != 0) return 0;
  const std::int64_t t = mod_floor(v[0] * c.pair[0] + v[1] * c.pair[1] + v[2] * c.pair[2], l);
  if (t != 0) return c.chi_n * w.chi[t];
  int r = 0;
  while (c.coords[r] == 0) ++r;
  const std::int64_t k = mod_floor(mod_floor(v[r], l) * mod_inverse(c.coords[r], l), l);
  for (int s = 0; s < 3; ++s)
    if (mod_floor(v[s] - k * c.coords[s], l) != 0)
      throw CollinearityFailure("omega_l: vector is not collinear with b_i modulo l");
  return c.chi_n * w.chi[k];
}

int omega_p(const WeightP& w, std::size_t i, const Vec4& v) {
  const auto& pr = w.pair[i];
  return w.psi[mod_floor(v[0] * pr[0] + v[1] * pr[1] + v[2] * pr[2], w.p)];
}

namespace {

// Runs body(stride, offset, local) on `threads` workers and sums the local arrays.
template <class Body>
std::vector<std::int64_t> parallel_sum(std::size_t size, int threads, Body&& body) {
  threads = std::max(threads, 1);
  std::vector<std::vector<std::int64_t>> parts(threads, std::vector<std::int64_t>(size, 0));
  if (threads == 1) {
    body(1, 0, parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back([&, t] { body(threads, t, parts[t]); });
    for (auto& th : pool) th.join();
  }
  for (int t = 1; t < threads; ++t)
    for (std::size_t k = 0; k < size; ++k) parts[0][k] += parts[t][k];
  return std::move(parts[0]);
}

}  // namespace

GeneralizedThetaSeries theta1(const TernaryLattice& lattice, std::int64_t bound, int threads) {
  if (bound < 0) throw InvalidArgument("theta1: negative bound");
  GeneralizedThetaSeries s;
  s.lstar = 1;
  s.constant = make_rational(1, 2);
  s.coeffs = count_by_norm(lattice.gram, bound, threads);
  s.coeffs.resize(static_cast<std::size_t>(bound) + 1, 0);
  s.coeffs[0] = 0;
  return s;
}

GeneralizedThetaSeries theta_aux(const std::vector<TernaryLattice>& lattices, const WeightL& wl, const WeightP* wp,
                                 std::size_t i, std::int64_t bound, int threads) {
  if (bound < 0) throw InvalidArgument("theta_aux: negative bound");
  if (i >= lattices.size()) throw InvalidArgument("theta_aux: class index out of range");
  const std::int64_t l = wl.l;
  auto doubled = parallel_sum(static_cast<std::size_t>(bound) + 1, threads,
                              [&](std::int64_t stride, std::int64_t offset, std::vector<std::int64_t>& acc) {
                                for_each_short_vector(
                                    lattices[i].gram, bound * l,
                                    [&](const Vec4& v, std::int64_t n) {
                                      if (n % l != 0) return;
                                      const Vec4 m{-v[0], -v[1], -v[2], 0};
                                      int a = omega_l(wl, i, v), b = omega_l(wl, i, m);
                                      if (wp) {
                                        a *= omega_p(*wp, i, v);
                                        b *= omega_p(*wp, i, m);
                                      }
                                      acc[n / l] += a + b;
                                    },
                                    stride, offset);
                              });
  GeneralizedThetaSeries s;
  s.lstar = wp ? -l : l;
  s.coeffs.resize(doubled.size());
  for (std::size_t n = 0; n < doubled.size(); ++n) {
    if (doubled[n] % 2 != 0) throw VerificationFailure("theta_aux: odd weight sum");
    s.coeffs[n] = doubled[n] / 2;
  }
  return s;
}

std::vector<TernaryLattice> class_lattices(const ClassSet& classes) {
  std::vector<TernaryLattice> out;
  for (const auto& o : classes.left_orders) out.push_back(ternary_lattice(o, classes.p));
  return out;
}

ThetaSetup::ThetaSetup(std::shared_ptr<const ClassSet> classes, std::int64_t lstar, const ThetaOptions& opts)
    : classes_(std::move(classes)), lstar_(lstar) {
  const std::int64_t p = classes_->p;
  const std::int64_t l = lstar < 0 ? -lstar : lstar;
  if (lstar != 1) {
    if (l < 3 || !is_prime(l) || l == p || mod_floor(lstar, 4) != 1)
      throw InvalidArgument("theta: l* must be 1, a prime l = 1 (mod 4) or -l with l = 3 (mod 4), |l*| != p");
  }
  for (std::size_t i = 0; i < classes_->size(); ++i) {
    if (auto it = opts.bases.find(i); it != opts.bases.end())
      lattices_.push_back(ternary_lattice(classes_->left_orders[i], p, it->second));
    else
      lattices_.push_back(ternary_lattice(classes_->left_orders[i], p));
  }
  if (lstar == 1) return;
  WeightOptions wo = opts.weight;
  wo.require_p_coprime = wo.require_p_coprime || lstar < 0;
  wl_ = build_weight_l(*classes_, lattices_, l, wo);
  if (lstar < 0) wp_ = build_weight_p(lattices_, *wl_, p, psi_table(p, opts.psi.empty() ? default_psi(p) : opts.psi));
}

GeneralizedThetaSeries ThetaSetup::theta_class(std::size_t i, std::int64_t bound, int threads) const {
  if (lstar_ == 1) return theta1(lattices_.at(i), bound, threads);
  return theta_aux(lattices_, *wl_, wp_ ? &*wp_ : nullptr, i, bound, threads);
}

GeneralizedThetaSeries theta_eigen(const ThetaSetup& setup, const EigenSystem& e, std::int64_t bound, int threads) {
  if (e.coords.size() != setup.classes().size()) throw InvalidArgument("theta_eigen: eigenvector length mismatch");
  GeneralizedThetaSeries out;
  out.lstar = setup.lstar();
  out.coeffs.assign(static_cast<std::size_t>(bound) + 1, 0);
  for (std::size_t i = 0; i < e.coords.size(); ++i) {
    if (sgn(e.coords[i]) == 0) continue;
    const std::int64_t a = e.coords[i].get_si();
    GeneralizedThetaSeries t = setup.theta_class(i, bound, threads);
    out.constant += Rational(static_cast<long>(a)) * t.constant;
    for (std::size_t n = 1; n < out.coeffs.size(); ++n) out.coeffs[n] += a * t.coeffs[n];
  }
  return out;
}

}  // namespace qtwist
