#include "qtwist/lvalue.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <thread>

#include "qtwist/linalg.hpp"

namespace qtwist {

namespace {

constexpr long double kTwoPi = 6.283185307179586476925286766559L;

// Process-wide smallest-prime-factor table, grown on demand.
std::shared_ptr<const std::vector<std::int32_t>> spf_table(std::int64_t bound) {
  static std::mutex mu;
  static std::shared_ptr<const std::vector<std::int32_t>> table;
  std::lock_guard<std::mutex> lock(mu);
  if (!table || static_cast<std::int64_t>(table->size()) <= bound)
    table = std::make_shared<const std::vector<std::int32_t>>(smallest_prime_factors(std::max<std::int64_t>(bound, 1024)));
  return table;
}

void check_deligne(std::int64_t q, std::int64_t a) {
  if (a * a > 4 * q) throw VerificationFailure("dirichlet_coeffs: |a(" + std::to_string(q) + ")| exceeds 2 sqrt(q)");
}

std::vector<std::int64_t> trace_route(const EigenSystem& e, BrandtModule& brandt, std::int64_t M, int threads,
                                      const std::vector<EigenSystem>& all, bool& ok) {
  ok = false;
  const ClassSet& cs = brandt.classes();
  const std::size_t n = cs.size();
  if (all.size() + 1 != n) return {};
  // h with sum_i e_{g,i}^2 w_i h_i = delta_{g,e} <e,e> for every line g (Eisenstein included).
  QMatrix g(n, QVector(n));
  QVector rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational w(static_cast<long>(cs.unit_halforders[i]));
    g[0][i] = 1 / w;
  }
  bool found = false;
  for (std::size_t k = 0; k < all.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const Rational a(all[k].coords[i]);
      g[k + 1][i] = a * a * Rational(static_cast<long>(cs.unit_halforders[i]));
    }
    if (all[k].coords == e.coords) {
      rhs[k + 1] = e.height;
      found = true;
    }
  }
  if (!found) return {};
  QVector h = solve(g, rhs);
  if (h.empty()) return {};

  const auto lattices = class_lattices(cs);
  std::vector<Rational> total(static_cast<std::size_t>(M) + 1);
  const auto primes = primes_up_to(M);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(h[i]) == 0) continue;
    auto pairs = count_by_norm(lattices[i].gram, 4 * M, threads);
    const Rational scale = h[i] / Rational(2 * cs.unit_halforders[i]);
    for (auto q : primes) {
      std::int64_t r = 0;
      for (std::int64_t t = 0; t * t <= 4 * q; ++t) {
        const std::int64_t m = 4 * q - t * t;
        const std::int64_t full = m == 0 ? 1 : 2 * pairs[m];
        r += t == 0 ? full : 2 * full;
      }
      total[q] += scale * Rational(static_cast<long>(r));
    }
  }
  std::vector<std::int64_t> out(static_cast<std::size_t>(M) + 1, 0);
  for (auto q : primes) {
    if (total[q].get_den() != 1) throw VerificationFailure("dirichlet_coeffs: non-integral trace eigenvalue");
    out[q] = total[q].get_num().get_si();
  }
  ok = true;
  return out;
}

std::vector<std::int64_t> column_route(const EigenSystem& e, BrandtModule& brandt, std::int64_t M) {
  const ClassSet& cs = brandt.classes();
  const std::size_t n = cs.size();
  std::size_t j0 = n;
  std::vector<bool> wanted(n);
  for (std::size_t i = 0; i < n; ++i) {
    wanted[i] = sgn(e.coords[i]) != 0;
    if (wanted[i] && j0 == n) j0 = i;
  }
  auto counts = brandt.column_counts(j0, M, wanted);
  const Integer den = e.coords[j0] * Integer(static_cast<long>(cs.unit_halforders[j0]));
  std::vector<std::int64_t> out(static_cast<std::size_t>(M) + 1, 0);
  for (auto q : primes_up_to(M)) {
    Integer s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (wanted[i]) s += e.coords[i] * Integer(static_cast<long>(counts[i][q]));
    if (s % den != 0) throw NotAnEigenvector("dirichlet_coeffs: column sum not divisible");
    out[q] = Integer(s / den).get_si();
  }
  return out;
}

}  // namespace

DirichletCoeffs extend_coefficients(std::int64_t p, std::vector<std::int64_t> a) {
  const auto M = static_cast<std::int64_t>(a.size()) - 1;
  if (M < 1) throw InvalidArgument("extend_coefficients: M must be positive");
  auto spf = spf_table(M);
  a[1] = 1;
  for (std::int64_t n = 2; n <= M; ++n) {
    const std::int64_t q = (*spf)[n];
    std::int64_t m = n, qe = 1;
    while (m % q == 0) {
      m /= q;
      qe *= q;
    }
    if (m != 1) {
      a[n] = a[qe] * a[m];
    } else if (qe != q) {
      a[n] = q == p ? a[n / q] * a[q] : a[q] * a[n / q] - q * a[n / q / q];
    }
  }
  return DirichletCoeffs{p, M, std::move(a)};
}

DirichletCoeffs dirichlet_coeffs(const EigenSystem& e, BrandtModule& brandt, std::int64_t M, int threads,
                                 const std::vector<EigenSystem>* all, CoeffRoute* used) {
  if (M < 1) throw InvalidArgument("dirichlet_coeffs: M must be positive");
  const std::int64_t p = brandt.classes().p;
  bool ok = false;
  std::vector<std::int64_t> a;
  if (all) a = trace_route(e, brandt, M, threads, *all, ok);
  if (!ok) a = column_route(e, brandt, M);
  if (used) *used = ok ? CoeffRoute::kTrace : CoeffRoute::kColumn;
  if (p <= M) a[p] = hecke_eigenvalue(e, brandt, p);
  for (const auto& [q, v] : e.eigenvalues)
    if (q <= M && a[q] != v) throw VerificationFailure("dirichlet_coeffs: a(" + std::to_string(q) + ") disagrees with B_q");
  for (auto q : primes_up_to(M)) check_deligne(q, a[q]);
  return extend_coefficients(p, std::move(a));
}

std::int64_t terms_needed(std::int64_t p, std::int64_t D, long double target, long double t_min) {
  const long double absd = static_cast<long double>(std::llabs(D));
  const long double Q = D % p == 0 ? absd : std::sqrt(static_cast<long double>(p)) * absd;
  const long double r = std::exp(-kTwoPi * t_min / Q);
  // |a(m) chi(m) / m| <= 2 for the crude bound sigma_0(m) <= 2 sqrt(m); two series.
  const long double m = std::log(target * (1 - r) / 4) / std::log(r);
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(m)));
}

CentralValue central_value(const DirichletCoeffs& coeffs, std::int64_t D, long double target) {
  const std::int64_t p = coeffs.p;
  if (D == 0 || !is_fundamental(D)) throw InvalidArgument("central_value: D must be a fundamental discriminant");
  if (D % (p * p) == 0) throw InvalidArgument("central_value: p^2 divides D");
  const std::int64_t M = terms_needed(p, D, target);
  if (M > coeffs.M)
    throw InvalidArgument("central_value: need " + std::to_string(M) + " coefficients, have " + std::to_string(coeffs.M));
  const long double absd = static_cast<long double>(std::llabs(D));
  const bool ramified = D % p == 0;
  const long double Q = ramified ? absd : std::sqrt(static_cast<long double>(p)) * absd;

  auto spf = spf_table(M);
  std::vector<signed char> chi(static_cast<std::size_t>(M) + 1, 0);
  chi[1] = 1;
  for (std::int64_t n = 2; n <= M; ++n) {
    const std::int64_t q = (*spf)[n];
    chi[n] = static_cast<signed char>(q == n ? kronecker(D, q) : chi[q] * chi[n / q]);
  }

  constexpr int kT = 5;
  const long double ts[kT] = {1.0L, 1.1L, 1.3L, 1.0L / 1.1L, 1.0L / 1.3L};
  long double ratio[kT], power[kT], sum[kT] = {0, 0, 0, 0, 0};
  for (int k = 0; k < kT; ++k) power[k] = ratio[k] = std::exp(-kTwoPi * ts[k] / Q);
  for (std::int64_t m = 1; m <= M; ++m) {
    const std::int64_t am = coeffs.a[m] * chi[m];
    if (am != 0) {
      const long double b = static_cast<long double>(am) / static_cast<long double>(m);
      for (int k = 0; k < kT; ++k) sum[k] += b * power[k];
    }
    for (int k = 0; k < kT; ++k) power[k] *= ratio[k];
  }
  // A(t) + eps A(1/t) at t = 1, 1.1, 1.3.
  auto values = [&](int eps) {
    return std::array<long double, 3>{sum[0] + eps * sum[0], sum[1] + eps * sum[3], sum[2] + eps * sum[4]};
  };
  auto spread = [](const std::array<long double, 3>& v) {
    return *std::max_element(v.begin(), v.end()) - *std::min_element(v.begin(), v.end());
  };
  const long double tail = target;
  const long double tol = std::max(1e-9L, 1e4L * target);
  const auto plus = values(1), minus = values(-1);
  const bool ok_plus = spread(plus) < tol, ok_minus = spread(minus) < tol;

  CentralValue out;
  out.terms = M;
  if (!ramified) out.predicted_epsilon = static_cast<int>(coeffs.a[p] * kronecker(D, -p));
  if (ok_plus && ok_minus) {
    if (std::fabs(plus[0]) >= tol) throw SignAmbiguity("central_value: both root numbers pass for D = " + std::to_string(D));
    out.value = 0;
    out.error = tail + std::max(spread(plus), spread(minus)) + std::fabs(plus[0]);
    return out;
  }
  if (!ok_plus && !ok_minus)
    throw VerificationFailure("central_value: functional equation test failed for D = " + std::to_string(D));
  out.epsilon = ok_plus ? 1 : -1;
  out.value = ok_plus ? plus[0] : 0;
  out.error = tail + (ok_plus ? spread(plus) : spread(minus));
  return out;
}

long double predicted_value(long double k, int star, std::int64_t c, std::int64_t D) {
  const long double cc = static_cast<long double>(c);
  return star * k * cc * cc / std::sqrt(static_cast<long double>(std::llabs(D)));
}

long double TwistRecord::ratio() const {
  if (std::fabs(L_standard) < 1e-9L) return 0;
  return L_theta / L_standard;
}

VerificationReport verify_waldspurger(const EigenSystem& e, const DirichletCoeffs& coeffs,
                                      const GeneralizedThetaSeries& theta, const WaldspurgerOptions& opts) {
  const std::int64_t p = coeffs.p;
  const std::int64_t lstar = theta.lstar;
  if (theta.bound() < opts.d_max) throw InvalidArgument("verify_waldspurger: theta series shorter than the D range");
  VerificationReport rep;
  rep.label = e.label;
  rep.lstar = lstar;
  std::vector<std::int64_t> ds;
  for (std::int64_t d = 1; d <= opts.d_max; ++d) {
    const std::int64_t D = lstar < 0 ? d : -d;
    if (is_fundamental(D)) ds.push_back(D);
  }
  rep.rows.resize(ds.size());
  std::vector<CentralValue> cvs(ds.size());
  auto work = [&](std::size_t start, std::size_t stride) {
    for (std::size_t k = start; k < ds.size(); k += stride) cvs[k] = central_value(coeffs, ds[k], opts.target);
  };
  const auto threads = static_cast<std::size_t>(std::max(opts.threads, 1));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }

  bool seen[3] = {false, false, false};
  for (std::size_t k = 0; k < ds.size(); ++k) {
    TwistRecord& r = rep.rows[k];
    r.D = ds[k];
    r.star = r.D % p == 0 ? 2 : 1;
    r.c = theta.coeffs[std::llabs(r.D)];
    r.L_standard = cvs[k].value;
    r.err = cvs[k].error;
    if (cvs[k].predicted_epsilon != 0 && cvs[k].epsilon != 0 && cvs[k].predicted_epsilon != cvs[k].epsilon)
      ++rep.epsilon_mismatches;
    if (r.c != 0) seen[kronecker(r.D, p) + 1] = true;
  }
  for (int s = 0; s < 3; ++s)
    if (seen[s]) rep.support.push_back(s - 1);
  if (rep.support.empty())
    throw NoNonzeroCoefficients("verify_waldspurger: every c(|D|) vanishes; L(f," + std::to_string(lstar) + ",1) = 0?");

  std::vector<long double> ks;
  for (auto& r : rep.rows) {
    r.admissible = seen[kronecker(r.D, p) + 1];
    if (r.c != 0) {
      const long double cc = static_cast<long double>(r.c);
      ks.push_back(r.L_standard * std::sqrt(static_cast<long double>(std::llabs(r.D))) / (r.star * cc * cc));
    }
  }
  std::sort(ks.begin(), ks.end());
  const std::size_t mid = ks.size() / 2;
  rep.khat = ks.size() % 2 ? ks[mid] : (ks[mid - 1] + ks[mid]) / 2;
  for (auto& r : rep.rows) {
    r.L_theta = predicted_value(rep.khat, r.star, r.c, r.D);
    if (r.c != 0) rep.max_rel_dev = std::max(rep.max_rel_dev, std::fabs(r.L_theta - r.L_standard) / std::fabs(r.L_standard));
  }
  rep.L_lstar = central_value(coeffs, lstar, opts.target).value;
  return rep;
}

long double cross_check_kappa(const VerificationReport& a, const VerificationReport& b) {
  const long double ka = a.khat * a.L_lstar * std::sqrt(static_cast<long double>(std::llabs(a.lstar)));
  const long double kb = b.khat * b.L_lstar * std::sqrt(static_cast<long double>(std::llabs(b.lstar)));
  return std::fabs(ka - kb) / std::max(std::fabs(ka), std::fabs(kb));
}

}  // namespace qtwist
