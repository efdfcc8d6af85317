#include "qtwist/lattice.hpp"

#include <algorithm>

namespace qtwist {

std::vector<std::vector<Integer>> hermite_normal_form(std::vector<std::vector<Integer>> rows, int cols) {
  const std::size_t m = rows.size();
  if (m < static_cast<std::size_t>(cols)) throw InvalidArgument("hermite_normal_form: too few generators");
  Integer g, s, t, ag, bg;
  for (int c = 0; c < cols; ++c) {
    // Fold column c of every lower row into the pivot row with a unimodular 2x2 step.
    for (std::size_t k = c + 1; k < m; ++k) {
      if (sgn(rows[k][c]) == 0) continue;
      const Integer a = rows[c][c], b = rows[k][c];
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      ag = a / g;
      bg = b / g;
      for (int j = c; j < cols; ++j) {
        Integer top = s * rows[c][j] + t * rows[k][j];
        Integer bottom = ag * rows[k][j] - bg * rows[c][j];
        rows[c][j] = std::move(top);
        rows[k][j] = std::move(bottom);
      }
    }
    if (sgn(rows[c][c]) == 0) throw InvalidArgument("hermite_normal_form: generators are not of full rank");
    if (sgn(rows[c][c]) < 0)
      for (int j = c; j < cols; ++j) rows[c][j] = -rows[c][j];
    for (int r = 0; r < c; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[c][c].get_mpz_t());
      if (sgn(q) == 0) continue;
      for (int j = c; j < cols; ++j) rows[r][j] -= q * rows[c][j];
    }
  }
  rows.resize(cols);
  return rows;
}

QLattice QLattice::from_generators(QuaternionAlgebra algebra, const std::vector<Quaternion>& gens) {
  Integer den = 1;
  for (const auto& x : gens) {
    if (!(x.algebra() == algebra)) throw InvalidArgument("QLattice: generator from another algebra");
    for (const auto& c : x.coords()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<std::vector<Integer>> rows;
  rows.reserve(gens.size());
  for (const auto& x : gens) {
    std::vector<Integer> row(4);
    for (int t = 0; t < 4; ++t) row[t] = x[t].get_num() * (den / x[t].get_den());
    rows.push_back(std::move(row));
  }
  auto h = hermite_normal_form(std::move(rows), 4);
  Integer g = den;
  for (const auto& row : h)
    for (const auto& v : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  QLattice lat;
  lat.algebra_ = algebra;
  lat.den_ = den / g;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) lat.hnf_[r][c] = h[r][c] / g;
  return lat;
}

Quaternion QLattice::basis_element(int r) const {
  std::array<Rational, 4> v;
  for (int c = 0; c < 4; ++c) v[c] = make_rational(hnf_[r][c], den_);
  return Quaternion(algebra_, v);
}

std::array<Quaternion, 4> QLattice::basis() const {
  return {basis_element(0), basis_element(1), basis_element(2), basis_element(3)};
}

Rational QLattice::covolume() const {
  Integer d = 1;
  for (int r = 0; r < 4; ++r) d *= hnf_[r][r];
  Integer den4 = den_ * den_ * den_ * den_;
  return make_rational(d, den4);
}

std::array<Rational, 4> QLattice::coordinates(const Quaternion& x) const {
  std::array<Rational, 4> c;
  for (int col = 0; col < 4; ++col) {
    Rational acc = x[col] * Rational(den_);
    for (int r = 0; r < col; ++r) acc -= c[r] * Rational(hnf_[r][col]);
    c[col] = acc / Rational(hnf_[col][col]);
  }
  return c;
}

bool QLattice::contains(const Quaternion& x) const {
  for (const auto& c : coordinates(x))
    if (c.get_den() != 1) return false;
  return true;
}

bool QLattice::contains(const QLattice& other) const {
  for (const auto& e : other.basis())
    if (!contains(e)) return false;
  return true;
}

QLattice QLattice::scaled(const Rational& s) const {
  std::vector<Quaternion> gens;
  for (const auto& e : basis()) gens.push_back(e * s);
  return from_generators(algebra_, gens);
}

QLattice QLattice::conj() const {
  std::vector<Quaternion> gens;
  for (const auto& e : basis()) gens.push_back(e.conj());
  return from_generators(algebra_, gens);
}

std::array<std::array<Rational, 4>, 4> QLattice::trace_gram() const {
  auto b = basis();
  std::array<std::array<Rational, 4>, 4> g;
  for (int a = 0; a < 4; ++a)
    for (int c = a; c < 4; ++c) g[a][c] = g[c][a] = trace_pairing(b[a], b[c]);
  return g;
}

bool QLattice::operator<(const QLattice& o) const {
  if (den_ != o.den_) return den_ < o.den_;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (hnf_[r][c] != o.hnf_[r][c]) return hnf_[r][c] < o.hnf_[r][c];
  return false;
}

QLattice lattice_product(const QLattice& a, const QLattice& b) {
  if (!(a.algebra() == b.algebra())) throw InvalidArgument("lattice_product: different algebras");
  std::vector<Quaternion> gens;
  gens.reserve(16);
  auto ba = a.basis(), bb = b.basis();
  for (const auto& x : ba)
    for (const auto& y : bb) gens.push_back(x * y);
  return QLattice::from_generators(a.algebra(), gens);
}

IntMatrix transform_gram(const IntMatrix& gram, const IntMatrix& u) {
  const std::size_t n = gram.size();
  IntMatrix tmp(n, std::vector<Integer>(n)), out(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) tmp[i][j] += u[i][k] * gram[k][j];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[i][j] += tmp[i][k] * u[j][k];
  return out;
}

namespace {

struct GramSchmidt {
  std::vector<std::vector<Rational>> mu;
  std::vector<Rational> bstar;
};

GramSchmidt gram_schmidt(const IntMatrix& g) {
  const std::size_t n = g.size();
  GramSchmidt gs{std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)), std::vector<Rational>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Rational s = Rational(g[i][j]);
      for (std::size_t k = 0; k < j; ++k) s -= gs.mu[j][k] * gs.mu[i][k] * gs.bstar[k];
      gs.mu[i][j] = s / gs.bstar[j];
    }
    Rational b = Rational(g[i][i]);
    for (std::size_t k = 0; k < i; ++k) b -= gs.mu[i][k] * gs.mu[i][k] * gs.bstar[k];
    if (sgn(b) <= 0) throw InvalidArgument("lll_reduce: Gram matrix is not positive definite");
    gs.bstar[i] = b;
  }
  return gs;
}

Integer round_nearest(const Rational& x) {
  Rational h = x + Rational(1, 2);
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
  return q;
}

}  // namespace

IntMatrix lll_reduce(const IntMatrix& gram) {
  const std::size_t n = gram.size();
  IntMatrix u(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  if (n <= 1) return u;
  const Rational delta(3, 4);
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t jj = k; jj-- > 0;) {
      GramSchmidt gs = gram_schmidt(transform_gram(gram, u));
      Integer q = round_nearest(gs.mu[k][jj]);
      if (sgn(q) == 0) continue;
      for (std::size_t c = 0; c < n; ++c) u[k][c] -= q * u[jj][c];
    }
    GramSchmidt gs = gram_schmidt(transform_gram(gram, u));
    if (gs.bstar[k] >= (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.bstar[k - 1]) {
      ++k;
    } else {
      std::swap(u[k], u[k - 1]);
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  // Shortest-first ordering of the reduced basis (stable on ties).
  IntMatrix g = transform_gram(gram, u);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return g[a][a] < g[b][b]; });
  IntMatrix sorted;
  for (auto i : order) sorted.push_back(u[i]);
  return sorted;
}

}  // namespace qtwist
