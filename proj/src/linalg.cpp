#include "qtwist/linalg.hpp"

namespace qtwist {

std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(m[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t k = 0; k < rows; ++k) {
      if (k == r || sgn(m[k][c]) == 0) continue;
      const Rational f = m[k][c];
      for (std::size_t j = c; j < cols; ++j) m[k][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

QMatrix nullspace(const QMatrix& a) {
  if (a.empty()) return {};
  const std::size_t cols = a[0].size();
  QMatrix m = a;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  QMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVector v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Rational> solve(const QMatrix& a, const QVector& b) {
  const std::size_t n = a.size();
  QMatrix aug(n, QVector(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n] = b[i];
  }
  auto pivots = rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1) return {};
  QVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

std::vector<Integer> primitive_integral(const QVector& v) {
  Integer den = 1, g = 0;
  for (const auto& c : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  for (const auto& c : v) {
    out.push_back(c.get_num() * (den / c.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (sgn(g) == 0) throw InvalidArgument("primitive_integral: zero vector");
  int sign = 0;
  for (const auto& c : out)
    if (sgn(c) != 0) {
      sign = sgn(c);
      break;
    }
  for (auto& c : out) c = c / g * sign;
  return out;
}

}  // namespace qtwist
