#include "qtwist/enumerate.hpp"

#include <thread>

namespace qtwist {

std::int64_t GramMatrix::value(const Vec4& x) const { return pairing(x, x) / 2; }

std::int64_t GramMatrix::pairing(const Vec4& x, const Vec4& y) const {
  std::int64_t s = 0;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) s += g[i][j] * x[i] * y[j];
  return s;
}

GramMatrix GramMatrix::from(const std::vector<std::vector<Integer>>& gram) {
  GramMatrix gm;
  gm.dim = static_cast<int>(gram.size());
  if (gm.dim > 4) throw InvalidArgument("GramMatrix: rank above 4");
  for (int i = 0; i < gm.dim; ++i)
    for (int j = 0; j < gm.dim; ++j) {
      if (!gram[i][j].fits_slong_p()) throw InvalidArgument("GramMatrix: entry exceeds 64 bits");
      gm.g[i][j] = gram[i][j].get_si();
    }
  for (int i = 0; i < gm.dim; ++i)
    if (gm.g[i][i] % 2 != 0) throw InvalidArgument("GramMatrix: odd diagonal entry");
  return gm;
}

namespace detail {

Cholesky cholesky(const GramMatrix& gm) {
  Cholesky c{gm.dim, {}};
  const int n = gm.dim;
  long double a[4][4];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = static_cast<long double>(gm.g[i][j]) / 2;
  for (int i = 0; i < n; ++i) {
    long double d = a[i][i];
    for (int k = 0; k < i; ++k) d -= c.q[k][k] * c.q[k][i] * c.q[k][i];
    if (d <= 0) throw InvalidArgument("cholesky: form is not positive definite");
    c.q[i][i] = d;
    for (int j = i + 1; j < n; ++j) {
      long double s = a[i][j];
      for (int k = 0; k < i; ++k) s -= c.q[k][k] * c.q[k][i] * c.q[k][j];
      c.q[i][j] = s / d;
    }
  }
  return c;
}

}  // namespace detail

std::vector<std::int64_t> count_by_norm(const GramMatrix& gm, std::int64_t bound, int threads) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(std::max<std::int64_t>(bound, 0)) + 1, 0);
  if (bound <= 0) return counts;
  if (threads <= 1 || gm.dim < 2) {
    for_each_short_vector(gm, bound, [&](const Vec4&, std::int64_t v) { ++counts[v]; });
    return counts;
  }
  std::vector<std::vector<std::int64_t>> partial(threads, std::vector<std::int64_t>(counts.size(), 0));
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      auto& mine = partial[t];
      for_each_short_vector(
          gm, bound, [&](const Vec4&, std::int64_t v) { ++mine[v]; }, threads, t);
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& part : partial)
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += part[i];
  return counts;
}

}  // namespace qtwist
