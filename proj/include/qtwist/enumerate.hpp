#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "qtwist/arith.hpp"

namespace qtwist {

/// Integral positive definite form of rank <= 4 given by its Gram matrix g,
/// Q(x) = x^T g x / 2. The diagonal of g must be even.
struct GramMatrix {
  int dim = 0;
  std::array<std::array<std::int64_t, 4>, 4> g{};

  std::int64_t value(const std::array<std::int64_t, 4>& x) const;
  std::int64_t pairing(const std::array<std::int64_t, 4>& x, const std::array<std::int64_t, 4>& y) const;
  static GramMatrix from(const std::vector<std::vector<Integer>>& gram);
};

using Vec4 = std::array<std::int64_t, 4>;

namespace detail {

struct Cholesky {
  int dim;
  long double q[4][4];
};

Cholesky cholesky(const GramMatrix& g);

}  // namespace detail

/// Fincke-Pohst enumeration of every nonzero vector with Q(x) <= bound, one
/// representative per +-pair (the first nonzero coordinate, counted from the
/// last, is positive). Floating point only bounds coordinate ranges; each
/// reported value is recomputed exactly in integers.
///
/// If `outer_stride` > 1 only vectors whose last coordinate is congruent to
/// `outer_offset` modulo the stride are visited (used to split work).
template <class F>
void for_each_short_vector(const GramMatrix& gm, std::int64_t bound, F&& visit, std::int64_t outer_stride = 1,
                           std::int64_t outer_offset = 0) {
  const int n = gm.dim;
  if (bound <= 0 || n == 0) return;
  const detail::Cholesky ch = detail::cholesky(gm);
  constexpr long double kSlack = 1e-7L;
  Vec4 x{0, 0, 0, 0};
  const std::int64_t a0 = gm.g[0][0] / 2;

  auto level = [&](auto&& self, int i, long double remaining, bool zero_above) -> void {
    long double center = 0;
    for (int j = i + 1; j < n; ++j) center -= ch.q[i][j] * static_cast<long double>(x[j]);
    if (remaining < 0) remaining = 0;
    const long double radius = std::sqrt(remaining / ch.q[i][i]) + kSlack;
    std::int64_t lo = static_cast<std::int64_t>(std::ceil(center - radius));
    std::int64_t hi = static_cast<std::int64_t>(std::floor(center + radius));
    if (zero_above) lo = std::max<std::int64_t>(lo, i == 0 ? 1 : 0);
    if (i == 0) {
      std::int64_t b = 0, c2 = 0;
      for (int j = 1; j < n; ++j) {
        b += gm.g[0][j] * x[j];
        for (int k = 1; k < n; ++k) c2 += gm.g[j][k] * x[j] * x[k];
      }
      const std::int64_t c = c2 / 2;
      std::int64_t value = a0 * lo * lo + b * lo + c;
      for (std::int64_t v = lo; v <= hi; ++v) {
        if (value <= bound) {
          x[0] = v;
          visit(static_cast<const Vec4&>(x), value);
        }
        value += a0 * (2 * v + 1) + b;
      }
      x[0] = 0;
      return;
    }
    for (std::int64_t v = lo; v <= hi; ++v) {
      if (i == n - 1 && outer_stride > 1 && mod_floor(v - outer_offset, outer_stride) != 0) continue;
      x[i] = v;
      const long double t = static_cast<long double>(v) - center;
      self(self, i - 1, remaining - ch.q[i][i] * t * t, zero_above && v == 0);
    }
    x[i] = 0;
  };
  if (n == 1) {
    // Single coordinate: Q(x) = a0 x^2.
    for (std::int64_t v = 1; a0 * v * v <= bound; ++v) {
      if (outer_stride > 1 && mod_floor(v - outer_offset, outer_stride) != 0) continue;
      x[0] = v;
      visit(static_cast<const Vec4&>(x), a0 * v * v);
    }
    return;
  }
  level(level, n - 1, static_cast<long double>(bound) + kSlack, true);
}

/// Number of +-pairs of lattice vectors of each norm 1..bound (entry 0 is 0).
std::vector<std::int64_t> count_by_norm(const GramMatrix& gm, std::int64_t bound, int threads = 1);

}  // namespace qtwist
