#include "qtwist/arith.hpp"

#include <cstdlib>

namespace qtwist {

Rational rational_sqrt(const Rational& x) {
  if (sgn(x) < 0) throw InvalidArgument("rational_sqrt: negative argument");
  Integer num = x.get_num(), den = x.get_den();
  Integer rn, rd;
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    throw InvalidArgument("rational_sqrt: " + to_string(x) + " is not a square");
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return make_rational(rn, rd);
}

std::string to_string(const Rational& x) { return x.get_str(); }

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  Integer z(static_cast<long>(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
  std::vector<std::int64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (std::int64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

std::vector<std::int32_t> smallest_prime_factors(std::int64_t bound) {
  std::vector<std::int32_t> spf(static_cast<std::size_t>(std::max<std::int64_t>(bound, 1)) + 1, 0);
  for (std::int64_t i = 2; i <= bound; ++i) {
    if (spf[i] != 0) continue;
    for (std::int64_t j = i; j <= bound; j += i)
      if (spf[j] == 0) spf[j] = static_cast<std::int32_t>(i);
  }
  return spf;
}

int kronecker(std::int64_t a, std::int64_t n) {
  Integer za(static_cast<long>(a)), zn(static_cast<long>(n));
  return mpz_kronecker(za.get_mpz_t(), zn.get_mpz_t());
}

namespace {

bool squarefree(std::int64_t m) {
  m = std::llabs(m);
  for (std::int64_t q = 2; q * q <= m; ++q) {
    if (m % (q * q) == 0) return false;
    if (m % q == 0) m /= q;
  }
  return true;
}

}  // namespace

bool is_fundamental(std::int64_t d) {
  if (d == 1) return true;
  if (d == 0) return false;
  std::int64_t r = mod_floor(d, 4);
  if (r == 1) return squarefree(d);
  if (r != 0) return false;
  std::int64_t m = d / 4;
  std::int64_t s = mod_floor(m, 4);
  return (s == 2 || s == 3) && squarefree(m);
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  Integer za(static_cast<long>(mod_floor(a, m))), zm(static_cast<long>(m)), inv;
  if (mpz_invert(inv.get_mpz_t(), za.get_mpz_t(), zm.get_mpz_t()) == 0)
    throw InvalidArgument("mod_inverse: " + std::to_string(a) + " not invertible mod " + std::to_string(m));
  return inv.get_si();
}

std::int64_t mod_rational(const Rational& x, std::int64_t m) {
  Integer zm(static_cast<long>(m));
  Integer num = x.get_num() % zm, den = x.get_den() % zm;
  std::int64_t n = mod_floor(num.get_si(), m);
  std::int64_t d = mod_floor(den.get_si(), m);
  return mod_floor(static_cast<std::int64_t>(static_cast<__int128>(n) * mod_inverse(d, m) % m), m);
}

namespace {

// Splits x = q^e * u with q not dividing u.
int valuation(std::int64_t& x, std::int64_t q) {
  int e = 0;
  while (x % q == 0) {
    x /= q;
    ++e;
  }
  return e;
}

}  // namespace

int hilbert_symbol(std::int64_t alpha, std::int64_t beta, std::int64_t place) {
  if (alpha == 0 || beta == 0) throw InvalidArgument("hilbert_symbol: zero argument");
  if (place == kInfinity) return (alpha < 0 && beta < 0) ? -1 : 1;
  std::int64_t u = alpha, v = beta;
  int a = valuation(u, place), b = valuation(v, place);
  if (place == 2) {
    auto eps = [](std::int64_t t) { return static_cast<int>(mod_floor((t - 1) / 2, 2)); };
    auto omega = [](std::int64_t t) {
      std::int64_t r = mod_floor(t, 16);
      return static_cast<int>(((r * r - 1) / 8) % 2);
    };
    int e = eps(u) * eps(v) + a * omega(v) + b * omega(u);
    return (e % 2 == 0) ? 1 : -1;
  }
  int sign = 1;
  if ((a * b) % 2 == 1 && mod_floor(place, 4) == 3) sign = -1;
  if (b % 2 == 1) sign *= kronecker(u, place);
  if (a % 2 == 1) sign *= kronecker(v, place);
  return sign;
}

std::vector<std::int64_t> ramified_places(std::int64_t alpha, std::int64_t beta) {
  std::vector<std::int64_t> out;
  if (hilbert_symbol(alpha, beta, kInfinity) == -1) out.push_back(kInfinity);
  std::int64_t m = std::llabs(alpha) * std::llabs(beta) * 2;
  for (std::int64_t q = 2; q <= m; ++q) {
    if (m % q != 0) continue;
    while (m % q == 0) m /= q;
    if (hilbert_symbol(alpha, beta, q) == -1) out.push_back(q);
  }
  return out;
}

}  // namespace qtwist
