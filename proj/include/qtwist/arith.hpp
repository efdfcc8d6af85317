#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qtwist {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when caller-supplied input violates a precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Raised when an internal consistency certificate fails.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Exact square root of a rational; throws if it is not a perfect square.
Rational rational_sqrt(const Rational& x);

std::string to_string(const Rational& x);

bool is_prime(std::int64_t n);
std::vector<std::int64_t> primes_up_to(std::int64_t bound);
/// Smallest-prime-factor table for 0..bound.
std::vector<std::int32_t> smallest_prime_factors(std::int64_t bound);

/// Kronecker symbol (a|n).
int kronecker(std::int64_t a, std::int64_t n);

/// Fundamental discriminant, with D = 1 allowed.
bool is_fundamental(std::int64_t d);

/// Residue of a rational with denominator prime to m, in [0, m).
std::int64_t mod_rational(const Rational& x, std::int64_t m);
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);
std::int64_t mod_floor(std::int64_t a, std::int64_t m);

/// The place at infinity in hilbert_symbol / ramified_places.
inline constexpr std::int64_t kInfinity = 0;

/// Local Hilbert symbol (alpha, beta)_v; v is a prime or kInfinity.
int hilbert_symbol(std::int64_t alpha, std::int64_t beta, std::int64_t place);

/// Places where B(alpha, beta) is ramified, kInfinity first, then primes ascending.
std::vector<std::int64_t> ramified_places(std::int64_t alpha, std::int64_t beta);

}  // namespace qtwist
