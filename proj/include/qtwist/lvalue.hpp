#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qtwist/brandt.hpp"
#include "qtwist/theta.hpp"

namespace qtwist {

class SignAmbiguity : public Error {
 public:
  using Error::Error;
};

class NoNonzeroCoefficients : public VerificationFailure {
 public:
  using VerificationFailure::VerificationFailure;
};

/// Fourier coefficients a(1..M) of the newform; a[0] is unused.
struct DirichletCoeffs {
  std::int64_t p = 0;
  std::int64_t M = 0;
  std::vector<std::int64_t> a;

  bool operator==(const DirichletCoeffs&) const = default;
};

/// Which Brandt data the prime coefficients were read from.
enum class CoeffRoute { kTrace, kColumn };

/// a(q) for primes q <= M from Brandt eigenvalues, extended multiplicatively.
/// `all` (every rational cusp line) enables the diagonal-trace shortcut when
/// the whole space splits over Q.
DirichletCoeffs dirichlet_coeffs(const EigenSystem& e, BrandtModule& brandt, std::int64_t M, int threads = 1,
                                 const std::vector<EigenSystem>* all = nullptr, CoeffRoute* used = nullptr);

/// Fills composite entries of `prime_values` (indexed by n, primes set) from the Hecke recursions.
DirichletCoeffs extend_coefficients(std::int64_t p, std::vector<std::int64_t> prime_values);

struct CentralValue {
  long double value = 0;
  long double error = 0;
  int epsilon = 0;            // selected root number, 0 when L vanishes to precision both ways
  int predicted_epsilon = 0;  // a_p * chi_D(-p) when p does not divide D, else 0
  std::int64_t terms = 0;
};

/// Number of terms for which the tail of A(t), t >= t_min, is below target.
std::int64_t terms_needed(std::int64_t p, std::int64_t D, long double target, long double t_min = 1.0L / 1.3L);

/// L(f, D, 1) for f with coefficients `coeffs` (which must reach terms_needed).
CentralValue central_value(const DirichletCoeffs& coeffs, std::int64_t D, long double target = 1e-13L);

/// star * k * c^2 / sqrt|D|.
long double predicted_value(long double k, int star, std::int64_t c, std::int64_t D);

struct TwistRecord {
  std::int64_t D = 0;
  int star = 1;
  std::int64_t c = 0;
  long double L_theta = 0;
  long double L_standard = 0;
  long double err = 0;
  bool admissible = false;

  /// L_theta / L_standard, or 0 when L_standard is zero to precision.
  long double ratio() const;
};

struct VerificationReport {
  std::string label;
  std::int64_t lstar = 1;
  long double khat = 0;
  Rational lambda = 1;
  long double max_rel_dev = 0;
  long double L_lstar = 0;  // L(f, l*, 1)
  std::vector<int> support;  // Kronecker classes (D|p) with some c != 0
  std::vector<TwistRecord> rows;
  int epsilon_mismatches = 0;
};

struct WaldspurgerOptions {
  std::int64_t d_max = 200;  // inclusive bound on |D|
  int threads = 1;
  long double target = 1e-13L;
};

/// Checks L(f,D,1) = star * k * c(|D|)^2 / sqrt|D| over fundamental D with D * l* < 0, |D| <= d_max.
VerificationReport verify_waldspurger(const EigenSystem& e, const DirichletCoeffs& coeffs,
                                      const GeneralizedThetaSeries& theta, const WaldspurgerOptions& opts = {});

/// Relative difference of khat * L(f,l*,1) * sqrt|l*| between two reports.
long double cross_check_kappa(const VerificationReport& a, const VerificationReport& b);

}  // namespace qtwist
