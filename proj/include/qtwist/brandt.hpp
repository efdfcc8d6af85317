#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qtwist/linalg.hpp"
#include "qtwist/orders.hpp"

namespace qtwist {

class IrrationalEigensystem : public Error {
 public:
  using Error::Error;
};

class NotAnEigenvector : public VerificationFailure {
 public:
  using VerificationFailure::VerificationFailure;
};

using IntMatrix64 = std::vector<std::vector<std::int64_t>>;

/// B_m(i,j) = #{ b in I_i conj(I_j) : N(b) = m N(I_i) N(I_j) } / |R_j^x|.
/// Rows sum to the divisor sum of m (prime-to-p part); a class combination
/// sum_i a_i [I_i] transforms as the row vector a -> a * B_m.
struct BrandtMatrix {
  std::int64_t m = 0;
  IntMatrix64 entries;

  std::size_t size() const { return entries.size(); }
  bool operator==(const BrandtMatrix&) const = default;
};

/// Representation counts of the quaternary lattices I_i conj(I_j), cached per
/// unordered pair and extended on demand.
class BrandtModule {
 public:
  explicit BrandtModule(std::shared_ptr<const ClassSet> classes, int threads = 1);

  const ClassSet& classes() const { return *classes_; }

  /// Makes B_m available for all m <= m_max.
  void ensure(std::int64_t m_max);
  std::int64_t computed_bound() const { return bound_; }

  BrandtMatrix matrix(std::int64_t m);
  /// +-pairs in I_i conj(I_j) with normalized norm exactly m (requires ensure).
  std::int64_t pair_count(std::size_t i, std::size_t j, std::int64_t m) const;

  /// Normalized norm form of I_i conj(I_j).
  const ReducedNormForm& pair_form(std::size_t i, std::size_t j);

  /// Raw pair counts of I_i conj(I_j) for all i, up to `bound`, without caching.
  std::vector<std::vector<std::int64_t>> column_counts(std::size_t j, std::int64_t bound,
                                                       const std::vector<bool>& wanted);

 private:
  std::size_t index(std::size_t i, std::size_t j) const;

  std::shared_ptr<const ClassSet> classes_;
  int threads_;
  std::int64_t bound_ = 0;
  std::vector<std::unique_ptr<ReducedNormForm>> forms_;
  std::vector<std::vector<std::int64_t>> counts_;
};

BrandtMatrix brandt_matrix(const ClassSet& classes, std::int64_t m);

/// Height pairing sum_i u_i v_i w_i.
Rational height_pairing(const QVector& u, const QVector& v, const ClassSet& classes);

struct EigenSystem {
  std::vector<Integer> coords;
  std::map<std::int64_t, std::int64_t> eigenvalues;
  Rational height;
  std::string label;

  QVector rational_coords() const;
  bool operator==(const EigenSystem&) const = default;
};

/// Rational cuspidal eigenlines of the Brandt matrices B_q, q in `primes`,
/// sorted by eigenvalue signature. Throws IrrationalEigensystem when there is none.
std::vector<EigenSystem> eigensystems(BrandtModule& brandt, const std::vector<std::int64_t>& primes);

/// Default primes for splitting: primes below 50 other than p.
std::vector<std::int64_t> default_split_primes(std::int64_t p);

/// Eigenvalue a_m of E under B_m, certified exactly.
std::int64_t hecke_eigenvalue(const EigenSystem& e, BrandtModule& brandt, std::int64_t m);

/// Picks the system whose leading eigenvalues (in ascending prime order) equal `signature`.
const EigenSystem& select_form(const std::vector<EigenSystem>& systems, const std::vector<std::int64_t>& signature);

}  // namespace qtwist
