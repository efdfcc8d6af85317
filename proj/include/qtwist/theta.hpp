#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qtwist/brandt.hpp"
#include "qtwist/orders.hpp"

namespace qtwist {

class DeterminantMismatch : public VerificationFailure {
 public:
  using VerificationFailure::VerificationFailure;
};

class CollinearityFailure : public VerificationFailure {
 public:
  using VerificationFailure::VerificationFailure;
};

using Coords3 = std::array<Rational, 3>;
using Sextuple = std::array<std::int64_t, 6>;

/// Positive definite ternary lattice of trace-zero quaternions with the norm form.
/// gram holds <v,w> = N(v+w) - N(v) - N(w); basis may be empty when the
/// lattice was given only by its form.
struct TernaryLattice {
  GramMatrix gram;
  std::vector<Quaternion> basis;

  /// (A1, A2, A3, A23, A13, A12) with N(x) = sum A_i x_i^2 + A23 x2 x3 + A13 x1 x3 + A12 x1 x2.
  Sextuple qf() const;
  std::int64_t norm(const Vec4& x) const { return gram.value(x); }
  Coords3 coordinates(const Quaternion& b) const;
  Quaternion element(const Coords3& c) const;
};

/// S^0 = {b in Z + 2R : Tr b = 0}, LLL reduced, determinant certified as 4p^2.
TernaryLattice ternary_lattice(const Order& order, std::int64_t p);
/// Same lattice in a caller-supplied basis (checked to span S^0 of `order`).
TernaryLattice ternary_lattice(const Order& order, std::int64_t p, const std::vector<Quaternion>& basis);
/// Lattice given by a form; only the determinant is checked.
TernaryLattice ternary_lattice_from_qf(const Sextuple& qf, std::int64_t p);

/// Every nonzero vector with N <= bound, one per +-pair.
template <class F>
void enumerate_by_norm(const TernaryLattice& lattice, std::int64_t bound, F&& visit) {
  for_each_short_vector(lattice.gram, bound, std::forward<F>(visit));
}

/// Weight-3/2 series sum c(n) q^n; c(0) is kept apart as it may be a half.
struct GeneralizedThetaSeries {
  std::int64_t lstar = 1;
  Rational constant = 0;
  std::vector<std::int64_t> coeffs;  // coeffs[0] unused

  std::int64_t bound() const { return static_cast<std::int64_t>(coeffs.size()) - 1; }
  Rational coefficient(std::int64_t n) const;
  std::string str(std::int64_t upto = -1) const;
  bool operator==(const GeneralizedThetaSeries&) const = default;
};

/// Per-class data for omega_l.
struct WeightLClass {
  GramMatrix gram;
  std::int64_t chi_n = 1;               // chi_l(n_i)
  std::array<std::int64_t, 3> pair{};   // <b_i, e_r> mod l
  std::array<std::int64_t, 3> coords{}; // b_i mod l in basis coordinates
};

struct WeightL {
  std::int64_t l = 0;
  std::vector<int> chi;         // chi_l by residue
  std::optional<Quaternion> b0;
  std::vector<Quaternion> x;    // local generators, empty if given directly
  std::vector<Integer> n;
  std::vector<Coords3> b;       // b_i in lattice coordinates
  std::vector<WeightLClass> classes;
};

struct WeightP {
  std::int64_t p = 0;
  std::vector<int> psi;                        // indexed by residues mod p
  std::vector<std::array<std::int64_t, 3>> pair;  // <b_i, e_r> mod p
};

struct WeightOptions {
  std::optional<Quaternion> b0;
  /// Replaces local_generator for the listed classes.
  std::map<std::size_t, Quaternion> generators;
  bool require_p_coprime = false;
};

/// Canonical base point: shortest vector of S^0(R) with l | N, not in l S^0
/// (and p not dividing N if requested), ties by coordinates.
Quaternion canonical_b0(const TernaryLattice& s, std::int64_t l, std::int64_t p, bool require_p_coprime);

WeightL build_weight_l(const ClassSet& classes, const std::vector<TernaryLattice>& lattices, std::int64_t l,
                       const WeightOptions& opts = {});
/// Weight from b_i already expressed in lattice coordinates.
WeightL weight_l_from_coords(std::int64_t l, const std::vector<TernaryLattice>& lattices,
                             const std::vector<Coords3>& b, const std::vector<Integer>& n);

std::vector<int> psi_table(std::int64_t p, const std::string& name);
std::string default_psi(std::int64_t p);
/// Uses the b_i of `wl`; denominators must be prime to p.
WeightP build_weight_p(const std::vector<TernaryLattice>& lattices, const WeightL& wl, std::int64_t p,
                       const std::vector<int>& psi);

int omega_l(const WeightL& w, std::size_t i, const Vec4& v);
int omega_p(const WeightP& w, std::size_t i, const Vec4& v);

GeneralizedThetaSeries theta1(const TernaryLattice& lattice, std::int64_t bound, int threads = 1);
GeneralizedThetaSeries theta_aux(const std::vector<TernaryLattice>& lattices, const WeightL& wl, const WeightP* wp,
                                 std::size_t i, std::int64_t bound, int threads = 1);

struct ThetaOptions {
  WeightOptions weight;
  std::string psi;  // empty: default_psi
  /// Per-class basis overrides (quaternions spanning S_i^0).
  std::map<std::size_t, std::vector<Quaternion>> bases;
};

/// Lattices and weights for one l*, shared by all classes.
class ThetaSetup {
 public:
  ThetaSetup(std::shared_ptr<const ClassSet> classes, std::int64_t lstar, const ThetaOptions& opts = {});

  std::int64_t lstar() const { return lstar_; }
  const ClassSet& classes() const { return *classes_; }
  const std::vector<TernaryLattice>& lattices() const { return lattices_; }
  const std::optional<WeightL>& weight_l() const { return wl_; }
  const std::optional<WeightP>& weight_p() const { return wp_; }

  GeneralizedThetaSeries theta_class(std::size_t i, std::int64_t bound, int threads = 1) const;

 private:
  std::shared_ptr<const ClassSet> classes_;
  std::int64_t lstar_;
  std::vector<TernaryLattice> lattices_;
  std::optional<WeightL> wl_;
  std::optional<WeightP> wp_;
};

std::vector<TernaryLattice> class_lattices(const ClassSet& classes);

/// sum_i a_i Theta([I_i]).
GeneralizedThetaSeries theta_eigen(const ThetaSetup& setup, const EigenSystem& e, std::int64_t bound, int threads = 1);

}  // namespace qtwist
