#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qtwist/enumerate.hpp"
#include "qtwist/lattice.hpp"

namespace qtwist {

class UnsupportedResidueClass : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NonTermination : public VerificationFailure {
 public:
  using VerificationFailure::VerificationFailure;
};

class SearchExhausted : public Error {
 public:
  using Error::Error;
};

struct Order {
  QLattice lattice;

  bool operator==(const Order&) const = default;
};

/// Right ideal of the fixed maximal order of a ClassSet.
struct RightIdeal {
  QLattice lattice;
  Rational norm;

  bool operator==(const RightIdeal&) const = default;
};

/// A lattice with an integral LLL-reduced Gram matrix for the scaled norm form
/// N(x)/scale, together with the reduced basis as quaternions.
struct ReducedNormForm {
  GramMatrix gram;
  std::vector<Quaternion> basis;
  Rational scale;

  Quaternion element(const Vec4& coords) const;
};

/// `lattice` spanned by `basis` (rank 3 or 4) with form N(x)/scale.
ReducedNormForm reduce_norm_form(const std::vector<Quaternion>& basis, const Rational& scale);
ReducedNormForm reduce_norm_form(const QLattice& lattice, const Rational& scale);

/// Maximal order used throughout for level p: B(-1,-p) when p = 3 (mod 4),
/// B(-2,-p) with <1, i, (1+i+j)/2, (2+ai+k)/4> (a = 3 if possible) when p = 5 (mod 8).
/// Certified to have reduced discriminant p.
std::pair<QuaternionAlgebra, Order> standard_order(std::int64_t p);

/// Certifies the order axioms (1 in O, closure, integral norm and trace).
bool is_order(const QLattice& lattice);

Integer reduced_discriminant(const Order& order);

/// Positive generator of the norms of I relative to the order R: sqrt(covol(I)/covol(R)).
Rational ideal_norm(const QLattice& ideal, const Order& order);

/// Left order {b : bI subset I} = I * conj(I) / N(I).
Order left_order(const RightIdeal& ideal);

/// Witness b with J = bI, if the ideals are in the same class.
std::optional<Quaternion> is_equivalent(const RightIdeal& i, const RightIdeal& j);

/// Number of +-pairs of norm-one elements, i.e. |O^x| / 2.
std::int64_t unit_half_order(const Order& order);

/// The right ideals J of norm q*N(I) contained in I (q prime, q not dividing the level).
std::vector<RightIdeal> neighbours(const RightIdeal& ideal, const Order& order, std::int64_t q);

struct ClassSet {
  std::int64_t p = 0;
  QuaternionAlgebra algebra;
  Order order;
  std::vector<RightIdeal> reps;
  std::vector<Order> left_orders;
  std::vector<std::int64_t> unit_halforders;

  std::size_t size() const { return reps.size(); }
  /// Sum of 1/(2 w_i).
  Rational mass() const;

  bool operator==(const ClassSet&) const = default;
};

/// Representatives of the right ideal classes of the standard order for p.
ClassSet ideal_classes(std::int64_t p);

/// Rebuilds a ClassSet from known representatives, recomputing left orders and units.
ClassSet make_class_set(std::int64_t p, const QuaternionAlgebra& algebra, const Order& order,
                        std::vector<RightIdeal> reps);

struct LocalGenerator {
  Quaternion x;
  Integer n;  // N(x) / N(I)
};

/// Shortest x in I (lexicographic tie-break) with N(x)/N(I) prime to `modulus`.
LocalGenerator local_generator(const RightIdeal& ideal, std::int64_t modulus);

/// Every x in I with N(x)/N(I) <= bound and prime to `modulus`, up to sign.
std::vector<LocalGenerator> local_generators(const RightIdeal& ideal, std::int64_t modulus, std::int64_t bound);

}  // namespace qtwist
