#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qtwist/quaternion.hpp"

namespace qtwist {

using IntRow = std::array<Integer, 4>;

/// Full-rank lattice in a quaternion algebra, stored as an integer Hermite
/// normal form over {1,i,j,k} divided by a positive common denominator.
/// The pair (hnf, denominator) is canonical, so lattice equality is
/// structural equality.
class QLattice {
 public:
  QLattice() = default;

  /// Lattice spanned by the generators (which must span B over Q).
  static QLattice from_generators(QuaternionAlgebra algebra, const std::vector<Quaternion>& gens);

  const QuaternionAlgebra& algebra() const { return algebra_; }
  const std::array<IntRow, 4>& hnf() const { return hnf_; }
  const Integer& denominator() const { return den_; }

  std::array<Quaternion, 4> basis() const;
  Quaternion basis_element(int r) const;

  /// Absolute determinant of the basis matrix over {1,i,j,k}.
  Rational covolume() const;
  /// Coordinates of x in the HNF basis.
  std::array<Rational, 4> coordinates(const Quaternion& x) const;
  bool contains(const Quaternion& x) const;
  bool contains(const QLattice& other) const;

  QLattice scaled(const Rational& s) const;
  QLattice conj() const;

  /// Trace-form Gram matrix Tr(e_a * conj(e_b)) in the HNF basis.
  std::array<std::array<Rational, 4>, 4> trace_gram() const;

  bool operator==(const QLattice& o) const = default;
  /// Lexicographic order on (denominator, hnf), used for canonical sorting.
  bool operator<(const QLattice& o) const;

 private:
  QuaternionAlgebra algebra_;
  std::array<IntRow, 4> hnf_{};
  Integer den_ = 1;
};

/// Lattice generated by all products x*y, x in a, y in b.
QLattice lattice_product(const QLattice& a, const QLattice& b);

/// Row-style Hermite normal form of an integer generator matrix of rank `cols`.
/// Result is upper triangular with positive pivots and reduced entries above them.
std::vector<std::vector<Integer>> hermite_normal_form(std::vector<std::vector<Integer>> rows, int cols);

using IntMatrix = std::vector<std::vector<Integer>>;

/// LLL reduction (delta = 3/4) of a positive definite Gram matrix.
/// Returns the unimodular U whose rows express the reduced basis in the input basis;
/// the reduced Gram matrix is U * G * U^T.
IntMatrix lll_reduce(const IntMatrix& gram);

IntMatrix transform_gram(const IntMatrix& gram, const IntMatrix& u);

}  // namespace qtwist
