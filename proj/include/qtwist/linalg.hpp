#pragma once

#include <vector>

#include "qtwist/arith.hpp"

namespace qtwist {

using QMatrix = std::vector<std::vector<Rational>>;
using QVector = std::vector<Rational>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(QMatrix& m);

/// Basis (as rows) of {x : A x = 0}.
QMatrix nullspace(const QMatrix& a);

/// Unique solution of the square system A x = b, or empty if A is singular.
std::vector<Rational> solve(const QMatrix& a, const QVector& b);

/// Scales a nonzero rational vector to a primitive integral one whose first nonzero entry is positive.
std::vector<Integer> primitive_integral(const QVector& v);

}  // namespace qtwist
