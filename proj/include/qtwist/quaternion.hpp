#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>

#include "qtwist/arith.hpp"

namespace qtwist {

/// The algebra B(alpha, beta) over Q: i^2 = alpha, j^2 = beta, k = ij = -ji.
struct QuaternionAlgebra {
  std::int64_t alpha = -1;
  std::int64_t beta = -1;

  QuaternionAlgebra() = default;
  QuaternionAlgebra(std::int64_t a, std::int64_t b);

  bool operator==(const QuaternionAlgebra&) const = default;
};

class Quaternion {
 public:
  Quaternion() = default;
  explicit Quaternion(QuaternionAlgebra algebra);
  Quaternion(QuaternionAlgebra algebra, std::array<Rational, 4> coords);
  Quaternion(QuaternionAlgebra algebra, const Rational& scalar);

  const QuaternionAlgebra& algebra() const { return algebra_; }
  const std::array<Rational, 4>& coords() const { return coords_; }
  const Rational& operator[](int i) const { return coords_[i]; }

  Quaternion operator+(const Quaternion& o) const;
  Quaternion operator-(const Quaternion& o) const;
  Quaternion operator-() const;
  Quaternion operator*(const Quaternion& o) const;
  Quaternion operator*(const Rational& s) const;
  Quaternion operator/(const Rational& s) const;
  bool operator==(const Quaternion& o) const;

  Quaternion conj() const;
  Rational norm() const;
  Rational trace() const { return 2 * coords_[0]; }
  Quaternion inverse() const;
  bool is_zero() const;

  std::string str() const;

 private:
  void check_same(const Quaternion& o) const;

  QuaternionAlgebra algebra_;
  std::array<Rational, 4> coords_{};
};

Quaternion qmul(const Quaternion& x, const Quaternion& y);
Quaternion conj(const Quaternion& x);
/// Reduced norm and trace.
std::pair<Rational, Rational> norm_trace(const Quaternion& x);

/// Tr(x * conj(y)) = N(x+y) - N(x) - N(y).
Rational trace_pairing(const Quaternion& x, const Quaternion& y);

/// Parses expressions such as "i+k", "(1+i+j)/2", "3/4*j - 2k".
Quaternion parse_quaternion(QuaternionAlgebra algebra, const std::string& text);

}  // namespace qtwist
