#include "qtwist/quaternion.hpp"

#include <cctype>
#include <sstream>

namespace qtwist {

QuaternionAlgebra::QuaternionAlgebra(std::int64_t a, std::int64_t b) : alpha(a), beta(b) {
  if (a == 0 || b == 0) throw InvalidArgument("QuaternionAlgebra: alpha and beta must be nonzero");
}

Quaternion::Quaternion(QuaternionAlgebra algebra) : algebra_(algebra) {}

Quaternion::Quaternion(QuaternionAlgebra algebra, std::array<Rational, 4> coords)
    : algebra_(algebra), coords_(std::move(coords)) {
  for (auto& c : coords_) c.canonicalize();
}

Quaternion::Quaternion(QuaternionAlgebra algebra, const Rational& scalar) : algebra_(algebra) {
  coords_[0] = scalar;
}

void Quaternion::check_same(const Quaternion& o) const {
  if (!(algebra_ == o.algebra_)) throw InvalidArgument("quaternion arithmetic across different algebras");
}

Quaternion Quaternion::operator+(const Quaternion& o) const {
  check_same(o);
  Quaternion r(algebra_);
  for (int t = 0; t < 4; ++t) r.coords_[t] = coords_[t] + o.coords_[t];
  return r;
}

Quaternion Quaternion::operator-(const Quaternion& o) const {
  check_same(o);
  Quaternion r(algebra_);
  for (int t = 0; t < 4; ++t) r.coords_[t] = coords_[t] - o.coords_[t];
  return r;
}

Quaternion Quaternion::operator-() const {
  Quaternion r(algebra_);
  for (int t = 0; t < 4; ++t) r.coords_[t] = -coords_[t];
  return r;
}

Quaternion Quaternion::operator*(const Quaternion& o) const {
  check_same(o);
  const Rational a(static_cast<long>(algebra_.alpha)), b(static_cast<long>(algebra_.beta));
  const auto& x = coords_;
  const auto& y = o.coords_;
  Quaternion r(algebra_);
  r.coords_[0] = x[0] * y[0] + a * x[1] * y[1] + b * x[2] * y[2] - a * b * x[3] * y[3];
  r.coords_[1] = x[0] * y[1] + x[1] * y[0] - b * x[2] * y[3] + b * x[3] * y[2];
  r.coords_[2] = x[0] * y[2] + x[2] * y[0] + a * x[1] * y[3] - a * x[3] * y[1];
  r.coords_[3] = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1];
  return r;
}

Quaternion Quaternion::operator*(const Rational& s) const {
  Quaternion r(algebra_);
  for (int t = 0; t < 4; ++t) r.coords_[t] = coords_[t] * s;
  return r;
}

Quaternion Quaternion::operator/(const Rational& s) const {
  if (sgn(s) == 0) throw InvalidArgument("quaternion division by zero");
  Quaternion r(algebra_);
  for (int t = 0; t < 4; ++t) r.coords_[t] = coords_[t] / s;
  return r;
}

bool Quaternion::operator==(const Quaternion& o) const {
  return algebra_ == o.algebra_ && coords_ == o.coords_;
}

Quaternion Quaternion::conj() const {
  Quaternion r(algebra_);
  r.coords_[0] = coords_[0];
  for (int t = 1; t < 4; ++t) r.coords_[t] = -coords_[t];
  return r;
}

Rational Quaternion::norm() const {
  const Rational a(static_cast<long>(algebra_.alpha)), b(static_cast<long>(algebra_.beta));
  const auto& x = coords_;
  return x[0] * x[0] - a * x[1] * x[1] - b * x[2] * x[2] + a * b * x[3] * x[3];
}

Quaternion Quaternion::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw InvalidArgument("quaternion of norm zero has no inverse");
  return conj() / n;
}

bool Quaternion::is_zero() const {
  for (const auto& c : coords_)
    if (sgn(c) != 0) return false;
  return true;
}

std::string Quaternion::str() const {
  static const char* units[4] = {"", "i", "j", "k"};
  std::ostringstream os;
  bool first = true;
  for (int t = 0; t < 4; ++t) {
    if (sgn(coords_[t]) == 0) continue;
    Rational c = coords_[t];
    if (!first) os << (sgn(c) > 0 ? "+" : "-");
    else if (sgn(c) < 0) os << "-";
    c = abs(c);
    if (t == 0 || c != 1) {
      os << c.get_str();
      if (t != 0) os << "*";
    }
    os << units[t];
    first = false;
  }
  return first ? "0" : os.str();
}

Quaternion qmul(const Quaternion& x, const Quaternion& y) { return x * y; }
Quaternion conj(const Quaternion& x) { return x.conj(); }

std::pair<Rational, Rational> norm_trace(const Quaternion& x) { return {x.norm(), x.trace()}; }

Rational trace_pairing(const Quaternion& x, const Quaternion& y) { return (x * y.conj()).trace(); }

namespace {

// Recursive-descent parser: expr := term (('+'|'-') term)*,
// term := factor (('*'|'/') factor)*, factor := number | unit | '(' expr ')' | '-' factor.
class Parser {
 public:
  Parser(QuaternionAlgebra alg, const std::string& s) : alg_(alg), s_(s) {}

  Quaternion parse() {
    Quaternion q = expr();
    skip();
    if (pos_ != s_.size()) fail();
    return q;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail() const {
    throw InvalidArgument("cannot parse quaternion '" + s_ + "' near position " + std::to_string(pos_));
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Quaternion expr() {
    Quaternion acc = term();
    for (;;) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }

  Quaternion term() {
    Quaternion acc = factor();
    for (;;) {
      skip();
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        Quaternion d = factor();
        for (int t = 1; t < 4; ++t)
          if (sgn(d[t]) != 0) fail();
        acc = acc / d[0];
      } else if (pos_ < s_.size() && (s_[pos_] == 'i' || s_[pos_] == 'j' || s_[pos_] == 'k' || s_[pos_] == '(')) {
        acc = acc * factor();  // implicit product, e.g. "3i"
      } else {
        return acc;
      }
    }
  }

  Quaternion factor() {
    skip();
    if (accept('-')) return -factor();
    if (accept('(')) {
      Quaternion q = expr();
      if (!accept(')')) fail();
      return q;
    }
    if (pos_ >= s_.size()) fail();
    char c = s_[pos_];
    if (c == 'i' || c == 'j' || c == 'k') {
      ++pos_;
      std::array<Rational, 4> v{};
      v[c - 'i' + 1] = 1;
      return Quaternion(alg_, v);
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) fail();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return Quaternion(alg_, Rational(Integer(s_.substr(start, pos_ - start))));
  }

  QuaternionAlgebra alg_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Quaternion parse_quaternion(QuaternionAlgebra algebra, const std::string& text) {
  return Parser(algebra, text).parse();
}

}  // namespace qtwist
