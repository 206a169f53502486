#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace qcert::exact {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Element of the field Q(√2): a + b√2 with rational a, b.
///
/// All arithmetic is exact. The rational parts are arbitrary-precision
/// fractions kept in lowest terms with positive denominator, so equality
/// is plain structural equality. The only order-like query is sign(),
/// decided exactly by case analysis on a, b and a² vs 2b².
class QuadRat {
 public:
  QuadRat() = default;
  QuadRat(int n) : a_(n) {}
  explicit QuadRat(Rational a) : a_(std::move(a)) {}
  QuadRat(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QuadRat sqrt2() { return QuadRat(0, 1); }

  /// Coefficient of 1.
  const Rational& a() const { return a_; }
  /// Coefficient of √2.
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }

  /// Exact sign: -1, 0 or +1.
  int sign() const;

  /// Multiplicative inverse; throws std::domain_error on zero.
  QuadRat inverse() const;

  /// Nearest double to a + b√2 (a few ulp of rounding at most).
  double to_double() const;

  /// Canonical serialization "a/b+c/d√2" (negative root part uses '-').
  std::string str() const;

  /// Parses str() output plus shorthands: "0", "-1/2", "√2", "1-√2",
  /// "3/2sqrt2". Throws std::invalid_argument on malformed input.
  static QuadRat parse(std::string_view s);

  friend QuadRat operator+(const QuadRat& x, const QuadRat& y) {
    return QuadRat(x.a_ + y.a_, x.b_ + y.b_);
  }
  friend QuadRat operator-(const QuadRat& x, const QuadRat& y) {
    return QuadRat(x.a_ - y.a_, x.b_ - y.b_);
  }
  friend QuadRat operator-(const QuadRat& x) { return QuadRat(-x.a_, -x.b_); }
  friend QuadRat operator*(const QuadRat& x, const QuadRat& y) {
    return QuadRat(x.a_ * y.a_ + 2 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
  }
  friend QuadRat operator/(const QuadRat& x, const QuadRat& y) {
    return x * y.inverse();
  }

  QuadRat& operator+=(const QuadRat& x) { return *this = *this + x; }
  QuadRat& operator-=(const QuadRat& x) { return *this = *this - x; }
  QuadRat& operator*=(const QuadRat& x) { return *this = *this * x; }
  QuadRat& operator/=(const QuadRat& x) { return *this = *this / x; }

  friend bool operator==(const QuadRat& x, const QuadRat& y) = default;

 private:
  Rational a_;
  Rational b_;
};

/// Representation order (lexicographic on the normalized fraction pairs).
/// This is a container ordering, not a numeric one.
bool repr_less(const QuadRat& x, const QuadRat& y);

std::ostream& operator<<(std::ostream& os, const QuadRat& x);

}  // namespace qcert::exact
