#include "qcert/quadrat.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace qcert::exact {

int QuadRat::sign() const {
  if (b_ == 0) return a_ == 0 ? 0 : (a_ > 0 ? 1 : -1);
  if (a_ == 0) return b_ > 0 ? 1 : -1;
  if (a_ > 0 && b_ > 0) return 1;
  if (a_ < 0 && b_ < 0) return -1;
  // Opposite signs: a + b√2 has the sign of a iff a² > 2b².
  const Rational a2 = a_ * a_;
  const Rational b2 = 2 * b_ * b_;
  if (a_ > 0) return a2 > b2 ? 1 : -1;
  return a2 < b2 ? 1 : -1;
}

QuadRat QuadRat::inverse() const {
  // 1/(a+b√2) = (a-b√2)/(a²-2b²); the norm vanishes only at zero.
  const Rational norm = a_ * a_ - 2 * b_ * b_;
  if (norm == 0) throw std::domain_error("QuadRat: inverse of zero");
  return QuadRat(a_ / norm, -b_ / norm);
}

double QuadRat::to_double() const {
  static const double root2 = std::sqrt(2.0);
  return a_.convert_to<double>() + b_.convert_to<double>() * root2;
}

namespace {

std::string frac_str(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace

std::string QuadRat::str() const {
  std::string s = frac_str(a_);
  if (b_ < 0) {
    s += "-" + frac_str(-b_);
  } else {
    s += "+" + frac_str(b_);
  }
  return s + "√2";
}

namespace {

constexpr std::string_view kRootUtf8 = "√2";
constexpr std::string_view kRootAscii = "sqrt2";

[[noreturn]] void parse_fail(std::string_view input, const char* why) {
  throw std::invalid_argument("QuadRat: cannot parse \"" + std::string(input) +
                              "\": " + why);
}

// Consumes a decimal integer; empty result means no digits were present.
Integer read_integer(std::string_view s, size_t& pos, bool& present) {
  size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  present = pos > start;
  if (!present) return 0;
  return Integer(std::string(s.substr(start, pos - start)));
}

bool read_root(std::string_view s, size_t& pos) {
  if (s.substr(pos, kRootUtf8.size()) == kRootUtf8) {
    pos += kRootUtf8.size();
    return true;
  }
  if (s.substr(pos, kRootAscii.size()) == kRootAscii) {
    pos += kRootAscii.size();
    return true;
  }
  return false;
}

}  // namespace

QuadRat QuadRat::parse(std::string_view s) {
  size_t pos = 0;
  bool have_rat = false;
  bool have_root = false;
  Rational a = 0;
  Rational b = 0;

  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (have_rat || have_root) {
      parse_fail(s, "terms must be joined by '+' or '-'");
    }

    bool num_present = false;
    Integer num = read_integer(s, pos, num_present);
    Integer den = 1;
    if (num_present && pos < s.size() && s[pos] == '/') {
      ++pos;
      bool den_present = false;
      den = read_integer(s, pos, den_present);
      if (!den_present) parse_fail(s, "missing denominator");
      if (den == 0) parse_fail(s, "zero denominator");
    }

    const bool root = read_root(s, pos);
    if (!num_present && !root) parse_fail(s, "empty term");
    Rational coeff = num_present ? Rational(num, den) : Rational(1);
    if (sign < 0) coeff = -coeff;

    if (root) {
      if (have_root) parse_fail(s, "two √2 terms");
      have_root = true;
      b += coeff;
    } else {
      if (have_rat) parse_fail(s, "two rational terms");
      have_rat = true;
      a += coeff;
    }
  }
  if (!have_rat && !have_root) parse_fail(s, "empty input");
  return QuadRat(std::move(a), std::move(b));
}

bool repr_less(const QuadRat& x, const QuadRat& y) {
  if (x.a() != y.a()) return x.a() < y.a();
  return x.b() < y.b();
}

std::ostream& operator<<(std::ostream& os, const QuadRat& x) {
  return os << x.str();
}

}  // namespace qcert::exact
