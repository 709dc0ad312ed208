#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dplab {

/// Arbitrary-precision integer.
using Int = mpz_class;

/// Arbitrary-precision rational, kept in lowest terms with a positive
/// denominator. All arithmetic is exact; nothing ever rounds.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int v) : q_(v) {}
  Rational(long v) : q_(v) {}
  Rational(unsigned v) : q_(static_cast<unsigned long>(v)) {}
  Rational(unsigned long v) : q_(v) {}
  Rational(const Int& v) : q_(v) {}

  Rational(const Int& num, const Int& den) : q_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_.canonicalize();
  }
  Rational(long num, long den) : Rational(Int(num), Int(den)) {}

  /// Parses "p/q" or a plain integer "p".
  static Rational from_string(std::string_view text);

  const Int& numerator() const { return q_.get_num(); }
  const Int& denominator() const { return q_.get_den(); }

  double to_double() const { return q_.get_d(); }

  /// "p/q", or just "p" when the denominator is 1.
  std::string to_string() const {
    return q_.get_den() == 1 ? q_.get_num().get_str() : q_.get_str();
  }

  bool is_integer() const { return q_.get_den() == 1; }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.q_ == 0) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.q_ = -a.q_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  friend Rational abs(const Rational& a) {
    Rational r;
    r.q_ = ::abs(a.q_);
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class q_;
};

inline Rational Rational::from_string(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(Int(std::string(text)));
  }
  Int num(std::string(text.substr(0, slash)));
  Int den(std::string(text.substr(slash + 1)));
  return Rational(num, den);
}

}  // namespace dplab
