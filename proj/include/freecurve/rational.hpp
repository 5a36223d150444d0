#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace freecurve {

using Int = mpz_class;

struct ZeroDenominatorError : std::domain_error {
  ZeroDenominatorError() : std::domain_error("rational with zero denominator") {}
};

// Exact rational number, always in canonical form: gcd(|num|, den) = 1,
// den >= 1, zero is 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}           // NOLINT: implicit by design
  Rational(const Int& n) : v_(n) {}     // NOLINT
  Rational(const Int& num, const Int& den) : v_(num, den) {
    if (den == 0) throw ZeroDenominatorError();
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(Int(num), Int(den)) {}

  static Rational normalize(const Int& num, const Int& den) { return Rational(num, den); }

  Int numerator() const { return v_.get_num(); }
  Int denominator() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw ZeroDenominatorError();
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  Rational inverse() const {
    if (is_zero()) throw ZeroDenominatorError();
    return Rational(v_.get_den(), v_.get_num());
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  // "n" for integers, "n/m" otherwise.
  std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

// Binomial coefficient C(n, k); zero for n < k or negative arguments.
inline long binom2(long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

inline long dim_sk(long k) { return k < 0 ? 0 : (k + 2) * (k + 1) / 2; }

}  // namespace freecurve
