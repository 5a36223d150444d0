#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "freecurve/rational.hpp"

namespace freecurve {

struct NotDivisibleError : std::runtime_error {
  NotDivisibleError() : std::runtime_error("polynomial division is not exact") {}
};

// Monomial x^ex * y^ey * z^ez. Total order: graded lexicographic, x > y > z.
struct Monomial {
  std::uint16_t ex = 0, ey = 0, ez = 0;

  int degree() const { return int(ex) + int(ey) + int(ez); }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.ex == b.ex && a.ey == b.ey && a.ez == b.ez;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  // grlex comparison
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.ex != b.ex) return a.ex < b.ex;
    return a.ey < b.ey;
  }
  friend bool operator>(const Monomial& a, const Monomial& b) { return b < a; }

  Monomial operator*(const Monomial& o) const {
    return Monomial{static_cast<std::uint16_t>(ex + o.ex), static_cast<std::uint16_t>(ey + o.ey),
                    static_cast<std::uint16_t>(ez + o.ez)};
  }
  bool divides(const Monomial& o) const { return ex <= o.ex && ey <= o.ey && ez <= o.ez; }
  Monomial divide(const Monomial& o) const {
    return Monomial{static_cast<std::uint16_t>(ex - o.ex), static_cast<std::uint16_t>(ey - o.ey),
                    static_cast<std::uint16_t>(ez - o.ez)};
  }
};

// All monomials of degree k, descending grlex; index 0 is x^k.
std::vector<Monomial> monomial_basis(int k);

// Position of a degree-k monomial in monomial_basis(k). With s = k - ex the
// index is s(s+1)/2 + (s - ey).
inline long monomial_index(const Monomial& m, int k) {
  long s = k - m.ex;
  return s * (s + 1) / 2 + (s - m.ey);
}

Monomial monomial_at(long index, int k);

// Sparse polynomial in x, y, z with exact rational coefficients. Terms are
// kept sorted in descending monomial order with no zero coefficients.
class TriPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  TriPoly() = default;
  static TriPoly zero() { return TriPoly(); }
  static TriPoly constant(const Rational& c);
  static TriPoly monomial(const Monomial& m, const Rational& c);
  static TriPoly variable(char v);  // 'x', 'y' or 'z'

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // -1 for the zero polynomial
  int degree() const;
  bool is_homogeneous() const;
  // degree if homogeneous and nonzero, nullopt otherwise
  std::optional<int> homogeneous_degree() const;

  const Term& leading_term() const { return terms_.front(); }
  Rational coefficient(const Monomial& m) const;

  TriPoly operator-() const;
  friend TriPoly operator+(const TriPoly& a, const TriPoly& b);
  friend TriPoly operator-(const TriPoly& a, const TriPoly& b);
  friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
  TriPoly& operator+=(const TriPoly& o) { return *this = *this + o; }
  TriPoly& operator-=(const TriPoly& o) { return *this = *this - o; }
  TriPoly& operator*=(const TriPoly& o) { return *this = *this * o; }
  friend bool operator==(const TriPoly& a, const TriPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const TriPoly& a, const TriPoly& b) { return !(a == b); }

  TriPoly scaled(const Rational& c) const;

  TriPoly pow(unsigned n) const;

  TriPoly partial_derivative(char v) const;

  // p(sx, sy, sz), expanded exactly
  TriPoly substitute(const TriPoly& sx, const TriPoly& sy, const TriPoly& sz) const;

  // Exact quotient *this / q; throws NotDivisibleError when the division
  // leaves a remainder.
  TriPoly exact_divide(const TriPoly& q) const;

  // Canonical rendering, descending monomial order, e.g. "x^4 - x^3*z + 2*x^2*y*z".
  std::string str() const;

  // Terms must arrive strictly descending; zero coefficients are dropped.
  static TriPoly from_sorted_terms(std::vector<Term> terms);

 private:
  std::vector<Term> terms_;
};

// z^d * p(x/z, y/z) for an affine polynomial p in x and y only. Rejects
// inputs that contain z or have degree above d.
TriPoly homogenize(const TriPoly& p, int d);

}  // namespace freecurve
