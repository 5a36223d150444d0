#include "freecurve/tripoly.hpp"

#include <algorithm>
#include <map>

namespace freecurve {

std::vector<Monomial> monomial_basis(int k) {
  if (k < 0) return {};
  std::vector<Monomial> out;
  out.reserve(dim_sk(k));
  for (int ex = k; ex >= 0; --ex)
    for (int ey = k - ex; ey >= 0; --ey)
      out.push_back(Monomial{static_cast<std::uint16_t>(ex), static_cast<std::uint16_t>(ey),
                             static_cast<std::uint16_t>(k - ex - ey)});
  return out;
}

Monomial monomial_at(long index, int k) {
  long s = 0;
  while ((s + 1) * (s + 2) / 2 <= index) ++s;
  long off = index - s * (s + 1) / 2;
  long ex = k - s, ey = s - off;
  return Monomial{static_cast<std::uint16_t>(ex), static_cast<std::uint16_t>(ey),
                  static_cast<std::uint16_t>(k - ex - ey)};
}

TriPoly TriPoly::constant(const Rational& c) {
  TriPoly p;
  if (!c.is_zero()) p.terms_.push_back({Monomial{}, c});
  return p;
}

TriPoly TriPoly::monomial(const Monomial& m, const Rational& c) {
  TriPoly p;
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

TriPoly TriPoly::variable(char v) {
  Monomial m;
  switch (v) {
    case 'x': m.ex = 1; break;
    case 'y': m.ey = 1; break;
    case 'z': m.ez = 1; break;
    default: throw std::invalid_argument("variable must be x, y or z");
  }
  return monomial(m, Rational(1));
}

int TriPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool TriPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

std::optional<int> TriPoly::homogeneous_degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return terms_.front().first.degree();
}

Rational TriPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& mm) { return mm < t.first; });
  if (it != terms_.end() && it->first == m) return it->second;
  return Rational(0);
}

TriPoly TriPoly::operator-() const {
  TriPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) r.terms_.push_back({m, -c});
  return r;
}

TriPoly operator+(const TriPoly& a, const TriPoly& b) {
  TriPoly r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  while (ia != a.terms_.end() && ib != b.terms_.end()) {
    if (ia->first == ib->first) {
      Rational s = ia->second + ib->second;
      if (!s.is_zero()) r.terms_.push_back({ia->first, s});
      ++ia;
      ++ib;
    } else if (ib->first < ia->first) {
      r.terms_.push_back(*ia++);
    } else {
      r.terms_.push_back(*ib++);
    }
  }
  r.terms_.insert(r.terms_.end(), ia, a.terms_.end());
  r.terms_.insert(r.terms_.end(), ib, b.terms_.end());
  return r;
}

TriPoly operator-(const TriPoly& a, const TriPoly& b) { return a + (-b); }

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
  if (a.is_zero() || b.is_zero()) return TriPoly();
  std::map<Monomial, Rational, std::greater<Monomial>> acc;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma * mb;
      auto [it, inserted] = acc.try_emplace(m, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  std::vector<TriPoly::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) terms.push_back({m, c});
  return TriPoly::from_sorted_terms(std::move(terms));
}

TriPoly TriPoly::scaled(const Rational& c) const {
  if (c.is_zero()) return TriPoly();
  TriPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& [m, cc] : terms_) r.terms_.push_back({m, cc * c});
  return r;
}

TriPoly TriPoly::pow(unsigned n) const {
  TriPoly result = TriPoly::constant(Rational(1));
  TriPoly base = *this;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

TriPoly TriPoly::partial_derivative(char v) const {
  TriPoly r;
  for (const auto& [m, c] : terms_) {
    Monomial dm = m;
    long e = 0;
    switch (v) {
      case 'x': e = m.ex; if (e) --dm.ex; break;
      case 'y': e = m.ey; if (e) --dm.ey; break;
      case 'z': e = m.ez; if (e) --dm.ez; break;
      default: throw std::invalid_argument("variable must be x, y or z");
    }
    if (e) r.terms_.push_back({dm, c * Rational(e)});
  }
  // order is preserved within the surviving terms
  return from_sorted_terms(std::move(r.terms_));
}

TriPoly TriPoly::substitute(const TriPoly& sx, const TriPoly& sy, const TriPoly& sz) const {
  // cache powers of each substituted value up to the needed exponent
  auto powers = [](const TriPoly& b, int maxe) {
    std::vector<TriPoly> pw(maxe + 1);
    pw[0] = TriPoly::constant(Rational(1));
    for (int i = 1; i <= maxe; ++i) pw[i] = pw[i - 1] * b;
    return pw;
  };
  int mx = 0, my = 0, mz = 0;
  for (const auto& [m, c] : terms_) {
    mx = std::max(mx, int(m.ex));
    my = std::max(my, int(m.ey));
    mz = std::max(mz, int(m.ez));
  }
  auto px = powers(sx, mx), py = powers(sy, my), pz = powers(sz, mz);
  TriPoly acc;
  for (const auto& [m, c] : terms_) acc += (px[m.ex] * py[m.ey] * pz[m.ez]).scaled(c);
  return acc;
}

TriPoly TriPoly::exact_divide(const TriPoly& q) const {
  if (q.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  TriPoly rem = *this;
  std::map<Monomial, Rational, std::greater<Monomial>> quot;
  const auto& [qm, qc] = q.leading_term();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading_term();
    if (!qm.divides(rm)) throw NotDivisibleError();
    Monomial tm = rm.divide(qm);
    Rational tc = rc / qc;
    quot.try_emplace(tm, tc);
    rem -= q * TriPoly::monomial(tm, tc);
  }
  std::vector<Term> terms(quot.begin(), quot.end());
  return from_sorted_terms(std::move(terms));
}

TriPoly TriPoly::from_sorted_terms(std::vector<Term> terms) {
  TriPoly p;
  p.terms_ = std::move(terms);
  for (std::size_t i = 0; i + 1 < p.terms_.size(); ++i)
    if (!(p.terms_[i + 1].first < p.terms_[i].first))
      throw std::logic_error("terms not strictly descending");
  return p;
}

std::string TriPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a.sign() < 0) {
        out += "-";
        a = -a;
      }
      first = false;
    } else {
      out += a.sign() < 0 ? " - " : " + ";
      if (a.sign() < 0) a = -a;
    }
    bool is_const = m.degree() == 0;
    bool unit = (a == Rational(1));
    if (!unit || is_const) out += a.str();
    bool printed = !unit || is_const;
    auto var = [&](char v, int e) {
      if (e == 0) return;
      if (printed) out += "*";
      out += v;
      if (e > 1) out += "^" + std::to_string(e);
      printed = true;
    };
    var('x', m.ex);
    var('y', m.ey);
    var('z', m.ez);
  }
  return out;
}

TriPoly homogenize(const TriPoly& p, int d) {
  std::vector<TriPoly::Term> terms;
  terms.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) {
    if (m.ez != 0) throw std::invalid_argument("homogenize input must not contain z");
    if (m.degree() > d) throw std::invalid_argument("degree exceeds homogenization target");
    terms.push_back({Monomial{m.ex, m.ey, static_cast<std::uint16_t>(d - m.degree())}, c});
  }
  std::sort(terms.begin(), terms.end(),
            [](const TriPoly::Term& a, const TriPoly::Term& b) { return b.first < a.first; });
  return TriPoly::from_sorted_terms(std::move(terms));
}

}  // namespace freecurve
