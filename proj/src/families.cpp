#include "freecurve/families.hpp"

#include "freecurve/parser.hpp"

#include <sstream>

namespace freecurve {

namespace {

TriPoly parse_or_die(const std::string& text) {
  ParseResult r = parse_expression(text);
  if (!r.ok()) throw std::logic_error("internal polynomial failed to parse: " + text);
  return *r.poly;
}

TriPoly xpow(int e) { return TriPoly::monomial(Monomial{static_cast<std::uint16_t>(e), 0, 0}, 1); }
TriPoly ypow(int e) { return TriPoly::monomial(Monomial{0, static_cast<std::uint16_t>(e), 0}, 1); }
TriPoly mono(int ex, int ey, int ez, Rational c = Rational(1)) {
  return TriPoly::monomial(Monomial{static_cast<std::uint16_t>(ex), static_cast<std::uint16_t>(ey),
                                    static_cast<std::uint16_t>(ez)},
                           std::move(c));
}

std::string rat_str(const Rational& q) { return q.str(); }

long fib(int n) {
  long a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    long t = a + b;
    a = b;
    b = t;
  }
  return a;
}

SingularityMeta one_pair_cusp(long a, long b) {
  SingularityMeta m;
  m.types.push_back({SingularityType::Kind::cusp_one_pair, a, b});
  return m;
}

}  // namespace

CurveSpec gen_stfam(int d, const Rational& a, const Rational& b, const Rational& c) {
  if (d < 5) throw InputError("family needs degree >= 5");
  if (a.is_zero()) throw InputError("coefficient a must be nonzero");
  CurveSpec s;
  s.d = d;
  s.f = mono(0, d - 1, 1) + xpow(d) + mono(2, d - 2, 0, a) + mono(1, d - 1, 0, b) + mono(0, d, 0, c);
  std::ostringstream id;
  id << "stfam:d=" << d << ",a=" << rat_str(a) << ",b=" << rat_str(b) << ",c=" << rat_str(c);
  s.id = id.str();
  s.params = {{"d", std::to_string(d)}, {"a", rat_str(a)}, {"b", rat_str(b)}, {"c", rat_str(c)}};
  s.expected.free = true;
  s.expected.tau = static_cast<long>(d) * d - 4 * d + 7;
  s.expected.mu = static_cast<long>(d - 1) * (d - 2);
  s.expected.d1 = 2;
  s.expected.d2 = d - 3;
  s.expected.rigid = true;
  s.expected.irreducible = true;
  s.expected.rational_cuspidal = true;
  s.singularities = one_pair_cusp(d - 1, d);
  s.provenance =
      "one-cusp rational family of type (d, d-1); free for every d >= 5 with tau = d^2-4d+7 and "
      "exponents (2, d-3)";
  return s;
}

CurveSpec gen_valles_pencil() {
  CurveSpec s;
  s.id = "valles";
  s.f = parse_or_die("x*y*z*(x^3+y^3+z^3)*((x^3+y^3+z^3)^3-27*x^3*y^3*z^3)");
  s.d = 15;
  s.expected.free = true;
  s.expected.irreducible = false;
  s.provenance =
      "pencil-of-cubics construction: the four singular members (twelve lines) together with one "
      "smooth member; free, with an irrational component";
  return s;
}

CurveSpec gen_prop1(int k, const std::vector<Rational>& coeffs) {
  if (k < 1) throw InputError("k must be >= 1");
  if (coeffs.size() != static_cast<std::size_t>(k + 1)) throw InputError("need coefficients a_1..a_{k+1}");
  if (coeffs.back().is_zero()) throw InputError("a_{k+1} must be nonzero");
  int d = 2 * k + 2;
  TriPoly inner = mono(0, k, 1);
  for (int i = 1; i <= k + 1; ++i) inner += mono(i, k + 1 - i, 0, coeffs[i - 1]);
  CurveSpec s;
  s.d = d;
  s.f = inner * inner - mono(1, 2 * k + 1, 0);
  std::ostringstream id;
  id << "prop1:k=" << k;
  for (int i = 1; i <= k + 1; ++i) id << ",a" << i << "=" << rat_str(coeffs[i - 1]);
  s.id = id.str();
  s.params["k"] = std::to_string(k);
  s.expected.irreducible = true;
  s.expected.rational_cuspidal = true;
  s.expected.mu = static_cast<long>(d - 1) * (d - 2);
  if (k == 1) s.expected.free = false;  // rational quartics are never free
  SingularityMeta meta;
  meta.declared_total = static_cast<long>(d - 1) * (d - 2);
  s.singularities = meta;
  bool default_coeffs = coeffs.back() == Rational(1);
  for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) default_coeffs &= coeffs[i].is_zero();
  s.expected.verified_defaults = default_coeffs;
  s.provenance = "unique-cusp curves of type (d, d-2), d = 2k+2 even";
  return s;
}

CurveSpec gen_prop2i(int d) {
  if (d < 3) throw InputError("recursion starts at degree 3");
  TriPoly f = parse_or_die("y*z^2 - x^2*z + x^3");
  for (int cur = 4; cur <= d; ++cur) {
    Rational a_prev = f.coefficient(Monomial{static_cast<std::uint16_t>(cur - 1), 0, 0});
    TriPoly substituted =
        f.substitute(xpow(2), mono(1, 1, 0), mono(0, 1, 1) + mono(2, 0, 0, a_prev));
    f = substituted.exact_divide(mono(cur - 3, 1, 0));
  }
  CurveSpec s;
  s.d = d;
  s.f = f;
  s.id = "prop2i:d=" + std::to_string(d);
  s.params["d"] = std::to_string(d);
  if (d >= 4) {
    s.expected.free = d >= 5;
    s.expected.rigid = true;
    s.expected.irreducible = true;
    s.expected.rational_cuspidal = true;
    if (d >= 5) {
      s.expected.tau = static_cast<long>(d) * d - 4 * d + 7;
      s.expected.d1 = 2;
      s.expected.d2 = d - 3;
    }
    // cusp pair (d-1, d-2) plus one of pair (2, 2d-3); total d^2-3d+2. The
    // catalogue also prints the total as d^2-3d+4, which is inconsistent
    // with the declared types; verification reports the computed facts.
    SingularityMeta meta;
    meta.types.push_back({SingularityType::Kind::cusp_one_pair, d - 1, d - 2});
    meta.types.push_back({SingularityType::Kind::cusp_one_pair, 2, 2 * d - 3});
    s.singularities = meta;
    s.expected.mu = meta.total_milnor();
  }
  s.provenance =
      "two-cusp type (d, d-2) series generated by the quadratic-substitution recursion; free with "
      "exponents (2, d-3) in the verified range 5 <= d <= 15";
  return s;
}

CurveSpec gen_prop2ii(int k, const std::vector<Rational>& coeffs) {
  if (k < 2) throw InputError("k must be >= 2");
  if (coeffs.size() != static_cast<std::size_t>(std::max(0, k - 1)))
    throw InputError("need coefficients a_2..a_k");
  TriPoly inner = mono(0, k - 1, 1);
  for (int i = 2; i <= k; ++i) inner += mono(i, k - i, 0, coeffs[i - 2]);
  CurveSpec s;
  s.d = 2 * k + 1;
  s.f = inner * inner * ypow(1) - xpow(2 * k + 1);
  std::ostringstream id;
  id << "prop2ii:k=" << k;
  for (int i = 2; i <= k; ++i) id << ",a" << i << "=" << rat_str(coeffs[i - 2]);
  s.id = id.str();
  s.params["k"] = std::to_string(k);
  s.expected.irreducible = true;
  s.expected.rational_cuspidal = true;
  SingularityMeta meta;
  meta.declared_total = static_cast<long>(2 * k) * (2 * k - 1);
  s.singularities = meta;
  s.expected.mu = meta.declared_total;
  s.provenance = "two-cusp type (d, d-2) curves of odd degree d = 2k+1 with an A_{2k} second cusp";
  return s;
}

CurveSpec gen_thm2ii(int k) {
  if (k < 2) throw InputError("k must be >= 2");
  std::vector<Rational> coeffs(std::max(0, k - 1), Rational(0));
  coeffs.back() = Rational(1);
  CurveSpec s = gen_prop2ii(k, coeffs);
  s.id = "thm2ii:k=" + std::to_string(k);
  s.expected.free = true;
  s.expected.tau = 3L * k * k;
  s.expected.mu = 2L * k * (2 * k - 1);
  s.expected.d1 = k;
  s.expected.d2 = k;
  s.expected.rigid = true;
  SingularityMeta meta;
  meta.types.push_back({SingularityType::Kind::cusp_one_pair, 2 * k + 1, 2 * k - 1});
  meta.types.push_back({SingularityType::Kind::cusp_one_pair, 2 * k + 1, 2});
  s.singularities = meta;
  s.provenance =
      "two-cusp rational curves (y^{k-1}z + x^k)^2 y - x^{2k+1}; free for every k >= 2 with tau = "
      "3k^2 and both exponents equal to k";
  return s;
}

CurveSpec gen_prop2iii(int k, int j, const std::vector<Rational>& coeffs) {
  if (k < 0 || j < 1) throw InputError("need k >= 0 and j >= 1");
  if (k + j < 2) throw InputError("degree 2k+2j+2 must be at least 6");
  if (coeffs.size() != static_cast<std::size_t>(k + j)) throw InputError("need coefficients a_2..a_{k+j+1}");
  if (coeffs.back().is_zero()) throw InputError("a_{k+j+1} must be nonzero");
  TriPoly inner = mono(0, k + j, 1);
  for (int i = 2; i <= k + j + 1; ++i) inner += mono(i, k + j + 1 - i, 0, coeffs[i - 2]);
  CurveSpec s;
  s.d = 2 * k + 2 * j + 2;
  s.f = inner * inner - mono(2 * j + 1, 2 * k + 1, 0);
  std::ostringstream id;
  id << "prop2iii:k=" << k << ",j=" << j;
  s.id = id.str();
  s.params = {{"k", std::to_string(k)}, {"j", std::to_string(j)}};
  s.expected.irreducible = true;
  s.expected.rational_cuspidal = true;
  SingularityMeta meta;
  meta.types.push_back({SingularityType::Kind::a_k, 2 * j, 0});
  meta.declared_total = static_cast<long>(s.d - 1) * (s.d - 2);
  s.singularities = meta;
  s.expected.mu = meta.declared_total;
  s.provenance = "two-cusp type (d, d-2) curves of even degree with an A_{2j} second cusp";
  return s;
}

CurveSpec gen_prop3(int a, int b) {
  if (!(a >= b && b >= 1)) throw InputError("need a >= b >= 1");
  int d = a + b + 2;
  // h(t) = sum_{k=0}^{d-3} (a_k / k!) (t-1)^k with a_0 = 1, a_1 = a - 1/2,
  // a_k the falling factorial of a_1; g(x, y) = y^{d-3} h(x/y)
  TriPoly g;
  Rational a1(2 * a - 1, 2);
  Rational ak(1);
  Int kfact(1);
  TriPoly xy_diff = xpow(1) - ypow(1);
  for (int k = 0; k <= d - 3; ++k) {
    if (k > 0) {
      ak = (k == 1) ? a1 : ak * (a1 - Rational(k - 1));
      kfact *= k;
    }
    g += xy_diff.pow(k).scaled(ak / Rational(kfact)) * ypow(d - 3 - k);
  }
  TriPoly dpart = xy_diff.pow(d - 2) - xpow(1) * ypow(1) * g;
  TriPoly numerator = mono(2 * a + 1, 2 * b + 1, 0) - dpart * dpart;
  TriPoly affine = numerator.exact_divide(xy_diff.pow(d - 2));
  CurveSpec s;
  s.d = d;
  s.f = homogenize(affine, d);
  s.id = "prop3:a=" + std::to_string(a) + ",b=" + std::to_string(b);
  s.params = {{"a", std::to_string(a)}, {"b", std::to_string(b)}};
  s.expected.free = d >= 5;
  s.expected.rigid = true;
  s.expected.irreducible = true;
  s.expected.rational_cuspidal = true;
  s.expected.mu = static_cast<long>(d) * d - 3 * d + 2;
  if (d >= 5) {
    s.expected.tau = static_cast<long>(d) * d - 4 * d + 7;
    s.expected.d1 = 2;
    s.expected.d2 = d - 3;
    s.expected.verified_defaults = d <= 10;
  }
  SingularityMeta meta;
  meta.declared_total = *s.expected.mu;
  s.singularities = meta;
  s.provenance =
      "tricuspidal curves of type (d, d-2), one per pair a >= b >= 1 with a+b = d-2; free with d1 "
      "= 2 in the verified range 5 <= d <= 10";
  return s;
}

CurveSpec gen_prop4i(int k) {
  if (k < 2) throw InputError("k must be >= 2");
  int d = 2 * k;
  CurveSpec s;
  s.d = d;
  TriPoly q = mono(0, 1, 1) - xpow(2);
  s.f = q.pow(k) - mono(1, 2 * k - 1, 0);
  s.id = "prop4i:k=" + std::to_string(k);
  s.params["k"] = std::to_string(k);
  s.expected.irreducible = true;
  s.expected.rational_cuspidal = true;
  s.expected.mu = static_cast<long>(k - 1) * (4 * k - 2);
  s.singularities = one_pair_cusp(k, 4 * k - 1);
  if (k == 2) {
    s.expected.free = false;  // rational quartics are never free
  } else {
    s.expected.free = true;
    s.expected.tau = static_cast<long>(d) * d - 4 * d + 7;
    s.expected.d1 = 2;
    s.expected.d2 = d - 3;
    s.expected.verified_defaults = k <= 10;
  }
  s.provenance =
      "unicuspidal curves (zy - x^2)^k - x y^{2k-1} with Puiseux pair (k, 4k-1); free with d1 = 2 "
      "in the verified range 3 <= k <= 10";
  return s;
}

CurveSpec gen_prop4ii(int k) {
  if (k < 0) throw InputError("k must be >= 0");
  TriPoly x = xpow(1), y = ypow(1);
  TriPoly g = x * y - x.pow(3) - y.pow(3);  // G
  TriPoly ymx2 = y - x * x;
  // P_0 and Q_0; each step uses Q_i = P_{i-1} and divides by Q_{i-1}
  TriPoly p = ymx2 * ymx2 - TriPoly::constant(2) * x * y * y * ymx2 + y.pow(5);
  TriPoly q = ymx2;
  for (int i = 1; i <= k; ++i) {
    TriPoly q_next = p;
    p = (g.pow(static_cast<unsigned>(fib(2 * i + 3))) + q_next.pow(3)).exact_divide(q);
    q = q_next;
  }
  int d = static_cast<int>(fib(2 * k + 5));
  CurveSpec s;
  s.d = d;
  s.f = homogenize(p, d);
  s.id = "prop4ii:k=" + std::to_string(k);
  s.params["k"] = std::to_string(k);
  s.expected.irreducible = true;
  s.expected.rational_cuspidal = true;
  s.expected.free = true;
  long pair_a = fib(2 * k + 3), pair_b = fib(2 * k + 7);
  s.singularities = one_pair_cusp(pair_a, pair_b);
  s.expected.mu = (pair_a - 1) * (pair_b - 1);
  switch (k) {
    case 0: s.expected.tau = 12; s.expected.d1 = 2; break;
    case 1: s.expected.tau = 108; s.expected.d1 = 6; break;
    case 2: s.expected.tau = 823; s.expected.d1 = 14; break;
    case 3: s.expected.tau = 5889; s.expected.d1 = 35; break;
    default: s.expected.free.reset(); s.expected.verified_defaults = false; break;
  }
  if (s.expected.d1) s.expected.d2 = d - 1 - *s.expected.d1;
  s.provenance =
      "unicuspidal curves of Fibonacci degree F(2k+5) with Puiseux pair (F(2k+3), F(2k+7)); free "
      "for 0 <= k <= 3";
  return s;
}

CurveSpec gen_line_arrangement(const std::string& which) {
  CurveSpec s;
  std::string base = "(x+z)*(x-z)*(y+z)*(y-z)*(x+y)*(x-y)";
  if (which == "d7") {
    s.f = parse_or_die(base + "*z");
    s.d = 7;
    s.expected.tau = 27;
    s.expected.d1 = 3;
    s.expected.d2 = 3;
  } else if (which == "d8") {
    s.f = parse_or_die(base + "*y*z");
    s.d = 8;
    s.expected.tau = 37;
    s.expected.d1 = 3;
    s.expected.d2 = 4;
  } else if (which == "d9") {
    s.f = parse_or_die(base + "*x*y*z");
    s.d = 9;
    s.expected.tau = 49;
    s.expected.d1 = 3;
    s.expected.d2 = 5;
  } else {
    throw InputError("unknown arrangement '" + which + "' (use d7, d8 or d9)");
  }
  s.id = "arrangement:" + which;
  s.params["which"] = which;
  s.expected.free = true;
  s.expected.irreducible = false;
  s.expected.rational_cuspidal = false;
  s.expected.mu = *s.expected.tau;  // only ordinary multiple points
  SingularityMeta meta;
  meta.declared_total = *s.expected.mu;
  s.singularities = meta;
  s.provenance = "free line arrangements built from the six lines x = +-z, y = +-z, x = +-y";
  return s;
}

std::array<std::array<TriPoly, 3>, 2> syzygy_templates_thm2ii(int k) {
  if (k < 2) throw InputError("k must be >= 2");
  std::array<TriPoly, 3> r1, r2;
  r1[0] = mono(k, 0, 0, 2) + mono(0, k - 1, 1, 2);
  r1[1] = mono(k, 0, 0, 4 * k + 2) + mono(k - 1, 1, 0, -4 * k) + mono(0, k - 1, 1, -(8L * k * k - 2));
  r1[2] = mono(k - 1, 0, 1, 4L * k * (k - 1)) + mono(0, k - 2, 2, 8L * k * k * k - 4L * k * k - 2 * k + 1);
  r2[0] = TriPoly::zero();
  r2[1] = mono(0, k, 0, -2);
  r2[2] = mono(k, 0, 0) + mono(0, k - 1, 1, 2 * k - 1);
  return {r1, r2};
}

// The catalogue prints the first component with "+4(d-3)xy"; the relation
// space in degree 2 is one-dimensional for d >= 6 and its computed generator
// carries the opposite sign there, so that is what this template emits.
std::array<TriPoly, 3> syzygy_template_rkeq2i(int d, const Rational& a_dm1) {
  if (d < 5) throw InputError("template applies from degree 5");
  std::array<TriPoly, 3> t;
  t[0] = mono(2, 0, 0, d - 2) + mono(1, 1, 0, -4L * (d - 3));
  t[1] = mono(1, 1, 0, 2L * (d - 1)) + mono(0, 2, 0, -4L * (2 * d - 3));
  t[2] = mono(2, 0, 0, a_dm1 * Rational(2L * d * (2 * d - 7))) + mono(1, 0, 1, -static_cast<long>(d - 1) * (d - 2)) +
         mono(0, 1, 1, 2L * (d - 2) * (2 * d - 3));
  return t;
}

long prop2i_leading_coefficient(int d) {
  CurveSpec s = gen_prop2i(d);
  Rational c = s.f.coefficient(Monomial{static_cast<std::uint16_t>(d), 0, 0});
  return static_cast<long>(mpz_get_si(c.numerator().get_mpz_t()));
}

std::vector<FamilyInfo> family_catalogue() {
  return {
      {"stfam", "d >= 5; rational a != 0, b, c", "d=7, a=1, b=0, c=0",
       "one-cusp rational family of type (d, d-1); free, tau = d^2-4d+7, exponents (2, d-3)"},
      {"valles", "(none)", "(none)",
       "degree-15 pencil-of-cubics union: twelve lines plus a smooth cubic; free"},
      {"prop1", "k >= 1; coefficients a_1..a_{k+1}, a_{k+1} != 0", "k=2, a_3=1",
       "unique-cusp curves of type (d, d-2), d = 2k+2"},
      {"prop2i", "d >= 3", "d=6",
       "two-cusp type (d, d-2) recursion curves; free for 5 <= d <= 15, exponents (2, d-3)"},
      {"prop2ii", "k >= 2; coefficients a_2..a_k", "k=2",
       "two-cusp odd-degree type (d, d-2) curves, d = 2k+1"},
      {"thm2ii", "k >= 2", "k=2",
       "free series (y^{k-1}z + x^k)^2 y - x^{2k+1}: tau = 3k^2, exponents (k, k)"},
      {"prop2iii", "k >= 0, j >= 1, k+j >= 2; coefficients a_2..a_{k+j+1}", "k=1, j=1, a_3=1",
       "two-cusp even-degree type (d, d-2) curves, d = 2k+2j+2"},
      {"prop3", "a >= b >= 1", "a=2, b=1",
       "tricuspidal type (d, d-2) curves, d = a+b+2; free for 5 <= d <= 10, d1 = 2"},
      {"prop4i", "k >= 2", "k=3",
       "unicuspidal (zy - x^2)^k - x y^{2k-1}, Puiseux pair (k, 4k-1); free for 3 <= k <= 10"},
      {"prop4ii", "k >= 0 (k = 3 only with --stretch)", "k=1",
       "unicuspidal Fibonacci-degree series; (d, tau, d1) = (5,12,2), (13,108,6), (34,823,14), "
       "(89,5889,35)"},
      {"arrangement", "which in {d7, d8, d9}", "which=d9",
       "free line arrangements with tau = 27, 37, 49 and exponents (3,3), (3,4), (3,5)"},
  };
}

const std::map<int, std::string>& printed_recursion_curves() {
  static const std::map<int, std::string> curves = {
      {4, "(y*z+x^2)^2-x^3*z"},
      {5, "y*(y*z+x^2)^2+2*x^3*(y*z+x^2)-x^4*z"},
      {6, "(y*z + 2*x^2)^2*y^2 + 2*(y*z + 2*x^2)*y*x^3 + (2*y*z + 5*x^2)*x^4 - x^5*z"},
      {7,
       "14*x^7 + 14*x^6*y + 20*x^5*y^2 + 25*x^4*y^3 - x^6*z + 2*x^5*y*z + 2*x^4*y^2*z + "
       "4*x^3*y^3*z + 10*x^2*y^4*z + y^5*z^2"},
      {8,
       "42*x^8 + 48*x^7*y + 81*x^6*y^2 + 140*x^5*y^3 + 196*x^4*y^4 - x^7*z + 2*x^6*y*z + "
       "2*x^5*y^2*z + 4*x^4*y^3*z + 10*x^3*y^4*z + 28*x^2*y^5*z + y^6*z^2"},
      {9,
       "132*x^9 + 165*x^8*y + 308*x^7*y^2 + 616*x^6*y^3 + 1176*x^5*y^4 + 1764*x^4*y^5 - x^8*z + "
       "2*x^7*y*z + 2*x^6*y^2*z + 4*x^5*y^3*z + 10*x^4*y^4*z + 28*x^3*y^5*z + 84*x^2*y^6*z + "
       "y^7*z^2"},
      {10,
       "429*x^10 + 572*x^9*y + 1144*x^8*y^2 + 2496*x^7*y^3 + 5460*x^6*y^4 + 11088*x^5*y^5 + "
       "17424*x^4*y^6 - x^9*z + 2*x^8*y*z + 2*x^7*y^2*z + 4*x^6*y^3*z + 10*x^5*y^4*z + "
       "28*x^4*y^5*z + 84*x^3*y^6*z + 264*x^2*y^7*z + y^8*z^2"},
  };
  return curves;
}

}  // namespace freecurve
