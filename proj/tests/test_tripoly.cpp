#include <doctest.h>

#include <random>

#include "freecurve/parser.hpp"
#include "freecurve/tripoly.hpp"

using namespace freecurve;

namespace {

TriPoly parse(const std::string& s) {
  auto r = parse_expression(s);
  REQUIRE(r.ok());
  return *r.poly;
}

TriPoly random_poly(std::mt19937_64& rng, int max_terms = 6, int max_exp = 4) {
  std::uniform_int_distribution<int> e(0, max_exp), c(-5, 5), n(1, max_terms);
  TriPoly p;
  int terms = n(rng);
  for (int i = 0; i < terms; ++i) {
    int cv = c(rng);
    if (!cv) continue;
    p += TriPoly::monomial(Monomial{static_cast<std::uint16_t>(e(rng)), static_cast<std::uint16_t>(e(rng)),
                                    static_cast<std::uint16_t>(e(rng))},
                           Rational(cv));
  }
  return p;
}

}  // namespace

TEST_CASE("ring operation examples") {
  CHECK(parse("x+y") * parse("x-y") == parse("x^2-y^2"));
  CHECK(parse("y*z+x^2").pow(2) == parse("y^2*z^2+2*x^2*y*z+x^4"));
  TriPoly p = parse("3*x^2*y - z^3 + 1/2*x*y*z");
  CHECK((p + (-p)).is_zero());
}

TEST_CASE("partial derivatives") {
  CHECK(parse("x^3").partial_derivative('x') == parse("3*x^2"));
  // d=6 member of the one-cusp family: z-derivative picks out y^{d-1}
  CHECK(parse("y^5*z + x^6").partial_derivative('z') == parse("y^5"));
  TriPoly f = parse("(y*z+x^2)^2 - x^3*z");
  TriPoly euler = TriPoly::variable('x') * f.partial_derivative('x') +
                  TriPoly::variable('y') * f.partial_derivative('y') +
                  TriPoly::variable('z') * f.partial_derivative('z');
  CHECK(euler == f.scaled(Rational(4)));
}

TEST_CASE("substitution") {
  TriPoly f3 = parse("y*z^2 - x^2*z + x^3");
  TriPoly sub = f3.substitute(parse("x^2"), parse("x*y"), parse("y*z+x^2"));
  CHECK(sub == parse("x*y*(y*z+x^2)^2 - x^4*y*z"));
  TriPoly p = parse("x^2*y - 3*z + 1");
  CHECK(p.substitute(TriPoly::variable('x'), TriPoly::variable('y'), TriPoly::variable('z')) == p);
  // evaluation at (1,1,1) sums the coefficients
  TriPoly ones = TriPoly::constant(Rational(1));
  CHECK(parse("x^2*y - 3*z + 5").substitute(ones, ones, ones) == parse("3"));
}

TEST_CASE("exact division") {
  CHECK(parse("x^2-y^2").exact_divide(parse("x-y")) == parse("x+y"));
  CHECK(parse("x*y*(y*z+x^2)^2 - x^4*y*z").exact_divide(parse("x*y")) ==
        parse("(y*z+x^2)^2 - x^3*z"));
  CHECK_THROWS_AS(parse("x^2+y^2").exact_divide(parse("x-y")), NotDivisibleError);
}

TEST_CASE("homogenization") {
  CHECK(homogenize(parse("y - x^2"), 2) == parse("y*z - x^2"));
  CHECK(homogenize(parse("x^3 + y^3 - x*y"), 3) == parse("x^3 + y^3 - x*y*z"));
  TriPoly already = parse("x^2 + x*y + y^2");
  CHECK(homogenize(already, 2) == already);
  CHECK_THROWS(homogenize(parse("x^3"), 2));
  CHECK_THROWS(homogenize(parse("x*z"), 3));
}

TEST_CASE("canonical rendering") {
  CHECK(parse("(y*z+x^2)^2 - x^3*z").str() == "x^4 - x^3*z + 2*x^2*y*z + y^2*z^2");
  CHECK(parse("0").str() == "0");
  CHECK(parse("-x + 1/2").str() == "-x + 1/2");
  CHECK(parse("y - 3*x*y*z + z^2").str() == "-3*x*y*z + z^2 + y");
}

TEST_CASE("monomial bases") {
  CHECK(monomial_basis(0).size() == 1);
  CHECK(monomial_basis(2).size() == 6);
  CHECK(monomial_basis(10).size() == 66);
  // descending order and index round trip
  for (int k : {1, 3, 7}) {
    auto basis = monomial_basis(k);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(monomial_index(basis[i], k) == static_cast<long>(i));
      CHECK(monomial_at(static_cast<long>(i), k) == basis[i]);
      if (i + 1 < basis.size()) CHECK(basis[i + 1] < basis[i]);
    }
  }
}

TEST_CASE("algebra properties on random operands") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 60; ++i) {
    TriPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    if (!q.is_zero()) CHECK((p * q).exact_divide(q) == p);
    // Leibniz rule
    for (char v : {'x', 'y', 'z'}) {
      CHECK((p * q).partial_derivative(v) ==
            p.partial_derivative(v) * q + p * q.partial_derivative(v));
      CHECK((p + q).partial_derivative(v) ==
            p.partial_derivative(v) + q.partial_derivative(v));
    }
  }
}

TEST_CASE("homogeneity bookkeeping") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> deg(1, 5);
  for (int i = 0; i < 40; ++i) {
    int da = deg(rng), db = deg(rng);
    TriPoly a, b;
    for (const auto& m : monomial_basis(da))
      if (rng() % 3 == 0) a += TriPoly::monomial(m, Rational(static_cast<long>(rng() % 7) + 1));
    for (const auto& m : monomial_basis(db))
      if (rng() % 3 == 0) b += TriPoly::monomial(m, Rational(static_cast<long>(rng() % 7) + 1));
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(a.homogeneous_degree() == da);
    TriPoly prod = a * b;
    CHECK(prod.homogeneous_degree() == da + db);
  }
}
