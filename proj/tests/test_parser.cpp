#include <doctest.h>

#include <random>

#include "freecurve/parser.hpp"

using namespace freecurve;

namespace {

TriPoly parse_ok(const std::string& s) {
  auto r = parse_expression(s);
  REQUIRE_MESSAGE(r.ok(), "diagnostic: ", r.diagnostic ? r.diagnostic->message : "");
  return *r.poly;
}

}  // namespace

TEST_CASE("catalogue equations parse") {
  TriPoly c4 = parse_ok("(y*z+x^2)^2 - x^3*z");
  TriPoly c4_built = (TriPoly::variable('y') * TriPoly::variable('z') +
                      TriPoly::variable('x').pow(2))
                         .pow(2) -
                     TriPoly::variable('x').pow(3) * TriPoly::variable('z');
  CHECK(c4 == c4_built);

  TriPoly pencil = parse_ok("x*y*z*(x^3+y^3+z^3)*((x^3+y^3+z^3)^3-27*x^3*y^3*z^3)");
  CHECK(pencil.homogeneous_degree() == 15);
  TriPoly cubic = parse_ok("x^3+y^3+z^3");
  TriPoly built = TriPoly::variable('x') * TriPoly::variable('y') * TriPoly::variable('z') * cubic *
                  (cubic.pow(3) - parse_ok("27*x^3*y^3*z^3"));
  CHECK(pencil == built);
}

TEST_CASE("negative exponent is rejected with a position") {
  auto r = parse_expression("x^-1");
  REQUIRE_FALSE(r.ok());
  CHECK(r.diagnostic->position == 2);
}

TEST_CASE("operator precedence and juxtaposition") {
  CHECK(parse_ok("x+y*z^2") == parse_ok("x+(y*(z^2))"));
  CHECK(parse_ok("xyz") == parse_ok("x*y*z"));
  CHECK(parse_ok("2x^2y") == parse_ok("2*(x^2)*y"));
  CHECK(parse_ok("(x+y)(x-y)") == parse_ok("x^2-y^2"));
  CHECK(parse_ok("-x^2+y") == parse_ok("y-x^2"));
  CHECK(parse_ok("x - -y") == parse_ok("x + y"));
  CHECK(parse_ok("1/2*x") == parse_ok("x*1/2"));
  CHECK(parse_ok("3/2^2") == parse_ok("3/4"));
  CHECK(parse_ok("2^3") == parse_ok("8"));
}

TEST_CASE("division is literal-only") {
  CHECK_FALSE(parse_expression("x/2").ok());
  CHECK_FALSE(parse_expression("1/x").ok());
  CHECK_FALSE(parse_expression("1/0").ok());
  CHECK(parse_ok("5/10") == parse_ok("1/2"));
}

TEST_CASE("round trip through the canonical rendering") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> e(0, 5), c(-9, 9);
  for (int i = 0; i < 120; ++i) {
    TriPoly p;
    for (int t = 0; t < 6; ++t) {
      int cv = c(rng);
      if (!cv) continue;
      p += TriPoly::monomial(
          Monomial{static_cast<std::uint16_t>(e(rng)), static_cast<std::uint16_t>(e(rng)),
                   static_cast<std::uint16_t>(e(rng))},
          Rational(cv, 1 + static_cast<long>(rng() % 4)));
    }
    auto r = parse_expression(p.str());
    REQUIRE(r.ok());
    CHECK(*r.poly == p);
  }
}

TEST_CASE("fuzzed inputs never crash") {
  std::mt19937_64 rng(555);
  const std::string alphabet = "xyz0123456789+-*/^() .";
  for (int i = 0; i < 500; ++i) {
    std::string s;
    int len = static_cast<int>(rng() % 24);
    for (int j = 0; j < len; ++j) s += alphabet[rng() % alphabet.size()];
    auto r = parse_expression(s);
    if (!r.ok()) {
      CHECK(r.diagnostic->position <= s.size());
      CHECK(!r.diagnostic->message.empty());
    }
  }
}
