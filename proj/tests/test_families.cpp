#include <doctest.h>

#include "freecurve/families.hpp"
#include "freecurve/parser.hpp"

using namespace freecurve;

namespace {

TriPoly parse_ok(const std::string& s) {
  auto r = parse_expression(s);
  REQUIRE(r.ok());
  return *r.poly;
}

}  // namespace

TEST_CASE("every generator emits a homogeneous curve of the declared degree") {
  std::vector<CurveSpec> specs;
  specs.push_back(gen_stfam(5, 1, 0, 0));
  specs.push_back(gen_stfam(8, Rational(1), Rational(1), Rational(1)));
  specs.push_back(gen_valles_pencil());
  specs.push_back(gen_prop1(1, {Rational(0), Rational(1)}));
  specs.push_back(gen_prop1(2, {Rational(1, 2), Rational(0), Rational(3)}));
  specs.push_back(gen_prop2i(4));
  specs.push_back(gen_prop2i(9));
  specs.push_back(gen_prop2ii(3, {Rational(2), Rational(1)}));
  specs.push_back(gen_thm2ii(4));
  specs.push_back(gen_prop2iii(1, 1, {Rational(2), Rational(1)}));
  specs.push_back(gen_prop2iii(0, 2, {Rational(0), Rational(1)}));
  specs.push_back(gen_prop3(2, 1));
  specs.push_back(gen_prop3(4, 4));
  specs.push_back(gen_prop4i(2));
  specs.push_back(gen_prop4i(6));
  specs.push_back(gen_prop4ii(0));
  specs.push_back(gen_prop4ii(1));
  specs.push_back(gen_line_arrangement("d7"));
  specs.push_back(gen_line_arrangement("d8"));
  specs.push_back(gen_line_arrangement("d9"));
  for (const auto& s : specs) {
    INFO(s.id);
    CHECK(s.f.homogeneous_degree() == s.d);
  }
}

TEST_CASE("one-cusp family spot checks") {
  CurveSpec s = gen_stfam(5, 1, 0, 0);
  CHECK(s.f == parse_ok("y^4*z + x^5 + x^2*y^3"));
  CHECK(*s.expected.tau == 12);
  CHECK_THROWS_AS(gen_stfam(7, 0, 1, 1), InputError);
  CHECK_THROWS_AS(gen_stfam(4, 1, 0, 0), InputError);
}

TEST_CASE("unique-cusp normal forms") {
  CurveSpec q = gen_prop1(1, {Rational(0), Rational(1)});
  CHECK(q.f == parse_ok("(y*z+x^2)^2 - x*y^3"));
  CHECK(q.d == 4);
  CHECK(q.expected.free == false);
  CHECK_THROWS_AS(gen_prop1(2, {Rational(1), Rational(1), Rational(0)}), InputError);
}

TEST_CASE("recursion reproduces the printed catalogue verbatim") {
  for (const auto& [d, text] : printed_recursion_curves()) {
    INFO("degree ", d);
    CHECK(gen_prop2i(d).f == parse_ok(text));
  }
}

TEST_CASE("recursion seed and degree bookkeeping") {
  CHECK(gen_prop2i(3).f == parse_ok("y*z^2 - x^2*z + x^3"));
  CHECK(gen_prop2i(10).f.coefficient(Monomial{10, 0, 0}) == Rational(429));
  CHECK(prop2i_leading_coefficient(7) == 14);
}

TEST_CASE("two-cusp odd-degree specialization") {
  CurveSpec s = gen_thm2ii(2);
  CHECK(s.f == parse_ok("(y*z+x^2)^2*y - x^5"));
  CHECK(*s.expected.tau == 12);
  CurveSpec k4 = gen_thm2ii(4);
  CHECK(k4.d == 9);
  CHECK(*k4.expected.tau == 48);
  CHECK(*k4.expected.mu == 56);
}

TEST_CASE("even-degree two-cusp family") {
  CHECK(gen_prop2iii(1, 1, {Rational(0), Rational(1)}).d == 6);
  CHECK(gen_prop2iii(2, 1, {Rational(0), Rational(0), Rational(1)}).d == 8);
  CHECK(gen_prop2iii(0, 2, {Rational(0), Rational(1)}).d == 6);
  CHECK_THROWS_AS(gen_prop2iii(1, 1, {Rational(0), Rational(0)}), InputError);
  CHECK_THROWS_AS(gen_prop2iii(0, 1, {Rational(1)}), InputError);  // degree below 6
}

TEST_CASE("tricuspidal construction divides exactly") {
  CurveSpec quintic = gen_prop3(2, 1);
  CHECK(quintic.d == 5);
  CHECK(quintic.f.homogeneous_degree() == 5);
  CurveSpec d10 = gen_prop3(4, 4);
  CHECK(d10.d == 10);
  CHECK(*d10.expected.tau == 67);
  CHECK_THROWS_AS(gen_prop3(1, 2), InputError);
}

TEST_CASE("fibonacci-degree series") {
  CHECK(gen_prop4ii(0).d == 5);
  CurveSpec k1 = gen_prop4ii(1);
  CHECK(k1.d == 13);
  CHECK(*k1.expected.mu == 132);  // (F(5)-1)(F(9)-1) = 4 * 33
  CurveSpec k2 = gen_prop4ii(2);
  CHECK(k2.d == 34);
  CHECK(*k2.expected.mu == 1056);
  CHECK(*k2.expected.tau == 823);
}

TEST_CASE("relation templates annihilate their gradients") {
  for (int k = 2; k <= 5; ++k) {
    CurveInput c = CurveInput::from_poly(gen_thm2ii(k).f);
    auto templates = syzygy_templates_thm2ii(k);
    for (const auto& t : templates) {
      INFO("k = ", k);
      CHECK((t[0] * c.fx + t[1] * c.fy + t[2] * c.fz).is_zero());
    }
  }
  // the printed coefficient triple at k = 2, second relation
  auto r2 = syzygy_templates_thm2ii(2)[1];
  CHECK(r2[0].is_zero());
  CHECK(r2[1] == parse_ok("-2*y^2"));
  CHECK(r2[2] == parse_ok("x^2 + 3*y*z"));

  for (int d = 5; d <= 10; ++d) {
    Rational a_prev = gen_prop2i(d - 1).f.coefficient(Monomial{static_cast<std::uint16_t>(d - 1), 0, 0});
    auto t = syzygy_template_rkeq2i(d, a_prev);
    CurveInput c = CurveInput::from_poly(gen_prop2i(d).f);
    INFO("degree ", d);
    CHECK((t[0] * c.fx + t[1] * c.fy + t[2] * c.fz).is_zero());
  }
}

TEST_CASE("catalogue lists every implemented family") {
  auto cat = family_catalogue();
  CHECK(cat.size() >= 10);
  for (const auto& info : cat) {
    CHECK(!info.id.empty());
    CHECK(!info.provenance.empty());
  }
}
