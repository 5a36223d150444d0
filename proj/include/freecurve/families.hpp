#pragma once

#include <map>
#include <string>

#include "freecurve/freeness.hpp"

namespace freecurve {

struct Expected {
  std::optional<long> tau, mu;
  std::optional<int> d1, d2;
  std::optional<bool> free, rigid, irreducible, rational_cuspidal;
  bool verified_defaults = true;  // false: parameters outside the tabulated range
};

struct CurveSpec {
  std::string id;
  TriPoly f;
  int d = 0;
  Expected expected;
  std::optional<SingularityMeta> singularities;
  std::string provenance;
  std::map<std::string, std::string> params;
};

// One-cusp family y^{d-1} z + x^d + a x^2 y^{d-2} + b x y^{d-1} + c y^d, a != 0.
CurveSpec gen_stfam(int d, const Rational& a, const Rational& b, const Rational& c);

// Union of the four singular members and one smooth member of the triangle
// pencil: x y z (x^3+y^3+z^3) ((x^3+y^3+z^3)^3 - 27 x^3 y^3 z^3), degree 15.
CurveSpec gen_valles_pencil();

// Unique-cusp curves of type (d, d-2): (y^k z + sum a_i x^i y^{k+1-i})^2 - x y^{2k+1},
// coefficients a_1..a_{k+1}, a_{k+1} != 0, degree 2k+2.
CurveSpec gen_prop1(int k, const std::vector<Rational>& coeffs);

// Two-cusp type (d, d-2) series built by the quadratic-substitution recursion
// from the cuspidal cubic y z^2 - x^2 z + x^3.
CurveSpec gen_prop2i(int d);

// (y^{k-1} z + sum_{i=2..k} a_i x^i y^{k-i})^2 y - x^{2k+1}, degree 2k+1.
CurveSpec gen_prop2ii(int k, const std::vector<Rational>& coeffs);

// The a_k = 1 specialization of gen_prop2ii: (y^{k-1} z + x^k)^2 y - x^{2k+1},
// two cusps, free with tau = 3k^2 and both exponents k.
CurveSpec gen_thm2ii(int k);

// (y^{k+j} z + sum_{i=2..k+j+1} a_i x^i y^{k+j+1-i})^2 - x^{2j+1} y^{2k+1},
// a_{k+j+1} != 0, degree 2k+2j+2.
CurveSpec gen_prop2iii(int k, int j, const std::vector<Rational>& coeffs);

// Tricuspidal curves of type (d, d-2), one per pair a >= b >= 1, d = a+b+2:
// the affine equation (x^{2a+1} y^{2b+1} - ((x-y)^{d-2} - x y g)^2) / (x-y)^{d-2}.
CurveSpec gen_prop3(int a, int b);

// (z y - x^2)^k - x y^{2k-1}, degree 2k, one cusp with Puiseux pair (k, 4k-1).
CurveSpec gen_prop4i(int k);

// Fibonacci-degree unicuspidal series from the recursion
// Q_k = P_{k-1}, P_k = (G^{F(2k+3)} + Q_k^3) / Q_{k-1}; degree F(2k+5).
CurveSpec gen_prop4ii(int k);

// Free line arrangements of degrees 7, 8, 9 ("d7", "d8", "d9").
CurveSpec gen_line_arrangement(const std::string& which);

// The two degree-k relations of the gen_thm2ii curve, as literal coefficient
// triples for symbolic verification.
std::array<std::array<TriPoly, 3>, 2> syzygy_templates_thm2ii(int k);

// The degree-2 relation of the gen_prop2i curve of degree d (5 <= d <= 15);
// a_dm1 is the x^{d-1} coefficient of the previous recursion step.
std::array<TriPoly, 3> syzygy_template_rkeq2i(int d, const Rational& a_dm1);

// x^{d-1} coefficients of the recursion polynomials, needed by the template
long prop2i_leading_coefficient(int d);

struct FamilyInfo {
  std::string id;
  std::string parameters;
  std::string defaults;
  std::string provenance;
};

std::vector<FamilyInfo> family_catalogue();

// Verbatim expansions of the degree-4..10 recursion curves as printed in the
// catalogue this suite reproduces; used for the term-for-term comparison.
const std::map<int, std::string>& printed_recursion_curves();

}  // namespace freecurve
