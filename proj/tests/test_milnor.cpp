#include <doctest.h>

#include "freecurve/milnor.hpp"
#include "freecurve/parser.hpp"
#include "oracles.hpp"

using namespace freecurve;

namespace {

TriPoly parse_ok(const std::string& s) {
  auto r = parse_expression(s);
  REQUIRE(r.ok());
  return *r.poly;
}

CurveInput curve(const std::string& s) { return CurveInput::from_poly(parse_ok(s)); }

}  // namespace

TEST_CASE("smooth reference dimensions") {
  std::vector<long> d5;
  for (int k = 0; k <= 9; ++k) d5.push_back(smooth_reference_dim(5, k));
  CHECK(d5 == std::vector<long>{1, 3, 6, 10, 12, 12, 10, 6, 3, 1});
  CHECK(smooth_reference_dim(4, 3) == 7);
  CHECK(smooth_reference_dim(6, 12) == 1);
  CHECK(smooth_reference_dim(6, 13) == 0);
  CHECK(smooth_reference_dim(3, 4) == 0);
  // symmetric about T/2
  for (int d = 3; d <= 12; ++d) {
    int T = 3 * (d - 2);
    for (int k = 0; k <= T; ++k) CHECK(smooth_reference_dim(d, k) == smooth_reference_dim(d, T - k));
  }
}

TEST_CASE("gradient evaluation matrices") {
  CurveInput fermat = curve("x^5+y^5+z^5");
  SparseMatQ m4 = jacobian_matrix_in_degree(fermat, 4);
  CHECK(m4.rows == 15);
  CHECK(m4.cols == 3);
  CHECK(rank_exact(m4) == 3);

  CurveInput cubic = curve("y^2*z - x^3");
  SparseMatQ m2 = jacobian_matrix_in_degree(cubic, 2);
  CHECK(m2.rows == 6);
  CHECK(m2.cols == 3);
  CHECK(rank_exact(m2) == 3);
  CHECK(jacobian_matrix_in_degree(cubic, 2).cols == 3);  // k = d-1 has scalar coefficients
}

TEST_CASE("milnor dimensions against the brute-force oracle") {
  RandomPrimeSource primes(1);
  LinalgContext ctx(primes);

  TriPoly cubic = parse_ok("y^2*z - x^3");
  std::vector<long> ms;
  for (int k = 0; k <= 7; ++k) ms.push_back(milnor_dim(CurveInput::from_poly(cubic), k, ctx));
  CHECK(ms == std::vector<long>{1, 3, 3, 2, 2, 2, 2, 2});
  for (int k = 0; k <= 7; ++k) CHECK(ms[k] == oracle::milnor_dim_oracle(cubic, k));

  CurveInput fermat = curve("x^5+y^5+z^5");
  for (int k = 0; k <= 11; ++k)
    CHECK(milnor_dim(fermat, k, ctx) == smooth_reference_dim(5, k));

  TriPoly two_cusp = parse_ok("(y*z+x^2)^2*y - x^5");
  std::vector<long> m5;
  for (int k = 0; k <= 7; ++k) m5.push_back(milnor_dim(CurveInput::from_poly(two_cusp), k, ctx));
  CHECK(m5 == std::vector<long>{1, 3, 6, 10, 12, 12, 12, 12});
  for (int k = 0; k <= 7; ++k) CHECK(m5[k] == oracle::milnor_dim_oracle(two_cusp, k));
}

TEST_CASE("relation dimensions and bases") {
  RandomPrimeSource primes(2);
  LinalgContext ctx(primes);

  CurveInput c = curve("(y*z+x^2)^2*y - x^5");
  CHECK(ar_dim(c, 1, ctx) == 0);
  CHECK(ar_dim(c, 2, ctx) == 2);
  auto basis = syzygy_basis_in_degree(c, 2, ctx);
  REQUIRE(basis.size() == 2);
  for (const auto& t : basis)
    CHECK((t[0] * c.fx + t[1] * c.fy + t[2] * c.fz).is_zero());

  CurveInput fermat = curve("x^5+y^5+z^5");
  for (int k = 0; k <= 3; ++k) CHECK(ar_dim(fermat, k, ctx) == 0);
  CHECK(ar_dim(fermat, 4, ctx) == 3);
  CHECK(syzygy_basis_in_degree(fermat, 3, ctx).empty());
}

TEST_CASE("koszul quotients") {
  RandomPrimeSource primes(3);
  LinalgContext ctx(primes);
  CurveInput fermat = curve("x^5+y^5+z^5");
  for (int k = 0; k <= 6; ++k) CHECK(er_dim(fermat, k, ctx) == 0);

  // coefficient degree below d-1 leaves nothing to quotient
  CurveInput c = curve("(y*z+x^2)^2*y - x^5");
  for (int k = 0; k <= 3; ++k) CHECK(er_dim(c, k, ctx) == ar_dim(c, k, ctx));
}

TEST_CASE("full profile of the cuspidal cubic") {
  RandomPrimeSource primes(4);
  LinalgContext ctx(primes);
  MilnorProfile p = full_profile(curve("y^2*z - x^3"), ctx);
  CHECK(p.d == 3);
  CHECK(p.T == 3);
  CHECK(p.tau == 2);
  CHECK(p.ct == 2);
  CHECK(p.st == 3);
  CHECK(p.mdr == 1);
  CHECK(p.plateau_verified);
  CHECK(p.m[0] == 1);
  CHECK(p.m[1] == 3);
  CHECK(p.m[2] == 3);
  CHECK(p.m[3] == 2);
}

TEST_CASE("full profile of a smooth curve") {
  RandomPrimeSource primes(5);
  LinalgContext ctx(primes);
  MilnorProfile p = full_profile(curve("x^5+y^5+z^5"), ctx);
  CHECK(p.tau == 0);
  CHECK_FALSE(p.ct.has_value());
  CHECK_FALSE(p.mdr.has_value());
  CHECK(p.st == p.T + 1);
  CHECK(p.plateau_verified);
}

TEST_CASE("full profile of the one-cusp degree-7 curve") {
  RandomPrimeSource primes(6);
  LinalgContext ctx(primes);
  MilnorProfile p = full_profile(curve("y^6*z + x^7 + x^2*y^5"), ctx);
  CHECK(p.d == 7);
  CHECK(p.T == 15);
  CHECK(p.tau == 28);
  CHECK(p.mdr == 2);
  CHECK(p.ct == 7);
  CHECK(p.st == 8);
}

TEST_CASE("profile identities hold for assorted curves") {
  RandomPrimeSource primes(7);
  LinalgContext ctx(primes);
  for (const char* text : {"y^2*z - x^3", "(y*z+x^2)^2*y - x^5", "x^4 + y^4 + z^4 + x*y*z^2"}) {
    CurveInput c = curve(text);
    MilnorProfile p = full_profile(c, ctx);
    for (int j = 0; j <= p.d - 2; ++j)
      CHECK(p.ar[j] == p.m[p.d - 1 + j] - p.m_smooth[p.d - 1 + j]);
    if (p.mdr) CHECK(*p.ct == *p.mdr + p.d - 2);
    for (int k = 2 * p.d - 5; k < p.kmax; ++k) {
      if (k < 0) continue;
      CHECK(p.m[k] >= p.m[k + 1]);
      CHECK(p.m[k + 1] >= p.tau);
    }
  }
}

TEST_CASE("incremental sweep matches per-degree ranks") {
  RandomPrimeSource primes(8);
  std::uint64_t p = primes.fresh_prime({});
  for (const char* text : {"y^2*z - x^3", "(y*z+x^2)^2 - x^3*z", "x^5+y^5+z^5+x^2*y^2*z"}) {
    CurveInput c = curve(text);
    int kmax = 3 * (c.d - 2) + 2;
    auto seq = jacobian_rank_sequence_mod_p(c, kmax, p);
    REQUIRE(static_cast<int>(seq.size()) == kmax - (c.d - 1) + 1);
    for (int k = c.d - 1; k <= kmax; ++k) {
      SparseMatQ m = jacobian_matrix_in_degree(c, k);
      CHECK(seq[k - (c.d - 1)] == rank_mod_p(reduce_mat_mod_p(m, p)));
    }
  }
}

TEST_CASE("syzygy bases are canonical regardless of the prime sequence") {
  CurveInput c = curve("(y*z+x^2)^2*y - x^5");
  auto render = [](const std::vector<std::array<TriPoly, 3>>& basis) {
    std::string s;
    for (const auto& t : basis) s += t[0].str() + "|" + t[1].str() + "|" + t[2].str() + "\n";
    return s;
  };
  RandomPrimeSource p1(101), p2(20230816);
  LinalgContext c1(p1), c2(p2);
  CHECK(render(syzygy_basis_in_degree(c, 2, c1)) == render(syzygy_basis_in_degree(c, 2, c2)));
}

TEST_CASE("exact-field profile matches the modular profile") {
  RandomPrimeSource primes(9);
  LinalgContext auto_ctx(primes);
  RandomPrimeSource primes2(10);
  LinalgContext qq_ctx(primes2, LinalgOptions{2, true, false, 200});
  for (const char* text : {"(y*z+x^2)^2 - x^3*z", "(y^2*z+x^3)^2*y - x^7"}) {
    CurveInput c = curve(text);
    MilnorProfile a = full_profile(c, auto_ctx);
    MilnorProfile b = full_profile(c, qq_ctx);
    CHECK(a.m == b.m);
    CHECK(a.ar == b.ar);
    CHECK(a.tau == b.tau);
  }
}
