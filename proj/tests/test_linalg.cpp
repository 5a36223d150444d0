#include <doctest.h>

#include <random>

#include "freecurve/linalg.hpp"
#include "oracles.hpp"

using namespace freecurve;

namespace {

SparseMatQ from_dense(const std::vector<std::vector<long>>& rows) {
  SparseMatQ m(static_cast<long>(rows.size()), rows.empty() ? 0 : static_cast<long>(rows[0].size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      if (rows[r][c]) m.add(static_cast<long>(r), static_cast<long>(c), Rational(rows[r][c]));
  return m;
}

std::vector<std::vector<Rational>> to_rational(const SparseMatQ& m) {
  std::vector<std::vector<Rational>> a(m.rows, std::vector<Rational>(m.cols, Rational(0)));
  for (const auto& e : m.entries) a[e.r][e.c] += e.v;
  return a;
}

}  // namespace

TEST_CASE("rank mod p basics") {
  RandomPrimeSource src(5);
  std::uint64_t p = src.fresh_prime({});
  CHECK(rank_mod_p(reduce_mat_mod_p(from_dense({{1, 0}, {0, 1}}), p)) == 2);
  CHECK(rank_mod_p(reduce_mat_mod_p(from_dense({{0, 0}, {0, 0}}), p)) == 0);
  CHECK(rank_mod_p(reduce_mat_mod_p(from_dense({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}}), p)) == 2);
}

TEST_CASE("kernel basis mod p") {
  RandomPrimeSource src(6);
  std::uint64_t p = src.fresh_prime({});
  CHECK(kernel_basis_mod_p(reduce_mat_mod_p(from_dense({{1, 0}, {0, 1}}), p)).empty());

  auto one_row = kernel_basis_mod_p(reduce_mat_mod_p(from_dense({{1, 1}}), p));
  REQUIRE(one_row.size() == 1);
  PrimeField f(p);
  CHECK(one_row[0][1] == 1);
  CHECK(f.add(one_row[0][0], one_row[0][1]) == 0);
}

TEST_CASE("exact rank") {
  CHECK(rank_exact(from_dense({{1, 2}, {2, 4}})) == 1);
  SparseMatQ m(2, 2);
  m.add(0, 0, Rational(1, 2));
  m.add(0, 1, Rational(1, 3));
  m.add(1, 0, Rational(1, 4));
  m.add(1, 1, Rational(1, 5));
  CHECK(rank_exact(m) == 2);
  CHECK(rank_exact(from_dense({{0, 0}, {0, 0}})) == 0);
}

TEST_CASE("multi-modular certificate") {
  RandomPrimeSource src(7);
  auto cert = multi_modular_rank(from_dense({{2, 0}, {0, 3}}), 2, src);
  CHECK(cert.rank == 2);
  CHECK(cert.agreement);
  CHECK(cert.method == "multi-modular");
  CHECK(cert.primes_used.size() >= 2);
}

TEST_CASE("engineered unlucky prime is outvoted") {
  RandomPrimeSource seed_src(8);
  std::uint64_t bad = seed_src.fresh_prime({});
  SparseMatQ m(2, 2);
  m.add(0, 0, Rational(Int(bad)));  // vanishes mod the first sampled prime
  m.add(1, 1, Rational(1));
  FixedPrimeSource fixed({bad}, 99);
  auto cert = multi_modular_rank(m, 2, fixed);
  CHECK(cert.rank == 2);
  // the witness list holds the agreeing primes only
  CHECK(cert.primes_used.size() == 2);
  for (auto p : cert.primes_used) CHECK(p != bad);
}

TEST_CASE("primes dividing a denominator are skipped") {
  RandomPrimeSource seed_src(21);
  std::uint64_t bad = seed_src.fresh_prime({});
  SparseMatQ m(1, 1);
  m.add(0, 0, Rational(Int(1), Int(bad)));
  FixedPrimeSource fixed({bad}, 33);
  auto cert = multi_modular_rank(m, 2, fixed);
  CHECK(cert.rank == 1);
  CHECK(cert.primes_used.size() >= 2);
  for (auto p : cert.primes_used) CHECK(p != bad);
}

TEST_CASE("cross-oracle rank agreement on random matrices") {
  std::mt19937_64 rng(44);
  RandomPrimeSource src(45);
  for (int iter = 0; iter < 25; ++iter) {
    long rows = 1 + static_cast<long>(rng() % 12);
    long cols = 1 + static_cast<long>(rng() % 12);
    SparseMatQ m(rows, cols);
    for (long r = 0; r < rows; ++r)
      for (long c = 0; c < cols; ++c)
        if (rng() % 3 == 0) m.add(r, c, Rational(static_cast<long>(rng() % 11) - 5));
    long exact = rank_exact(m);
    CHECK(exact == oracle::dense_rank(to_rational(m)));
    CHECK(exact == multi_modular_rank(m, 2, src).rank);
    std::uint64_t p = src.fresh_prime({});
    auto kernel = kernel_basis_mod_p(reduce_mat_mod_p(m, p));
    CHECK(static_cast<long>(kernel.size()) + rank_mod_p(reduce_mat_mod_p(m, p)) == cols);
  }
}

TEST_CASE("exact kernel vectors annihilate the matrix") {
  std::mt19937_64 rng(46);
  RandomPrimeSource src(47);
  for (int iter = 0; iter < 15; ++iter) {
    long rows = 1 + static_cast<long>(rng() % 8);
    long cols = 2 + static_cast<long>(rng() % 8);
    SparseMatQ m(rows, cols);
    for (long r = 0; r < rows; ++r)
      for (long c = 0; c < cols; ++c)
        if (rng() % 2 == 0)
          m.add(r, c, Rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3)));
    auto kernel = kernel_basis_exact(m, src);
    CHECK(static_cast<long>(kernel.size()) == cols - rank_exact(m));
    auto dense = to_rational(m);
    for (const auto& v : kernel) {
      for (long r = 0; r < rows; ++r) {
        Rational acc(0);
        for (long c = 0; c < cols; ++c) acc += dense[r][c] * v[c];
        CHECK(acc.is_zero());
      }
    }
  }
}
