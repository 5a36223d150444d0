#include <doctest.h>

#include <random>

#include "freecurve/fp.hpp"
#include "freecurve/rational.hpp"

using namespace freecurve;

TEST_CASE("normalization") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(3, -6).denominator() == 2);
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK_THROWS_AS(Rational(1, 0), ZeroDenominatorError);
  CHECK(Rational::normalize(Int(10), Int(-15)) == Rational(-2, 3));
}

TEST_CASE("reduction mod p") {
  CHECK(reduce_mod_p(Rational(1, 2), 7).value == 4);
  CHECK(reduce_mod_p(Rational(-1, 2), 7).value == 3);
  CHECK(reduce_mod_p(Rational(3), 5).value == 3);
  CHECK_THROWS_AS(reduce_mod_p(Rational(1, 7), 7), BadPrimeError);
  // p dividing the numerator is fine
  CHECK(reduce_mod_p(Rational(7, 3), 7).value == 0);
}

TEST_CASE("fresh primes") {
  RandomPrimeSource src(42);
  std::unordered_set<std::uint64_t> exclude;
  std::uint64_t p1 = src.fresh_prime(exclude);
  CHECK(p1 > (1ULL << 30));
  CHECK(is_prime_u64(p1));
  exclude.insert(p1);
  std::uint64_t p2 = src.fresh_prime(exclude);
  CHECK(p2 != p1);
  CHECK(is_prime_u64(p2));
}

TEST_CASE("primality") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64((1ULL << 31) - 1));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64((1ULL << 30) + 1));
  CHECK_FALSE(is_prime_u64(3215031751ULL));  // strong pseudoprime to bases 2,3,5,7
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 30);
  for (int i = 0; i < 200; ++i) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
  }

  RandomPrimeSource src(11);
  std::uint64_t p = src.fresh_prime({});
  PrimeField f(p);
  std::uniform_int_distribution<std::uint64_t> el(0, p - 1);
  for (int i = 0; i < 200; ++i) {
    std::uint64_t a = el(rng), b = el(rng), c = el(rng);
    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    if (a) CHECK(f.mul(a, f.inv(a)) == 1);
  }
}

TEST_CASE("reduction is a ring homomorphism") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 25);
  RandomPrimeSource src(17);
  std::uint64_t p = src.fresh_prime({});
  PrimeField f(p);
  for (int i = 0; i < 200; ++i) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    CHECK(reduce_mod_p(a + b, p).value == f.add(reduce_mod_p(a, p).value, reduce_mod_p(b, p).value));
    CHECK(reduce_mod_p(a * b, p).value == f.mul(reduce_mod_p(a, p).value, reduce_mod_p(b, p).value));
  }
}
