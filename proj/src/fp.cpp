#include "freecurve/fp.hpp"

namespace freecurve {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic Miller-Rabin bases for 64-bit inputs
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

FpElem reduce_mod_p(const Rational& q, std::uint64_t p) {
  std::uint64_t den = mpz_fdiv_ui(q.denominator().get_mpz_t(), p);
  if (den == 0) throw BadPrimeError(p);
  std::uint64_t num = mpz_fdiv_ui(q.numerator().get_mpz_t(), p);
  PrimeField f(p);
  return FpElem{f.mul(num, f.inv(den)), p};
}

std::uint64_t RandomPrimeSource::fresh_prime(const std::unordered_set<std::uint64_t>& exclude) {
  std::uniform_int_distribution<std::uint64_t> dist((1ULL << 30) + 1, (1ULL << 31) - 1);
  for (int tries = 0; tries < 1 << 20; ++tries) {
    std::uint64_t c = dist(rng_) | 1;
    if (c <= (1ULL << 30)) continue;
    if (exclude.count(c)) continue;
    if (is_prime_u64(c)) return c;
  }
  throw std::runtime_error("prime pool exhausted");
}

std::uint64_t FixedPrimeSource::fresh_prime(const std::unordered_set<std::uint64_t>& exclude) {
  while (next_ < primes_.size()) {
    std::uint64_t c = primes_[next_++];
    if (!exclude.count(c)) return c;
  }
  return fallback_.fresh_prime(exclude);
}

}  // namespace freecurve
