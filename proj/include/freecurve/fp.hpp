#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "freecurve/rational.hpp"

namespace freecurve {

struct BadPrimeError : std::runtime_error {
  explicit BadPrimeError(std::uint64_t p)
      : std::runtime_error("prime " + std::to_string(p) + " divides a denominator"), prime(p) {}
  std::uint64_t prime;
};

// Element of F_p together with its modulus, as produced by reduce_mod_p.
struct FpElem {
  std::uint64_t value = 0;
  std::uint64_t p = 0;
};

// Arithmetic context for a fixed word-sized prime p with 2^30 < p < 2^31,
// so that a product of two reduced values fits in 62 bits.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p) : p_(p) {
    // floor(2^64 / p), used for Barrett-style reduction of 64-bit values.
    barrett_ = (~std::uint64_t{0}) / p;
  }

  std::uint64_t p() const { return p_; }

  std::uint64_t reduce(std::uint64_t x) const {
    std::uint64_t q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * barrett_) >> 64);
    std::uint64_t r = x - q * p_;
    while (r >= p_) r -= p_;
    return r;
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return reduce(a * b); }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  std::uint64_t inv(std::uint64_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero in F_p");
    // extended Euclid on signed 64-bit; p < 2^31 keeps everything in range
    std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(a);
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return static_cast<std::uint64_t>(t);
  }

 private:
  std::uint64_t p_;
  std::uint64_t barrett_;
};

bool is_prime_u64(std::uint64_t n);

// q.numerator * q.denominator^{-1} mod p; throws BadPrimeError when p
// divides the denominator.
FpElem reduce_mod_p(const Rational& q, std::uint64_t p);

// Source of fresh word-sized primes > 2^30 for multi-modular runs.
class PrimeSource {
 public:
  virtual ~PrimeSource() = default;
  virtual std::uint64_t fresh_prime(const std::unordered_set<std::uint64_t>& exclude) = 0;
};

// Seeded pseudo-random sampler over (2^30, 2^31); every returned value is
// primality-tested.
class RandomPrimeSource final : public PrimeSource {
 public:
  explicit RandomPrimeSource(std::uint64_t seed) : rng_(seed) {}
  std::uint64_t fresh_prime(const std::unordered_set<std::uint64_t>& exclude) override;

 private:
  std::mt19937_64 rng_;
};

// Scripted prime sequence for tests (falls back to a random source once
// exhausted).
class FixedPrimeSource final : public PrimeSource {
 public:
  FixedPrimeSource(std::vector<std::uint64_t> primes, std::uint64_t fallback_seed = 1)
      : primes_(std::move(primes)), fallback_(fallback_seed) {}
  std::uint64_t fresh_prime(const std::unordered_set<std::uint64_t>& exclude) override;

 private:
  std::vector<std::uint64_t> primes_;
  std::size_t next_ = 0;
  RandomPrimeSource fallback_;
};

inline constexpr std::uint64_t kDefaultPrimeSeed = 0x66726565;  // CLI default, overridable

}  // namespace freecurve
