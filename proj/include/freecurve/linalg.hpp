#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "freecurve/fp.hpp"
#include "freecurve/rational.hpp"

namespace freecurve {

// Raised when two routes that must agree (criteria, oracles, primes) do not.
struct InconsistencyError : std::runtime_error {
  explicit InconsistencyError(const std::string& what) : std::runtime_error(what) {}
};

struct SparseMatQ {
  long rows = 0, cols = 0;
  struct Entry {
    long r, c;
    Rational v;
  };
  std::vector<Entry> entries;

  SparseMatQ() = default;
  SparseMatQ(long r, long c) : rows(r), cols(c) {}
  void add(long r, long c, Rational v);
  SparseMatQ transposed() const;
};

struct SparseMatFp {
  long rows = 0, cols = 0;
  std::uint64_t p = 0;
  struct Entry {
    long r, c;
    std::uint64_t v;
  };
  std::vector<Entry> entries;
};

// Entry-wise reduction; throws BadPrimeError when p divides a denominator.
SparseMatFp reduce_mat_mod_p(const SparseMatQ& m, std::uint64_t p);

struct RankCertificate {
  long rank = 0;
  std::vector<std::uint64_t> primes_used;
  std::string method;  // "multi-modular" or "fraction-free-exact"
  bool agreement = false;
};

// Sparse Gaussian elimination with Markowitz pivoting (lowest cost, ties by
// row then column index).
long rank_mod_p(const SparseMatFp& m);

// Right kernel, one vector per free column in ascending column order, unit
// coordinate at the free column.
std::vector<std::vector<std::uint64_t>> kernel_basis_mod_p(const SparseMatFp& m);

// Fraction-free (Bareiss) elimination after clearing row denominators.
long rank_exact(const SparseMatQ& m);

// Reduce modulo fresh primes until min_agree consecutive primes agree on the
// maximum observed rank. Primes dividing a denominator are skipped.
RankCertificate multi_modular_rank(const SparseMatQ& m, int min_agree, PrimeSource& primes);

// Exact rational kernel. Pivot structure is found modulo a prime, the kernel
// vectors are solved exactly on that structure and re-verified against every
// row; a failed verification retries with a fresh prime and finally falls
// back to pure rational elimination.
std::vector<std::vector<Rational>> kernel_basis_exact(const SparseMatQ& m, PrimeSource& primes);

}  // namespace freecurve
