#pragma once

#include <map>

#include "freecurve/families.hpp"
#include "freecurve/json_io.hpp"

namespace freecurve {

struct VerifyOptions {
  bool stretch = false;
  std::uint64_t seed = kDefaultPrimeSeed;
  bool crosscheck_small = false;  // Bareiss-verify certified ranks on small matrices
};

// Shared state for a verification run: one seeded prime source and a cache of
// analyses so that expensive curves are profiled once across suites.
struct VerifyContext {
  explicit VerifyContext(VerifyOptions o)
      : opts(o), primes(o.seed), ctx(primes, LinalgOptions{2, false, o.crosscheck_small, 200}) {}

  VerifyOptions opts;
  RandomPrimeSource primes;
  LinalgContext ctx;
  std::map<std::string, Analysis> cache;

  Analysis& analysis_for(const CurveSpec& spec);
};

const std::vector<std::string>& suite_names();

VerificationOutcome run_suite(const std::string& suite, VerifyContext& vc);

// Pinned outcome of the first cross-verified run on the degree-15 pencil
// curve (criteria, determined Hilbert values and saturation all agreeing).
inline constexpr long kPencilTau = 156;
inline constexpr int kPencilD1 = 4;
inline constexpr int kPencilD2 = 10;

}  // namespace freecurve
