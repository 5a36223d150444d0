#pragma once

#include <array>
#include <optional>

#include "freecurve/linalg.hpp"
#include "freecurve/tripoly.hpp"

namespace freecurve {

struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A reduced plane curve f = 0 with cached partial derivatives.
struct CurveInput {
  TriPoly f;
  int d = 0;
  TriPoly fx, fy, fz;

  static CurveInput from_poly(const TriPoly& f);
};

// Hilbert function of the Milnor algebra of a smooth degree-d curve: the
// coefficient of t^k in ((1-t^{d-1})/(1-t))^3.
long smooth_reference_dim(int d, int k);

// Matrix of (a,b,c) -> a f_x + b f_y + c f_z landing in degree k, i.e. the
// coefficients live in degree k-d+1. Rows: monomials of degree k. Columns:
// three blocks of monomials of degree k-d+1 (f_x block first).
SparseMatQ jacobian_matrix_in_degree(const CurveInput& c, int k);

// Matrix of (u,v,w) -> (v f_z - w f_y, w f_x - u f_z, u f_y - v f_x) with
// output coefficient degree k; its image spans the trivial relations.
SparseMatQ koszul_matrix_in_degree(const CurveInput& c, int k);

struct LinalgOptions {
  int min_agree = 2;
  bool exact_only = false;        // all ranks via fraction-free elimination
  bool crosscheck_small = false;  // Bareiss-verify certified ranks on small matrices
  long crosscheck_max_cols = 200;
};

struct CrossOracleStats {
  long checks = 0;
  long mismatches = 0;
};

struct LinalgContext {
  explicit LinalgContext(PrimeSource& ps, LinalgOptions o = {}) : primes(ps), opts(o) {}
  PrimeSource& primes;
  LinalgOptions opts;
  CrossOracleStats stats;

  long certified_rank(const SparseMatQ& m);
};

long milnor_dim(const CurveInput& c, int k, LinalgContext& ctx);
long ar_dim(const CurveInput& c, int k, LinalgContext& ctx);
long koszul_image_rank(const CurveInput& c, int k, LinalgContext& ctx);
long er_dim(const CurveInput& c, int k, LinalgContext& ctx);

// Exact kernel basis of the relation space in coefficient degree k; every
// returned triple is re-verified symbolically against the gradient.
std::vector<std::array<TriPoly, 3>> syzygy_basis_in_degree(const CurveInput& c, int k,
                                                           LinalgContext& ctx);

struct MilnorProfile {
  int d = 0;
  int T = 0;
  int kmax = 0;
  long tau = 0;
  std::optional<int> ct;   // nullopt: agrees with the smooth reference everywhere computed
  int st = 0;
  std::optional<int> mdr;  // nullopt: no essential relation (smooth curve)
  bool plateau_verified = false;
  bool kmax_extended = false;
  std::vector<long> m;         // k = 0..kmax
  std::vector<long> m_smooth;  // k = 0..kmax
  std::vector<long> ar;        // coefficient degree 0..kmax-d+1
  std::vector<long> er;        // 0..d-2, where essential = all relations
  std::vector<std::uint64_t> primes_used;
};

struct ProfileOptions {
  std::optional<int> kmax_override;
  bool parallel_primes = true;
};

MilnorProfile full_profile(const CurveInput& c, LinalgContext& ctx, const ProfileOptions& opts = {});

// Ranks of the graded pieces of the Jacobian ideal for k = d-1..kmax over
// F_p, computed by one incremental elimination sweep. Index i holds the rank
// in degree d-1+i.
std::vector<long> jacobian_rank_sequence_mod_p(const CurveInput& c, int kmax, std::uint64_t p);

}  // namespace freecurve
