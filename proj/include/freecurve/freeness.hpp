#pragma once

#include "freecurve/milnor.hpp"

namespace freecurve {

// Declared singularity types; local invariants are metadata, never computed.
struct SingularityType {
  enum class Kind { cusp_one_pair, a_k };
  Kind kind = Kind::a_k;
  long a = 0, b = 0;  // Puiseux pair (a, b) for cusps; index in a for A_k

  long milnor() const { return kind == Kind::cusp_one_pair ? (a - 1) * (b - 1) : a; }
};

struct SingularityMeta {
  std::vector<SingularityType> types;
  std::optional<long> declared_total;  // used when the per-point decomposition is not pinned

  long total_milnor() const {
    if (declared_total) return *declared_total;
    long s = 0;
    for (const auto& t : types) s += t.milnor();
    return s;
  }
};

// Criterion: m(f)_{2d-5-j} + ar(f)_j = tau for -1 <= j <= d-2 and ar(f)_{d-2} != 0.
bool freeness_by_balance(const MilnorProfile& p);

// Criterion: m(f)_{[T/2]} + m(f)_{T-[T/2]} - m(f_s)_{[T/2]} = tau.
bool freeness_by_midpoint(const MilnorProfile& p);

struct Exponents {
  int d1 = 0, d2 = 0;
  bool census_agrees = false;  // ar matches the free two-generator module in every low degree
};

// Integer roots of t^2 - (d-1)t + (d-1)^2 - tau; throws InconsistencyError
// when the roots are not integers or contradict mdr/ct/st.
Exponents exponents_from_profile(const MilnorProfile& p);

bool hp_hilbert_identities(const MilnorProfile& p, int d1, int d2);

struct WhReport {
  bool applies = false;  // checked strictly only for irreducible certified-free curves
  bool degree_ok = true;
  bool tau_bounds_ok = true;
  bool delta_square_ok = true;
  bool d1_ok = true;
  long delta = 0;
  bool ok() const { return degree_ok && tau_bounds_ok && delta_square_ok && d1_ok; }
};

WhReport wh_structural_checks(const MilnorProfile& p, int d1, int d2, bool irreducible);

struct EulerReport {
  bool computed = false;  // false when no Milnor-number metadata was supplied
  long mu = 0;
  long euler_curve = 0;       // 2 - (d-1)(d-2) + mu
  long euler_complement = 0;  // tau - mu + (d1-1)(d2-1)
  bool rational_cuspidal_consistent = false;  // (d1-1)(d2-1) == mu - tau + 1
};

EulerReport euler_and_cuspidal_check(const MilnorProfile& p, int d1, int d2,
                                     const std::optional<SingularityMeta>& meta);

// dim I_{f,j} - dim J_{f,j} by pure linear algebra at target degree T+1.
// Values above T are zero. Several degrees of one curve should go through a
// SaturationOracle, which reuses the annihilator of the top graded piece.
class SaturationOracle {
 public:
  SaturationOracle(const CurveInput& c, LinalgContext& ctx) : c_(c), ctx_(ctx) {}
  long defect(int j);

 private:
  struct PerPrime {
    std::uint64_t p;
    std::vector<std::vector<std::uint64_t>> lambda;  // annihilator of the degree-(T+1) piece
  };
  PerPrime make_prime_data(std::uint64_t p);
  long defect_mod(const PerPrime& pp, int j);

  const CurveInput& c_;
  LinalgContext& ctx_;
  std::vector<PerPrime> pool_;
  std::unordered_set<std::uint64_t> used_;
};

long saturation_defect_direct(const CurveInput& c, int j, LinalgContext& ctx);

// Exact-arithmetic variant of the direct oracle (small degrees only).
long saturation_defect_direct_exact(const CurveInput& c, int j, LinalgContext& ctx);

// n(f)_j = m(f)_j + ar(f)_{2d-5-j} - tau on d-3 <= j <= 2d-4, extended to
// 2d-3 by the degree duality; nullopt outside the covered union.
std::optional<long> saturation_defect_formula(const MilnorProfile& p, int j);

enum class DefectMethod { formula, direct_oracle, both_agree, uncomputed };

struct SaturationDefects {
  int T = 0;
  std::vector<std::optional<long>> n;  // j = 0..T
  std::vector<DefectMethod> method;

  bool all_zero_where_computed() const;
};

enum class SaturationMode { formula, direct, both };

SaturationDefects saturation_defects(const CurveInput& c, const MilnorProfile& p,
                                     SaturationMode mode, LinalgContext& ctx);

// Projective rigidity: the defect vanishes in the curve's own degree.
bool rigidity_check(const SaturationDefects& defects, int d);

struct ConjectureProbe {
  bool ct_plus_st_equals_T = false;
  bool matches_freeness = false;
};

ConjectureProbe conjecture_probe(const MilnorProfile& p, bool free);

struct FreenessReport {
  bool free = false;
  bool criterion_ii = false;
  bool criterion_iii = false;
  std::optional<int> d1, d2;
  long delta = 0;  // 4 tau - 3 (d-1)^2
  bool exponents_census_agree = false;
  bool hp_identities_ok = false;
  bool conj10_holds = false;
  bool wh_bounds_ok = true;
  std::optional<bool> rigid;
  EulerReport euler;
  std::vector<std::string> notes;
};

struct AnalysisOptions {
  SaturationMode saturation = SaturationMode::formula;
  bool irreducible = false;
  std::optional<SingularityMeta> singularities;
};

struct Analysis {
  MilnorProfile profile;
  FreenessReport report;
  SaturationDefects defects;
};

Analysis analyze_curve(const CurveInput& c, LinalgContext& ctx, const AnalysisOptions& opts = {},
                       const ProfileOptions& popts = {});

}  // namespace freecurve
