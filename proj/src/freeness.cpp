#include "freecurve/freeness.hpp"

#include <algorithm>
#include <cmath>

namespace freecurve {

namespace {

long m_at(const MilnorProfile& p, long k) {
  if (k < 0) return 0;
  if (k > p.kmax) throw std::out_of_range("profile degree out of range");
  return p.m[k];
}

long ar_at(const MilnorProfile& p, long j) {
  if (j < 0) return 0;
  if (j >= static_cast<long>(p.ar.size())) throw std::out_of_range("relation degree out of range");
  return p.ar[j];
}

long isqrt_exact(long v) {  // -1 when v is not a perfect square
  if (v < 0) return -1;
  long r = static_cast<long>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r * r == v ? r : -1;
}

}  // namespace

bool freeness_by_balance(const MilnorProfile& p) {
  const int d = p.d;
  if (ar_at(p, d - 2) == 0) return false;
  for (int j = -1; j <= d - 2; ++j)
    if (m_at(p, 2 * d - 5 - j) + ar_at(p, j) != p.tau) return false;
  return true;
}

bool freeness_by_midpoint(const MilnorProfile& p) {
  int h = p.T / 2;
  return m_at(p, h) + m_at(p, p.T - h) - p.m_smooth[h] == p.tau;
}

Exponents exponents_from_profile(const MilnorProfile& p) {
  const long d = p.d;
  long delta = 4 * p.tau - 3 * (d - 1) * (d - 1);
  long u = isqrt_exact(delta);
  if (u < 0 || ((d - 1) - u) % 2 != 0)
    throw InconsistencyError("free curve whose exponent equation has no integer roots");
  Exponents e;
  e.d1 = static_cast<int>((d - 1 - u) / 2);
  e.d2 = static_cast<int>((d - 1 + u) / 2);
  if (e.d1 + e.d2 != d - 1 || static_cast<long>(e.d1) * e.d2 != (d - 1) * (d - 1) - p.tau)
    throw InconsistencyError("exponent roots fail the trace/norm identities");
  if (!p.mdr || *p.mdr != e.d1)
    throw InconsistencyError("minimal relation degree disagrees with the smaller exponent");
  if (!p.ct || *p.ct != p.d + e.d1 - 2)
    throw InconsistencyError("coincidence threshold disagrees with the exponents");
  if (p.st != p.d + e.d2 - 3)
    throw InconsistencyError("stability threshold disagrees with the exponents");
  // degree census of a free rank-two module with generators in degrees d1, d2
  e.census_agrees = true;
  for (int k = 0; k <= p.d - 2; ++k)
    if (ar_at(p, k) != binom2(k - e.d1 + 2) + binom2(k - e.d2 + 2)) e.census_agrees = false;
  return e;
}

bool hp_hilbert_identities(const MilnorProfile& p, int d1, int d2) {
  for (int j = d1 - 2; j <= d2 - 3; ++j)
    if (m_at(p, p.d + j) != p.m_smooth[p.d + j] + binom2(j - d1 + 3)) return false;
  return p.tau == smooth_reference_dim(p.d, p.d + d2 - 3) + binom2(d2 - d1);
}

WhReport wh_structural_checks(const MilnorProfile& p, int d1, int d2, bool irreducible) {
  WhReport r;
  const long d = p.d;
  r.delta = 4 * p.tau - 3 * (d - 1) * (d - 1);
  r.applies = irreducible;
  long u = isqrt_exact(r.delta);
  r.delta_square_ok = u >= 0 && u == d2 - d1;
  r.d1_ok = d1 >= 2;
  r.degree_ok = d >= 5;
  if (d == 5) {
    r.tau_bounds_ok = p.tau == 12;
  } else {
    r.tau_bounds_ok = 4 * p.tau >= 3 * (d - 1) * (d - 1) && p.tau <= d * d - 4 * d + 7;
  }
  return r;
}

EulerReport euler_and_cuspidal_check(const MilnorProfile& p, int d1, int d2,
                                     const std::optional<SingularityMeta>& meta) {
  EulerReport r;
  if (!meta) return r;
  r.computed = true;
  r.mu = meta->total_milnor();
  const long d = p.d;
  r.euler_curve = 2 - (d - 1) * (d - 2) + r.mu;
  r.euler_complement = p.tau - r.mu + static_cast<long>(d1 - 1) * (d2 - 1);
  r.rational_cuspidal_consistent = static_cast<long>(d1 - 1) * (d2 - 1) == r.mu - p.tau + 1;
  return r;
}

std::optional<long> saturation_defect_formula(const MilnorProfile& p, int j) {
  const int d = p.d;
  if (j < 0 || j > p.T) return j > p.T ? std::optional<long>(0) : std::nullopt;
  if (j >= d - 3 && j <= 2 * d - 4) return m_at(p, j) + ar_at(p, 2 * d - 5 - j) - p.tau;
  int jd = p.T - j;  // defect duality
  if (jd >= d - 3 && jd <= 2 * d - 4) return m_at(p, jd) + ar_at(p, 2 * d - 5 - jd) - p.tau;
  return std::nullopt;
}

SaturationOracle::PerPrime SaturationOracle::make_prime_data(std::uint64_t p) {
  PerPrime pp;
  pp.p = p;
  SparseMatQ phi = jacobian_matrix_in_degree(c_, 3 * (c_.d - 2) + 1);
  pp.lambda = kernel_basis_mod_p(reduce_mat_mod_p(phi.transposed(), p));
  return pp;
}

long SaturationOracle::defect_mod(const PerPrime& pp, int j) {
  const int T = 3 * (c_.d - 2);
  const int e = T + 1 - j;
  auto mons = monomial_basis(e);
  auto gmons = monomial_basis(j);
  long cols = dim_sk(j);
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(mons.size() * pp.lambda.size());
  for (const auto& m : mons) {
    for (const auto& lam : pp.lambda) {
      std::vector<std::uint64_t> row(cols);
      bool nonzero = false;
      for (long g = 0; g < cols; ++g) {
        row[g] = lam[monomial_index(m * gmons[g], T + 1)];
        nonzero |= row[g] != 0;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  PrimeField field(pp.p);
  long r = 0;
  for (long c = 0; c < cols && r < static_cast<long>(rows.size()); ++c) {
    long pr = -1;
    for (long i = r; i < static_cast<long>(rows.size()); ++i)
      if (rows[i][c] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(rows[pr], rows[r]);
    std::uint64_t inv = field.inv(rows[r][c]);
    for (long i = r + 1; i < static_cast<long>(rows.size()); ++i) {
      if (rows[i][c] == 0) continue;
      std::uint64_t fac = field.mul(rows[i][c], inv);
      for (long cc = c; cc < cols; ++cc)
        if (rows[r][cc]) rows[i][cc] = field.sub(rows[i][cc], field.mul(fac, rows[r][cc]));
    }
    ++r;
  }
  long saturated_dim = cols - r;  // dim I_{f,j}
  long jac_rank = 0;              // dim J_{f,j}
  if (j >= c_.d - 1) jac_rank = rank_mod_p(reduce_mat_mod_p(jacobian_matrix_in_degree(c_, j), pp.p));
  return saturated_dim - jac_rank;
}

long SaturationOracle::defect(int j) {
  const int T = 3 * (c_.d - 2);
  if (j < 0) throw std::invalid_argument("defect degree must be non-negative");
  if (j > T) return 0;
  // a bad prime can push the value either way, so demand consecutive equality
  long last = -1;
  int streak = 0;
  std::size_t at = 0;
  int attempts = 0;
  while (streak < ctx_.opts.min_agree) {
    if (++attempts > 32) throw InconsistencyError("saturation defect failed to stabilize");
    if (at == pool_.size()) {
      std::uint64_t p = ctx_.primes.fresh_prime(used_);
      used_.insert(p);
      try {
        pool_.push_back(make_prime_data(p));
      } catch (const BadPrimeError&) {
        continue;
      }
    }
    long v = defect_mod(pool_[at++], j);
    if (streak > 0 && v == last) {
      ++streak;
    } else {
      last = v;
      streak = 1;
    }
  }
  return last;
}

long saturation_defect_direct(const CurveInput& c, int j, LinalgContext& ctx) {
  SaturationOracle oracle(c, ctx);
  return oracle.defect(j);
}

long saturation_defect_direct_exact(const CurveInput& c, int j, LinalgContext& ctx) {
  const int T = 3 * (c.d - 2);
  if (j > T) return 0;
  SparseMatQ phi = jacobian_matrix_in_degree(c, T + 1);
  auto lambda = kernel_basis_exact(phi.transposed(), ctx.primes);
  const int e = T + 1 - j;
  auto mons = monomial_basis(e);
  auto gmons = monomial_basis(j);
  long cols = dim_sk(j);
  SparseMatQ constraints(static_cast<long>(mons.size() * lambda.size()), cols);
  long at = 0;
  for (const auto& m : mons)
    for (const auto& lam : lambda) {
      for (long g = 0; g < cols; ++g) {
        const Rational& v = lam[monomial_index(m * gmons[g], T + 1)];
        if (!v.is_zero()) constraints.add(at, g, v);
      }
      ++at;
    }
  long saturated_dim = cols - rank_exact(constraints);
  long jac_rank = j >= c.d - 1 ? rank_exact(jacobian_matrix_in_degree(c, j)) : 0;
  return saturated_dim - jac_rank;
}

bool SaturationDefects::all_zero_where_computed() const {
  for (const auto& v : n)
    if (v && *v != 0) return false;
  return true;
}

SaturationDefects saturation_defects(const CurveInput& c, const MilnorProfile& p,
                                     SaturationMode mode, LinalgContext& ctx) {
  SaturationDefects out;
  out.T = p.T;
  out.n.resize(p.T + 1);
  out.method.assign(p.T + 1, DefectMethod::uncomputed);
  SaturationOracle oracle(c, ctx);
  for (int j = 0; j <= p.T; ++j) {
    bool have_formula = false, have_direct = false;
    long formula_val = 0, direct_val = 0;
    if (mode != SaturationMode::direct) {
      auto f = saturation_defect_formula(p, j);
      have_formula = f.has_value();
      formula_val = f.value_or(0);
    }
    if (mode != SaturationMode::formula) {
      direct_val = oracle.defect(j);
      have_direct = true;
    }
    if (have_formula && have_direct) {
      if (formula_val != direct_val)
        throw InconsistencyError("saturation defect mismatch at degree " + std::to_string(j) +
                                 ": formula " + std::to_string(formula_val) + ", oracle " +
                                 std::to_string(direct_val));
      out.n[j] = direct_val;
      out.method[j] = DefectMethod::both_agree;
    } else if (have_formula) {
      out.n[j] = formula_val;
      out.method[j] = DefectMethod::formula;
    } else if (have_direct) {
      out.n[j] = direct_val;
      out.method[j] = DefectMethod::direct_oracle;
    }
  }
  return out;
}

bool rigidity_check(const SaturationDefects& defects, int d) {
  if (d < 0 || d >= static_cast<int>(defects.n.size()) || !defects.n[d])
    throw std::invalid_argument("defect at the curve degree was not computed");
  return *defects.n[d] == 0;
}

ConjectureProbe conjecture_probe(const MilnorProfile& p, bool free) {
  ConjectureProbe probe;
  probe.ct_plus_st_equals_T = p.ct && (*p.ct + p.st == p.T);
  probe.matches_freeness = probe.ct_plus_st_equals_T == free;
  return probe;
}

Analysis analyze_curve(const CurveInput& c, LinalgContext& ctx, const AnalysisOptions& opts,
                       const ProfileOptions& popts) {
  Analysis a;
  a.profile = full_profile(c, ctx, popts);
  auto& rep = a.report;
  if (!a.profile.plateau_verified) {
    // without a stable Tjurina value (non-reduced input) the criteria do not apply
    rep.free = false;
    rep.delta = 4 * a.profile.tau - 3 * static_cast<long>(c.d - 1) * (c.d - 1);
    rep.notes.push_back(
        "Milnor dimensions did not stabilize; the input is likely non-reduced and the freeness "
        "criteria were not evaluated");
    a.defects.T = a.profile.T;
    a.defects.n.resize(a.profile.T + 1);
    a.defects.method.assign(a.profile.T + 1, DefectMethod::uncomputed);
    return a;
  }
  rep.criterion_ii = freeness_by_balance(a.profile);
  rep.criterion_iii = freeness_by_midpoint(a.profile);
  if (rep.criterion_ii != rep.criterion_iii)
    throw InconsistencyError("freeness criteria disagree: balance says " +
                             std::string(rep.criterion_ii ? "free" : "non-free") +
                             ", midpoint says " +
                             std::string(rep.criterion_iii ? "free" : "non-free"));
  rep.free = rep.criterion_iii;
  rep.delta = 4 * a.profile.tau - 3 * static_cast<long>(c.d - 1) * (c.d - 1);

  if (rep.free) {
    Exponents e = exponents_from_profile(a.profile);
    rep.d1 = e.d1;
    rep.d2 = e.d2;
    rep.exponents_census_agree = e.census_agrees;
    if (!e.census_agrees) rep.notes.push_back("relation-space census deviates from the free module pattern");
    rep.hp_identities_ok = hp_hilbert_identities(a.profile, e.d1, e.d2);
    if (!rep.hp_identities_ok)
      throw InconsistencyError("certified free curve fails the determined Hilbert values");
    WhReport wh = wh_structural_checks(a.profile, e.d1, e.d2, opts.irreducible);
    rep.wh_bounds_ok = wh.ok();
    if (wh.applies && !wh.ok())
      throw InconsistencyError("certified free irreducible curve violates the Tjurina bounds");
    rep.euler = euler_and_cuspidal_check(a.profile, e.d1, e.d2, opts.singularities);
    if (rep.euler.computed && opts.irreducible && rep.euler.euler_complement < 1)
      throw InconsistencyError("free irreducible curve with complement Euler number < 1");
  } else {
    rep.euler = EulerReport{};
    if (opts.singularities) {
      rep.euler.computed = true;
      rep.euler.mu = opts.singularities->total_milnor();
      rep.euler.euler_curve = 2 - static_cast<long>(c.d - 1) * (c.d - 2) + rep.euler.mu;
    }
  }

  ConjectureProbe probe = conjecture_probe(a.profile, rep.free);
  rep.conj10_holds = probe.ct_plus_st_equals_T;
  if (!probe.matches_freeness)
    rep.notes.push_back("threshold-sum probe disagrees with the freeness verdict");

  a.defects = saturation_defects(c, a.profile, opts.saturation, ctx);
  rep.rigid = rigidity_check(a.defects, c.d);
  return a;
}

}  // namespace freecurve
