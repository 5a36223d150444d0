#include "freecurve/milnor.hpp"

#include <algorithm>
#include <future>
#include <thread>

namespace freecurve {

CurveInput CurveInput::from_poly(const TriPoly& f) {
  if (f.is_zero()) throw InputError("curve polynomial is zero");
  auto deg = f.homogeneous_degree();
  if (!deg) throw InputError("curve polynomial is not homogeneous");
  CurveInput c;
  c.f = f;
  c.d = *deg;
  c.fx = f.partial_derivative('x');
  c.fy = f.partial_derivative('y');
  c.fz = f.partial_derivative('z');
  return c;
}

long smooth_reference_dim(int d, int k) {
  if (k < 0) return 0;
  // ((1 - t^{d-1}) / (1 - t))^3
  static const long c3[4] = {1, 3, 3, 1};
  long acc = 0;
  for (int j = 0; j <= 3; ++j) {
    long i = k - static_cast<long>(j) * (d - 1);
    if (i < 0) continue;
    long sign = (j % 2 == 0) ? 1 : -1;
    acc += sign * c3[j] * dim_sk(i);
  }
  return acc;
}

SparseMatQ jacobian_matrix_in_degree(const CurveInput& c, int k) {
  int e = k - c.d + 1;
  if (e < 0) return SparseMatQ(dim_sk(k), 0);
  long ed = dim_sk(e);
  SparseMatQ m(dim_sk(k), 3 * ed);
  auto basis = monomial_basis(e);
  const TriPoly* parts[3] = {&c.fx, &c.fy, &c.fz};
  for (int b = 0; b < 3; ++b)
    for (long ui = 0; ui < ed; ++ui)
      for (const auto& [mono, coef] : parts[b]->terms())
        m.add(monomial_index(basis[ui] * mono, k), b * ed + ui, coef);
  return m;
}

SparseMatQ koszul_matrix_in_degree(const CurveInput& c, int k) {
  int e = k - c.d + 1;
  if (e < 0) return SparseMatQ(3 * dim_sk(k), 0);
  long ed = dim_sk(e);
  long kd = dim_sk(k);
  SparseMatQ m(3 * kd, 3 * ed);
  auto basis = monomial_basis(e);
  // image blocks: (v f_z - w f_y, w f_x - u f_z, u f_y - v f_x), u|v|w columns
  struct Part {
    int out_block;
    int in_block;
    const TriPoly* g;
    int sign;
  };
  const Part parts[6] = {{0, 1, &c.fz, +1}, {0, 2, &c.fy, -1}, {1, 2, &c.fx, +1},
                         {1, 0, &c.fz, -1}, {2, 0, &c.fy, +1}, {2, 1, &c.fx, -1}};
  for (const auto& part : parts)
    for (long ui = 0; ui < ed; ++ui)
      for (const auto& [mono, coef] : part.g->terms())
        m.add(part.out_block * kd + monomial_index(basis[ui] * mono, k), part.in_block * ed + ui,
              part.sign > 0 ? coef : -coef);
  return m;
}

long LinalgContext::certified_rank(const SparseMatQ& m) {
  if (m.cols == 0 || m.rows == 0 || m.entries.empty()) return 0;
  if (opts.exact_only) return rank_exact(m);
  RankCertificate cert = multi_modular_rank(m, opts.min_agree, primes);
  if (opts.crosscheck_small && m.cols <= opts.crosscheck_max_cols) {
    ++stats.checks;
    long exact = rank_exact(m);
    if (exact != cert.rank) {
      ++stats.mismatches;
      throw InconsistencyError("multi-modular rank " + std::to_string(cert.rank) +
                               " disagrees with fraction-free rank " + std::to_string(exact));
    }
  }
  return cert.rank;
}

long milnor_dim(const CurveInput& c, int k, LinalgContext& ctx) {
  if (k < 0) return 0;
  if (k < c.d - 1) return dim_sk(k);
  return dim_sk(k) - ctx.certified_rank(jacobian_matrix_in_degree(c, k));
}

long ar_dim(const CurveInput& c, int k, LinalgContext& ctx) {
  if (k < 0) return 0;
  return 3 * dim_sk(k) - ctx.certified_rank(jacobian_matrix_in_degree(c, k + c.d - 1));
}

long koszul_image_rank(const CurveInput& c, int k, LinalgContext& ctx) {
  if (k < c.d - 1) return 0;
  return ctx.certified_rank(koszul_matrix_in_degree(c, k));
}

long er_dim(const CurveInput& c, int k, LinalgContext& ctx) {
  if (k < 0) return 0;
  long ar = ar_dim(c, k, ctx);
  if (k < c.d - 1) return ar;
  return ar - koszul_image_rank(c, k, ctx);
}

namespace {

// ---- incremental rank sweep over the graded pieces of the Jacobian ideal --
//
// Monomials of degree k are indexed in descending graded-lex order; with
// s = k - ex the index is s(s+1)/2 + (s - ey). Multiplying by x maps the
// degree-k index to the identical degree-(k+1) index, multiplying by y adds
// s+1, multiplying by z adds s+2. Row echelon bases are therefore carried
// from one degree to the next with no arithmetic on the x-multiples: only
// the x-free slice (tracked separately) needs fresh insertions.

using PackedRow = std::vector<std::pair<std::uint32_t, std::uint32_t>>;  // (index, coeff), ascending

struct Echelon {
  std::vector<PackedRow> rows;        // normalized: leading coefficient 1; immutable once added
  std::vector<std::int32_t> pivot_of; // monomial index -> row id, or -1
};

class SweepWorkspace {
 public:
  explicit SweepWorkspace(const PrimeField& f) : f_(f) {}

  // Reduces v against e; if independent, appends the remainder as a new
  // normalized pivot row and returns true.
  bool insert(Echelon& e, const PackedRow& v, long dim) {
    if (v.empty()) return false;
    if (scratch_.size() < static_cast<std::size_t>(dim)) scratch_.resize(dim, 0);
    for (auto [i, c] : v) {
      std::uint64_t s = scratch_[i] + c;
      scratch_[i] = s >= f_.p() ? s - f_.p() : s;
    }
    for (long i = v.front().first; i < dim; ++i) {
      std::uint64_t val = scratch_[i];
      if (val == 0) continue;
      scratch_[i] = 0;
      std::int32_t r = e.pivot_of[i];
      if (r < 0) {
        PackedRow row;
        row.push_back({static_cast<std::uint32_t>(i), 1});
        std::uint64_t inv = f_.inv(val);
        for (long j = i + 1; j < dim; ++j) {
          if (!scratch_[j]) continue;
          row.push_back({static_cast<std::uint32_t>(j),
                         static_cast<std::uint32_t>(f_.mul(scratch_[j], inv))});
          scratch_[j] = 0;
        }
        e.pivot_of[i] = static_cast<std::int32_t>(e.rows.size());
        e.rows.push_back(std::move(row));
        return true;
      }
      const PackedRow& pr = e.rows[r];
      std::uint64_t mfac = f_.p() - val;  // pivot lead is 1
      for (std::size_t t = 1; t < pr.size(); ++t)
        scratch_[pr[t].first] = f_.reduce(scratch_[pr[t].first] + mfac * pr[t].second);
    }
    return false;
  }

 private:
  const PrimeField& f_;
  std::vector<std::uint64_t> scratch_;
};

PackedRow pack_poly_mod_p(const TriPoly& g, int deg, std::uint64_t p) {
  PackedRow row;
  row.reserve(g.term_count());
  for (const auto& [mono, coef] : g.terms()) {
    FpElem v = reduce_mod_p(coef, p);
    if (v.value) row.push_back({static_cast<std::uint32_t>(monomial_index(mono, deg)), static_cast<std::uint32_t>(v.value)});
  }
  // descending monomial order gives ascending indices already
  return row;
}

// s-values (s = degree - ex) per monomial index at the given degree
std::vector<std::uint32_t> s_table(int deg) {
  std::vector<std::uint32_t> t(dim_sk(deg));
  std::size_t at = 0;
  for (long s = 0; s <= deg; ++s)
    for (long i = 0; i <= s; ++i) t[at++] = static_cast<std::uint32_t>(s);
  return t;
}

}  // namespace

std::vector<long> jacobian_rank_sequence_mod_p(const CurveInput& c, int kmax, std::uint64_t p) {
  const int d = c.d;
  std::vector<long> ranks;
  if (kmax < d - 1) return ranks;
  PrimeField f(p);
  SweepWorkspace ws(f);

  Echelon full;     // basis of the degree-k piece of the ideal
  Echelon xfree;    // slice spanned by the x-free monomial multiples
  long dim = dim_sk(d - 1);
  full.pivot_of.assign(dim, -1);
  xfree.pivot_of.assign(dim, -1);
  const TriPoly* grads[3] = {&c.fx, &c.fy, &c.fz};
  for (const auto* g : grads) {
    PackedRow row = pack_poly_mod_p(*g, d - 1, p);
    ws.insert(full, row, dim);
    ws.insert(xfree, row, dim);
  }
  ranks.push_back(static_cast<long>(full.rows.size()));

  for (int k = d - 1; k < kmax; ++k) {
    dim = dim_sk(k + 1);
    auto st = s_table(k);
    auto yshift = [&](const PackedRow& r) {
      PackedRow out;
      out.reserve(r.size());
      for (auto [i, cv] : r) out.push_back({i + st[i] + 1, cv});
      return out;
    };

    // x-free slice advances by y, plus the three z^{e+1}-multiples
    std::vector<PackedRow> carried;
    carried.reserve(xfree.rows.size() + 3);
    for (const auto& r : xfree.rows) carried.push_back(yshift(r));
    xfree.rows.clear();
    xfree.pivot_of.assign(dim, -1);
    for (auto& r : carried) {
      xfree.pivot_of[r.front().first] = static_cast<std::int32_t>(xfree.rows.size());
      xfree.rows.push_back(std::move(r));
    }
    int e1 = k + 2 - d;  // z-exponent of the new pure-z multiple
    for (const auto* g : grads) {
      PackedRow row;
      row.reserve(g->term_count());
      for (const auto& [mono, coef] : g->terms()) {
        FpElem v = reduce_mod_p(coef, p);
        if (!v.value) continue;
        Monomial shifted{mono.ex, mono.ey, static_cast<std::uint16_t>(mono.ez + e1)};
        row.push_back({static_cast<std::uint32_t>(monomial_index(shifted, k + 1)),
                       static_cast<std::uint32_t>(v.value)});
      }
      ws.insert(xfree, row, dim);
    }

    // the full basis keeps its x-multiples verbatim (indices are unchanged)
    full.pivot_of.resize(dim, -1);
    std::fill(full.pivot_of.begin(), full.pivot_of.end(), -1);
    for (std::size_t i = 0; i < full.rows.size(); ++i)
      full.pivot_of[full.rows[i].front().first] = static_cast<std::int32_t>(i);
    for (const auto& r : xfree.rows) ws.insert(full, r, dim);

    ranks.push_back(static_cast<long>(full.rows.size()));
  }
  return ranks;
}

namespace {

std::vector<long> certified_rank_sequence(const CurveInput& c, int kmax, LinalgContext& ctx,
                                          bool parallel, std::vector<std::uint64_t>* primes_out) {
  std::unordered_set<std::uint64_t> used;
  std::vector<std::pair<std::uint64_t, std::vector<long>>> runs;
  auto run_one = [&](std::uint64_t p) { return jacobian_rank_sequence_mod_p(c, kmax, p); };

  int want = ctx.opts.min_agree;
  while (true) {
    while (static_cast<int>(runs.size()) < want) {
      std::uint64_t p1 = ctx.primes.fresh_prime(used);
      used.insert(p1);
      if (parallel && static_cast<int>(runs.size()) + 1 < want) {
        std::uint64_t p2 = ctx.primes.fresh_prime(used);
        used.insert(p2);
        auto fut = std::async(std::launch::async, run_one, p2);
        try {
          runs.push_back({p1, run_one(p1)});
        } catch (const BadPrimeError&) {
          // still collect the parallel run before skipping
        }
        try {
          runs.push_back({p2, fut.get()});
        } catch (const BadPrimeError&) {
        }
      } else {
        try {
          runs.push_back({p1, run_one(p1)});
        } catch (const BadPrimeError&) {
        }
      }
      if (used.size() > 64) throw InconsistencyError("rank sweep failed to stabilize");
    }
    // candidate: elementwise max across all runs (rank mod p never exceeds the true rank)
    std::size_t n = runs.front().second.size();
    std::vector<long> cand(n, 0);
    for (const auto& [p, seq] : runs)
      for (std::size_t i = 0; i < n; ++i) cand[i] = std::max(cand[i], seq[i]);
    int agree = 0;
    for (const auto& [p, seq] : runs)
      if (seq == cand) ++agree;
    if (agree >= ctx.opts.min_agree) {
      if (primes_out)
        for (const auto& [p, seq] : runs)
          if (seq == cand) primes_out->push_back(p);
      return cand;
    }
    ++want;  // sample further primes until enough full-sequence agreement
    if (want > 8) throw InconsistencyError("rank sweep failed to stabilize across primes");
  }
}

}  // namespace

MilnorProfile full_profile(const CurveInput& c, LinalgContext& ctx, const ProfileOptions& opts) {
  if (c.d < 3) throw InputError("profile requires degree >= 3");
  MilnorProfile prof;
  prof.d = c.d;
  prof.T = 3 * (c.d - 2);
  if (opts.kmax_override && *opts.kmax_override < prof.T + 2)
    throw InputError("kmax must be at least T+2 = " + std::to_string(prof.T + 2));
  int kmax = opts.kmax_override.value_or(prof.T + 2);

  auto compute_m = [&](int K) {
    std::vector<long> ranks;  // degree d-1..K
    prof.primes_used.clear();
    if (ctx.opts.exact_only) {
      for (int k = c.d - 1; k <= K; ++k) ranks.push_back(rank_exact(jacobian_matrix_in_degree(c, k)));
    } else {
      ranks = certified_rank_sequence(c, K, ctx, opts.parallel_primes, &prof.primes_used);
    }
    std::vector<long> m(K + 1);
    for (int k = 0; k <= K; ++k)
      m[k] = k < c.d - 1 ? dim_sk(k) : dim_sk(k) - ranks[k - (c.d - 1)];
    return std::pair(std::move(m), std::move(ranks));
  };

  auto [m, ranks] = compute_m(kmax);
  bool plateau = m[kmax] == m[kmax - 1] && m[kmax] == m[kmax - 2];
  if (!plateau && !opts.kmax_override) {
    // one extension; a persistent failure flags a (likely non-reduced) input
    kmax += c.d;
    std::tie(m, ranks) = compute_m(kmax);
    plateau = m[kmax] == m[kmax - 1] && m[kmax] == m[kmax - 2];
    prof.kmax_extended = true;
  }

  if (ctx.opts.crosscheck_small && !ctx.opts.exact_only) {
    for (int k = c.d - 1; k <= kmax; ++k) {
      if (3 * dim_sk(k - c.d + 1) > ctx.opts.crosscheck_max_cols) break;
      ++ctx.stats.checks;
      long exact = rank_exact(jacobian_matrix_in_degree(c, k));
      if (exact != ranks[k - (c.d - 1)]) {
        ++ctx.stats.mismatches;
        throw InconsistencyError("sweep rank disagrees with fraction-free rank in degree " +
                                 std::to_string(k));
      }
    }
  }
  prof.kmax = kmax;
  prof.m = std::move(m);
  prof.plateau_verified = plateau;
  prof.tau = prof.m[kmax];

  prof.m_smooth.resize(kmax + 1);
  for (int k = 0; k <= kmax; ++k) prof.m_smooth[k] = smooth_reference_dim(c.d, k);

  int st = 0;
  for (int k = kmax; k >= 0; --k) {
    if (prof.m[k] != prof.tau) {
      st = k + 1;
      break;
    }
  }
  prof.st = st;

  prof.ct.reset();
  for (int k = 0; k <= kmax; ++k) {
    if (prof.m[k] != prof.m_smooth[k]) {
      prof.ct = k - 1;
      break;
    }
  }

  prof.ar.assign(kmax - c.d + 2, 0);
  for (int j = 0; j + c.d - 1 <= kmax; ++j) prof.ar[j] = 3 * dim_sk(j) - ranks[j];
  prof.er.assign(std::max(0, c.d - 1), 0);
  for (int j = 0; j <= c.d - 2; ++j) prof.er[j] = prof.ar[j];

  // minimal degree of an essential relation: all relations below d-1 are
  // essential; past that the trivial ones must be quotiented out
  prof.mdr.reset();
  for (int j = 0; j <= c.d - 2 && !prof.mdr; ++j)
    if (prof.ar[j] != 0) prof.mdr = j;
  if (!prof.mdr && prof.tau != 0) {
    for (int j = c.d - 1; j + c.d - 1 <= kmax; ++j) {
      long er = prof.ar[j] - koszul_image_rank(c, j, ctx);
      if (er != 0) {
        prof.mdr = j;
        break;
      }
    }
    if (!prof.mdr && prof.plateau_verified)
      throw InconsistencyError("singular curve without an essential relation in range");
  }
  return prof;
}

std::vector<std::array<TriPoly, 3>> syzygy_basis_in_degree(const CurveInput& c, int k,
                                                           LinalgContext& ctx) {
  if (k < 0) return {};
  SparseMatQ m = jacobian_matrix_in_degree(c, k + c.d - 1);
  if (m.cols == 0) return {};
  auto kernel = kernel_basis_exact(m, ctx.primes);
  auto basis = monomial_basis(k);
  long ed = dim_sk(k);
  std::vector<std::array<TriPoly, 3>> out;
  for (const auto& v : kernel) {
    // clear denominators and divide by the integer content
    Int scale(1);
    for (const auto& q : v)
      if (!q.is_zero()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.denominator().get_mpz_t());
    Int content(0);
    for (const auto& q : v) {
      if (q.is_zero()) continue;
      Int n = q.numerator() * (scale / q.denominator());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
    }
    if (content == 0) content = 1;
    int sign = 0;
    for (const auto& q : v) {
      if (q.is_zero()) continue;
      sign = q.sign();
      break;
    }
    Rational factor = Rational(scale, content);
    if (sign < 0) factor = -factor;

    std::array<TriPoly, 3> triple;
    for (int b = 0; b < 3; ++b) {
      TriPoly acc;
      for (long i = 0; i < ed; ++i) {
        const Rational& q = v[b * ed + i];
        if (!q.is_zero()) acc += TriPoly::monomial(basis[i], q * factor);
      }
      triple[b] = acc;
    }
    TriPoly check = triple[0] * c.fx + triple[1] * c.fy + triple[2] * c.fz;
    if (!check.is_zero()) throw InconsistencyError("syzygy verification failed");
    out.push_back(std::move(triple));
  }
  return out;
}

}  // namespace freecurve
