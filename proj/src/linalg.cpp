#include "freecurve/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace freecurve {

void SparseMatQ::add(long r, long c, Rational v) {
  if (r < 0 || r >= rows || c < 0 || c >= cols) throw std::out_of_range("matrix entry out of range");
  if (v.is_zero()) return;
  entries.push_back({r, c, std::move(v)});
}

SparseMatQ SparseMatQ::transposed() const {
  SparseMatQ t(cols, rows);
  t.entries.reserve(entries.size());
  for (const auto& e : entries) t.entries.push_back({e.c, e.r, e.v});
  return t;
}

SparseMatFp reduce_mat_mod_p(const SparseMatQ& m, std::uint64_t p) {
  SparseMatFp out;
  out.rows = m.rows;
  out.cols = m.cols;
  out.p = p;
  out.entries.reserve(m.entries.size());
  for (const auto& e : m.entries) {
    FpElem v = reduce_mod_p(e.v, p);
    if (v.value != 0) out.entries.push_back({e.r, e.c, v.value});
  }
  return out;
}

namespace {

using Row = std::vector<std::pair<long, std::uint64_t>>;  // sorted by column

std::vector<Row> gather_rows(const SparseMatFp& m) {
  std::vector<Row> rows(m.rows);
  for (const auto& e : m.entries) rows[e.r].push_back({e.c, e.v});
  PrimeField f(m.p);
  for (auto& r : rows) {
    std::sort(r.begin(), r.end());
    // merge accidental duplicates
    Row merged;
    for (auto& [c, v] : r) {
      if (!merged.empty() && merged.back().first == c)
        merged.back().second = f.add(merged.back().second, v);
      else
        merged.push_back({c, v});
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(), [](auto& e) { return e.second == 0; }),
                 merged.end());
    r = std::move(merged);
  }
  return rows;
}

std::uint64_t row_value_at(const Row& r, long c) {
  auto it = std::lower_bound(r.begin(), r.end(), c,
                             [](const std::pair<long, std::uint64_t>& e, long cc) { return e.first < cc; });
  return (it != r.end() && it->first == c) ? it->second : 0;
}

// r -= factor * pivot (mod p); both sorted by column
Row row_axpy(const PrimeField& f, const Row& r, const Row& pivot, std::uint64_t factor) {
  Row out;
  out.reserve(r.size() + pivot.size());
  std::uint64_t mfac = f.neg(factor);
  auto ia = r.begin();
  auto ib = pivot.begin();
  while (ia != r.end() && ib != pivot.end()) {
    if (ia->first < ib->first) {
      out.push_back(*ia++);
    } else if (ib->first < ia->first) {
      std::uint64_t v = f.mul(mfac, ib->second);
      if (v) out.push_back({ib->first, v});
      ++ib;
    } else {
      std::uint64_t v = f.add(ia->second, f.mul(mfac, ib->second));
      if (v) out.push_back({ia->first, v});
      ++ia;
      ++ib;
    }
  }
  out.insert(out.end(), ia, r.end());
  for (; ib != pivot.end(); ++ib) {
    std::uint64_t v = f.mul(mfac, ib->second);
    if (v) out.push_back({ib->first, v});
  }
  return out;
}

}  // namespace

long rank_mod_p(const SparseMatFp& m) {
  PrimeField f(m.p);
  std::vector<Row> rows = gather_rows(m);
  std::vector<long> col_count(m.cols, 0);
  std::vector<bool> active(m.rows, true);
  for (long i = 0; i < m.rows; ++i)
    for (auto& [c, v] : rows[i]) ++col_count[c];

  long rank = 0;
  for (;;) {
    // Markowitz pivot: minimize (row_len-1)*(col_count-1), ties by (row, col)
    long best_r = -1, best_c = -1;
    long best_cost = -1;
    for (long i = 0; i < m.rows; ++i) {
      if (!active[i] || rows[i].empty()) continue;
      long rl = static_cast<long>(rows[i].size()) - 1;
      for (auto& [c, v] : rows[i]) {
        long cost = rl * (col_count[c] - 1);
        if (best_cost < 0 || cost < best_cost) {
          best_cost = cost;
          best_r = i;
          best_c = c;
        }
      }
    }
    if (best_r < 0) break;
    ++rank;
    Row pivot = rows[best_r];
    std::uint64_t pinv = f.inv(row_value_at(pivot, best_c));
    active[best_r] = false;
    for (auto& [c, v] : pivot) --col_count[c];
    for (long i = 0; i < m.rows; ++i) {
      if (!active[i] || rows[i].empty() || col_count[best_c] == 0) continue;
      std::uint64_t v = row_value_at(rows[i], best_c);
      if (!v) continue;
      for (auto& [c, vv] : rows[i]) --col_count[c];
      rows[i] = row_axpy(f, rows[i], pivot, f.mul(v, pinv));
      for (auto& [c, vv] : rows[i]) ++col_count[c];
    }
  }
  return rank;
}

namespace {

// Dense row-reduced echelon form; returns pivot columns (ascending) and, via
// out parameters, the reduced rows and the pivot row index per pivot column.
std::vector<long> rref_mod_p(const PrimeField& f, std::vector<std::vector<std::uint64_t>>& a,
                             std::vector<long>* pivot_row_of_col = nullptr) {
  long rows = static_cast<long>(a.size());
  long cols = rows ? static_cast<long>(a[0].size()) : 0;
  std::vector<long> pivots;
  long r = 0;
  for (long c = 0; c < cols && r < rows; ++c) {
    long pr = -1;
    for (long i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[pr], a[r]);
    std::uint64_t inv = f.inv(a[r][c]);
    for (long j = c; j < cols; ++j) a[r][j] = f.mul(a[r][j], inv);
    for (long i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      std::uint64_t fac = a[i][c];
      for (long j = c; j < cols; ++j)
        if (a[r][j]) a[i][j] = f.sub(a[i][j], f.mul(fac, a[r][j]));
    }
    pivots.push_back(c);
    if (pivot_row_of_col) pivot_row_of_col->push_back(r);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<std::uint64_t>> to_dense(const SparseMatFp& m) {
  PrimeField f(m.p);
  std::vector<std::vector<std::uint64_t>> a(m.rows, std::vector<std::uint64_t>(m.cols, 0));
  for (const auto& e : m.entries) a[e.r][e.c] = f.add(a[e.r][e.c], e.v);
  return a;
}

}  // namespace

std::vector<std::vector<std::uint64_t>> kernel_basis_mod_p(const SparseMatFp& m) {
  PrimeField f(m.p);
  auto a = to_dense(m);
  std::vector<long> pivots = rref_mod_p(f, a);
  std::vector<bool> is_pivot(m.cols, false);
  for (long c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint64_t>> basis;
  for (long c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<std::uint64_t> v(m.cols, 0);
    v[c] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = f.neg(a[k][c]);
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

// Rows scaled to integers; entries[i] sorted by column.
std::vector<std::vector<std::pair<long, Int>>> integer_rows(const SparseMatQ& m) {
  std::vector<std::vector<std::pair<long, Int>>> rows(m.rows);
  for (const auto& e : m.entries) rows[e.r].push_back({e.c, Int()});
  std::vector<std::vector<const SparseMatQ::Entry*>> per_row(m.rows);
  for (const auto& e : m.entries) per_row[e.r].push_back(&e);
  for (long i = 0; i < m.rows; ++i) {
    auto& src = per_row[i];
    std::sort(src.begin(), src.end(),
              [](const SparseMatQ::Entry* a, const SparseMatQ::Entry* b) { return a->c < b->c; });
    Int l(1);
    for (auto* e : src) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e->v.denominator().get_mpz_t());
    rows[i].clear();
    for (auto* e : src) {
      Int v = e->v.numerator() * (l / e->v.denominator());
      if (!rows[i].empty() && rows[i].back().first == e->c)
        rows[i].back().second += v;
      else
        rows[i].push_back({e->c, v});
    }
    rows[i].erase(std::remove_if(rows[i].begin(), rows[i].end(), [](auto& p) { return p.second == 0; }),
                  rows[i].end());
  }
  return rows;
}

}  // namespace

long rank_exact(const SparseMatQ& m) {
  // Bareiss on dense integer rows; pivot row chosen as the sparsest candidate.
  auto sparse_rows = integer_rows(m);
  std::vector<std::vector<Int>> a;
  a.reserve(m.rows);
  for (auto& sr : sparse_rows) {
    if (sr.empty()) continue;
    std::vector<Int> dense(m.cols, Int(0));
    for (auto& [c, v] : sr) dense[c] = v;
    a.push_back(std::move(dense));
  }
  long rows = static_cast<long>(a.size());
  long r = 0;
  Int prev(1);
  for (long c = 0; c < m.cols && r < rows; ++c) {
    long pr = -1;
    long pr_nnz = -1;
    for (long i = r; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      long nnz = 0;
      for (long j = c; j < m.cols; ++j)
        if (a[i][j] != 0) ++nnz;
      if (pr < 0 || nnz < pr_nnz) {
        pr = i;
        pr_nnz = nnz;
      }
    }
    if (pr < 0) continue;
    std::swap(a[pr], a[r]);
    for (long i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) {
        // still renormalize row by the Bareiss identity on zero pivot entry
        for (long j = c + 1; j < m.cols; ++j) {
          if (a[i][j] == 0) continue;
          Int t = a[i][j] * a[r][c];
          mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        }
        continue;
      }
      for (long j = c + 1; j < m.cols; ++j) {
        Int t = a[i][j] * a[r][c] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

RankCertificate multi_modular_rank(const SparseMatQ& m, int min_agree, PrimeSource& primes) {
  if (min_agree < 2) throw std::invalid_argument("min_agree must be at least 2");
  RankCertificate cert;
  cert.method = "multi-modular";
  std::unordered_set<std::uint64_t> used;
  std::vector<std::pair<std::uint64_t, long>> observed;
  long best = -1;
  int streak = 0;
  int attempts = 0;
  while (streak < min_agree) {
    if (++attempts > 96) throw InconsistencyError("multi-modular rank failed to stabilize");
    std::uint64_t p = primes.fresh_prime(used);
    used.insert(p);
    SparseMatFp mp;
    try {
      mp = reduce_mat_mod_p(m, p);
    } catch (const BadPrimeError&) {
      continue;  // skipped, not counted
    }
    long rk = rank_mod_p(mp);
    observed.push_back({p, rk});
    if (rk > best) {
      best = rk;
      streak = 1;
    } else if (rk == best) {
      ++streak;
    } else {
      streak = 0;
    }
  }
  cert.rank = best;
  // the certificate lists the witnesses: primes whose rank equals the maximum
  for (const auto& [p, rk] : observed)
    if (rk == best) cert.primes_used.push_back(p);
  cert.agreement = true;
  return cert;
}

namespace {

std::vector<std::vector<Rational>> kernel_by_rational_elimination(const SparseMatQ& m) {
  std::vector<std::vector<Rational>> a(m.rows, std::vector<Rational>(m.cols, Rational(0)));
  for (const auto& e : m.entries) a[e.r][e.c] += e.v;
  long r = 0;
  std::vector<long> pivots;
  for (long c = 0; c < m.cols && r < m.rows; ++c) {
    long pr = -1;
    for (long i = r; i < m.rows; ++i)
      if (!a[i][c].is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[pr], a[r]);
    Rational inv = a[r][c].inverse();
    for (long j = c; j < m.cols; ++j) a[r][j] *= inv;
    for (long i = 0; i < m.rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Rational fac = a[i][c];
      for (long j = c; j < m.cols; ++j) a[i][j] -= fac * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(m.cols, false);
  for (long c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (long c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rational> v(m.cols, Rational(0));
    v[c] = Rational(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a[k][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool verify_kernel_vector(const SparseMatQ& m, const std::vector<Rational>& v) {
  std::vector<Rational> acc(m.rows, Rational(0));
  for (const auto& e : m.entries)
    if (!v[e.c].is_zero()) acc[e.r] += e.v * v[e.c];
  for (const auto& s : acc)
    if (!s.is_zero()) return false;
  return true;
}

}  // namespace

std::vector<std::vector<Rational>> kernel_basis_exact(const SparseMatQ& m, PrimeSource& primes) {
  std::unordered_set<std::uint64_t> used;
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::uint64_t p = primes.fresh_prime(used);
    used.insert(p);
    SparseMatFp mp;
    try {
      mp = reduce_mat_mod_p(m, p);
    } catch (const BadPrimeError&) {
      continue;
    }
    PrimeField f(p);
    auto dense = to_dense(mp);
    std::vector<long> pivot_row_of;
    // REF on a copy with original-row tracking to select independent rows
    std::vector<long> perm(m.rows);
    for (long i = 0; i < m.rows; ++i) perm[i] = i;
    std::vector<long> pivots, pivot_rows;
    {
      long r = 0;
      for (long c = 0; c < m.cols && r < m.rows; ++c) {
        long pr = -1;
        for (long i = r; i < m.rows; ++i)
          if (dense[i][c] != 0) {
            pr = i;
            break;
          }
        if (pr < 0) continue;
        std::swap(dense[pr], dense[r]);
        std::swap(perm[pr], perm[r]);
        std::uint64_t inv = f.inv(dense[r][c]);
        for (long i = r + 1; i < m.rows; ++i) {
          if (dense[i][c] == 0) continue;
          std::uint64_t fac = f.mul(dense[i][c], inv);
          for (long j = c; j < m.cols; ++j)
            if (dense[r][j]) dense[i][j] = f.sub(dense[i][j], f.mul(fac, dense[r][j]));
        }
        pivots.push_back(c);
        pivot_rows.push_back(perm[r]);
        ++r;
      }
    }
    std::vector<bool> is_pivot(m.cols, false);
    for (long c : pivots) is_pivot[c] = true;
    std::vector<long> free_cols;
    for (long c = 0; c < m.cols; ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
    if (free_cols.empty()) return {};

    // Exact solve on the pivot submatrix: B x_F = -A[R, F]
    long r = static_cast<long>(pivots.size());
    std::vector<std::vector<Rational>> aug(r, std::vector<Rational>(r + free_cols.size(), Rational(0)));
    {
      std::vector<long> row_pos(m.rows, -1), col_pos(m.cols, -1);
      for (long i = 0; i < r; ++i) row_pos[pivot_rows[i]] = i;
      for (long i = 0; i < r; ++i) col_pos[pivots[i]] = i;
      std::vector<long> free_pos(m.cols, -1);
      for (std::size_t i = 0; i < free_cols.size(); ++i) free_pos[free_cols[i]] = static_cast<long>(i);
      for (const auto& e : m.entries) {
        if (row_pos[e.r] < 0) continue;
        if (col_pos[e.c] >= 0)
          aug[row_pos[e.r]][col_pos[e.c]] += e.v;
        else
          aug[row_pos[e.r]][r + free_pos[e.c]] -= e.v;
      }
    }
    // Gauss-Jordan over Q; B is invertible over Q since it is mod p
    bool singular = false;
    for (long c = 0; c < r && !singular; ++c) {
      long pr = -1;
      for (long i = c; i < r; ++i)
        if (!aug[i][c].is_zero()) {
          pr = i;
          break;
        }
      if (pr < 0) {
        singular = true;
        break;
      }
      std::swap(aug[pr], aug[c]);
      Rational inv = aug[c][c].inverse();
      for (long j = c; j < r + static_cast<long>(free_cols.size()); ++j) aug[c][j] *= inv;
      for (long i = 0; i < r; ++i) {
        if (i == c || aug[i][c].is_zero()) continue;
        Rational fac = aug[i][c];
        for (long j = c; j < r + static_cast<long>(free_cols.size()); ++j) aug[i][j] -= fac * aug[c][j];
      }
    }
    if (singular) continue;

    std::vector<std::vector<Rational>> basis;
    bool all_ok = true;
    for (std::size_t fi = 0; fi < free_cols.size() && all_ok; ++fi) {
      std::vector<Rational> v(m.cols, Rational(0));
      v[free_cols[fi]] = Rational(1);
      for (long i = 0; i < r; ++i) v[pivots[i]] = aug[i][r + fi];
      all_ok = verify_kernel_vector(m, v);
      basis.push_back(std::move(v));
    }
    if (all_ok) return basis;
  }
  // unlucky primes three times in a row: fall back to pure rational elimination
  return kernel_by_rational_elimination(m);
}

}  // namespace freecurve
