#pragma once

// Brute-force reference implementations for the tests. These deliberately
// avoid the library's elimination and matrix-building code paths.

#include <map>
#include <tuple>
#include <vector>

#include "freecurve/milnor.hpp"

namespace oracle {

using freecurve::Rational;
using freecurve::TriPoly;

// plain Gaussian elimination over the rationals on a dense matrix
inline long dense_rank(std::vector<std::vector<Rational>> a) {
  if (a.empty()) return 0;
  long rows = static_cast<long>(a.size());
  long cols = static_cast<long>(a[0].size());
  long rank = 0;
  for (long c = 0; c < cols && rank < rows; ++c) {
    long pivot = -1;
    for (long r = rank; r < rows; ++r)
      if (!a[r][c].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[rank]);
    for (long r = 0; r < rows; ++r) {
      if (r == rank || a[r][c].is_zero()) continue;
      Rational f = a[r][c] / a[rank][c];
      for (long j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

// exponent-map polynomial arithmetic, independent of TriPoly internals
using PolyMap = std::map<std::tuple<int, int, int>, Rational>;

inline PolyMap to_map(const TriPoly& p) {
  PolyMap m;
  for (const auto& [mono, c] : p.terms()) m[{mono.ex, mono.ey, mono.ez}] = c;
  return m;
}

inline PolyMap mul_maps(const PolyMap& a, const PolyMap& b) {
  PolyMap out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      auto key = std::tuple{std::get<0>(ma) + std::get<0>(mb), std::get<1>(ma) + std::get<1>(mb),
                            std::get<2>(ma) + std::get<2>(mb)};
      out[key] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

// dim of the degree-k piece of the ideal (f_x, f_y, f_z), built by explicit
// monomial multiplication and ranked by dense rational elimination
inline long jacobian_piece_rank(const TriPoly& f, int k) {
  int d = f.degree();
  int e = k - d + 1;
  if (e < 0) return 0;
  std::vector<PolyMap> gens = {to_map(f.partial_derivative('x')), to_map(f.partial_derivative('y')),
                               to_map(f.partial_derivative('z'))};
  // enumerate degree-e monomials directly
  std::vector<std::vector<Rational>> rows;
  // column order: all degree-k exponent triples, lexicographic
  std::map<std::tuple<int, int, int>, long> col_of;
  for (int ex = 0; ex <= k; ++ex)
    for (int ey = 0; ey + ex <= k; ++ey) {
      auto key = std::tuple{ex, ey, k - ex - ey};
      long id = static_cast<long>(col_of.size());
      col_of[key] = id;
    }
  for (int ux = 0; ux <= e; ++ux)
    for (int uy = 0; uy + ux <= e; ++uy) {
      PolyMap u;
      u[{ux, uy, e - ux - uy}] = Rational(1);
      for (const auto& g : gens) {
        PolyMap prod = mul_maps(u, g);
        std::vector<Rational> row(col_of.size(), Rational(0));
        for (const auto& [mono, c] : prod) row[col_of.at(mono)] = c;
        rows.push_back(std::move(row));
      }
    }
  return dense_rank(std::move(rows));
}

inline long milnor_dim_oracle(const TriPoly& f, int k) {
  return freecurve::dim_sk(k) - jacobian_piece_rank(f, k);
}

}  // namespace oracle
