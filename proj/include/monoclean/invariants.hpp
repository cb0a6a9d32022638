#pragma once

#include <cstdint>
#include <map>

#include "monoclean/complexes.hpp"
#include "monoclean/hilbert.hpp"

namespace monoclean {

namespace detail {

inline bool pairwise_coprime(const std::vector<Monomial>& gens) {
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (!gcd(gens[i], gens[j]).is_one()) return false;
  return true;
}

inline Poly hilbert_numerator_inclusion_exclusion(const MonomialIdeal& ideal) {
  const auto& gens = ideal.generators();
  int m = static_cast<int>(gens.size());
  std::vector<Monomial> lcms(std::uint64_t(1) << m, Monomial::one(ideal.nvars()));
  Poly numerator;
  poly_add_term(numerator, 0, 1);
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << m); ++mask) {
    int low = std::countr_zero(mask);
    lcms[mask] = lcm(lcms[mask & (mask - 1)], gens[low]);
    poly_add_term(numerator, lcms[mask].total_degree(),
                  (std::popcount(mask) % 2 == 1) ? -1 : 1);
  }
  return numerator;
}

inline Poly hilbert_numerator(const MonomialIdeal& ideal) {
  const auto& gens = ideal.generators();
  if (pairwise_coprime(gens)) {
    // Regular sequence: numerator is the product of (1 - t^deg).
    Poly numerator{{0, 1}};
    for (const auto& g : gens) {
      Poly factor{{0, 1}};
      poly_add_term(factor, g.total_degree(), -1);
      numerator = poly_mul(numerator, factor);
    }
    return numerator;
  }
  if (gens.size() <= 10) return hilbert_numerator_inclusion_exclusion(ideal);
  // Split off a variable power: p = x_i^c for the most shared variable,
  // with c its least positive exponent, via
  //   Hilb(S/I) = Hilb(S/(I,p)) + t^deg(p) Hilb(S/(I:p)).
  // The adjoin branch absorbs the generator attaining c; both branches
  // strictly drop the total generator degree.
  int n = ideal.nvars();
  int pivot_var = 0, best = -1;
  for (int i = 0; i < n; ++i) {
    int occurrences = 0;
    for (const auto& g : gens)
      if (g[i] > 0) ++occurrences;
    if (occurrences > best) {
      best = occurrences;
      pivot_var = i;
    }
  }
  Exponent c = 0;
  for (const auto& g : gens)
    if (g[pivot_var] > 0 && (c == 0 || g[pivot_var] < c)) c = g[pivot_var];
  Monomial p = Monomial::variable(pivot_var, n, c);
  Poly with = hilbert_numerator(add_generator(ideal, p));
  Poly quotient = hilbert_numerator(colon(ideal, p));
  Poly shifted;
  for (const auto& [d, coeff] : quotient) shifted[d + c] = coeff;
  return poly_add(with, shifted);
}

}  // namespace detail

/// Hilbert series of S/I over the full denominator (1-t)^n.
inline HilbertSeries hilbert_series(const MonomialIdeal& ideal) {
  return HilbertSeries{detail::hilbert_numerator(ideal), ideal.nvars()};
}

/// Krull dimension of S/I: denominator power of the reduced series.
inline int dimension(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw std::invalid_argument("dimension: unit ideal");
  return hilbert_series(ideal).reduced().denominator_power;
}

/// Multiplicity e(S/I) = Q(1) of the reduced numerator.
inline Exponent multiplicity(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw std::invalid_argument("multiplicity: unit ideal");
  return poly_eval_one(hilbert_series(ideal).reduced().numerator);
}

/// Length multiplicity of P, counted as the facets of Gamma(I) whose
/// infinite part is the complement of P.
inline long long mult_length(const MonomialIdeal& ideal, const PrimeSupport& p) {
  auto complement = p.complement();
  long long count = 0;
  for (const auto& a : facets(Multicomplex{ideal}))
    if (a.infinite_part() == complement) ++count;
  return count;
}

/// Arithmetic degree: the number of facets of Gamma(I).
inline long long adeg(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit())
    throw std::invalid_argument("adeg: zero or unit ideal");
  return static_cast<long long>(facets(Multicomplex{ideal}).size());
}

using IntMatrix = std::vector<std::vector<Exponent>>;

/// Rank over the rationals by fraction-free (Bareiss) elimination.
inline int matrix_rank(IntMatrix m) {
  int rows = static_cast<int>(m.size());
  int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  int rank = 0;
  Exponent prev_pivot = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c2 = col + 1; c2 < cols; ++c2)
        m[r][c2] = (m[rank][col] * m[r][c2] - m[r][col] * m[rank][c2]) / prev_pivot;
      m[r][col] = 0;
    }
    prev_pivot = m[rank][col];
    ++rank;
  }
  return rank;
}

/// Homology ranks of a complex C_k -> ... -> C_0 given by its boundary maps
/// d_i : C_i -> C_{i-1} (maps[i-1] has dim C_{i-1} rows and dim C_i columns).
inline std::vector<long long> homology_ranks(const std::vector<int>& dims,
                                             const std::vector<IntMatrix>& maps) {
  int k = static_cast<int>(dims.size()) - 1;
  if (static_cast<int>(maps.size()) != k)
    throw std::invalid_argument("homology_ranks: need one map per consecutive pair");
  for (int i = 0; i < k; ++i) {
    const IntMatrix& d = maps[i];
    if (static_cast<int>(d.size()) != dims[i] ||
        (dims[i] > 0 && static_cast<int>(d[0].size()) != dims[i + 1]))
      throw std::invalid_argument("homology_ranks: dimension mismatch");
  }
  for (int i = 0; i + 1 < k; ++i) {
    const IntMatrix& a = maps[i];
    const IntMatrix& b = maps[i + 1];
    for (int r = 0; r < dims[i]; ++r)
      for (int c = 0; c < dims[i + 2]; ++c) {
        Exponent s = 0;
        for (int t = 0; t < dims[i + 1]; ++t) s += a[r][t] * b[t][c];
        if (s != 0) throw std::invalid_argument("homology_ranks: boundary composition nonzero");
      }
  }
  std::vector<int> ranks(k + 2, 0);
  for (int i = 0; i < k; ++i) ranks[i + 1] = matrix_rank(maps[i]);
  std::vector<long long> h(k + 1);
  for (int i = 0; i <= k; ++i) h[i] = dims[i] - ranks[i] - ranks[i + 1];
  return h;
}

/// Multigraded Betti numbers of the ideal over the rationals (row 0 lists
/// the minimal generators), via the Taylor complex reduced modulo the
/// maximal ideal. projective_dimension is that of the quotient S/I, so
/// depth(S/I) = n - projective_dimension.
struct BettiTable {
  std::map<std::pair<int, std::vector<Exponent>>, long long> entries;
  int projective_dimension = 0;

  long long total(int row) const {
    long long sum = 0;
    for (const auto& [key, value] : entries)
      if (key.first == row) sum += value;
    return sum;
  }
};

inline BettiTable betti_table(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit())
    throw std::invalid_argument("betti_table: zero or unit ideal");
  const auto& gens = ideal.generators();
  int m = static_cast<int>(gens.size());
  if (m > 20) throw std::invalid_argument("betti_table: too many generators");

  std::vector<Monomial> lcms(std::uint64_t(1) << m, Monomial::one(ideal.nvars()));
  std::map<std::vector<Exponent>, std::vector<std::uint64_t>> by_degree;
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << m); ++mask) {
    int low = std::countr_zero(mask);
    lcms[mask] = lcm(lcms[mask & (mask - 1)], gens[low]);
    by_degree[lcms[mask].exponents()].push_back(mask);
  }

  BettiTable table;
  for (const auto& [degree, masks] : by_degree) {
    // The multidegree strand of Taylor tensor K: subsets with this lcm,
    // graded by cardinality; the boundary keeps a face only when dropping
    // the generator does not change the lcm.
    std::map<std::uint64_t, int> position;
    std::vector<std::vector<std::uint64_t>> by_size(m + 2);
    for (std::uint64_t mask : masks) by_size[std::popcount(mask)].push_back(mask);
    for (auto& level : by_size) {
      std::sort(level.begin(), level.end());
      for (size_t i = 0; i < level.size(); ++i) position[level[i]] = static_cast<int>(i);
    }
    auto boundary_rank = [&](int level) {
      if (by_size[level].empty() || by_size[level - 1].empty()) return 0;
      IntMatrix d(by_size[level - 1].size(),
                  std::vector<Exponent>(by_size[level].size(), 0));
      for (size_t cidx = 0; cidx < by_size[level].size(); ++cidx) {
        std::uint64_t mask = by_size[level][cidx];
        int seen = 0;
        for (int j = 0; j < m; ++j) {
          if (!(mask & (std::uint64_t(1) << j))) continue;
          std::uint64_t sub = mask ^ (std::uint64_t(1) << j);
          if (lcms[sub].exponents() == lcms[mask].exponents())
            d[position.at(sub)][cidx] += (seen % 2 == 0) ? 1 : -1;
          ++seen;
        }
      }
      return matrix_rank(std::move(d));
    };
    std::vector<int> ranks(m + 2, 0);
    for (int k = 1; k <= m + 1; ++k) ranks[k] = boundary_rank(k);
    for (int k = 1; k <= m; ++k) {
      long long betti_quotient =
          static_cast<long long>(by_size[k].size()) - ranks[k] - ranks[k + 1];
      if (betti_quotient > 0) {
        table.entries[{k - 1, degree}] = betti_quotient;  // row i = beta_i of the ideal
        table.projective_dimension = std::max(table.projective_dimension, k);
      }
    }
  }
  return table;
}

/// depth(S/I) by Auslander–Buchsbaum from the Taylor-complex Tor ranks.
inline int depth(const MonomialIdeal& ideal) {
  return ideal.nvars() - betti_table(ideal).projective_dimension;
}

}  // namespace monoclean
