// Test-only oracles: independent brute-force routes for the quantities the
// library computes structurally. Deliberately naive.
#pragma once

#include <map>
#include <set>
#include <vector>

#include "monoclean/monoclean.hpp"

namespace oracles {

using namespace monoclean;

/// All monomials in n variables of total degree <= d.
inline std::vector<Monomial> monomials_upto(int n, int d) {
  std::vector<Monomial> out;
  std::vector<Exponent> current(n, 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == n) {
      out.push_back(Monomial(current));
      return;
    }
    for (int e = 0; e <= left; ++e) {
      current[var] = e;
      self(self, var + 1, left - e);
    }
    current[var] = 0;
  };
  rec(rec, 0, d);
  return out;
}

/// Same monomial membership up to total degree d.
inline bool ideals_agree_upto(const MonomialIdeal& a, const MonomialIdeal& b, int d) {
  for (const auto& m : monomials_upto(a.nvars(), d))
    if (a.contains(m) != b.contains(m)) return false;
  return true;
}

/// Membership in the saturation: only finitely many multiples of w lie
/// outside I. Exact: once an exponent passes the generator bound the ray
/// stays outside forever.
inline bool saturation_contains(const MonomialIdeal& ideal, const Monomial& w) {
  int n = ideal.nvars();
  Monomial big = ideal.generator_lcm();
  std::set<Monomial> seen;
  std::vector<Monomial> stack{w};
  while (!stack.empty()) {
    Monomial m = stack.back();
    stack.pop_back();
    if (ideal.contains(m) || seen.count(m)) continue;
    for (int i = 0; i < n; ++i)
      if (m[i] > big[i]) return false;  // escapes along x_i
    seen.insert(m);
    for (int i = 0; i < n; ++i) stack.push_back(m * Monomial::variable(i, n));
  }
  return true;
}

/// Facets of Gamma(I) by direct search over the finite grid where every
/// coordinate is either below its generator bound or infinite.
inline std::vector<Face> brute_facets(const MonomialIdeal& ideal) {
  int n = ideal.nvars();
  Monomial big = ideal.generator_lcm();
  std::vector<Face> grid;
  std::vector<Face::Entry> current(n);
  auto rec = [&](auto&& self, int var) -> void {
    if (var == n) {
      grid.push_back(Face(current));
      return;
    }
    for (Exponent e = 0; e < big[var]; ++e) {
      current[var] = e;
      self(self, var + 1);
    }
    current[var] = std::nullopt;
    self(self, var + 1);
  };
  rec(rec, 0);

  Multicomplex gamma{ideal};
  std::vector<Face> faces;
  for (const auto& a : grid)
    if (face_in(gamma, a)) faces.push_back(a);
  std::vector<Face> maximal;
  for (const auto& a : faces) {
    bool dominated = false;
    for (const auto& b : faces)
      if (a != b && a.leq(b)) dominated = true;
    if (!dominated) maximal.push_back(a);
  }
  std::vector<Face> result;
  for (const auto& a : faces) {
    bool facet = true;
    for (const auto& m : maximal)
      if (a.leq(m) && a.infinite_part() != m.infinite_part()) facet = false;
    if (facet) result.push_back(a);
  }
  std::sort(result.begin(), result.end());
  return result;
}

/// Ass by enumeration: supports of the prime colon ideals I : u over all
/// u dividing the lcm of the generators.
inline std::set<PrimeSupport> ass_by_colon_enumeration(const MonomialIdeal& ideal) {
  int n = ideal.nvars();
  Monomial big = ideal.generator_lcm();
  std::set<PrimeSupport> out;
  std::vector<Exponent> current(n, 0);
  auto rec = [&](auto&& self, int var) -> void {
    if (var == n) {
      Monomial u(current);
      if (!ideal.contains(u))
        if (auto p = is_prime(colon(ideal, u))) out.insert(*p);
      return;
    }
    for (Exponent e = 0; e <= big[var]; ++e) {
      current[var] = e;
      self(self, var + 1);
    }
    current[var] = 0;
  };
  rec(rec, 0);
  return out;
}

/// Minimal vertex covers of the generator supports (squarefree oracle).
inline std::set<PrimeSupport> min_by_transversals(const MonomialIdeal& ideal) {
  int n = ideal.nvars();
  std::vector<std::vector<int>> edges;
  for (const auto& g : ideal.generators()) edges.push_back(g.support());
  std::vector<std::vector<int>> covers;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> cover;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) cover.push_back(i);
    bool hits = true;
    for (const auto& e : edges) {
      bool hit = false;
      for (int v : e)
        if (mask & (1u << v)) hit = true;
      if (!hit) hits = false;
    }
    if (hits) covers.push_back(cover);
  }
  std::set<PrimeSupport> out;
  for (const auto& c : covers) {
    bool minimal = true;
    for (const auto& d : covers)
      if (d != c && std::includes(c.begin(), c.end(), d.begin(), d.end())) minimal = false;
    if (minimal) out.insert(PrimeSupport(n, c));
  }
  return out;
}

/// Standard-monomial counts of S/I per degree, up to degree d.
inline std::vector<Exponent> hilbert_counts(const MonomialIdeal& ideal, int d) {
  std::vector<Exponent> counts(d + 1, 0);
  for (const auto& m : monomials_upto(ideal.nvars(), d))
    if (!ideal.contains(m)) counts[static_cast<long long>(m.total_degree())] += 1;
  return counts;
}

/// Betti numbers of S/I via the upper Koszul complexes: beta_{i,a}(S/I) =
/// dim H~_{i-2} of the complex K^a = { W : x^a / x_W in I }.
inline std::map<std::pair<int, std::vector<Exponent>>, long long> upper_koszul_betti(
    const MonomialIdeal& ideal) {
  int n = ideal.nvars();
  // candidate multidegrees: lcms of generator subsets
  std::set<std::vector<Exponent>> degrees;
  int m = ideal.num_generators();
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    Monomial l = Monomial::one(n);
    for (int j = 0; j < m; ++j)
      if (mask & (1u << j)) l = lcm(l, ideal.generators()[j]);
    degrees.insert(l.exponents());
  }
  std::map<std::pair<int, std::vector<Exponent>>, long long> betti;
  for (const auto& a : degrees) {
    Monomial xa{std::vector<Exponent>(a)};
    // faces of K^a, grouped by |W|; the empty set is a face iff x^a in I
    std::vector<std::vector<unsigned>> by_size(n + 2);
    for (unsigned w = 0; w < (1u << n); ++w) {
      bool inside = true;
      std::vector<Exponent> e(a);
      for (int i = 0; i < n && inside; ++i)
        if (w & (1u << i)) {
          if (e[i] == 0) inside = false;
          else e[i] -= 1;
        }
      if (inside && ideal.contains(Monomial(std::vector<Exponent>(e))))
        by_size[std::popcount(w)].push_back(w);
    }
    std::map<unsigned, int> position;
    for (auto& level : by_size)
      for (size_t i = 0; i < level.size(); ++i) position[level[i]] = static_cast<int>(i);
    // reduced chain complex: C_{k} has basis the faces of size k (so the
    // empty face sits in C_0); homological index = |W|
    std::vector<int> dims(n + 2, 0);
    for (int k = 0; k <= n + 1; ++k) dims[k] = static_cast<int>(by_size[k].size());
    std::vector<IntMatrix> maps;
    for (int k = 1; k <= n + 1; ++k) {
      IntMatrix d(dims[k - 1], std::vector<Exponent>(dims[k], 0));
      for (size_t c = 0; c < by_size[k].size(); ++c) {
        unsigned w = by_size[k][c];
        int seen = 0;
        for (int i = 0; i < n; ++i) {
          if (!(w & (1u << i))) continue;
          unsigned sub = w ^ (1u << i);
          auto it = position.find(sub);
          if (it != position.end() && std::popcount(sub) == k - 1)
            d[it->second][c] += (seen % 2 == 0) ? 1 : -1;
          ++seen;
        }
      }
      maps.push_back(std::move(d));
    }
    auto h = homology_ranks(std::vector<int>(dims.begin(), dims.begin() + n + 2), maps);
    // H~_{j}: for the augmented complex. h[k] here is homology of the
    // unaugmented complex with the empty face at k = 0, which equals the
    // reduced homology H~_{k-1} of the geometric complex.
    for (int k = 0; k <= n + 1; ++k)
      if (h[k] > 0) betti[{k + 1, a}] += h[k];  // beta_{k+1, a}(S/I)
  }
  return betti;
}

/// Bounded multidegree check that the spaces of a decomposition are
/// disjoint and cover the standard monomials.
inline bool decomposition_covers_upto(const StanleyDecomposition& decomposition, int d) {
  const MonomialIdeal& ideal = decomposition.ideal;
  for (const auto& m : monomials_upto(ideal.nvars(), d)) {
    int hits = 0;
    for (const auto& space : decomposition.spaces) {
      if (!space.u.divides(m)) continue;
      Monomial q = m / space.u;
      bool inside = true;
      for (int i : q.support())
        if (!std::binary_search(space.zvars.begin(), space.zvars.end(), i)) inside = false;
      if (inside) ++hits;
    }
    int want = ideal.contains(m) ? 0 : 1;
    if (hits != want) return false;
  }
  return true;
}

}  // namespace oracles
