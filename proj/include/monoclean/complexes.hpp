#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>

#include "monoclean/polarization.hpp"

namespace monoclean {

/// A face of a multicomplex: a vector over N ∪ {infinity}, with nullopt
/// standing for infinity. The infinite part is always derived on demand.
class Face {
 public:
  using Entry = std::optional<Exponent>;  // nullopt = infinity

  Face() = default;
  explicit Face(std::vector<Entry> entries) : entries_(std::move(entries)) {
    for (const auto& e : entries_)
      if (e && *e < 0) throw std::invalid_argument("Face: negative entry");
  }

  static Face zero(int n) { return Face(std::vector<Entry>(n, Exponent(0))); }

  int size() const { return static_cast<int>(entries_.size()); }
  const Entry& operator[](int i) const { return entries_.at(i); }
  const std::vector<Entry>& entries() const { return entries_; }
  bool is_infinite(int i) const { return !entries_.at(i).has_value(); }

  std::vector<int> infinite_part() const {
    std::vector<int> inf;
    for (int i = 0; i < size(); ++i)
      if (is_infinite(i)) inf.push_back(i);
    return inf;
  }

  /// Componentwise order with infinity on top.
  bool leq(const Face& other) const {
    check(other);
    for (int i = 0; i < size(); ++i) {
      if (other.is_infinite(i)) continue;
      if (is_infinite(i) || *entries_[i] > *other.entries_[i]) return false;
    }
    return true;
  }

  bool operator==(const Face& other) const { return entries_ == other.entries_; }
  bool operator!=(const Face& other) const { return entries_ != other.entries_; }

  /// Canonical order for deterministic output: entrywise, finite < infinite.
  bool operator<(const Face& other) const {
    check(other);
    for (int i = 0; i < size(); ++i) {
      const Entry& a = entries_[i];
      const Entry& b = other.entries_[i];
      if (a == b) continue;
      if (!a) return false;  // infinity is largest
      if (!b) return true;
      return *a < *b;
    }
    return false;
  }

 private:
  void check(const Face& other) const {
    if (size() != other.size()) throw std::invalid_argument("Face: length mismatch");
  }

  std::vector<Entry> entries_;
};

/// The multicomplex Gamma(I) of a monomial ideal, backed by the ideal itself.
struct Multicomplex {
  MonomialIdeal ideal;
};

/// a ∈ Gamma(I) iff no minimal generator g has g <= a componentwise, where
/// infinite entries of a absorb any finite bound.
inline bool face_in(const Multicomplex& gamma, const Face& a) {
  if (a.size() != gamma.ideal.nvars()) throw std::invalid_argument("face_in: length mismatch");
  for (const auto& g : gamma.ideal.generators()) {
    bool below = true;
    for (int i = 0; i < a.size() && below; ++i)
      if (!a.is_infinite(i) && g[i] > *a[i]) below = false;
    if (below) return false;  // x^g witnesses that a escapes into the ideal
  }
  return true;
}

namespace detail {

/// The irreducible ideal I(Gamma(a)) = (x_i^{a_i + 1} : a_i finite).
inline MonomialIdeal face_ideal(const Face& a, const VariableSet& ambient) {
  std::vector<Monomial> gens;
  for (int i = 0; i < a.size(); ++i)
    if (!a.is_infinite(i)) gens.push_back(Monomial::variable(i, a.size(), *a[i] + 1));
  return MonomialIdeal(ambient, std::move(gens));
}

}  // namespace detail

/// Maximal facets of Gamma(I): from I = ∩ (x_i^{a_i} : i in A), each component
/// contributes the candidate with a_i - 1 on A and infinity elsewhere; the
/// componentwise-maximal candidates survive.
inline std::vector<Face> maximal_facets(const Multicomplex& gamma) {
  const MonomialIdeal& ideal = gamma.ideal;
  if (ideal.is_zero() || ideal.is_unit())
    throw std::invalid_argument("maximal_facets: zero or unit ideal");
  std::vector<Face> candidates;
  for (const auto& component : irreducible_decomposition(ideal)) {
    std::vector<Face::Entry> e(ideal.nvars(), std::nullopt);
    for (const auto& g : component.generators()) {
      int i = g.support().at(0);
      e[i] = g[i] - 1;
    }
    candidates.push_back(Face(std::move(e)));
  }
  std::vector<Face> maxima;
  for (const auto& c : candidates) {
    bool dominated = false;
    for (const auto& d : candidates)
      if (c != d && c.leq(d)) {
        dominated = true;
        break;
      }
    if (!dominated) maxima.push_back(c);
  }
  std::sort(maxima.begin(), maxima.end());
  maxima.erase(std::unique(maxima.begin(), maxima.end()), maxima.end());
  return maxima;
}

/// The map beta on faces within block bounds: a finite entry a(i) = e turns
/// into the single block variable x_{i,e+1}; infinite entries contribute none.
inline PrimeSupport beta(const Face& a, const PolarizedRing& ring) {
  if (a.size() != ring.source().size()) throw std::invalid_argument("beta: length mismatch");
  std::vector<int> vars;
  for (int i = 0; i < a.size(); ++i) {
    if (a.is_infinite(i)) continue;
    if (*a[i] >= ring.block_size(i))
      throw std::invalid_argument("beta: finite entry not below block size");
    vars.push_back(ring.target_index(i, static_cast<int>(*a[i]) + 1));
  }
  return PrimeSupport(ring.target().size(), std::move(vars));
}

/// Inverse of beta on primes with at most one variable per block.
inline Face beta_inv(const PrimeSupport& p, const PolarizedRing& ring) {
  if (p.nvars() != ring.target().size()) throw std::invalid_argument("beta_inv: ambient mismatch");
  std::vector<Face::Entry> e(ring.source().size(), std::nullopt);
  for (int t : p.vars()) {
    auto [i, j] = ring.block_of(t);
    if (e[i].has_value())
      throw std::invalid_argument("beta_inv: two variables from one block");
    e[i] = Exponent(j - 1);
  }
  return Face(std::move(e));
}

/// Facets of Gamma(I), computed through the polarization bijection as
/// beta^{-1}(Min(I^p)).
inline std::vector<Face> facets(const Multicomplex& gamma) {
  const MonomialIdeal& ideal = gamma.ideal;
  if (ideal.is_zero() || ideal.is_unit())
    throw std::invalid_argument("facets: zero or unit ideal");
  auto [ring, polarized] = polarize_ideal(ideal);
  std::vector<Face> result;
  for (const auto& p : minimal_primes(polarized)) result.push_back(beta_inv(p, ring));
  std::sort(result.begin(), result.end());
  return result;
}

/// Abstract simplicial complex given by its facets (pairwise incomparable).
struct SimplicialComplex {
  VariableSet vertices;
  std::vector<std::vector<int>> facets;  // sorted vertex subsets
};

/// Stanley-Reisner complex of a squarefree ideal: facets are the complements
/// of the minimal primes.
inline SimplicialComplex simplicial_from_squarefree(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree())
    throw std::invalid_argument("simplicial_from_squarefree: ideal is not squarefree");
  if (ideal.is_zero() || ideal.is_unit())
    throw std::invalid_argument("simplicial_from_squarefree: zero or unit ideal");
  SimplicialComplex complex;
  complex.vertices = ideal.ambient();
  for (const auto& p : minimal_primes(ideal)) complex.facets.push_back(p.complement());
  std::sort(complex.facets.begin(), complex.facets.end());
  return complex;
}

/// A facet order together with the restriction face of each step.
struct ShellingOrder {
  std::vector<std::vector<int>> facets;
  std::vector<std::vector<int>> restriction_faces;
};

namespace detail {

inline bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Candidate restriction face of `facet` against the already-used facets:
/// the vertices whose removal lands inside an earlier facet. The step is
/// admissible iff that candidate is itself new (then the new faces are
/// exactly the interval [R, facet]).
inline std::optional<std::vector<int>> shelling_step(
    const std::vector<int>& facet, const std::vector<std::vector<int>>& earlier) {
  if (earlier.empty()) return std::vector<int>{};
  std::vector<int> restriction;
  for (int v : facet) {
    std::vector<int> without;
    for (int w : facet)
      if (w != v) without.push_back(w);
    for (const auto& f : earlier)
      if (subset_of(without, f)) {
        restriction.push_back(v);
        break;
      }
  }
  for (const auto& f : earlier)
    if (subset_of(restriction, f)) return std::nullopt;
  return restriction;
}

/// Canonical facet order for searches: larger facets first, then vertex-lex.
inline bool canonical_facet_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

}  // namespace detail

/// Checks the unique-minimal-new-face condition for a given facet order.
inline std::optional<ShellingOrder> is_shelling_order(
    const SimplicialComplex& complex, const std::vector<std::vector<int>>& order) {
  auto sorted_a = complex.facets;
  auto sorted_b = order;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b)
    throw std::invalid_argument("is_shelling_order: order is not a permutation of the facets");
  ShellingOrder result;
  for (const auto& facet : order) {
    auto r = detail::shelling_step(facet, result.facets);
    if (!r) return std::nullopt;
    result.facets.push_back(facet);
    result.restriction_faces.push_back(std::move(*r));
  }
  return result;
}

/// Backtracking search for a shelling; exhaustive (with memoization on the
/// set of used facets), hence a decision procedure. Returns the first order
/// found when facets are tried in canonical order at every step.
inline std::optional<ShellingOrder> find_shelling(const SimplicialComplex& complex) {
  int f = static_cast<int>(complex.facets.size());
  if (f == 0) return ShellingOrder{};
  if (f > 63) throw std::invalid_argument("find_shelling: more than 63 facets");
  std::vector<std::vector<int>> facets = complex.facets;
  std::sort(facets.begin(), facets.end(), detail::canonical_facet_less);

  std::unordered_set<std::uint64_t> dead;
  std::vector<int> order_idx;
  std::vector<std::vector<int>> used, restrictions;

  auto dfs = [&](auto&& self, std::uint64_t mask) -> bool {
    if (static_cast<int>(order_idx.size()) == f) return true;
    if (dead.count(mask)) return false;
    for (int i = 0; i < f; ++i) {
      if (mask & (std::uint64_t(1) << i)) continue;
      auto r = detail::shelling_step(facets[i], used);
      if (!r) continue;
      order_idx.push_back(i);
      used.push_back(facets[i]);
      restrictions.push_back(std::move(*r));
      if (self(self, mask | (std::uint64_t(1) << i))) return true;
      order_idx.pop_back();
      used.pop_back();
      restrictions.pop_back();
    }
    dead.insert(mask);
    return false;
  };

  if (!dfs(dfs, 0)) return std::nullopt;
  ShellingOrder result;
  result.facets = used;
  result.restriction_faces = restrictions;
  return result;
}

}  // namespace monoclean
