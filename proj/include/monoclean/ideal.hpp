#pragma once

#include <optional>
#include <set>
#include <vector>

#include "monoclean/monomial.hpp"

namespace monoclean {

/// A monomial prime ideal, identified by the set of variables generating it.
/// The empty set stands for the zero ideal, which is prime.
class PrimeSupport {
 public:
  PrimeSupport() = default;
  PrimeSupport(int nvars, std::vector<int> vars) : nvars_(nvars), vars_(std::move(vars)) {
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
    if (!vars_.empty() && (vars_.front() < 0 || vars_.back() >= nvars_))
      throw std::invalid_argument("PrimeSupport: variable index out of range");
  }

  int nvars() const { return nvars_; }
  const std::vector<int>& vars() const { return vars_; }
  int mu() const { return static_cast<int>(vars_.size()); }
  bool empty() const { return vars_.empty(); }

  bool contains_var(int i) const {
    return std::binary_search(vars_.begin(), vars_.end(), i);
  }

  /// Ideal containment, i.e. subset of generating variables.
  bool subset_of(const PrimeSupport& other) const {
    return std::includes(other.vars_.begin(), other.vars_.end(), vars_.begin(), vars_.end());
  }

  std::vector<int> complement() const {
    std::vector<int> c;
    for (int i = 0; i < nvars_; ++i)
      if (!contains_var(i)) c.push_back(i);
    return c;
  }

  bool operator==(const PrimeSupport& other) const {
    return nvars_ == other.nvars_ && vars_ == other.vars_;
  }
  bool operator!=(const PrimeSupport& other) const { return !(*this == other); }
  bool operator<(const PrimeSupport& other) const {
    if (nvars_ != other.nvars_) return nvars_ < other.nvars_;
    return vars_ < other.vars_;
  }

 private:
  int nvars_ = 0;
  std::vector<int> vars_;
};

/// A monomial ideal, stored by its unique minimal generating set in
/// canonical (lexicographic) order. The zero ideal has no generators,
/// the unit ideal is generated by 1.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  MonomialIdeal(VariableSet ambient, std::vector<Monomial> generators)
      : ambient_(std::move(ambient)) {
    for (const auto& g : generators)
      if (g.nvars() != ambient_.size())
        throw std::invalid_argument("MonomialIdeal: generator/ambient mismatch");
    gens_ = minimalize(std::move(generators));
  }

  static MonomialIdeal zero(VariableSet ambient) { return MonomialIdeal(std::move(ambient), {}); }

  static MonomialIdeal unit(VariableSet ambient) {
    int n = ambient.size();
    return MonomialIdeal(std::move(ambient), {Monomial::one(n)});
  }

  const VariableSet& ambient() const { return ambient_; }
  int nvars() const { return ambient_.size(); }
  const std::vector<Monomial>& generators() const { return gens_; }
  int num_generators() const { return static_cast<int>(gens_.size()); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool is_proper() const { return !is_unit(); }

  bool is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Monomial& g) { return g.is_squarefree(); });
  }

  bool contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(),
                       [&m](const Monomial& g) { return g.divides(m); });
  }

  bool contains(const MonomialIdeal& other) const {
    check_same_ambient(other);
    return std::all_of(other.gens_.begin(), other.gens_.end(),
                       [this](const Monomial& g) { return contains(g); });
  }

  Monomial generator_lcm() const {
    Monomial l = Monomial::one(nvars());
    for (const auto& g : gens_) l = lcm(l, g);
    return l;
  }

  bool operator==(const MonomialIdeal& other) const {
    return ambient_ == other.ambient_ && gens_ == other.gens_;
  }
  bool operator!=(const MonomialIdeal& other) const { return !(*this == other); }

  void check_same_ambient(const MonomialIdeal& other) const {
    if (ambient_ != other.ambient_) throw std::invalid_argument("ambient mismatch");
  }

 private:
  static std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> minimal;
    for (size_t i = 0; i < gens.size(); ++i) {
      bool divisible = false;
      for (size_t j = 0; j < gens.size() && !divisible; ++j)
        if (j != i && gens[j].divides(gens[i])) divisible = true;
      if (!divisible) minimal.push_back(gens[i]);
    }
    return minimal;
  }

  VariableSet ambient_;
  std::vector<Monomial> gens_;
};

/// I + (u).
inline MonomialIdeal add_generator(const MonomialIdeal& ideal, const Monomial& u) {
  auto gens = ideal.generators();
  gens.push_back(u);
  return MonomialIdeal(ideal.ambient(), std::move(gens));
}

inline MonomialIdeal prime_to_ideal(const PrimeSupport& p, const VariableSet& ambient) {
  if (p.nvars() != ambient.size()) throw std::invalid_argument("prime_to_ideal: ambient mismatch");
  std::vector<Monomial> gens;
  for (int i : p.vars()) gens.push_back(Monomial::variable(i, ambient.size()));
  return MonomialIdeal(ambient, std::move(gens));
}

/// I : u = (g / gcd(g, u) for g among the generators).
inline MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u) {
  if (u.nvars() != ideal.nvars()) throw std::invalid_argument("colon: ambient mismatch");
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(g / gcd(g, u));
  return MonomialIdeal(ideal.ambient(), std::move(gens));
}

/// Present iff every minimal generator has degree one; the zero ideal is
/// prime with empty support.
inline std::optional<PrimeSupport> is_prime(const MonomialIdeal& ideal) {
  std::vector<int> vars;
  for (const auto& g : ideal.generators()) {
    auto v = g.degree_one_variable();
    if (!v) return std::nullopt;
    vars.push_back(*v);
  }
  return PrimeSupport(ideal.nvars(), std::move(vars));
}

/// I ∩ J, generated by the pairwise lcms of generators.
inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  a.check_same_ambient(b);
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& u : a.generators())
    for (const auto& v : b.generators()) gens.push_back(lcm(u, v));
  return MonomialIdeal(a.ambient(), std::move(gens));
}

/// I : m, with m the graded maximal ideal.
inline MonomialIdeal colon_maximal(const MonomialIdeal& ideal) {
  MonomialIdeal result = colon(ideal, Monomial::variable(0, ideal.nvars()));
  for (int i = 1; i < ideal.nvars(); ++i)
    result = intersect(result, colon(ideal, Monomial::variable(i, ideal.nvars())));
  return result;
}

/// Saturation I : m^infinity, as the fixpoint of repeated colon by m.
inline MonomialIdeal saturation(const MonomialIdeal& ideal) {
  MonomialIdeal current = ideal;
  for (;;) {
    MonomialIdeal next = colon_maximal(current);
    if (next == current) return current;
    current = std::move(next);
  }
}

namespace detail {

inline void split_into_irreducibles(const MonomialIdeal& ideal,
                                    std::set<std::vector<Monomial>>& seen,
                                    std::vector<MonomialIdeal>& out) {
  if (!seen.insert(ideal.generators()).second) return;
  for (const auto& g : ideal.generators()) {
    auto supp = g.support();
    if (supp.size() < 2) continue;
    // g = q * r with q a pure power and r coprime to it; then
    // I = (I + q) ∩ (I + r).
    int i = supp[0];
    Monomial q = Monomial::variable(i, g.nvars(), g[i]);
    Monomial r = g / q;
    split_into_irreducibles(add_generator(ideal, q), seen, out);
    split_into_irreducibles(add_generator(ideal, r), seen, out);
    return;
  }
  out.push_back(ideal);
}

}  // namespace detail

/// Irredundant decomposition of a proper nonzero ideal into irreducible
/// monomial ideals (each generated by pure variable powers).
inline std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit())
    throw std::invalid_argument("irreducible_decomposition: zero or unit ideal");
  std::vector<MonomialIdeal> components;
  std::set<std::vector<Monomial>> seen;
  detail::split_into_irreducibles(ideal, seen, components);
  std::sort(components.begin(), components.end(),
            [](const MonomialIdeal& a, const MonomialIdeal& b) {
              return a.generators() < b.generators();
            });
  components.erase(std::unique(components.begin(), components.end()), components.end());
  // A component containing another is redundant; for prime components
  // (e.g. squarefree input) this already gives irredundancy.
  std::vector<MonomialIdeal> kept;
  for (size_t i = 0; i < components.size(); ++i) {
    bool contains_other = false;
    for (size_t j = 0; j < components.size() && !contains_other; ++j)
      if (j != i && components[i] != components[j] && components[i].contains(components[j]))
        contains_other = true;
    if (!contains_other) kept.push_back(components[i]);
  }
  components = std::move(kept);
  bool all_prime = std::all_of(components.begin(), components.end(),
                               [](const MonomialIdeal& c) { return is_prime(c).has_value(); });
  if (all_prime) return components;
  // Drop any component containing the intersection of the others, until stable.
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i < components.size() && !changed; ++i) {
      MonomialIdeal rest = MonomialIdeal::unit(ideal.ambient());
      for (size_t j = 0; j < components.size(); ++j)
        if (j != i) rest = intersect(rest, components[j]);
      if (components.size() > 1 && components[i].contains(rest)) {
        components.erase(components.begin() + i);
        changed = true;
      }
    }
  }
  return components;
}

inline PrimeSupport radical_of_irreducible(const MonomialIdeal& component) {
  std::vector<int> vars;
  for (const auto& g : component.generators()) {
    auto s = g.support();
    if (s.size() != 1) throw std::invalid_argument("radical_of_irreducible: not irreducible");
    vars.push_back(s[0]);
  }
  return PrimeSupport(component.nvars(), std::move(vars));
}

/// Ass(S/I): radicals of the irredundant irreducible components, deduplicated.
inline std::vector<PrimeSupport> associated_primes(const MonomialIdeal& ideal) {
  auto components = irreducible_decomposition(ideal);
  std::set<PrimeSupport> primes;
  for (const auto& c : components) primes.insert(radical_of_irreducible(c));
  return std::vector<PrimeSupport>(primes.begin(), primes.end());
}

/// Min(S/I): the inclusion-minimal associated primes.
inline std::vector<PrimeSupport> minimal_primes(const MonomialIdeal& ideal) {
  auto ass = associated_primes(ideal);
  std::vector<PrimeSupport> mins;
  for (const auto& p : ass) {
    bool minimal = true;
    for (const auto& q : ass)
      if (q != p && q.subset_of(p)) {
        minimal = false;
        break;
      }
    if (minimal) mins.push_back(p);
  }
  return mins;
}

/// Smallest number of variables generating a minimal prime.
inline int height(const MonomialIdeal& ideal) {
  auto mins = minimal_primes(ideal);
  int h = ideal.nvars();
  for (const auto& p : mins) h = std::min(h, p.mu());
  return h;
}

}  // namespace monoclean
