#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>

#include "monoclean/complexes.hpp"
#include "monoclean/invariants.hpp"
#include "monoclean/polarization.hpp"

namespace monoclean {

/// Monomials lying in `sup` but not in `sub`, in canonical order. The caller
/// must know the difference is a finite set (e.g. sup inside the saturation
/// of sub); a cap guards against misuse.
inline std::vector<Monomial> monomials_between(const MonomialIdeal& sup, const MonomialIdeal& sub,
                                               std::size_t cap = 1u << 20) {
  sup.check_same_ambient(sub);
  int n = sup.nvars();
  std::set<Monomial> found;
  for (const auto& g : sup.generators()) {
    // Multiples g*v outside sub form a downward-closed set in v.
    std::set<Monomial> seen;
    std::vector<Monomial> stack{g};
    while (!stack.empty()) {
      Monomial w = stack.back();
      stack.pop_back();
      if (sub.contains(w) || seen.count(w)) continue;
      seen.insert(w);
      found.insert(w);
      if (found.size() > cap) throw std::overflow_error("monomials_between: not finite?");
      for (int i = 0; i < n; ++i) stack.push_back(w * Monomial::variable(i, n));
    }
  }
  return std::vector<Monomial>(found.begin(), found.end());
}

/// A prime filtration I = I_0 ⊂ I_1 ⊂ ... ⊂ I_r = S presented by its base
/// ideal and the ordered monomials adjoined at each step; the step ideals,
/// quotient primes and degree shifts are all derived.
class PrimeFiltration {
 public:
  PrimeFiltration() = default;
  PrimeFiltration(MonomialIdeal base, std::vector<Monomial> adjoined)
      : base_(std::move(base)), adjoined_(std::move(adjoined)) {
    for (const auto& u : adjoined_)
      if (u.nvars() != base_.nvars())
        throw std::invalid_argument("PrimeFiltration: monomial/ambient mismatch");
  }

  const MonomialIdeal& base() const { return base_; }
  const std::vector<Monomial>& adjoined() const { return adjoined_; }
  int length() const { return static_cast<int>(adjoined_.size()); }

  /// I_0, ..., I_r.
  std::vector<MonomialIdeal> step_ideals() const {
    std::vector<MonomialIdeal> ideals{base_};
    for (const auto& u : adjoined_) ideals.push_back(add_generator(ideals.back(), u));
    return ideals;
  }

 private:
  MonomialIdeal base_;
  std::vector<Monomial> adjoined_;
};

enum class Classification { clean, pretty_clean, pretty_clean_and_clean, neither };

inline const char* to_string(Classification c) {
  switch (c) {
    case Classification::clean: return "clean";
    case Classification::pretty_clean: return "pretty_clean";
    case Classification::pretty_clean_and_clean: return "pretty_clean_and_clean";
    case Classification::neither: return "neither";
  }
  return "?";
}

struct FiltrationReport {
  bool valid = false;
  std::optional<int> failed_step;  // 0-based, set when invalid
  std::string failure;
  std::vector<PrimeSupport> support;  // multiset, in filtration order
  Classification classification = Classification::neither;
  bool supp_equals_ass = false;
  bool supp_equals_min = false;
  bool mu_nonincreasing = false;

  bool is_clean() const {
    return classification == Classification::clean ||
           classification == Classification::pretty_clean_and_clean;
  }
  bool is_pretty_clean() const {
    return classification == Classification::pretty_clean ||
           classification == Classification::pretty_clean_and_clean;
  }
};

namespace detail {

inline std::vector<PrimeSupport> ass_with_zero_case(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return {PrimeSupport(ideal.nvars(), {})};
  return associated_primes(ideal);
}

inline std::vector<PrimeSupport> min_with_zero_case(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return {PrimeSupport(ideal.nvars(), {})};
  return minimal_primes(ideal);
}

}  // namespace detail

/// Checks every step (colon prime, monomial new, chain reaching S) and
/// classifies the filtration. Invalidity is an outcome, not an error.
inline FiltrationReport verify(const PrimeFiltration& filtration) {
  FiltrationReport report;
  MonomialIdeal current = filtration.base();
  for (int j = 0; j < filtration.length(); ++j) {
    const Monomial& u = filtration.adjoined()[j];
    if (current.contains(u)) {
      report.failed_step = j;
      report.failure = "adjoined monomial already lies in the previous ideal";
      return report;
    }
    auto prime = is_prime(colon(current, u));
    if (!prime) {
      report.failed_step = j;
      report.failure = "colon of step is not a prime ideal";
      return report;
    }
    report.support.push_back(*prime);
    current = add_generator(current, u);
  }
  if (!current.is_unit()) {
    report.failure = "chain does not reach the whole ring";
    return report;
  }
  report.valid = true;

  bool pretty = true;
  for (size_t i = 0; i < report.support.size(); ++i)
    for (size_t j = i + 1; j < report.support.size(); ++j)
      if (report.support[i].subset_of(report.support[j]) &&
          report.support[i] != report.support[j])
        pretty = false;

  report.mu_nonincreasing = true;
  for (size_t i = 0; i + 1 < report.support.size(); ++i)
    if (report.support[i].mu() < report.support[i + 1].mu()) report.mu_nonincreasing = false;

  std::set<PrimeSupport> supp_set(report.support.begin(), report.support.end());
  bool clean = false;
  if (filtration.base().is_unit()) {
    clean = supp_set.empty();
    report.supp_equals_ass = report.supp_equals_min = supp_set.empty();
  } else {
    auto ass = detail::ass_with_zero_case(filtration.base());
    auto min = detail::min_with_zero_case(filtration.base());
    std::set<PrimeSupport> ass_set(ass.begin(), ass.end());
    std::set<PrimeSupport> min_set(min.begin(), min.end());
    clean = supp_set == min_set;
    report.supp_equals_ass = supp_set == ass_set;
    report.supp_equals_min = supp_set == min_set;
  }

  if (clean && pretty) report.classification = Classification::pretty_clean_and_clean;
  else if (pretty) report.classification = Classification::pretty_clean;
  else if (clean) report.classification = Classification::clean;
  else report.classification = Classification::neither;
  return report;
}

/// The monomials of the saturation modulo I, grouped by colon level
/// (members of I:m^k outside I:m^{k-1}), each group in canonical order.
/// Prepending the group sequence to any filtration of the saturation gives
/// a filtration of I whose new quotients are all S/m.
inline std::vector<Monomial> saturation_chain(const MonomialIdeal& ideal) {
  MonomialIdeal saturated = saturation(ideal);
  if (saturated == ideal) return {};
  std::vector<MonomialIdeal> levels{ideal};
  while (levels.back() != saturated) levels.push_back(colon_maximal(levels.back()));
  auto monomials = monomials_between(saturated, ideal);
  std::vector<Monomial> chain;
  for (size_t k = 1; k < levels.size() && chain.size() < monomials.size(); ++k)
    for (const auto& u : monomials)
      if (levels[k].contains(u) && !levels[k - 1].contains(u)) chain.push_back(u);
  return chain;
}

/// Candidate filtration from a multicomplex facet order: peel the facets in
/// reverse, each step adjoining the new minimal generator of the partial
/// intersection. Not guaranteed valid for arbitrary orders; run verify().
inline PrimeFiltration order_to_filtration(const MonomialIdeal& ideal,
                                           const std::vector<Face>& facet_order) {
  int r = static_cast<int>(facet_order.size());
  std::vector<MonomialIdeal> prefix{MonomialIdeal::unit(ideal.ambient())};
  for (const auto& a : facet_order)
    prefix.push_back(intersect(prefix.back(), detail::face_ideal(a, ideal.ambient())));
  if (prefix[r] != ideal)
    throw std::invalid_argument("order_to_filtration: order does not cover the facets");
  std::vector<Monomial> adjoined;
  MonomialIdeal current = ideal;
  for (int i = 1; i <= r; ++i) {
    const MonomialIdeal& target = prefix[r - i];
    std::vector<Monomial> fresh;
    for (const auto& g : target.generators())
      if (!current.contains(g)) fresh.push_back(g);
    Monomial u = fresh.empty() ? Monomial::one(ideal.nvars()) : fresh.front();
    adjoined.push_back(u);
    current = add_generator(current, u);
  }
  return PrimeFiltration(ideal, std::move(adjoined));
}

/// Candidate filtration from a simplicial shelling: peeling in reverse
/// shelling order adjoins the restriction-face monomials.
inline PrimeFiltration order_to_filtration(const MonomialIdeal& ideal,
                                           const ShellingOrder& shelling) {
  int n = ideal.nvars();
  std::vector<Monomial> adjoined;
  for (auto it = shelling.restriction_faces.rbegin(); it != shelling.restriction_faces.rend();
       ++it) {
    std::vector<Exponent> e(n, 0);
    for (int v : *it) e.at(v) = 1;
    adjoined.push_back(Monomial(std::move(e)));
  }
  return PrimeFiltration(ideal, std::move(adjoined));
}

inline std::optional<PrimeFiltration> is_clean(const MonomialIdeal& ideal);

/// Decides pretty-cleanness through the polarization: I is pretty clean
/// iff its polarization is clean; a clean filtration upstairs specializes
/// to a pretty clean witness downstairs.
inline std::optional<PrimeFiltration> is_pretty_clean(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit())
    throw std::invalid_argument("is_pretty_clean: zero or unit ideal");
  auto [ring, polarized] = polarize_ideal(ideal);
  auto clean_upstairs = is_clean(polarized);
  if (!clean_upstairs) return std::nullopt;
  std::vector<Monomial> adjoined;
  for (const auto& v : clean_upstairs->adjoined()) adjoined.push_back(specialize(ring, v));
  PrimeFiltration specialized(ideal, std::move(adjoined));
  return specialized;
}

/// Specialization of a filtration of I^p. For clean input the result is a
/// pretty clean filtration of the specialized base; otherwise the chain is
/// returned as-is together with its verification report.
inline std::pair<PrimeFiltration, FiltrationReport> specialize_filtration(
    const PolarizedRing& ring, const PrimeFiltration& upstairs) {
  MonomialIdeal base = specialize(ring, upstairs.base());
  std::vector<Monomial> adjoined;
  for (const auto& v : upstairs.adjoined()) adjoined.push_back(specialize(ring, v));
  PrimeFiltration downstairs(std::move(base), std::move(adjoined));
  FiltrationReport report = verify(downstairs);
  return {std::move(downstairs), std::move(report)};
}

/// Polarization of a filtration: J_0 = I^p, J_i = (J_{i-1}, u_i^p), over
/// blocks large enough for the base and every adjoined monomial.
inline std::pair<PolarizedRing, PrimeFiltration> polarize_filtration(
    const PrimeFiltration& filtration) {
  FiltrationReport report = verify(filtration);
  if (!report.valid)
    throw std::invalid_argument("polarize_filtration: input fails verification: " +
                                report.failure);
  std::vector<int> blocks(filtration.base().nvars(), 1);
  auto widen = [&blocks](const Monomial& g) {
    for (int i = 0; i < g.nvars(); ++i)
      blocks[i] = std::max(blocks[i], detail::exponent_as_block_size(g[i]));
  };
  for (const auto& g : filtration.base().generators()) widen(g);
  for (const auto& u : filtration.adjoined()) widen(u);
  PolarizedRing ring(filtration.base().ambient(), std::move(blocks));
  MonomialIdeal base = polarize_ideal(filtration.base(), ring);
  std::vector<Monomial> adjoined;
  for (const auto& u : filtration.adjoined()) adjoined.push_back(polarize_monomial(u, ring));
  return {ring, PrimeFiltration(std::move(base), std::move(adjoined))};
}

/// Decides cleanness. Squarefree ideals go through the Stanley-Reisner
/// complex and the shelling search; otherwise cleanness is equivalent to
/// being pretty clean with Ass = Min, and the pretty clean witness (whose
/// support is Ass) is already clean.
inline std::optional<PrimeFiltration> is_clean(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit())
    throw std::invalid_argument("is_clean: zero or unit ideal");
  if (ideal.is_squarefree()) {
    auto shelling = find_shelling(simplicial_from_squarefree(ideal));
    if (!shelling) return std::nullopt;
    return order_to_filtration(ideal, *shelling);
  }
  auto ass = associated_primes(ideal);
  auto min = minimal_primes(ideal);
  if (ass != min) return std::nullopt;
  return is_pretty_clean(ideal);
}

namespace detail {

inline void append_principal_staircase(const Monomial& u, std::vector<Monomial>& chain) {
  int n = u.nvars();
  auto factors = u.support();
  std::vector<Exponent> tail(u.exponents());
  for (size_t t = 0; t < factors.size(); ++t) {
    int var = factors[t];
    Exponent top = tail[var];
    if (top > 100000) throw std::overflow_error("staircase: filtration too long");
    for (Exponent e = top - 1; e >= 0; --e) {
      tail[var] = e;
      chain.push_back(Monomial(tail));
    }
  }
}

inline std::vector<Face> grouped_facet_order(const MonomialIdeal& saturated) {
  auto fs = facets(Multicomplex{saturated});
  for (const auto& a : fs)
    if (a.infinite_part().size() != 1)
      throw std::logic_error("grouped_facet_order: expected codimension-one facets");
  std::sort(fs.begin(), fs.end(), [](const Face& a, const Face& b) {
    auto ia = a.infinite_part(), ib = b.infinite_part();
    if (ia != ib) return ia < ib;
    return a < b;
  });
  return fs;
}

}  // namespace detail

/// Search-free pretty clean filtration for the constructive cases: ideals
/// in at most 3 variables, or of height >= n-1. Peels the saturation, then
/// either finishes (height n), walks the grouped facet boxes (height n-1),
/// or factors out the gcd and recurses (3 variables, height 1).
inline PrimeFiltration construct_pretty_clean_small(const MonomialIdeal& ideal) {
  int n = ideal.nvars();
  if (ideal.is_unit()) throw std::invalid_argument("construct_pretty_clean_small: unit ideal");
  if (!ideal.is_zero() && n > 3 && height(ideal) < n - 1)
    throw std::invalid_argument(
        "construct_pretty_clean_small: needs n <= 3 or height >= n-1");

  std::vector<Monomial> chain;
  MonomialIdeal work = ideal;
  if (work.is_zero()) {
    chain.push_back(Monomial::one(n));
    PrimeFiltration f(ideal, std::move(chain));
    return f;
  }

  auto extend_with = [&chain](const std::vector<Monomial>& more) {
    chain.insert(chain.end(), more.begin(), more.end());
    if (chain.size() > 200000)
      throw std::overflow_error("construct_pretty_clean_small: filtration too long");
  };

  // The saturation peel reduces to a saturated ideal; height-n ideals
  // saturate all the way to the unit ideal.
  extend_with(saturation_chain(work));
  work = saturation(work);

  if (!work.is_unit()) {
    int h = height(work);
    if (h >= n - 1) {
      auto order = detail::grouped_facet_order(work);
      extend_with(order_to_filtration(work, order).adjoined());
    } else {
      // n == 3, height 1: I = u*J with J of height >= 2.
      Monomial u = work.generators().front();
      for (const auto& g : work.generators()) u = gcd(u, g);
      if (u.is_one()) throw std::logic_error("construct_pretty_clean_small: expected a common factor");
      std::vector<Monomial> quotient_gens;
      for (const auto& g : work.generators()) quotient_gens.push_back(g / u);
      MonomialIdeal j_ideal(work.ambient(), std::move(quotient_gens));
      if (!j_ideal.is_unit()) {
        // u * (chain of J) runs from uJ up to u*S = (u); the last inner
        // step adjoins 1, so the last lifted step adjoins u itself.
        auto inner = construct_pretty_clean_small(j_ideal);
        std::vector<Monomial> lifted;
        for (const auto& v : inner.adjoined()) lifted.push_back(u * v);
        extend_with(lifted);
      }
      detail::append_principal_staircase(u, chain);
    }
  }

  PrimeFiltration result(ideal, std::move(chain));
  FiltrationReport report = verify(result);
  if (!report.valid || !report.is_pretty_clean())
    throw std::logic_error("construct_pretty_clean_small: construction failed: " +
                           report.failure);
  return result;
}

/// Checks the length-multiplicity bound: mult_I(P) never exceeds the number
/// of steps of F with quotient S/P.
inline bool mult_bound_check(const PrimeFiltration& filtration) {
  FiltrationReport report = verify(filtration);
  if (!report.valid) throw std::invalid_argument("mult_bound_check: invalid filtration");
  if (filtration.base().is_unit() || filtration.base().is_zero()) return true;
  auto facet_list = facets(Multicomplex{filtration.base()});
  for (const auto& p : associated_primes(filtration.base())) {
    long long in_support = std::count(report.support.begin(), report.support.end(), p);
    auto complement = p.complement();
    long long mult = std::count_if(facet_list.begin(), facet_list.end(), [&](const Face& a) {
      return a.infinite_part() == complement;
    });
    if (mult > in_support) return false;
  }
  return true;
}

}  // namespace monoclean
