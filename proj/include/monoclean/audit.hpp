#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monoclean/io.hpp"

namespace monoclean {

/// splitmix64: deterministic across platforms, unlike the standard
/// distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform-ish value in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

/// A random proper nonzero monomial ideal.
inline MonomialIdeal random_ideal(Rng& rng, const VariableSet& vars, int max_exponent,
                                  int max_generators) {
  int n = vars.size();
  std::vector<Monomial> gens;
  int count = 1 + static_cast<int>(rng.below(max_generators));
  for (int k = 0; k < count; ++k) {
    std::vector<Exponent> e(n, 0);
    for (;;) {
      Exponent total = 0;
      for (int i = 0; i < n; ++i) {
        e[i] = static_cast<long long>(rng.below(max_exponent + 1));
        total += e[i];
      }
      if (total > 0) break;
    }
    gens.push_back(Monomial(e));
  }
  return MonomialIdeal(vars, std::move(gens));
}

inline Monomial random_monomial_within_blocks(Rng& rng, const PolarizedRing& ring) {
  std::vector<Exponent> e(ring.source().size());
  for (int i = 0; i < ring.source().size(); ++i)
    e[i] = static_cast<long long>(rng.below(ring.block_size(i) + 1));
  return Monomial(std::move(e));
}

struct AuditResult {
  long long checked = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Invariant suite over random instances: polarization transfer, facet and
/// arithmetic-degree identities, filtration length bounds and, in up to
/// three variables, the pretty-clean pipeline end to end.
inline AuditResult random_audit(std::uint64_t seed, int nvars, int max_exponent, long long count) {
  Rng rng(seed);
  VariableSet vars = VariableSet::numbered(nvars);
  AuditResult result;

  auto report = [&result](const std::string& what, const MonomialIdeal& ideal) {
    result.violations.push_back(what + " for ideal [" + format_ideal(ideal) + "]");
  };

  for (long long iteration = 0; iteration < count; ++iteration) {
    MonomialIdeal ideal = random_ideal(rng, vars, max_exponent, 6);
    ++result.checked;

    auto [ring, polarized] = polarize_ideal(ideal);

    // pi(I^p) = I
    if (specialize(ring, polarized) != ideal) report("specialize(polarize(I)) != I", ideal);

    // Colon-primality transfer and support correspondence under pi.
    Monomial u = random_monomial_within_blocks(rng, ring);
    auto downstairs = is_prime(colon(ideal, u));
    auto upstairs = is_prime(colon(polarized, polarize_monomial(u, ring)));
    if (downstairs.has_value() != upstairs.has_value()) {
      report("colon primality transfer mismatch at u=" + format_monomial(u, vars), ideal);
    } else if (downstairs) {
      MonomialIdeal specialized =
          specialize(ring, prime_to_ideal(*upstairs, ring.target()));
      if (specialized != prime_to_ideal(*downstairs, vars))
        report("colon prime support does not specialize correctly", ideal);
    }
    if (upstairs) {
      // At most one variable per block.
      std::vector<bool> seen(nvars, false);
      for (int t : upstairs->vars()) {
        int i = ring.block_of(t).first;
        if (seen[i]) report("prime colon upstairs uses a block twice", ideal);
        seen[i] = true;
      }
    }

    // (I ∩ J)^p = I^p ∩ J^p in a common extension.
    MonomialIdeal other = random_ideal(rng, vars, max_exponent, 4);
    MonomialIdeal meet = intersect(ideal, other);
    if (!meet.is_zero()) {
      PolarizedRing big = common_extension(common_extension(polarization_ring_for(ideal),
                                                            polarization_ring_for(other)),
                                           polarization_ring_for(meet));
      if (polarize_ideal(meet, big) !=
          intersect(polarize_ideal(ideal, big), polarize_ideal(other, big)))
        report("(I cap J)^p != I^p cap J^p against [" + format_ideal(other) + "]", ideal);
    }

    // Facet bijection and arithmetic degree transfer.
    long long facet_count = static_cast<long long>(facets(Multicomplex{ideal}).size());
    if (facet_count != static_cast<long long>(minimal_primes(polarized).size()))
      report("|F(Gamma)| != |Min(I^p)|", ideal);
    if (facet_count != adeg(polarized)) report("adeg(I) != adeg(I^p)", ideal);

    long long degree = facet_count;
    long long total_mult = 0;
    for (const auto& p : associated_primes(ideal)) total_mult += mult_length(ideal, p);
    if (total_mult != degree) report("sum of length multiplicities != adeg", ideal);

    if (nvars <= 3) {
      auto witness = is_pretty_clean(ideal);
      if (!witness) {
        report("ideal in <= 3 variables without pretty clean filtration", ideal);
        continue;
      }
      FiltrationReport filtration_report = verify(*witness);
      if (!filtration_report.valid || !filtration_report.is_pretty_clean()) {
        report("pretty clean witness fails verification", ideal);
        continue;
      }
      if (witness->length() != degree)
        report("pretty clean witness length != adeg", ideal);
      if (!filtration_report.supp_equals_ass)
        report("pretty clean witness support != Ass", ideal);
      if (!mult_bound_check(*witness)) report("length multiplicity bound fails", ideal);
      if (!filtration_report.mu_nonincreasing)
        report("pretty clean witness has increasing mu", ideal);

      auto decomposition = from_filtration(*witness);
      if (!verify_decomposition(decomposition))
        report("decomposition from witness fails verification", ideal);
      auto conjecture = check_conjecture(ideal);
      if (!conjecture.known || !conjecture.satisfied)
        report("depth conjecture check failed", ideal);
    }
  }
  return result;
}

}  // namespace monoclean
