#pragma once

#include <optional>
#include <unordered_set>

#include "monoclean/filtration.hpp"

namespace monoclean {

/// A Stanley space u*K[Z]: a monomial times a polynomial subring on the
/// variables Z. Its dimension is |Z|.
struct StanleySpace {
  Monomial u;
  std::vector<int> zvars;  // sorted variable indices

  bool operator==(const StanleySpace& other) const {
    return u == other.u && zvars == other.zvars;
  }
  bool operator<(const StanleySpace& other) const {
    if (u != other.u) return u < other.u;
    return zvars < other.zvars;
  }
};

/// A candidate decomposition of S/I into Stanley spaces.
struct StanleyDecomposition {
  MonomialIdeal ideal;
  std::vector<StanleySpace> spaces;
};

/// One space per filtration step: the adjoined monomial paired with the
/// complement of the quotient prime.
inline StanleyDecomposition from_filtration(const PrimeFiltration& filtration) {
  FiltrationReport report = verify(filtration);
  if (!report.valid)
    throw std::invalid_argument("from_filtration: invalid filtration: " + report.failure);
  StanleyDecomposition decomposition;
  decomposition.ideal = filtration.base();
  for (int i = 0; i < filtration.length(); ++i)
    decomposition.spaces.push_back(
        StanleySpace{filtration.adjoined()[i], report.support[i].complement()});
  return decomposition;
}

inline HilbertSeries hilbert_of_space(const StanleySpace& space, int nvars) {
  Poly numerator;
  poly_add_term(numerator, space.u.total_degree(), 1);
  int extra = nvars - static_cast<int>(space.zvars.size());
  return HilbertSeries{poly_mul(numerator, poly_one_minus_t_power(extra)), nvars};
}

/// Sum of t^deg(u_i)/(1-t)^|Z_i| over a common denominator (1-t)^n.
inline HilbertSeries hilbert_of_decomposition(const StanleyDecomposition& decomposition) {
  int n = decomposition.ideal.nvars();
  HilbertSeries total{Poly{}, n};
  for (const auto& space : decomposition.spaces)
    total.numerator = poly_add(total.numerator, hilbert_of_space(space, n).numerator);
  return total;
}

namespace detail {

inline bool supported_on(const Monomial& m, const std::vector<int>& zvars) {
  for (int i : m.support())
    if (!std::binary_search(zvars.begin(), zvars.end(), i)) return false;
  return true;
}

}  // namespace detail

/// Exact validity: each space avoids the ideal, spaces are pairwise
/// disjoint, and the Hilbert series add up to the quotient's.
inline bool verify_decomposition(const StanleyDecomposition& decomposition) {
  const MonomialIdeal& ideal = decomposition.ideal;
  for (const auto& space : decomposition.spaces) {
    if (space.u.nvars() != ideal.nvars())
      throw std::invalid_argument("verify_decomposition: ambient mismatch");
    // u*K[Z] misses I iff no generator of I : u lives inside K[Z].
    MonomialIdeal quotient = colon(ideal, space.u);
    for (const auto& g : quotient.generators())
      if (detail::supported_on(g, space.zvars)) return false;
  }
  for (size_t i = 0; i < decomposition.spaces.size(); ++i)
    for (size_t j = i + 1; j < decomposition.spaces.size(); ++j) {
      const auto& a = decomposition.spaces[i];
      const auto& b = decomposition.spaces[j];
      Monomial l = lcm(a.u, b.u);
      if (detail::supported_on(l / a.u, a.zvars) && detail::supported_on(l / b.u, b.zvars))
        return false;  // the lcm is a common member
    }
  return hilbert_of_decomposition(decomposition).equals(hilbert_series(ideal));
}

/// The monomials of the saturation modulo I; each must appear in every
/// decomposition of S/I as a zero-dimensional space.
inline std::vector<Monomial> forced_zero_spaces(const MonomialIdeal& ideal) {
  return monomials_between(saturation(ideal), ideal);
}

namespace detail {

/// A space extends the chain at ideal J iff J + u*K[Z] = (J, u) as monomial
/// sets, i.e. J : u is the prime on the complement of Z.
inline bool legal_extension(const MonomialIdeal& current, const StanleySpace& space) {
  if (current.contains(space.u)) return false;
  auto prime = is_prime(colon(current, space.u));
  if (!prime) return false;
  return prime->complement() == space.zvars;
}

}  // namespace detail

/// Searches for an ordering of the spaces making every partial sum
/// I + T_1 + ... + T_k a monomial ideal; full backtracking with
/// memoization on the set of used spaces. Returns indices into `spaces`.
inline std::optional<std::vector<int>> corresponds_to_filtration(
    const StanleyDecomposition& decomposition) {
  int r = static_cast<int>(decomposition.spaces.size());
  if (r > 63) throw std::invalid_argument("corresponds_to_filtration: too many spaces");
  std::unordered_set<std::uint64_t> dead;
  std::vector<int> order;
  MonomialIdeal current = decomposition.ideal;

  auto dfs = [&](auto&& self, std::uint64_t mask) -> bool {
    if (static_cast<int>(order.size()) == r) return current.is_unit();
    if (dead.count(mask)) return false;
    for (int i = 0; i < r; ++i) {
      if (mask & (std::uint64_t(1) << i)) continue;
      const StanleySpace& space = decomposition.spaces[i];
      if (!detail::legal_extension(current, space)) continue;
      MonomialIdeal saved = current;
      order.push_back(i);
      current = add_generator(current, space.u);
      if (self(self, mask | (std::uint64_t(1) << i))) return true;
      order.pop_back();
      current = std::move(saved);
    }
    dead.insert(mask);
    return false;
  };

  if (!dfs(dfs, 0)) return std::nullopt;
  return order;
}

/// Constructive ordering in two variables, following the peeling argument:
/// forced zero-dimensional spaces first, then repeatedly a boundary space
/// x^(a-1)y^g K[y] or x^t y^(b-1) K[x] with its trailing zero-dimensional
/// companions, shrinking the principal ideal. Never fails on valid input.
inline std::vector<int> order_in_two_vars(const StanleyDecomposition& decomposition) {
  const MonomialIdeal& ideal = decomposition.ideal;
  if (ideal.nvars() != 2) throw std::invalid_argument("order_in_two_vars: need two variables");

  std::vector<bool> used(decomposition.spaces.size(), false);
  std::vector<int> order;
  auto take = [&](const StanleySpace& wanted) {
    for (size_t i = 0; i < decomposition.spaces.size(); ++i)
      if (!used[i] && decomposition.spaces[i] == wanted) {
        used[i] = true;
        order.push_back(static_cast<int>(i));
        return;
      }
    throw std::invalid_argument("order_in_two_vars: decomposition is missing a forced space");
  };

  for (const auto& v : saturation_chain(ideal)) take(StanleySpace{v, {}});

  MonomialIdeal current = saturation(ideal);
  if (current.is_zero()) {
    take(StanleySpace{Monomial::one(2), {0, 1}});
    current = MonomialIdeal::unit(ideal.ambient());
  }
  while (!current.is_unit()) {
    // current = (x^alpha y^beta)
    if (current.num_generators() != 1)
      throw std::invalid_argument("order_in_two_vars: saturated ideal is not principal");
    Monomial gen = current.generators().front();
    Exponent alpha = gen[0], beta = gen[1];
    std::optional<StanleySpace> found;
    for (size_t i = 0; i < decomposition.spaces.size(); ++i) {
      const auto& space = decomposition.spaces[i];
      if (used[i]) continue;
      if (alpha > 0 && space.zvars == std::vector<int>{1} && space.u[0] == alpha - 1 &&
          space.u[1] >= beta) {
        if (!found || space.u[1] < found->u[1]) found = space;
      }
    }
    if (!found) {
      for (size_t i = 0; i < decomposition.spaces.size(); ++i) {
        const auto& space = decomposition.spaces[i];
        if (used[i]) continue;
        if (beta > 0 && space.zvars == std::vector<int>{0} && space.u[1] == beta - 1 &&
            space.u[0] >= alpha) {
          if (!found || space.u[0] < found->u[0]) found = space;
        }
      }
      if (!found)
        throw std::invalid_argument("order_in_two_vars: no boundary space available");
      take(*found);
      // companions x^{t-1}y^{b-1}, ..., x^{alpha}y^{b-1}
      for (Exponent t = found->u[0] - 1; t >= alpha; --t)
        take(StanleySpace{Monomial({t, beta - 1}), {}});
      current = MonomialIdeal(ideal.ambient(), {Monomial({alpha, beta - 1})});
    } else {
      take(*found);
      for (Exponent g = found->u[1] - 1; g >= beta; --g)
        take(StanleySpace{Monomial({alpha - 1, g}), {}});
      current = MonomialIdeal(ideal.ambient(), {Monomial({alpha - 1, beta})});
    }
  }
  if (order.size() != decomposition.spaces.size())
    throw std::invalid_argument("order_in_two_vars: spaces left over");
  return order;
}

inline int stanley_depth(const StanleyDecomposition& decomposition) {
  if (decomposition.spaces.empty())
    throw std::invalid_argument("stanley_depth: empty decomposition");
  int d = decomposition.ideal.nvars();
  for (const auto& space : decomposition.spaces)
    d = std::min(d, static_cast<int>(space.zvars.size()));
  return d;
}

struct ConjectureReport {
  int depth = 0;
  std::optional<int> stanley_depth;  // of the pretty clean witness, when one exists
  bool known = false;
  bool satisfied = false;
};

/// Builds a witness decomposition from a pretty clean filtration when one
/// exists; such a decomposition meets the depth bound. Reports unknown
/// otherwise.
inline ConjectureReport check_conjecture(const MonomialIdeal& ideal) {
  ConjectureReport report;
  report.depth = depth(ideal);
  auto witness = is_pretty_clean(ideal);
  if (!witness) return report;
  auto decomposition = from_filtration(*witness);
  report.stanley_depth = stanley_depth(decomposition);
  report.known = true;
  report.satisfied = *report.stanley_depth >= report.depth;
  return report;
}

}  // namespace monoclean
