#pragma once

#include <map>

#include "monoclean/monomial.hpp"

namespace monoclean {

/// Sparse integer polynomial in t: degree -> coefficient, zeros erased.
using Poly = std::map<Exponent, Exponent>;

inline void poly_add_term(Poly& p, const Exponent& degree, const Exponent& coeff) {
  if (coeff == 0) return;
  auto it = p.find(degree);
  if (it == p.end()) {
    p.emplace(degree, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) p.erase(it);
}

inline Poly poly_add(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [d, c] : b) poly_add_term(r, d, c);
  return r;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [da, ca] : a)
    for (const auto& [db, cb] : b) poly_add_term(r, da + db, ca * cb);
  return r;
}

inline Exponent poly_eval_one(const Poly& p) {
  Exponent s = 0;
  for (const auto& [d, c] : p) s += c;
  return s;
}

inline Poly poly_one_minus_t_power(int k) {
  Poly r{{0, 1}};
  Poly base{{0, 1}, {1, -1}};
  for (int i = 0; i < k; ++i) r = poly_mul(r, base);
  return r;
}

/// Exact division by (1 - t); requires p(1) == 0.
inline Poly poly_div_one_minus_t(const Poly& p) {
  if (poly_eval_one(p) != 0)
    throw std::invalid_argument("poly_div_one_minus_t: (1-t) does not divide");
  // q_k = sum_{j<=k} p_j; the prefix sums are constant between terms of p.
  Poly q;
  Exponent running = 0;
  auto it = p.begin();
  while (it != p.end()) {
    Exponent degree = it->first;
    running += it->second;
    ++it;
    if (running == 0) continue;
    Exponent until = (it == p.end()) ? degree : it->first - 1;
    for (Exponent d = degree; d <= until; ++d) q[d] = running;
  }
  return q;
}

/// Exact rational function numerator / (1-t)^denominator_power.
struct HilbertSeries {
  Poly numerator;
  int denominator_power = 0;

  /// Canonical form: all common (1-t) factors cancelled, so the numerator
  /// does not vanish at 1 (the zero series reduces to 0 / (1-t)^0).
  HilbertSeries reduced() const {
    HilbertSeries r = *this;
    if (r.numerator.empty()) {
      r.denominator_power = 0;
      return r;
    }
    while (r.denominator_power > 0 && poly_eval_one(r.numerator) == 0) {
      r.numerator = poly_div_one_minus_t(r.numerator);
      --r.denominator_power;
    }
    return r;
  }

  /// Equality as rational functions, by cross-multiplying with (1-t) powers.
  bool equals(const HilbertSeries& other) const {
    const HilbertSeries* lo = this;
    const HilbertSeries* hi = &other;
    if (lo->denominator_power > hi->denominator_power) std::swap(lo, hi);
    Poly lifted = poly_mul(lo->numerator,
                           poly_one_minus_t_power(hi->denominator_power - lo->denominator_power));
    return lifted == hi->numerator;
  }

  /// Taylor coefficients [t^0..t^maxdeg]; degrees must fit in long long.
  std::vector<Exponent> coefficients_upto(long long maxdeg) const {
    std::vector<Exponent> num(maxdeg + 1, 0);
    for (const auto& [d, c] : numerator)
      if (d <= maxdeg) num[static_cast<long long>(d)] = c;
    // Multiply by 1/(1-t)^k: k-fold prefix sums.
    for (int k = 0; k < denominator_power; ++k)
      for (long long i = 1; i <= maxdeg; ++i) num[i] += num[i - 1];
    return num;
  }
};

}  // namespace monoclean
