#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace monoclean {

// Exponents are arbitrary-precision so stress inputs never overflow.
using Exponent = boost::multiprecision::cpp_int;

/// Ordered list of distinct variable names; fixes the ambient ring
/// K[x_1,...,x_n] every other object lives in.
class VariableSet {
 public:
  VariableSet() = default;

  explicit VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw std::invalid_argument("VariableSet: need at least one variable");
    auto sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("VariableSet: duplicate variable name");
  }

  static VariableSet numbered(int n, const std::string& prefix = "x") {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
    return VariableSet(std::move(names));
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  int index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
      if (names_[i] == name) return i;
    return -1;
  }

  bool operator==(const VariableSet& other) const { return names_ == other.names_; }
  bool operator!=(const VariableSet& other) const { return !(*this == other); }

 private:
  std::vector<std::string> names_;
};

/// A monomial as its exponent vector; the all-zero vector is 1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents) : exp_(std::move(exponents)) {
    for (const auto& e : exp_)
      if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
  }

  static Monomial one(int nvars) { return Monomial(std::vector<Exponent>(nvars, 0)); }

  static Monomial variable(int i, int nvars, const Exponent& power = 1) {
    std::vector<Exponent> e(nvars, 0);
    e.at(i) = power;
    return Monomial(std::move(e));
  }

  int nvars() const { return static_cast<int>(exp_.size()); }
  const Exponent& operator[](int i) const { return exp_.at(i); }
  const std::vector<Exponent>& exponents() const { return exp_; }

  Exponent total_degree() const {
    Exponent d = 0;
    for (const auto& e : exp_) d += e;
    return d;
  }

  bool is_one() const {
    return std::all_of(exp_.begin(), exp_.end(), [](const Exponent& e) { return e == 0; });
  }

  bool is_squarefree() const {
    return std::all_of(exp_.begin(), exp_.end(), [](const Exponent& e) { return e <= 1; });
  }

  std::vector<int> support() const {
    std::vector<int> s;
    for (int i = 0; i < nvars(); ++i)
      if (exp_[i] > 0) s.push_back(i);
    return s;
  }

  /// The index i with this == x_i, if the monomial has degree one.
  std::optional<int> degree_one_variable() const {
    std::optional<int> found;
    for (int i = 0; i < nvars(); ++i) {
      if (exp_[i] == 0) continue;
      if (exp_[i] > 1 || found) return std::nullopt;
      found = i;
    }
    return found;
  }

  bool divides(const Monomial& other) const {
    check_same_vars(other);
    for (int i = 0; i < nvars(); ++i)
      if (exp_[i] > other.exp_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& other) const {
    check_same_vars(other);
    std::vector<Exponent> e(exp_);
    for (int i = 0; i < nvars(); ++i) e[i] += other.exp_[i];
    return Monomial(std::move(e));
  }

  /// Exact quotient; requires other | this.
  Monomial operator/(const Monomial& other) const {
    check_same_vars(other);
    std::vector<Exponent> e(exp_);
    for (int i = 0; i < nvars(); ++i) {
      if (other.exp_[i] > e[i]) throw std::invalid_argument("Monomial: quotient is not exact");
      e[i] -= other.exp_[i];
    }
    return Monomial(std::move(e));
  }

  bool operator==(const Monomial& other) const { return exp_ == other.exp_; }
  bool operator!=(const Monomial& other) const { return exp_ != other.exp_; }

  /// Canonical order: lexicographic on exponent vectors.
  bool operator<(const Monomial& other) const {
    check_same_vars(other);
    return std::lexicographical_compare(exp_.begin(), exp_.end(), other.exp_.begin(),
                                        other.exp_.end());
  }

 private:
  void check_same_vars(const Monomial& other) const {
    if (nvars() != other.nvars()) throw std::invalid_argument("Monomial: ambient mismatch");
  }

  std::vector<Exponent> exp_;
};

inline Monomial lcm(const Monomial& u, const Monomial& v) {
  if (u.nvars() != v.nvars()) throw std::invalid_argument("lcm: ambient mismatch");
  std::vector<Exponent> e(u.nvars());
  for (int i = 0; i < u.nvars(); ++i) e[i] = std::max(u[i], v[i]);
  return Monomial(std::move(e));
}

inline Monomial gcd(const Monomial& u, const Monomial& v) {
  if (u.nvars() != v.nvars()) throw std::invalid_argument("gcd: ambient mismatch");
  std::vector<Exponent> e(u.nvars());
  for (int i = 0; i < u.nvars(); ++i) e[i] = std::min(u[i], v[i]);
  return Monomial(std::move(e));
}

}  // namespace monoclean
