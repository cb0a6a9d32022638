#pragma once

#include <string>
#include <utility>
#include <vector>

#include "monoclean/ideal.hpp"

namespace monoclean {

/// The target ring K[x_{ij}] of a polarization: one block of r_i variables
/// per source variable, ordered (1,1),(1,2),...,(n,r_n). Block variable
/// (i,j) specializes to source variable i.
class PolarizedRing {
 public:
  PolarizedRing() = default;

  PolarizedRing(VariableSet source, std::vector<int> block_sizes)
      : source_(std::move(source)), blocks_(std::move(block_sizes)) {
    if (static_cast<int>(blocks_.size()) != source_.size())
      throw std::invalid_argument("PolarizedRing: one block size per source variable");
    std::vector<std::string> names;
    offsets_.reserve(blocks_.size());
    for (int i = 0; i < source_.size(); ++i) {
      if (blocks_[i] < 1) throw std::invalid_argument("PolarizedRing: block sizes must be >= 1");
      offsets_.push_back(static_cast<int>(names.size()));
      for (int j = 1; j <= blocks_[i]; ++j)
        names.push_back(source_.name(i) + "_" + std::to_string(j));
    }
    target_ = VariableSet(std::move(names));
  }

  const VariableSet& source() const { return source_; }
  const VariableSet& target() const { return target_; }
  const std::vector<int>& block_sizes() const { return blocks_; }
  int block_size(int i) const { return blocks_.at(i); }

  /// Target index of block variable (i, j), with 1 <= j <= r_i.
  int target_index(int i, int j) const {
    if (j < 1 || j > blocks_.at(i)) throw std::invalid_argument("PolarizedRing: bad block slot");
    return offsets_[i] + (j - 1);
  }

  /// Inverse of target_index: (source variable, slot).
  std::pair<int, int> block_of(int target_index) const {
    if (target_index < 0 || target_index >= target_.size())
      throw std::invalid_argument("PolarizedRing: target index out of range");
    int i = static_cast<int>(std::upper_bound(offsets_.begin(), offsets_.end(), target_index) -
                             offsets_.begin()) - 1;
    return {i, target_index - offsets_[i] + 1};
  }

  bool operator==(const PolarizedRing& other) const {
    return source_ == other.source_ && blocks_ == other.blocks_;
  }

 private:
  VariableSet source_;
  std::vector<int> blocks_;
  std::vector<int> offsets_;
  VariableSet target_;
};

/// The map pi: T -> S, x_{ij} -> x_i, attached to a polarization.
struct SpecializationMap {
  PolarizedRing ring;
};

namespace detail {

inline int exponent_as_block_size(const Exponent& e) {
  // Polarization materializes one target variable per unit of exponent, so
  // oversized exponents cannot be polarized at all.
  if (e > 1000000) throw std::overflow_error("polarization: exponent too large to polarize");
  return static_cast<int>(e);
}

}  // namespace detail

/// Per-variable max exponent over the minimal generators (1 for unused vars).
inline PolarizedRing polarization_ring_for(const MonomialIdeal& ideal) {
  std::vector<int> blocks(ideal.nvars(), 1);
  for (const auto& g : ideal.generators())
    for (int i = 0; i < ideal.nvars(); ++i)
      blocks[i] = std::max(blocks[i], detail::exponent_as_block_size(g[i]));
  return PolarizedRing(ideal.ambient(), std::move(blocks));
}

/// Componentwise-max common extension of two rings over the same source.
inline PolarizedRing common_extension(const PolarizedRing& a, const PolarizedRing& b) {
  if (a.source() != b.source())
    throw std::invalid_argument("common_extension: different source rings");
  std::vector<int> blocks(a.block_sizes());
  for (size_t i = 0; i < blocks.size(); ++i) blocks[i] = std::max(blocks[i], b.block_size(static_cast<int>(i)));
  return PolarizedRing(a.source(), std::move(blocks));
}

/// u^p = prod_i prod_{j<=a_i} x_{ij}; squarefree, and specializes back to u.
inline Monomial polarize_monomial(const Monomial& u, const PolarizedRing& ring) {
  if (u.nvars() != ring.source().size())
    throw std::invalid_argument("polarize_monomial: ambient mismatch");
  std::vector<Exponent> e(ring.target().size(), 0);
  for (int i = 0; i < u.nvars(); ++i) {
    if (u[i] > ring.block_size(i))
      throw std::invalid_argument("polarize_monomial: exponent exceeds block size");
    int a = detail::exponent_as_block_size(u[i]);
    for (int j = 1; j <= a; ++j) e[ring.target_index(i, j)] = 1;
  }
  return Monomial(std::move(e));
}

inline MonomialIdeal polarize_ideal(const MonomialIdeal& ideal, const PolarizedRing& ring) {
  if (ideal.is_zero()) throw std::invalid_argument("polarize_ideal: zero ideal");
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(polarize_monomial(g, ring));
  return MonomialIdeal(ring.target(), std::move(gens));
}

inline std::pair<PolarizedRing, MonomialIdeal> polarize_ideal(const MonomialIdeal& ideal) {
  PolarizedRing ring = polarization_ring_for(ideal);
  return {ring, polarize_ideal(ideal, ring)};
}

/// pi(v): the exponent of x_i is the sum over the i-th block.
inline Monomial specialize(const PolarizedRing& ring, const Monomial& v) {
  if (v.nvars() != ring.target().size())
    throw std::invalid_argument("specialize: ambient mismatch");
  std::vector<Exponent> e(ring.source().size(), 0);
  for (int t = 0; t < v.nvars(); ++t) e[ring.block_of(t).first] += v[t];
  return Monomial(std::move(e));
}

inline MonomialIdeal specialize(const PolarizedRing& ring, const MonomialIdeal& ideal) {
  if (ideal.ambient() != ring.target())
    throw std::invalid_argument("specialize: ambient mismatch");
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(specialize(ring, g));
  return MonomialIdeal(ring.source(), std::move(gens));
}

inline Monomial specialize(const SpecializationMap& map, const Monomial& v) {
  return specialize(map.ring, v);
}

inline MonomialIdeal specialize(const SpecializationMap& map, const MonomialIdeal& ideal) {
  return specialize(map.ring, ideal);
}

}  // namespace monoclean
