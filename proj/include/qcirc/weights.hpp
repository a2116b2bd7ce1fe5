#ifndef QCIRC_WEIGHTS_HPP
#define QCIRC_WEIGHTS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "qcirc/numeric.hpp"

namespace qcirc {

using Exponent = std::uint32_t;

class WeightVector;

/// Exponent vector alpha in N^n. Ordered lexicographically.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : alpha_(n, 0) {}
  explicit MultiIndex(std::vector<Exponent> alpha) : alpha_(std::move(alpha)) {}
  MultiIndex(std::initializer_list<Exponent> alpha) : alpha_(alpha) {}

  /// e_j for 0-based position j.
  static MultiIndex unit(std::size_t n, std::size_t j);

  std::size_t size() const noexcept { return alpha_.size(); }
  Exponent operator[](std::size_t j) const { return alpha_[j]; }
  Exponent& operator[](std::size_t j) { return alpha_[j]; }
  std::span<const Exponent> exponents() const noexcept { return alpha_; }
  auto begin() const noexcept { return alpha_.begin(); }
  auto end() const noexcept { return alpha_.end(); }

  /// |alpha|.
  std::uint64_t degree() const noexcept;
  /// m . alpha.
  Integer weighted_degree(const WeightVector& m) const;
  bool is_zero() const noexcept { return degree() == 0; }

  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<Exponent> alpha_;
};

std::ostream& operator<<(std::ostream& os, const MultiIndex& alpha);

/// A validated weight tuple: n >= 1, every entry >= 1, nondecreasing, gcd 1.
class WeightVector {
 public:
  /// Throws EmptyWeightVector, NonPositiveWeight, Unsorted or NotCoprime.
  static WeightVector create(std::vector<Integer> raw);
  static WeightVector create(std::initializer_list<long> raw);

  std::size_t size() const noexcept { return m_.size(); }
  /// 0-based access.
  const Integer& operator[](std::size_t j) const { return m_[j]; }
  const std::vector<Integer>& values() const noexcept { return m_; }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  explicit WeightVector(std::vector<Integer> m) : m_(std::move(m)) {}
  std::vector<Integer> m_;
};

std::ostream& operator<<(std::ostream& os, const WeightVector& m);

/// Sorted, gcd-reduced weights together with the permutation used:
/// weights[k] == raw[permutation[k]] / gcd(raw).
struct Canonicalized {
  WeightVector weights;
  std::vector<std::size_t> permutation;
};

/// Explicit normalization for callers holding arbitrary positive weights.
/// Throws EmptyWeightVector or NonPositiveWeight.
Canonicalized canonicalize(std::vector<Integer> raw);

/// Boundaries 0 = k_0 < k_1 < ... < k_l = n of the maximal equal-weight runs.
class BlockPartition {
 public:
  explicit BlockPartition(std::vector<std::size_t> boundaries);

  const std::vector<std::size_t>& boundaries() const noexcept { return boundaries_; }
  std::size_t block_count() const noexcept { return boundaries_.size() - 1; }
  std::size_t dimension() const noexcept { return boundaries_.back(); }
  /// 0-based block containing the 0-based coordinate j.
  std::size_t block_of(std::size_t j) const;
  std::size_t block_begin(std::size_t p) const { return boundaries_[p]; }
  std::size_t block_end(std::size_t p) const { return boundaries_[p + 1]; }

  friend bool operator==(const BlockPartition&, const BlockPartition&) = default;

 private:
  std::vector<std::size_t> boundaries_;
};

BlockPartition block_partition(const WeightVector& m);

/// All alpha in N^n with m . alpha == target, lexicographically ascending.
/// Negative targets give the empty set.
std::vector<MultiIndex> enumerate_weighted(const WeightVector& m, const Integer& target);

/// Throws IndexOutOfRange unless 1 <= i <= n.
void require_index(const WeightVector& m, std::size_t i);

/// E_i for the 1-based index i. Throws IndexOutOfRange.
std::vector<MultiIndex> resonance_set(const WeightVector& m, std::size_t i);

struct ResonanceProfile {
  std::vector<std::vector<MultiIndex>> sets;  // E_1 ... E_n
  std::vector<std::uint64_t> orders;          // mu_1 ... mu_n
  std::uint64_t order = 0;                    // mu
};

ResonanceProfile resonance_profile(const WeightVector& m);

}  // namespace qcirc

#endif  // QCIRC_WEIGHTS_HPP
