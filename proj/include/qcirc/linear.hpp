#ifndef QCIRC_LINEAR_HPP
#define QCIRC_LINEAR_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include "qcirc/numeric.hpp"

namespace qcirc {

/// Square n x n matrix of exact rationals acting on column vectors z^t.
class LinearMap {
 public:
  /// Row-major entries; throws DimensionMismatch unless entries.size() == n * n.
  LinearMap(std::size_t n, std::vector<Rational> entries);
  /// Throws DimensionMismatch on ragged or non-square input.
  static LinearMap from_rows(const std::vector<std::vector<Rational>>& rows);
  static LinearMap identity(std::size_t n);
  static LinearMap diagonal(const std::vector<Rational>& d);

  std::size_t dimension() const noexcept { return n_; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const std::vector<Rational>& entries() const noexcept { return a_; }

  Rational determinant() const;
  bool is_invertible() const { return determinant() != 0; }
  /// Throws SingularLinearMap.
  LinearMap inverse() const;

  friend LinearMap operator*(const LinearMap& a, const LinearMap& b);
  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }

 private:
  std::size_t n_;
  std::vector<Rational> a_;
};

std::ostream& operator<<(std::ostream& os, const LinearMap& map);

/// Solves A x = b exactly by fraction-free (Bareiss) elimination. Rows are
/// scaled to integers first, so every elimination step is an exact integer
/// division. Free variables are set to zero. Returns nullopt when the system
/// is inconsistent.
std::optional<std::vector<Rational>> solve_exact(const std::vector<std::vector<Rational>>& a,
                                                 const std::vector<Rational>& b);

/// Rank of A, computed with the same fraction-free elimination.
std::size_t rank_exact(const std::vector<std::vector<Rational>>& a);

}  // namespace qcirc

#endif  // QCIRC_LINEAR_HPP
