#ifndef QCIRC_RESONANT_HPP
#define QCIRC_RESONANT_HPP

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "qcirc/poly.hpp"
#include "qcirc/sampling.hpp"
#include "qcirc/weights.hpp"

namespace qcirc {

/// sigma = id + g where each g_i is a sum of nonlinear i-th resonant
/// monomials (m . alpha == m_i, |alpha| >= 2).
///
/// Since m . alpha == m_i with |alpha| >= 2 forces every variable in alpha to
/// have weight strictly below m_i, g_i only involves coordinates of earlier
/// blocks and g vanishes on the first block. Construction always validates.
class TriangularResonantMap {
 public:
  /// Keyed by (1-based component index i, alpha).
  using Coefficients = std::map<std::pair<std::size_t, MultiIndex>, Rational>;

  static TriangularResonantMap identity(const WeightVector& m);
  /// Throws NotResonant, NotNonlinear, IndexOutOfRange or DimensionMismatch.
  static TriangularResonantMap from_parts(const WeightVector& m, std::vector<Polynomial> g);

  const WeightVector& weights() const noexcept { return m_; }
  std::size_t dimension() const noexcept { return m_.size(); }
  /// Nonlinear part g_{k+1} for the 0-based position k.
  const Polynomial& nonlinear_part(std::size_t k) const { return g_[k]; }
  const std::vector<Polynomial>& nonlinear_parts() const noexcept { return g_; }
  bool is_identity() const;

  /// sigma as a polynomial map z -> z + g(z).
  PolyMap as_map() const;

  friend bool operator==(const TriangularResonantMap&, const TriangularResonantMap&) = default;

 private:
  TriangularResonantMap(WeightVector m, std::vector<Polynomial> g)
      : m_(std::move(m)), g_(std::move(g)) {}

  WeightVector m_;
  std::vector<Polynomial> g_;
};

TriangularResonantMap make_sigma(const WeightVector& m,
                                 const TriangularResonantMap::Coefficients& coeffs);

/// {alpha in E_i : |alpha| >= 2}, lexicographically ascending.
std::vector<MultiIndex> nonlinear_resonant_monomials(const WeightVector& m, std::size_t i);

/// Every admissible monomial gets an independent draw from the pool; the
/// result is a pure function of (m, seed, pool). Throws EmptyPool.
TriangularResonantMap random_sigma(const WeightVector& m, std::uint64_t seed,
                                   std::span<const Rational> pool);

/// Closed-form inverse tau = id + h with
/// h_i(zeta) = -g_i(tau_1(zeta), ..., tau_{i-1}(zeta), 0, ..., 0).
TriangularResonantMap invert_sigma(const TriangularResonantMap& s);

/// a o b. Throws WeightMismatch.
TriangularResonantMap compose_sigma(const TriangularResonantMap& a, const TriangularResonantMap& b);

}  // namespace qcirc

#endif  // QCIRC_RESONANT_HPP
