#ifndef QCIRC_BERGMAN_HPP
#define QCIRC_BERGMAN_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "qcirc/poly.hpp"
#include "qcirc/resonant.hpp"
#include "qcirc/weights.hpp"

namespace qcirc {

// Support constraints on the Bergman metric tensor T_D(z, 0) of a
// quasi-circular domain. Circle invariance forces the coefficient of z^alpha
// in entry (i, j) to vanish unless m . alpha == m_i - m_j, equivalently
// alpha + e_j in E_i. Only these patterns are computed here; the tensor values
// themselves depend on the domain.

/// {alpha : m . alpha == m_i - m_j} for 1-based i, j; empty when m_i < m_j.
std::vector<MultiIndex> admissible_exponents(const WeightVector& m, std::size_t i, std::size_t j);

/// admissible_exponents for every (i, j), row-major, 0-based.
using AdmissibilityPattern = std::vector<std::vector<std::vector<MultiIndex>>>;
AdmissibilityPattern admissibility_pattern(const WeightVector& m);

/// l x l matrix: may block (p, q) of the nonconstant part M(z) be nonzero.
using BlockPattern = std::vector<std::vector<bool>>;
BlockPattern tensor_block_pattern(const WeightVector& m);

struct JacobianCheck {
  bool ok = true;
  std::vector<std::string> violations;
  /// Jac(sigma)[i][j] = d sigma_i / d z_j, 0-based.
  std::vector<std::vector<Polynomial>> jacobian;
};

/// Checks Jac(sigma) = I + N(z) with N strictly block-lower and every
/// exponent of entry (i, j) admissible for (i, j).
JacobianCheck check_sigma_jacobian_structure(const TriangularResonantMap& s);

}  // namespace qcirc

#endif  // QCIRC_BERGMAN_HPP
