#include "qcirc/bergman.hpp"

#include <algorithm>
#include <sstream>

namespace qcirc {

std::vector<MultiIndex> admissible_exponents(const WeightVector& m, std::size_t i, std::size_t j) {
  require_index(m, i);
  require_index(m, j);
  return enumerate_weighted(m, m[i - 1] - m[j - 1]);
}

AdmissibilityPattern admissibility_pattern(const WeightVector& m) {
  const std::size_t n = m.size();
  AdmissibilityPattern pattern(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) pattern[i - 1].push_back(admissible_exponents(m, i, j));
  }
  return pattern;
}

BlockPattern tensor_block_pattern(const WeightVector& m) {
  const BlockPartition part = block_partition(m);
  const std::size_t l = part.block_count();
  BlockPattern pattern(l, std::vector<bool>(l, false));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      const auto exps = admissible_exponents(m, i + 1, j + 1);
      const bool nonconstant =
          std::any_of(exps.begin(), exps.end(), [](const MultiIndex& a) { return !a.is_zero(); });
      if (nonconstant) pattern[part.block_of(i)][part.block_of(j)] = true;
    }
  }
  return pattern;
}

JacobianCheck check_sigma_jacobian_structure(const TriangularResonantMap& s) {
  const WeightVector& m = s.weights();
  const std::size_t n = m.size();
  const BlockPartition part = block_partition(m);
  const PolyMap sigma = s.as_map();
  JacobianCheck check;
  check.jacobian.assign(n, {});
  auto fail = [&](std::size_t i, std::size_t j, const std::string& why) {
    std::ostringstream os;
    os << "entry (" << i + 1 << "," << j + 1 << "): " << why;
    check.violations.push_back(os.str());
    check.ok = false;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial entry = sigma[i].derivative(j);
      if (i == j) {
        if (!(entry == Polynomial::constant(n, Rational(1)))) fail(i, j, "diagonal is not 1");
      } else if (!entry.is_zero()) {
        if (part.block_of(i) <= part.block_of(j)) fail(i, j, "nonzero on or above block diagonal");
        const auto allowed = admissible_exponents(m, i + 1, j + 1);
        for (const auto& [alpha, c] : entry.terms()) {
          if (!std::binary_search(allowed.begin(), allowed.end(), alpha)) {
            std::ostringstream os;
            os << "exponent " << alpha << " not admissible";
            fail(i, j, os.str());
          }
        }
      }
      check.jacobian[i].push_back(std::move(entry));
    }
  }
  return check;
}

}  // namespace qcirc
