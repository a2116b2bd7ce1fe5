#include "qcirc/resonant.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qcirc/error.hpp"

namespace qcirc {

namespace {

std::string describe(std::size_t i, const MultiIndex& alpha) {
  std::ostringstream os;
  os << "term z^" << alpha << " in component " << i;
  return os.str();
}

void validate_term(const WeightVector& m, std::size_t i, const MultiIndex& alpha) {
  if (alpha.size() != m.size()) {
    throw Error(ErrorCode::DimensionMismatch, describe(i, alpha) + " has the wrong length");
  }
  if (alpha.weighted_degree(m) != m[i - 1]) {
    throw Error(ErrorCode::NotResonant, describe(i, alpha) + " has m.alpha != m_" +
                                            std::to_string(i));
  }
  if (alpha.degree() < 2) {
    throw Error(ErrorCode::NotNonlinear, describe(i, alpha) + " is not nonlinear");
  }
}

// g_i may only involve z_j with m_j < m_i; this follows from the two term
// checks, so a failure here is a library bug rather than bad input.
void assert_lower_support(const WeightVector& m, std::size_t k, const Polynomial& g) {
  for (const auto& [alpha, c] : g.terms()) {
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      if (alpha[j] != 0 && m[j] >= m[k]) {
        throw std::logic_error("resonant term uses a variable of weight >= m_i");
      }
    }
  }
}

}  // namespace

TriangularResonantMap TriangularResonantMap::identity(const WeightVector& m) {
  return TriangularResonantMap(m, std::vector<Polynomial>(m.size(), Polynomial(m.size())));
}

TriangularResonantMap TriangularResonantMap::from_parts(const WeightVector& m,
                                                        std::vector<Polynomial> g) {
  if (g.size() != m.size()) {
    throw Error(ErrorCode::DimensionMismatch, "need one nonlinear part per coordinate");
  }
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (g[k].dimension() != m.size()) {
      throw Error(ErrorCode::DimensionMismatch, "nonlinear part has the wrong dimension");
    }
    for (const auto& [alpha, c] : g[k].terms()) validate_term(m, k + 1, alpha);
    assert_lower_support(m, k, g[k]);
  }
  return TriangularResonantMap(m, std::move(g));
}

bool TriangularResonantMap::is_identity() const {
  return std::all_of(g_.begin(), g_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

PolyMap TriangularResonantMap::as_map() const {
  std::vector<Polynomial> c;
  c.reserve(g_.size());
  for (std::size_t k = 0; k < g_.size(); ++k) {
    c.push_back(Polynomial::variable(g_.size(), k) + g_[k]);
  }
  return PolyMap(std::move(c));
}

TriangularResonantMap make_sigma(const WeightVector& m,
                                 const TriangularResonantMap::Coefficients& coeffs) {
  std::vector<Polynomial> g(m.size(), Polynomial(m.size()));
  for (const auto& [key, c] : coeffs) {
    const auto& [i, alpha] = key;
    require_index(m, i);
    validate_term(m, i, alpha);
    g[i - 1].add_term(alpha, c);
  }
  return TriangularResonantMap::from_parts(m, std::move(g));
}

std::vector<MultiIndex> nonlinear_resonant_monomials(const WeightVector& m, std::size_t i) {
  auto set = resonance_set(m, i);
  std::erase_if(set, [](const MultiIndex& alpha) { return alpha.degree() < 2; });
  return set;
}

TriangularResonantMap random_sigma(const WeightVector& m, std::uint64_t seed,
                                   std::span<const Rational> pool) {
  if (pool.empty()) throw Error(ErrorCode::EmptyPool, "coefficient pool is empty");
  Engine engine = make_engine(seed);
  std::vector<Polynomial> g(m.size(), Polynomial(m.size()));
  for (std::size_t i = 1; i <= m.size(); ++i) {
    for (const auto& alpha : nonlinear_resonant_monomials(m, i)) {
      g[i - 1].add_term(alpha, draw(engine, pool));
    }
  }
  return TriangularResonantMap::from_parts(m, std::move(g));
}

TriangularResonantMap invert_sigma(const TriangularResonantMap& s) {
  const std::size_t n = s.dimension();
  const WeightVector& m = s.weights();
  // Arguments (tau_1, ..., tau_{i-1}, 0, ..., 0), grown one coordinate at a time.
  std::vector<Polynomial> args(n, Polynomial(n));
  std::vector<Polynomial> h(n, Polynomial(n));
  for (std::size_t k = 0; k < n; ++k) {
    const Polynomial& g = s.nonlinear_part(k);
    assert_lower_support(m, k, g);
    if (!g.is_zero()) h[k] = -substitute(g, PolyMap(args));
    args[k] = Polynomial::variable(n, k) + h[k];
  }
  return TriangularResonantMap::from_parts(m, std::move(h));
}

TriangularResonantMap compose_sigma(const TriangularResonantMap& a,
                                    const TriangularResonantMap& b) {
  if (!(a.weights() == b.weights())) {
    throw Error(ErrorCode::WeightMismatch, "composed maps have different weight vectors");
  }
  const PolyMap composed = compose(a.as_map(), b.as_map());
  const std::size_t n = a.dimension();
  std::vector<Polynomial> g;
  g.reserve(n);
  for (std::size_t k = 0; k < n; ++k) g.push_back(composed[k] - Polynomial::variable(n, k));
  return TriangularResonantMap::from_parts(a.weights(), std::move(g));
}

}  // namespace qcirc
