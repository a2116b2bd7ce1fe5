#include "qcirc/conjugation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "qcirc/error.hpp"
#include "qcirc/sampling.hpp"

namespace qcirc {

namespace {

void require_dimension(std::size_t expected, std::size_t actual, const char* what) {
  if (expected != actual) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " has dimension " + std::to_string(actual) + ", expected " +
                    std::to_string(expected));
  }
}

void require_trials(std::uint64_t trials) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
}

}  // namespace

bool is_block_diagonal(const LinearMap& l, const BlockPartition& p) {
  require_dimension(p.dimension(), l.dimension(), "linear map");
  for (std::size_t r = 0; r < l.dimension(); ++r) {
    const std::size_t br = p.block_of(r);
    for (std::size_t c = 0; c < l.dimension(); ++c) {
      if (p.block_of(c) != br && l(r, c) != 0) return false;
    }
  }
  return true;
}

PolyMap conjugate(const TriangularResonantMap& s, const LinearMap& l) {
  require_dimension(s.dimension(), l.dimension(), "linear map");
  if (!l.is_invertible()) {
    throw Error(ErrorCode::SingularLinearMap, "conjugating linear map is singular");
  }
  const PolyMap sigma = s.as_map();
  const PolyMap tau = invert_sigma(s).as_map();
  return compose(tau, compose(PolyMap::from_linear(l), sigma));
}

ConjugationReport check_theorem_instance(const WeightVector& m, const TriangularResonantMap& s,
                                         const LinearMap& l) {
  if (!(s.weights() == m)) {
    throw Error(ErrorCode::WeightMismatch, "sigma was built for a different weight vector");
  }
  ConjugationReport report{conjugate(s, l), 0, false, {}, 0, false};
  report.degree = report.result.total_degree();
  report.block_diagonal = is_block_diagonal(l, block_partition(m));
  for (std::size_t i = 1; i <= m.size(); ++i) {
    report.component_resonant.push_back(is_i_resonant(report.result[i - 1], m, i));
  }
  report.bound_mu = resonance_profile(m).order;
  report.within_bound = report.degree <= report.bound_mu;
  return report;
}

std::optional<ViolationWitness> find_violation(const WeightVector& m, const LinearMap& l,
                                               std::uint64_t trials, std::uint64_t seed) {
  const auto pool = default_pool();
  return find_violation(m, l, trials, seed, pool);
}

std::optional<ViolationWitness> find_violation(const WeightVector& m, const LinearMap& l,
                                               std::uint64_t trials, std::uint64_t seed,
                                               std::span<const Rational> pool) {
  require_trials(trials);
  require_dimension(m.size(), l.dimension(), "linear map");
  if (!l.is_invertible()) {
    throw Error(ErrorCode::SingularLinearMap, "linear map is singular");
  }
  if (is_block_diagonal(l, block_partition(m))) {
    throw Error(ErrorCode::BlockDiagonalInput,
                "block-diagonal linear maps never exceed the resonance order");
  }
  const std::uint64_t mu = resonance_profile(m).order;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Engine engine = make_engine(seed, t);
    auto sigma = random_sigma(m, engine(), pool);
    const std::uint64_t degree = conjugate(sigma, l).total_degree();
    if (degree > mu) return ViolationWitness{std::move(sigma), degree, t};
  }
  return std::nullopt;
}

QuasiOrderEstimate quasi_resonance_estimate(const WeightVector& m, std::uint64_t trials,
                                            std::uint64_t seed) {
  require_trials(trials);
  const auto pool = default_pool();
  const std::uint64_t mu = resonance_profile(m).order;
  QuasiOrderEstimate estimate{0, mu * mu, trials};
  for (std::uint64_t t = 0; t < trials; ++t) {
    Engine engine = make_engine(seed, t);
    const auto sigma = random_sigma(m, engine(), pool);
    const LinearMap l = random_invertible(m.size(), engine, pool);
    estimate.observed_max = std::max(estimate.observed_max, conjugate(sigma, l).total_degree());
  }
  return estimate;
}

ConjugacySolution solve_conjugacy(const PolyMap& f, const WeightVector& m) {
  const std::size_t n = m.size();
  require_dimension(n, f.dimension(), "map");
  const LinearMap j = linear_part(f);
  if (!j.is_invertible()) {
    throw Error(ErrorCode::SingularLinearPart, "linear part of the map is singular");
  }

  // One unknown per (component k, nonlinear k-th resonant monomial alpha).
  std::vector<std::pair<std::size_t, MultiIndex>> unknowns;
  for (std::size_t k = 0; k < n; ++k) {
    for (auto& alpha : nonlinear_resonant_monomials(m, k + 1)) {
      unknowns.emplace_back(k, std::move(alpha));
    }
  }

  // Residual of sigma o f - J o sigma, component r, monomial beta:
  //   [f_r - (J z)_r]_beta
  //   + sum_u c_u ([f^alpha_u]_beta * [k_u == r] - J_{r,k_u} [beta == alpha_u]) = 0.
  std::map<std::pair<std::size_t, MultiIndex>, std::size_t> row_of;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  auto row = [&](std::size_t r, const MultiIndex& beta) -> std::size_t {
    auto [it, inserted] = row_of.try_emplace({r, beta}, a.size());
    if (inserted) {
      a.emplace_back(unknowns.size());
      b.emplace_back(0);
    }
    return it->second;
  };

  const PolyMap jz = PolyMap::from_linear(j);
  for (std::size_t r = 0; r < n; ++r) {
    const Polynomial nonlinear = f[r] - jz[r];
    for (const auto& [beta, c] : nonlinear.terms()) b[row(r, beta)] -= c;
  }
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    const auto& [k, alpha] = unknowns[u];
    const Polynomial image = substitute(Polynomial::monomial(alpha, Rational(1)), f);
    for (const auto& [beta, c] : image.terms()) a[row(k, beta)][u] += c;
    for (std::size_t r = 0; r < n; ++r) {
      if (j(r, k) != 0) a[row(r, alpha)][u] -= j(r, k);
    }
  }

  const auto solution = solve_exact(a, b);
  if (!solution) {
    throw Error(ErrorCode::NoResonantConjugacy,
                "map is not conjugate to its linear part by a triangular resonant map");
  }

  TriangularResonantMap::Coefficients coeffs;
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    if ((*solution)[u] != 0) {
      coeffs.emplace(std::make_pair(unknowns[u].first + 1, unknowns[u].second), (*solution)[u]);
    }
  }
  auto sigma = make_sigma(m, coeffs);
  const PolyMap sigma_map = sigma.as_map();
  const PolyMap residual = compose(sigma_map, f) - compose(jz, sigma_map);
  const bool zero = std::all_of(residual.begin(), residual.end(),
                                [](const Polynomial& p) { return p.is_zero(); });
  return ConjugacySolution{std::move(sigma), j, zero, unknowns.size() - rank_exact(a)};
}

}  // namespace qcirc
