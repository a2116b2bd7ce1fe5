#ifndef QCIRC_CONJUGATION_HPP
#define QCIRC_CONJUGATION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qcirc/linear.hpp"
#include "qcirc/poly.hpp"
#include "qcirc/resonant.hpp"
#include "qcirc/weights.hpp"

namespace qcirc {

/// True iff every entry outside the diagonal blocks of p is zero.
/// Throws DimensionMismatch.
bool is_block_diagonal(const LinearMap& l, const BlockPartition& p);

/// sigma^{-1} o L o sigma. Throws DimensionMismatch or SingularLinearMap.
PolyMap conjugate(const TriangularResonantMap& s, const LinearMap& l);

struct ConjugationReport {
  PolyMap result;
  std::uint64_t degree = 0;
  bool block_diagonal = false;
  std::vector<bool> component_resonant;
  std::uint64_t bound_mu = 0;
  bool within_bound = false;
};

/// Conjugates and classifies the outcome against the resonance order.
/// If L is block diagonal the result is always within the bound and every
/// component is i-th resonant.
ConjugationReport check_theorem_instance(const WeightVector& m, const TriangularResonantMap& s,
                                         const LinearMap& l);

struct ViolationWitness {
  TriangularResonantMap sigma;
  std::uint64_t degree = 0;
  std::uint64_t trial = 0;
};

/// Searches random sigma for deg(sigma^{-1} o L o sigma) > mu. An empty
/// result only means the trial budget ran out.
/// Throws BlockDiagonalInput when L preserves the blocks, SingularLinearMap
/// when L is not invertible, std::invalid_argument when trials == 0.
std::optional<ViolationWitness> find_violation(const WeightVector& m, const LinearMap& l,
                                               std::uint64_t trials, std::uint64_t seed);
std::optional<ViolationWitness> find_violation(const WeightVector& m, const LinearMap& l,
                                               std::uint64_t trials, std::uint64_t seed,
                                               std::span<const Rational> pool);

struct QuasiOrderEstimate {
  std::uint64_t observed_max = 0;  // lower bound on the quasi-resonance order
  std::uint64_t cap = 0;           // mu^2
  std::uint64_t trials = 0;
};

/// Largest degree of sigma^{-1} o L o sigma seen over `trials` random
/// (sigma, L) pairs. Trial k depends only on (seed, k).
QuasiOrderEstimate quasi_resonance_estimate(const WeightVector& m, std::uint64_t trials,
                                            std::uint64_t seed);

struct ConjugacySolution {
  TriangularResonantMap sigma;
  LinearMap j;
  bool residual_zero = false;
  /// Unknown coefficients left undetermined (and set to zero). Nonzero means
  /// the decomposition is not unique.
  std::size_t free_parameters = 0;
};

/// Finds triangular resonant sigma with sigma o f == J o sigma, J the linear
/// part of f, by an exact linear solve over the coefficients of g.
/// Throws DimensionMismatch, DoesNotFixOrigin, SingularLinearPart or
/// NoResonantConjugacy.
ConjugacySolution solve_conjugacy(const PolyMap& f, const WeightVector& m);

}  // namespace qcirc

#endif  // QCIRC_CONJUGATION_HPP
