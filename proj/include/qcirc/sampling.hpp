#ifndef QCIRC_SAMPLING_HPP
#define QCIRC_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "qcirc/linear.hpp"
#include "qcirc/numeric.hpp"
#include "qcirc/weights.hpp"

namespace qcirc {

using Engine = std::mt19937_64;

/// {-2, -1, -1/2, 1/2, 1, 2}.
std::vector<Rational> default_pool();

/// Engine for the sub-stream `stream` of `seed`. A pure function of both
/// arguments, so trial k of a search never depends on trials before it.
Engine make_engine(std::uint64_t seed, std::uint64_t stream = 0);

/// Uniform draw from a nonempty pool. Throws EmptyPool.
const Rational& draw(Engine& engine, std::span<const Rational> pool);

/// Invertible n x n map with entries drawn from the pool; redraws singular ones.
LinearMap random_invertible(std::size_t n, Engine& engine, std::span<const Rational> pool);

/// Invertible Diag(A_1, ..., A_l) respecting the blocks of p.
LinearMap random_block_diagonal(const BlockPartition& p, Engine& engine,
                                std::span<const Rational> pool);

}  // namespace qcirc

#endif  // QCIRC_SAMPLING_HPP
