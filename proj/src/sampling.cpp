#include "qcirc/sampling.hpp"

#include "qcirc/error.hpp"

namespace qcirc {

namespace {

constexpr int kMaxRedraws = 10000;

}  // namespace

std::vector<Rational> default_pool() {
  return {Rational(-2), Rational(-1), Rational(-1, 2), Rational(1, 2), Rational(1), Rational(2)};
}

Engine make_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Engine(seq);
}

const Rational& draw(Engine& engine, std::span<const Rational> pool) {
  if (pool.empty()) throw Error(ErrorCode::EmptyPool, "coefficient pool is empty");
  return pool[engine() % pool.size()];
}

LinearMap random_invertible(std::size_t n, Engine& engine, std::span<const Rational> pool) {
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    std::vector<Rational> a;
    a.reserve(n * n);
    for (std::size_t k = 0; k < n * n; ++k) a.push_back(draw(engine, pool));
    LinearMap l(n, std::move(a));
    if (l.is_invertible()) return l;
  }
  throw Error(ErrorCode::SingularLinearMap, "pool does not yield an invertible matrix");
}

LinearMap random_block_diagonal(const BlockPartition& p, Engine& engine,
                                std::span<const Rational> pool) {
  const std::size_t n = p.dimension();
  LinearMap l(n, std::vector<Rational>(n * n));
  for (std::size_t b = 0; b < p.block_count(); ++b) {
    const std::size_t lo = p.block_begin(b);
    const LinearMap block = random_invertible(p.block_end(b) - lo, engine, pool);
    for (std::size_t r = 0; r < block.dimension(); ++r) {
      for (std::size_t c = 0; c < block.dimension(); ++c) l(lo + r, lo + c) = block(r, c);
    }
  }
  return l;
}

}  // namespace qcirc
