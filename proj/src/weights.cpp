#include "qcirc/weights.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "qcirc/error.hpp"

namespace qcirc {

MultiIndex MultiIndex::unit(std::size_t n, std::size_t j) {
  MultiIndex e(n);
  e.alpha_.at(j) = 1;
  return e;
}

std::uint64_t MultiIndex::degree() const noexcept {
  std::uint64_t total = 0;
  for (Exponent a : alpha_) total += a;
  return total;
}

Integer MultiIndex::weighted_degree(const WeightVector& m) const {
  if (m.size() != alpha_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "multi-index length differs from weight vector");
  }
  Integer total = 0;
  for (std::size_t j = 0; j < alpha_.size(); ++j) {
    total += m[j] * static_cast<unsigned long>(alpha_[j]);
  }
  return total;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch, "multi-index lengths differ");
  }
  MultiIndex sum = a;
  for (std::size_t j = 0; j < a.size(); ++j) sum.alpha_[j] += b.alpha_[j];
  return sum;
}

std::ostream& operator<<(std::ostream& os, const MultiIndex& alpha) {
  os << '(';
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (j) os << ',';
    os << alpha[j];
  }
  return os << ')';
}

namespace {

void check_positive(const std::vector<Integer>& raw) {
  if (raw.empty()) {
    throw Error(ErrorCode::EmptyWeightVector, "weight vector must have at least one entry");
  }
  for (std::size_t j = 0; j < raw.size(); ++j) {
    if (raw[j] <= 0) {
      throw Error(ErrorCode::NonPositiveWeight,
                  "weight m_" + std::to_string(j + 1) + " = " + raw[j].get_str() +
                      " violates m_i >= 1");
    }
  }
}

Integer gcd_of(const std::vector<Integer>& raw) {
  Integer g = 0;
  for (const auto& v : raw) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  return g;
}

}  // namespace

WeightVector WeightVector::create(std::vector<Integer> raw) {
  check_positive(raw);
  for (std::size_t j = 1; j < raw.size(); ++j) {
    if (raw[j] < raw[j - 1]) {
      throw Error(ErrorCode::Unsorted, "weights must satisfy m_1 <= ... <= m_n (m_" +
                                           std::to_string(j) + " > m_" + std::to_string(j + 1) +
                                           ")");
    }
  }
  const Integer g = gcd_of(raw);
  if (g != 1) {
    throw Error(ErrorCode::NotCoprime,
                "weights must satisfy gcd(m_1, ..., m_n) = 1 (gcd is " + g.get_str() + ")");
  }
  return WeightVector(std::move(raw));
}

WeightVector WeightVector::create(std::initializer_list<long> raw) {
  std::vector<Integer> values;
  values.reserve(raw.size());
  for (long v : raw) values.emplace_back(v);
  return create(std::move(values));
}

std::ostream& operator<<(std::ostream& os, const WeightVector& m) {
  os << '(';
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (j) os << ',';
    os << m[j];
  }
  return os << ')';
}

Canonicalized canonicalize(std::vector<Integer> raw) {
  check_positive(raw);
  std::vector<std::size_t> perm(raw.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return raw[a] < raw[b]; });
  const Integer g = gcd_of(raw);
  std::vector<Integer> sorted;
  sorted.reserve(raw.size());
  for (std::size_t k : perm) sorted.push_back(raw[k] / g);
  return Canonicalized{WeightVector::create(std::move(sorted)), std::move(perm)};
}

BlockPartition::BlockPartition(std::vector<std::size_t> boundaries)
    : boundaries_(std::move(boundaries)) {
  if (boundaries_.size() < 2 || boundaries_.front() != 0 ||
      !std::is_sorted(boundaries_.begin(), boundaries_.end(), std::less_equal<>{})) {
    throw Error(ErrorCode::DimensionMismatch, "block boundaries must be 0 = k_0 < ... < k_l");
  }
}

std::size_t BlockPartition::block_of(std::size_t j) const {
  if (j >= dimension()) {
    throw Error(ErrorCode::IndexOutOfRange, "coordinate outside the partition");
  }
  const auto it = std::upper_bound(boundaries_.begin(), boundaries_.end(), j);
  return static_cast<std::size_t>(it - boundaries_.begin()) - 1;
}

BlockPartition block_partition(const WeightVector& m) {
  std::vector<std::size_t> k{0};
  for (std::size_t j = 1; j < m.size(); ++j) {
    if (m[j - 1] < m[j]) k.push_back(j);
  }
  k.push_back(m.size());
  return BlockPartition(std::move(k));
}

namespace {

// Depth-first knapsack over coordinates; alpha_j runs upward so the output is
// lexicographically ascending.
void enumerate_from(const WeightVector& m, std::size_t j, const Integer& remaining,
                    MultiIndex& alpha, std::vector<MultiIndex>& out) {
  const std::size_t n = m.size();
  if (j + 1 == n) {
    if (mpz_divisible_p(remaining.get_mpz_t(), m[j].get_mpz_t()) == 0) return;
    const Integer q = remaining / m[j];
    if (!q.fits_uint_p() || q > std::numeric_limits<Exponent>::max()) {
      throw Error(ErrorCode::IndexOutOfRange, "exponent exceeds the supported range");
    }
    alpha[j] = static_cast<Exponent>(q.get_ui());
    out.push_back(alpha);
    alpha[j] = 0;
    return;
  }
  const Integer bound = remaining / m[j];
  if (!bound.fits_uint_p() || bound > std::numeric_limits<Exponent>::max()) {
    throw Error(ErrorCode::IndexOutOfRange, "exponent exceeds the supported range");
  }
  const auto top = static_cast<Exponent>(bound.get_ui());
  Integer rest = remaining;
  for (Exponent a = 0;; ++a) {
    alpha[j] = a;
    enumerate_from(m, j + 1, rest, alpha, out);
    if (a == top) break;
    rest -= m[j];
  }
  alpha[j] = 0;
}

}  // namespace

void require_index(const WeightVector& m, std::size_t i) {
  if (i < 1 || i > m.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(i) +
                                                " outside 1.." + std::to_string(m.size()));
  }
}

std::vector<MultiIndex> enumerate_weighted(const WeightVector& m, const Integer& target) {
  std::vector<MultiIndex> out;
  if (target < 0) return out;
  MultiIndex alpha(m.size());
  enumerate_from(m, 0, target, alpha, out);
  return out;
}

std::vector<MultiIndex> resonance_set(const WeightVector& m, std::size_t i) {
  require_index(m, i);
  return enumerate_weighted(m, m[i - 1]);
}

ResonanceProfile resonance_profile(const WeightVector& m) {
  ResonanceProfile profile;
  profile.sets.reserve(m.size());
  for (std::size_t i = 1; i <= m.size(); ++i) {
    auto set = resonance_set(m, i);
    std::uint64_t mu_i = 0;
    for (const auto& alpha : set) mu_i = std::max(mu_i, alpha.degree());
    profile.orders.push_back(mu_i);
    profile.order = std::max(profile.order, mu_i);
    profile.sets.push_back(std::move(set));
  }
  return profile;
}

}  // namespace qcirc
