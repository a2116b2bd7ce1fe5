#include "qcirc/poly.hpp"

#include <algorithm>

#include "qcirc/error.hpp"

namespace qcirc {

namespace {

void require_same_dimension(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::DimensionMismatch, "polynomial dimensions differ (" +
                                                  std::to_string(a) + " vs " + std::to_string(b) +
                                                  ")");
  }
}

}  // namespace

Polynomial Polynomial::constant(std::size_t n, const Rational& c) {
  Polynomial p(n);
  p.add_term(MultiIndex(n), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t n, std::size_t j) {
  Polynomial p(n);
  p.add_term(MultiIndex::unit(n, j), Rational(1));
  return p;
}

Polynomial Polynomial::monomial(const MultiIndex& alpha, const Rational& c) {
  Polynomial p(alpha.size());
  p.add_term(alpha, c);
  return p;
}

Rational Polynomial::coefficient(const MultiIndex& alpha) const {
  const auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(MultiIndex(n_)); }

void Polynomial::add_term(const MultiIndex& alpha, Rational c) {
  require_same_dimension(n_, alpha.size());
  c.canonicalize();
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

std::uint64_t Polynomial::total_degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& [alpha, c] : terms_) d = std::max(d, alpha.degree());
  return d;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  require_same_dimension(n_, point.size());
  Rational total = 0;
  for (const auto& [alpha, c] : terms_) {
    Rational t = c;
    for (std::size_t j = 0; j < n_; ++j) {
      if (alpha[j] == 0) continue;
      Rational power;
      mpz_pow_ui(power.get_num_mpz_t(), point[j].get_num_mpz_t(), alpha[j]);
      mpz_pow_ui(power.get_den_mpz_t(), point[j].get_den_mpz_t(), alpha[j]);
      t *= power;
    }
    total += t;
  }
  return total;
}

Polynomial Polynomial::derivative(std::size_t j) const {
  if (j >= n_) throw Error(ErrorCode::IndexOutOfRange, "derivative variable out of range");
  Polynomial d(n_);
  for (const auto& [alpha, c] : terms_) {
    if (alpha[j] == 0) continue;
    MultiIndex lowered = alpha;
    lowered[j] -= 1;
    d.add_term(lowered, c * static_cast<unsigned long>(alpha[j]));
  }
  return d;
}

Polynomial Polynomial::truncated(std::uint64_t max_degree) const {
  Polynomial out(n_);
  for (const auto& [alpha, c] : terms_) {
    if (alpha.degree() <= max_degree) out.terms_.emplace_hint(out.terms_.end(), alpha, c);
  }
  return out;
}

Polynomial Polynomial::homogeneous_part(std::uint64_t degree) const {
  Polynomial out(n_);
  for (const auto& [alpha, c] : terms_) {
    if (alpha.degree() == degree) out.terms_.emplace_hint(out.terms_.end(), alpha, c);
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_dimension(n_, other.n_);
  for (const auto& [alpha, c] : other.terms_) add_term(alpha, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_dimension(n_, other.n_);
  for (const auto& [alpha, c] : other.terms_) add_term(alpha, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, c] : terms_) c *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_dimension(a.n_, b.n_);
  Polynomial out(a.n_);
  for (const auto& [alpha, c] : a.terms_) {
    for (const auto& [beta, d] : b.terms_) out.add_term(alpha + beta, c * d);
  }
  return out;
}

Polynomial pow(const Polynomial& p, std::uint64_t k) {
  Polynomial result = Polynomial::constant(p.dimension(), Rational(1));
  Polynomial base = p;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

bool is_m_homogeneous(const Polynomial& p, const WeightVector& m, const Integer& k) {
  require_same_dimension(p.dimension(), m.size());
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [&](const auto& term) { return term.first.weighted_degree(m) == k; });
}

std::map<Integer, Polynomial> m_order_decomposition(const Polynomial& p, const WeightVector& m) {
  require_same_dimension(p.dimension(), m.size());
  std::map<Integer, Polynomial> parts;
  for (const auto& [alpha, c] : p.terms()) {
    auto [it, inserted] = parts.try_emplace(alpha.weighted_degree(m), p.dimension());
    it->second.add_term(alpha, c);
  }
  return parts;
}

bool is_i_resonant(const Polynomial& p, const WeightVector& m, std::size_t i) {
  require_index(m, i);
  return is_m_homogeneous(p, m, m[i - 1]);
}

PolyMap::PolyMap(std::vector<Polynomial> components) : c_(std::move(components)) {
  for (const auto& p : c_) require_same_dimension(p.dimension(), c_.size());
}

PolyMap PolyMap::identity(std::size_t n) {
  std::vector<Polynomial> c;
  c.reserve(n);
  for (std::size_t j = 0; j < n; ++j) c.push_back(Polynomial::variable(n, j));
  return PolyMap(std::move(c));
}

PolyMap PolyMap::from_linear(const LinearMap& l) {
  const std::size_t n = l.dimension();
  std::vector<Polynomial> c(n, Polynomial(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) c[r].add_term(MultiIndex::unit(n, k), l(r, k));
  }
  return PolyMap(std::move(c));
}

std::uint64_t PolyMap::total_degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& p : c_) d = std::max(d, p.total_degree());
  return d;
}

bool PolyMap::fixes_origin() const {
  return std::all_of(c_.begin(), c_.end(), [](const Polynomial& p) { return p.constant_term() == 0; });
}

PolyMap operator-(const PolyMap& a, const PolyMap& b) {
  require_same_dimension(a.dimension(), b.dimension());
  std::vector<Polynomial> c;
  c.reserve(a.dimension());
  for (std::size_t k = 0; k < a.dimension(); ++k) c.push_back(a[k] - b[k]);
  return PolyMap(std::move(c));
}

namespace {

// powers[j][e] = g_j^e, filled lazily by repeated multiplication.
class PowerCache {
 public:
  explicit PowerCache(const PolyMap& g) : g_(g), powers_(g.dimension()) {}

  const Polynomial& get(std::size_t j, Exponent e) {
    auto& row = powers_[j];
    if (row.empty()) row.push_back(Polynomial::constant(g_.dimension(), Rational(1)));
    while (row.size() <= e) row.push_back(row.back() * g_[j]);
    return row[e];
  }

 private:
  const PolyMap& g_;
  std::vector<std::vector<Polynomial>> powers_;
};

Polynomial substitute_cached(const Polynomial& p, const PolyMap& g, PowerCache& cache) {
  const std::size_t n = g.dimension();
  Polynomial out(n);
  for (const auto& [alpha, c] : p.terms()) {
    Polynomial term = Polynomial::constant(n, c);
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      if (alpha[j] != 0) term = term * cache.get(j, alpha[j]);
    }
    out += term;
  }
  return out;
}

}  // namespace

Polynomial substitute(const Polynomial& p, const PolyMap& g) {
  require_same_dimension(p.dimension(), g.dimension());
  PowerCache cache(g);
  return substitute_cached(p, g, cache);
}

PolyMap compose(const PolyMap& f, const PolyMap& g) {
  require_same_dimension(f.dimension(), g.dimension());
  PowerCache cache(g);
  std::vector<Polynomial> c;
  c.reserve(f.dimension());
  for (const auto& fi : f) c.push_back(substitute_cached(fi, g, cache));
  return PolyMap(std::move(c));
}

LinearMap linear_part(const PolyMap& f) {
  if (!f.fixes_origin()) {
    throw Error(ErrorCode::DoesNotFixOrigin, "map has a nonzero constant term");
  }
  const std::size_t n = f.dimension();
  LinearMap l(n, std::vector<Rational>(n * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) l(r, k) = f[r].coefficient(MultiIndex::unit(n, k));
  }
  return l;
}

}  // namespace qcirc
