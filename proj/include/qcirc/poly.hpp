#ifndef QCIRC_POLY_HPP
#define QCIRC_POLY_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "qcirc/linear.hpp"
#include "qcirc/numeric.hpp"
#include "qcirc/weights.hpp"

namespace qcirc {

/// Sparse multivariate polynomial over Q in n variables z_1..z_n.
///
/// Terms live in a map keyed by exponent vector; zero coefficients are never
/// stored, so structural equality coincides with equality of polynomials.
class Polynomial {
 public:
  using TermMap = std::map<MultiIndex, Rational>;

  explicit Polynomial(std::size_t n) : n_(n) {}

  static Polynomial constant(std::size_t n, const Rational& c);
  /// z_{j+1} for the 0-based position j.
  static Polynomial variable(std::size_t n, std::size_t j);
  static Polynomial monomial(const MultiIndex& alpha, const Rational& c);

  std::size_t dimension() const noexcept { return n_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Zero when alpha is absent.
  Rational coefficient(const MultiIndex& alpha) const;
  Rational constant_term() const;

  /// Adds c z^alpha, erasing the term if it cancels.
  void add_term(const MultiIndex& alpha, Rational c);

  /// Maximum |alpha| over stored terms; 0 for the zero polynomial.
  std::uint64_t total_degree() const noexcept;

  Rational evaluate(std::span<const Rational> point) const;
  /// Formal partial derivative with respect to the 0-based variable j.
  Polynomial derivative(std::size_t j) const;
  /// Terms with |alpha| <= max_degree.
  Polynomial truncated(std::uint64_t max_degree) const;
  /// Terms with |alpha| == degree.
  Polynomial homogeneous_part(std::uint64_t degree) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t n_;
  TermMap terms_;
};

Polynomial pow(const Polynomial& p, std::uint64_t k);

/// True iff every term satisfies m . alpha == k (vacuous for zero).
bool is_m_homogeneous(const Polynomial& p, const WeightVector& m, const Integer& k);

/// Terms grouped by m-order m . alpha; the parts sum back to p.
std::map<Integer, Polynomial> m_order_decomposition(const Polynomial& p, const WeightVector& m);

/// m-homogeneous of order m_i, for the 1-based index i.
bool is_i_resonant(const Polynomial& p, const WeightVector& m, std::size_t i);

/// An n-tuple of polynomials in n variables.
class PolyMap {
 public:
  explicit PolyMap(std::vector<Polynomial> components);

  static PolyMap identity(std::size_t n);
  static PolyMap from_linear(const LinearMap& l);

  std::size_t dimension() const noexcept { return c_.size(); }
  const Polynomial& operator[](std::size_t k) const { return c_[k]; }
  const std::vector<Polynomial>& components() const noexcept { return c_; }
  auto begin() const noexcept { return c_.begin(); }
  auto end() const noexcept { return c_.end(); }

  /// Maximum component degree.
  std::uint64_t total_degree() const noexcept;
  bool fixes_origin() const;

  friend PolyMap operator-(const PolyMap& a, const PolyMap& b);
  friend bool operator==(const PolyMap&, const PolyMap&) = default;

 private:
  std::vector<Polynomial> c_;
};

/// p(g_1, ..., g_n).
Polynomial substitute(const Polynomial& p, const PolyMap& g);

/// (f o g)_i = f_i(g_1, ..., g_n).
PolyMap compose(const PolyMap& f, const PolyMap& g);

/// Matrix of degree-1 coefficients. Throws DoesNotFixOrigin.
LinearMap linear_part(const PolyMap& f);

}  // namespace qcirc

#endif  // QCIRC_POLY_HPP
