#include "qcirc/linear.hpp"

#include <utility>

#include "qcirc/error.hpp"

namespace qcirc {

namespace {

// Integer echelon form produced by fraction-free elimination. Entries below
// each pivot are zero; entry values are minors of the scaled input.
struct Echelon {
  std::vector<std::vector<Integer>> rows;
  std::vector<std::size_t> pivot_cols;
  bool odd_swaps = false;
};

Integer row_denominator_lcm(const std::vector<Rational>& row) {
  Integer l = 1;
  for (const auto& v : row) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  return l;
}

std::vector<Integer> scale_to_integers(const std::vector<Rational>& row, const Integer& scale) {
  std::vector<Integer> out;
  out.reserve(row.size());
  for (const auto& v : row) {
    out.push_back(v.get_num() * (scale / v.get_den()));
  }
  return out;
}

// Eliminates over the first `pivot_limit` columns; any further columns
// (augmented right-hand sides) are carried along.
Echelon bareiss(std::vector<std::vector<Integer>> rows, std::size_t pivot_limit) {
  Echelon e;
  const std::size_t height = rows.size();
  const std::size_t width = height ? rows.front().size() : 0;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_limit && r < height; ++c) {
    std::size_t p = r;
    while (p < height && rows[p][c] == 0) ++p;
    if (p == height) continue;
    if (p != r) {
      std::swap(rows[p], rows[r]);
      e.odd_swaps = !e.odd_swaps;
    }
    const Integer pivot = rows[r][c];
    for (std::size_t i = r + 1; i < height; ++i) {
      const Integer lead = rows[i][c];
      for (std::size_t k = c + 1; k < width; ++k) {
        Integer v = pivot * rows[i][k] - lead * rows[r][k];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        rows[i][k] = std::move(v);
      }
      rows[i][c] = 0;
    }
    prev = pivot;
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.rows = std::move(rows);
  return e;
}

}  // namespace

LinearMap::LinearMap(std::size_t n, std::vector<Rational> entries)
    : n_(n), a_(std::move(entries)) {
  if (a_.size() != n_ * n_) {
    throw Error(ErrorCode::DimensionMismatch, "linear map needs n*n entries");
  }
  for (auto& v : a_) v.canonicalize();
}

LinearMap LinearMap::from_rows(const std::vector<std::vector<Rational>>& rows) {
  std::vector<Rational> flat;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) {
      throw Error(ErrorCode::DimensionMismatch, "linear map must be square");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return LinearMap(rows.size(), std::move(flat));
}

LinearMap LinearMap::identity(std::size_t n) {
  std::vector<Rational> d(n, Rational(1));
  return diagonal(d);
}

LinearMap LinearMap::diagonal(const std::vector<Rational>& d) {
  const std::size_t n = d.size();
  LinearMap m(n, std::vector<Rational>(n * n));
  for (std::size_t k = 0; k < n; ++k) m(k, k) = d[k];
  return m;
}

Rational LinearMap::determinant() const {
  if (n_ == 0) return 1;
  std::vector<std::vector<Integer>> rows;
  Integer scale_product = 1;
  for (std::size_t r = 0; r < n_; ++r) {
    std::vector<Rational> row(a_.begin() + r * n_, a_.begin() + (r + 1) * n_);
    const Integer s = row_denominator_lcm(row);
    scale_product *= s;
    rows.push_back(scale_to_integers(row, s));
  }
  const Echelon e = bareiss(std::move(rows), n_);
  if (e.pivot_cols.size() < n_) return 0;
  Rational det(e.rows[n_ - 1][n_ - 1], scale_product);
  det.canonicalize();
  return e.odd_swaps ? Rational(-det) : det;
}

LinearMap LinearMap::inverse() const {
  std::vector<std::vector<Rational>> rows(n_, std::vector<Rational>(n_));
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) rows[r][c] = (*this)(r, c);
  }
  if (rank_exact(rows) < n_) {
    throw Error(ErrorCode::SingularLinearMap, "linear map is singular");
  }
  LinearMap inv(n_, std::vector<Rational>(n_ * n_));
  for (std::size_t c = 0; c < n_; ++c) {
    std::vector<Rational> e(n_);
    e[c] = 1;
    const auto x = solve_exact(rows, e);
    for (std::size_t r = 0; r < n_; ++r) inv(r, c) = (*x)[r];
  }
  return inv;
}

LinearMap operator*(const LinearMap& a, const LinearMap& b) {
  if (a.n_ != b.n_) {
    throw Error(ErrorCode::DimensionMismatch, "linear map dimensions differ");
  }
  const std::size_t n = a.n_;
  LinearMap out(n, std::vector<Rational>(n * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Rational s = 0;
      for (std::size_t k = 0; k < n; ++k) s += a(r, k) * b(k, c);
      out(r, c) = s;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LinearMap& map) {
  os << '[';
  for (std::size_t r = 0; r < map.dimension(); ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < map.dimension(); ++c) {
      if (c) os << ',';
      os << map(r, c).get_str();
    }
    os << ']';
  }
  return os << ']';
}

std::optional<std::vector<Rational>> solve_exact(const std::vector<std::vector<Rational>>& a,
                                                 const std::vector<Rational>& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch, "right-hand side length differs from row count");
  }
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  std::vector<std::vector<Integer>> rows;
  rows.reserve(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a[r].size() != cols) {
      throw Error(ErrorCode::DimensionMismatch, "ragged coefficient matrix");
    }
    std::vector<Rational> augmented = a[r];
    augmented.push_back(b[r]);
    rows.push_back(scale_to_integers(augmented, row_denominator_lcm(augmented)));
  }
  const Echelon e = bareiss(std::move(rows), cols);
  const std::size_t rank = e.pivot_cols.size();
  for (std::size_t r = rank; r < e.rows.size(); ++r) {
    if (e.rows[r][cols] != 0) return std::nullopt;
  }
  std::vector<Rational> x(cols);
  for (std::size_t k = rank; k-- > 0;) {
    const std::size_t pc = e.pivot_cols[k];
    Rational acc(e.rows[k][cols]);
    for (std::size_t c = pc + 1; c < cols; ++c) {
      if (x[c] != 0) acc -= Rational(e.rows[k][c]) * x[c];
    }
    x[pc] = acc / Rational(e.rows[k][pc]);
  }
  return x;
}

std::size_t rank_exact(const std::vector<std::vector<Rational>>& a) {
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  std::vector<std::vector<Integer>> rows;
  for (const auto& row : a) {
    if (row.size() != cols) {
      throw Error(ErrorCode::DimensionMismatch, "ragged coefficient matrix");
    }
    rows.push_back(scale_to_integers(row, row_denominator_lcm(row)));
  }
  return bareiss(std::move(rows), cols).pivot_cols.size();
}

}  // namespace qcirc
