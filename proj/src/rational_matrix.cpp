#include "cliffrep/rational_matrix.hpp"

#include <utility>

#include "cliffrep/error.hpp"

namespace cliffrep {

RationalMatrix::RationalMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

RationalMatrix RationalMatrix::identity(std::size_t dim) {
  RationalMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw DimensionMismatch("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                              " entries, expected " + std::to_string(rows.size()));
    }
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
  if (o.dim_ != dim_) throw DimensionMismatch("matrix sum of different sizes");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatch("matrix product of different sizes");
  const std::size_t n = a.dim_;
  RationalMatrix c(n);
  Rational t;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Rational& bkj = b(k, j);
        if (sgn(bkj) == 0) continue;
        t = aik * bkj;
        c(i, j) += t;
      }
    }
  }
  return c;
}

namespace {

// Integer rows scaled by the lcm of their denominators.
struct ScaledRows {
  std::vector<std::vector<mpz_class>> rows;
  std::vector<mpz_class> scale;
};

ScaledRows clear_denominators(const RationalMatrix& m, std::size_t extra_columns) {
  const std::size_t n = m.dim();
  ScaledRows out;
  out.rows.assign(n, std::vector<mpz_class>(n + extra_columns));
  out.scale.assign(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class d = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), m(i, j).get_den_mpz_t());
    out.scale[i] = d;
    for (std::size_t j = 0; j < n; ++j) out.rows[i][j] = m(i, j).get_num() * (d / m(i, j).get_den());
  }
  return out;
}

// Fraction-free forward elimination in place. Returns the number of row swaps, or -1 when a
// column has no pivot.
int bareiss_forward(std::vector<std::vector<mpz_class>>& a, std::size_t n) {
  const std::size_t width = a.empty() ? 0 : a[0].size();
  mpz_class prev = 1;
  int swaps = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k] == 0) ++pivot;
    if (pivot == n) return -1;
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      ++swaps;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < width; ++j) {
        a[i][j] = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return swaps;
}

}  // namespace

RationalMatrix matrix_inverse_exact(const RationalMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return m;
  ScaledRows s = clear_denominators(m, n);
  for (std::size_t i = 0; i < n; ++i) s.rows[i][n + i] = 1;
  if (bareiss_forward(s.rows, n) < 0) throw Singular("matrix is singular");

  // Back substitution on the triangular system U X = R, then undo the row scaling:
  // (D A)^-1 = A^-1 D^-1, so A^-1 = X D.
  RationalMatrix x(n);
  Rational acc;
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t i = n; i-- > 0;) {
      acc = s.rows[i][n + col];
      for (std::size_t j = i + 1; j < n; ++j) {
        if (s.rows[i][j] != 0) acc -= s.rows[i][j] * x(j, col);
      }
      acc /= s.rows[i][i];
      x(i, col) = acc;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    const Rational d(s.scale[j]);
    for (std::size_t i = 0; i < n; ++i) x(i, j) *= d;
  }
  return x;
}

Rational determinant(const RationalMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return 1;
  ScaledRows s = clear_denominators(m, 0);
  const int swaps = bareiss_forward(s.rows, n);
  if (swaps < 0) return 0;
  Rational det(s.rows[n - 1][n - 1]);
  for (const auto& d : s.scale) det /= d;
  return swaps % 2 ? Rational(-det) : det;
}

}  // namespace cliffrep
