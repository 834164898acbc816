#pragma once

#include <cstdint>
#include <vector>

#include "cliffrep/index_set.hpp"
#include "cliffrep/report.hpp"
#include "cliffrep/signature.hpp"

namespace cliffrep {

/// One cell of the multiplication table: e_M e_N = sign * e_{ordinal}. Zero cells store
/// ordinal 1.
struct TableEntry {
  int sign = 0;
  Ordinal ordinal = 1;

  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

/// The 2^n x 2^n table M of simplified blade products, rows/columns in graded-lex order.
class MultTable {
 public:
  MultTable(const Signature& sig, std::vector<std::int8_t> signs, std::vector<std::uint16_t> ordinals);

  const Signature& signature() const noexcept { return sig_; }
  std::size_t dim() const noexcept { return dim_; }

  /// 1-based row mu, column nu.
  TableEntry at(Ordinal mu, Ordinal nu) const;
  int sign(Ordinal mu, Ordinal nu) const noexcept { return signs_[(mu - 1) * dim_ + (nu - 1)]; }
  Ordinal ordinal(Ordinal mu, Ordinal nu) const noexcept { return ordinals_[(mu - 1) * dim_ + (nu - 1)]; }

 private:
  Signature sig_;
  std::size_t dim_;
  std::vector<std::int8_t> signs_;
  std::vector<std::uint16_t> ordinals_;
};

/// Diagonal of G: entry mu = e_M * e_M.
class ScalarTable {
 public:
  ScalarTable(const Signature& sig, std::vector<std::int8_t> diag);

  const Signature& signature() const noexcept { return sig_; }
  std::size_t dim() const noexcept { return diag_.size(); }
  int operator()(Ordinal mu) const { return diag_.at(mu - 1); }
  const std::vector<std::int8_t>& diag() const noexcept { return diag_; }

 private:
  Signature sig_;
  std::vector<std::int8_t> diag_;
};

/// Square matrix with at most one nonzero (+-1) per row. Row i holds sign[i] at column col[i];
/// sign 0 marks an empty row. Indices here are 0-based.
struct SparseSignedMatrix {
  std::vector<std::uint32_t> col;
  std::vector<std::int8_t> sign;

  std::size_t dim() const noexcept { return col.size(); }

  static SparseSignedMatrix identity(std::size_t dim);
  static SparseSignedMatrix diagonal(const std::vector<std::int8_t>& d);

  /// Exactly one nonzero per row and per column.
  bool is_signed_permutation() const;
  /// Every nonzero sits on the diagonal.
  bool is_diagonal() const;

  SparseSignedMatrix transpose() const;
  SparseSignedMatrix scaled(int s) const;
  /// Dense value at 0-based (i, j).
  int value(std::size_t i, std::size_t j) const noexcept {
    return col[i] == j ? sign[i] : 0;
  }

  friend SparseSignedMatrix operator*(const SparseSignedMatrix& a, const SparseSignedMatrix& b);
  friend bool operator==(const SparseSignedMatrix& a, const SparseSignedMatrix& b);
};

/// Throws CapExceeded above dense_cap().
MultTable build_mult_table(const Signature& sig);
ScalarTable build_scalar_table(const Signature& sig);

/// A_s: the signs of the cells of M whose result is e_s. Throws IndexOutOfRange.
SparseSignedMatrix coefficient_matrix(const MultTable& m, Ordinal s);

/// Ordinal of the complement blade; equals 2^n + 1 - lambda in graded-lex order.
Ordinal mirror_ordinal(unsigned n, Ordinal lambda);

/// Structural checks on M and G: identity row/column, diagonal, row/column distinctness,
/// G diagonal and G^2 = I (or H = G^2 idempotent), the product-structure identity, the mirror
/// relation and the dual-structure identities.
Report check_table_lemmas(const MultTable& m, const ScalarTable& g);

}  // namespace cliffrep
