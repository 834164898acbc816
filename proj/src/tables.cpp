#include "cliffrep/tables.hpp"

#include <algorithm>
#include <stdexcept>

#include "cliffrep/blade.hpp"
#include "cliffrep/error.hpp"
#include "cliffrep/kernels.hpp"
#include "cliffrep/limits.hpp"

namespace cliffrep {

MultTable::MultTable(const Signature& sig, std::vector<std::int8_t> signs, std::vector<std::uint16_t> ordinals)
    : sig_(sig), dim_(std::size_t{1} << sig.n()), signs_(std::move(signs)), ordinals_(std::move(ordinals)) {
  if (signs_.size() != dim_ * dim_ || ordinals_.size() != dim_ * dim_) {
    throw DimensionMismatch("multiplication table storage does not match 2^n x 2^n");
  }
}

TableEntry MultTable::at(Ordinal mu, Ordinal nu) const {
  if (mu < 1 || nu < 1 || mu > dim_ || nu > dim_) {
    throw IndexOutOfRange("table cell (" + std::to_string(mu) + "," + std::to_string(nu) + ") out of range");
  }
  return {sign(mu, nu), ordinal(mu, nu)};
}

ScalarTable::ScalarTable(const Signature& sig, std::vector<std::int8_t> diag) : sig_(sig), diag_(std::move(diag)) {
  if (diag_.size() != (std::size_t{1} << sig.n())) throw DimensionMismatch("scalar table length is not 2^n");
}

SparseSignedMatrix SparseSignedMatrix::identity(std::size_t dim) {
  SparseSignedMatrix m;
  m.col.resize(dim);
  m.sign.assign(dim, 1);
  for (std::size_t i = 0; i < dim; ++i) m.col[i] = static_cast<std::uint32_t>(i);
  return m;
}

SparseSignedMatrix SparseSignedMatrix::diagonal(const std::vector<std::int8_t>& d) {
  SparseSignedMatrix m = identity(d.size());
  m.sign = d;
  return m;
}

bool SparseSignedMatrix::is_signed_permutation() const {
  std::vector<bool> used(dim(), false);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sign[i] == 0 || col[i] >= dim() || used[col[i]]) return false;
    used[col[i]] = true;
  }
  return true;
}

bool SparseSignedMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sign[i] != 0 && col[i] != i) return false;
  }
  return true;
}

SparseSignedMatrix SparseSignedMatrix::transpose() const {
  if (!is_signed_permutation()) {
    // Transposing only stays row-sparse when columns are not shared.
    std::vector<bool> used(dim(), false);
    for (std::size_t i = 0; i < dim(); ++i) {
      if (sign[i] == 0) continue;
      if (used[col[i]]) throw std::logic_error("transpose of a matrix with a repeated column");
      used[col[i]] = true;
    }
  }
  SparseSignedMatrix t;
  t.col.assign(dim(), 0);
  t.sign.assign(dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sign[i] == 0) continue;
    t.col[col[i]] = static_cast<std::uint32_t>(i);
    t.sign[col[i]] = sign[i];
  }
  return t;
}

SparseSignedMatrix SparseSignedMatrix::scaled(int s) const {
  SparseSignedMatrix m = *this;
  for (auto& v : m.sign) v = static_cast<std::int8_t>(v * s);
  return m;
}

SparseSignedMatrix operator*(const SparseSignedMatrix& a, const SparseSignedMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("sparse product of different sizes");
  SparseSignedMatrix c;
  c.col.assign(a.dim(), 0);
  c.sign.assign(a.dim(), 0);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.sign[i] == 0) continue;
    const std::uint32_t k = a.col[i];
    c.sign[i] = static_cast<std::int8_t>(a.sign[i] * b.sign[k]);
    c.col[i] = c.sign[i] == 0 ? 0 : b.col[k];
  }
  return c;
}

bool operator==(const SparseSignedMatrix& a, const SparseSignedMatrix& b) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.sign[i] != b.sign[i]) return false;
    if (a.sign[i] != 0 && a.col[i] != b.col[i]) return false;
  }
  return true;
}

MultTable build_mult_table(const Signature& sig) {
  require_dense(sig.n());
  const BasisOrder& order = basis_order(sig.n());
  const auto masks = order.masks();
  const std::size_t dim = masks.size();

  std::vector<std::int8_t> signs(dim * dim);
  std::vector<std::uint16_t> ordinals(dim * dim);
  std::vector<std::uint32_t> row_blades(dim);
  for (std::size_t mu = 0; mu < dim; ++mu) {
    std::span<std::int8_t> row_signs(signs.data() + mu * dim, dim);
    kernels::blade_row(kernels::row_masks(masks[mu], sig.negative_mask(), sig.null_mask()), masks, row_signs,
                       row_blades);
    for (std::size_t nu = 0; nu < dim; ++nu) {
      ordinals[mu * dim + nu] =
          row_signs[nu] == 0 ? std::uint16_t{1} : static_cast<std::uint16_t>(order.ordinal_of_mask(row_blades[nu]));
    }
  }
  return MultTable(sig, std::move(signs), std::move(ordinals));
}

ScalarTable build_scalar_table(const Signature& sig) {
  require_dense(sig.n());
  const auto masks = basis_order(sig.n()).masks();
  std::vector<std::int8_t> diag(masks.size());
  for (std::size_t mu = 0; mu < masks.size(); ++mu) {
    diag[mu] = static_cast<std::int8_t>(blade_square(sig, IndexSet(masks[mu])));
  }
  return ScalarTable(sig, std::move(diag));
}

SparseSignedMatrix coefficient_matrix(const MultTable& m, Ordinal s) {
  const std::size_t dim = m.dim();
  if (s < 1 || s > dim) throw IndexOutOfRange("ordinal " + std::to_string(s) + " out of range");
  SparseSignedMatrix a;
  a.col.assign(dim, 0);
  a.sign.assign(dim, 0);
  // e_M e_N lands on e_s only for N = M xor S, so each row has one candidate cell.
  const BasisOrder& order = basis_order(m.signature().n());
  const std::uint32_t target = order.masks()[s - 1];
  for (Ordinal mu = 1; mu <= dim; ++mu) {
    const Ordinal nu = order.ordinal_of_mask(order.masks()[mu - 1] ^ target);
    const int sg = m.sign(mu, nu);
    if (sg != 0 && m.ordinal(mu, nu) == s) {
      a.col[mu - 1] = nu - 1;
      a.sign[mu - 1] = static_cast<std::int8_t>(sg);
    }
  }
  return a;
}

Ordinal mirror_ordinal(unsigned n, Ordinal lambda) {
  const IndexSet s = ordinal_to_indexset(n, lambda);
  return basis_ordinal(n, dual_blade(n, s));
}

}  // namespace cliffrep
