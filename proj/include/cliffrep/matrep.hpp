#pragma once

#include <memory>

#include "cliffrep/multivector.hpp"
#include "cliffrep/rational_matrix.hpp"
#include "cliffrep/report.hpp"
#include "cliffrep/tables.hpp"

namespace cliffrep {

using RepMatrix = RationalMatrix;

/// Cached M and G for one non-degenerate signature; the blade images E_s = G A_s are derived
/// from them. Immutable once built.
class RepContext {
 public:
  /// Throws DegenerateSignature for r > 0 and CapExceeded above dense_cap().
  explicit RepContext(const Signature& sig);

  const Signature& signature() const noexcept { return sig_; }
  std::size_t dim() const noexcept { return table_.dim(); }
  const MultTable& table() const noexcept { return table_; }
  const ScalarTable& scalars() const noexcept { return scalars_; }

  /// A_s.
  SparseSignedMatrix coefficients(Ordinal s) const { return coefficient_matrix(table_, s); }
  /// E_s = G A_s in sparse form.
  SparseSignedMatrix blade_image(Ordinal s) const;

  RepMatrix rep_blade(Ordinal s) const;
  RepMatrix rep_multivector(const Multivector& u) const;

 private:
  Signature sig_;
  MultTable table_;
  ScalarTable scalars_;
};

RepMatrix rep_blade(const Signature& sig, Ordinal s);
RepMatrix rep_multivector(const Multivector& u);

/// First-row recovery. Throws DimensionMismatch or DegenerateSignature.
Multivector unrep(const Signature& sig, const RepMatrix& e);

/// Inverse through the matrix image; the result is checked by multiplication before it is
/// returned. Throws ZeroDivisor when rep(u) is singular.
Multivector mv_inverse(const Multivector& u);

/// The six identity families of the canonical representation (plus a dense cross-check for
/// n <= 6). Throws DegenerateSignature.
Report verify_representation(const Signature& sig);

}  // namespace cliffrep
