#include "cliffrep/multivector.hpp"

#include <cstdint>

#include "cliffrep/error.hpp"
#include "cliffrep/kernels.hpp"

namespace cliffrep {
namespace {

void require_same(const Signature& a, const Signature& b) {
  if (!(a == b)) throw SignatureMismatch("signature mismatch: " + a.to_string() + " vs " + b.to_string());
}

std::size_t basis_size(const Signature& sig) { return std::size_t{1} << sig.n(); }

}  // namespace

Multivector::Multivector(const Signature& sig) : sig_(sig), coeffs_(basis_size(sig)) {}

Multivector::Multivector(const Signature& sig, std::vector<Rational> coeffs) : sig_(sig), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != basis_size(sig)) {
    throw DimensionMismatch("expected " + std::to_string(basis_size(sig)) + " coefficients, got " +
                            std::to_string(coeffs_.size()));
  }
}

Multivector Multivector::scalar(const Signature& sig, const Rational& value) {
  Multivector m(sig);
  m.coeffs_[0] = value;
  return m;
}

Multivector Multivector::blade(const Signature& sig, IndexSet s, const Rational& coeff) {
  Multivector m(sig);
  m.coeffs_[basis_ordinal(sig.n(), s) - 1] = coeff;
  return m;
}

Multivector Multivector::basis(const Signature& sig, Ordinal j) {
  Multivector m(sig);
  m.set_coeff(j, 1);
  return m;
}

const Rational& Multivector::coeff(Ordinal j) const {
  if (j < 1 || j > coeffs_.size()) throw IndexOutOfRange("ordinal " + std::to_string(j) + " out of range");
  return coeffs_[j - 1];
}

void Multivector::set_coeff(Ordinal j, const Rational& value) {
  if (j < 1 || j > coeffs_.size()) throw IndexOutOfRange("ordinal " + std::to_string(j) + " out of range");
  coeffs_[j - 1] = value;
}

const Rational& Multivector::coeff(IndexSet s) const { return coeffs_[basis_ordinal(sig_.n(), s) - 1]; }

bool Multivector::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  require_same(sig_, o.sig_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  require_same(sig_, o.sig_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Multivector Multivector::operator-() const {
  Multivector m(*this);
  for (auto& c : m.coeffs_) c = -c;
  return m;
}

bool operator==(const Multivector& a, const Multivector& b) { return a.sig_ == b.sig_ && a.coeffs_ == b.coeffs_; }

Multivector geometric_product(const Multivector& u, const Multivector& v) {
  require_same(u.signature(), v.signature());
  const Signature& sig = u.signature();
  const BasisOrder& order = basis_order(sig.n());
  const auto masks = order.masks();

  // Compact the nonzero right-hand terms so the row kernel only sees live blades.
  std::vector<std::uint32_t> right;
  std::vector<const Rational*> right_coeff;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (sgn(v.coeffs()[j]) != 0) {
      right.push_back(masks[j]);
      right_coeff.push_back(&v.coeffs()[j]);
    }
  }

  Multivector out(sig);
  if (right.empty()) return out;
  auto acc = out.mutable_coeffs();
  std::vector<std::int8_t> signs(right.size());
  std::vector<std::uint32_t> blades(right.size());
  Rational term;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Rational& a = u.coeffs()[i];
    if (sgn(a) == 0) continue;
    kernels::blade_row(kernels::row_masks(masks[i], sig.negative_mask(), sig.null_mask()), right, signs, blades);
    for (std::size_t k = 0; k < right.size(); ++k) {
      if (signs[k] == 0) continue;
      term = a * *right_coeff[k];
      Rational& slot = acc[order.ordinal_of_mask(blades[k]) - 1];
      if (signs[k] > 0) {
        slot += term;
      } else {
        slot -= term;
      }
    }
  }
  return out;
}

Multivector grade_projection(const Multivector& u, unsigned k) {
  const Signature& sig = u.signature();
  if (k > sig.n()) throw IndexOutOfRange("grade " + std::to_string(k) + " above n = " + std::to_string(sig.n()));
  const auto masks = basis_order(sig.n()).masks();
  std::vector<Rational> coeffs(u.coeffs().begin(), u.coeffs().end());
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (IndexSet(masks[j]).grade() != k) coeffs[j] = 0;
  }
  return Multivector(sig, std::move(coeffs));
}

Rational scalar_product(const Multivector& u, const Multivector& v) {
  require_same(u.signature(), v.signature());
  // Only e_S e_S contributes to the scalar part.
  const Signature& sig = u.signature();
  const auto masks = basis_order(sig.n()).masks();
  Rational sum;
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (sgn(u.coeffs()[j]) == 0 || sgn(v.coeffs()[j]) == 0) continue;
    const int s = blade_square(sig, IndexSet(masks[j]));
    if (s > 0) sum += u.coeffs()[j] * v.coeffs()[j];
    if (s < 0) sum -= u.coeffs()[j] * v.coeffs()[j];
  }
  return sum;
}

Rational quadratic_form(const Multivector& v) { return scalar_product(v, v); }

Multivector pseudoscalar(const Signature& sig) { return Multivector::blade(sig, IndexSet(sig.full_mask())); }

Multivector algebraic_dual(const Multivector& u) {
  const Signature& sig = u.signature();
  const BasisOrder& order = basis_order(sig.n());
  Multivector out(sig);
  for (std::size_t j = 0; j < u.size(); ++j) {
    const IndexSet complement(order.masks()[j] ^ sig.full_mask());
    out.set_coeff(order.ordinal(complement), u.coeffs()[j]);
  }
  return out;
}

}  // namespace cliffrep
