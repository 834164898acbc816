#pragma once

#include <span>
#include <vector>

#include "cliffrep/blade.hpp"
#include "cliffrep/index_set.hpp"
#include "cliffrep/rational.hpp"
#include "cliffrep/signature.hpp"

namespace cliffrep {

/// Element of Cl(p,q,r): 2^n exact coefficients in graded-lex order. Ordinal 1 is the
/// scalar part and ordinal 2^n the pseudoscalar part.
class Multivector {
 public:
  /// The zero element.
  explicit Multivector(const Signature& sig);
  /// Throws DimensionMismatch unless coeffs.size() == 2^n.
  Multivector(const Signature& sig, std::vector<Rational> coeffs);

  static Multivector scalar(const Signature& sig, const Rational& value);
  static Multivector blade(const Signature& sig, IndexSet s, const Rational& coeff = 1);
  static Multivector basis(const Signature& sig, Ordinal j);

  const Signature& signature() const noexcept { return sig_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  /// 1-based access. Throws IndexOutOfRange.
  const Rational& coeff(Ordinal j) const;
  void set_coeff(Ordinal j, const Rational& value);
  const Rational& coeff(IndexSet s) const;

  bool is_zero() const;

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(const Rational& s);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, const Rational& s) { return a *= s; }
  friend Multivector operator*(const Rational& s, Multivector a) { return a *= s; }
  Multivector operator-() const;

  friend bool operator==(const Multivector& a, const Multivector& b);

 private:
  std::span<Rational> mutable_coeffs() noexcept { return coeffs_; }
  friend Multivector geometric_product(const Multivector&, const Multivector&);

  Signature sig_;
  std::vector<Rational> coeffs_;
};

/// Bilinear extension of blade_product. Throws SignatureMismatch.
Multivector geometric_product(const Multivector& u, const Multivector& v);
inline Multivector operator*(const Multivector& u, const Multivector& v) { return geometric_product(u, v); }

/// Keeps only the grade-k part.
Multivector grade_projection(const Multivector& u, unsigned k);

/// <u v>_0.
Rational scalar_product(const Multivector& u, const Multivector& v);

/// Q(v) = <v v>_0.
Rational quadratic_form(const Multivector& v);

/// e_1 ... e_n.
Multivector pseudoscalar(const Signature& sig);

/// Blade-wise complement: sum_S a_S e_{S xor I}.
Multivector algebraic_dual(const Multivector& u);

}  // namespace cliffrep
