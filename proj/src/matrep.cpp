#include "cliffrep/matrep.hpp"

#include <stdexcept>

#include "cliffrep/error.hpp"
#include "cliffrep/limits.hpp"

namespace cliffrep {
namespace {

const Signature& require_nondegenerate(const Signature& sig) {
  if (sig.degenerate()) {
    throw DegenerateSignature("matrix representation needs a non-degenerate signature, got " + sig.to_string());
  }
  require_dense(sig.n());
  return sig;
}

}  // namespace

RepContext::RepContext(const Signature& sig)
    : sig_(require_nondegenerate(sig)), table_(build_mult_table(sig)), scalars_(build_scalar_table(sig)) {}

SparseSignedMatrix RepContext::blade_image(Ordinal s) const {
  return SparseSignedMatrix::diagonal(scalars_.diag()) * coefficients(s);
}

RepMatrix RepContext::rep_blade(Ordinal s) const {
  const SparseSignedMatrix e = blade_image(s);
  RepMatrix out(e.dim());
  for (std::size_t i = 0; i < e.dim(); ++i) {
    if (e.sign[i] != 0) out(i, e.col[i]) = e.sign[i];
  }
  return out;
}

RepMatrix RepContext::rep_multivector(const Multivector& u) const {
  if (!(u.signature() == sig_)) throw SignatureMismatch("multivector is not in " + sig_.to_string());
  RepMatrix out(dim());
  for (Ordinal s = 1; s <= dim(); ++s) {
    const Rational& a = u.coeff(s);
    if (sgn(a) == 0) continue;
    const SparseSignedMatrix e = blade_image(s);
    for (std::size_t i = 0; i < e.dim(); ++i) {
      if (e.sign[i] > 0) out(i, e.col[i]) += a;
      if (e.sign[i] < 0) out(i, e.col[i]) -= a;
    }
  }
  return out;
}

RepMatrix rep_blade(const Signature& sig, Ordinal s) {
  const RepContext ctx(sig);
  if (s < 1 || s > ctx.dim()) throw IndexOutOfRange("ordinal " + std::to_string(s) + " out of range");
  return ctx.rep_blade(s);
}

RepMatrix rep_multivector(const Multivector& u) { return RepContext(u.signature()).rep_multivector(u); }

Multivector unrep(const Signature& sig, const RepMatrix& e) {
  if (sig.degenerate()) {
    throw DegenerateSignature("matrix representation needs a non-degenerate signature, got " + sig.to_string());
  }
  const std::size_t dim = std::size_t{1} << sig.n();
  if (e.dim() != dim) {
    throw DimensionMismatch("matrix is " + std::to_string(e.dim()) + "x" + std::to_string(e.dim()) + ", " +
                            sig.to_string() + " needs " + std::to_string(dim));
  }
  std::vector<Rational> coeffs(dim);
  for (std::size_t j = 0; j < dim; ++j) coeffs[j] = e(0, j);
  return Multivector(sig, std::move(coeffs));
}

Multivector mv_inverse(const Multivector& u) {
  const RepContext ctx(u.signature());
  RepMatrix inverse;
  try {
    inverse = matrix_inverse_exact(ctx.rep_multivector(u));
  } catch (const Singular&) {
    throw ZeroDivisor("multivector is a zero divisor (singular representation) and has no inverse");
  }
  Multivector v = unrep(u.signature(), inverse);
  const Multivector one = Multivector::scalar(u.signature(), 1);
  if (!(u * v == one) || !(v * u == one)) {
    throw std::logic_error("inverse failed its multiplication check");
  }
  return v;
}

}  // namespace cliffrep
