#include "cliffrep/blade.hpp"

#include <bit>
#include <cstdint>

#include "cliffrep/error.hpp"
#include "cliffrep/kernels.hpp"

namespace cliffrep {

int permutation_sign(std::span<const unsigned> seq) {
  // Inversion parity: for each element, the parity of earlier elements strictly greater than
  // it. Only parities matter, so the multiset of earlier elements is kept as a toggle mask.
  std::uint64_t seen = 0;
  unsigned parity = 0;
  for (unsigned k : seq) {
    if (k < 1 || k > 64) throw IndexOutOfRange("generator index " + std::to_string(k) + " out of range");
    const std::uint64_t above = k == 64 ? 0 : ~std::uint64_t{0} << k;
    parity ^= static_cast<unsigned>(std::popcount(seen & above)) & 1u;
    seen ^= std::uint64_t{1} << (k - 1);
  }
  return parity ? -1 : 1;
}

int reorder_sign(IndexSet a, IndexSet b) noexcept {
  return (std::popcount(b.bits() & kernels::prefix_xor_above(a.bits())) & 1) ? -1 : 1;
}

SignedBlade blade_product(const Signature& sig, IndexSet s, IndexSet t) {
  const std::uint32_t limit = sig.full_mask();
  if ((s.bits() | t.bits()) & ~limit) {
    throw IndexOutOfRange("blade outside " + sig.to_string() + ": " + s.to_string() + " * " + t.to_string());
  }
  const auto row = kernels::row_masks(s.bits(), sig.negative_mask(), sig.null_mask());
  if (t.bits() & row.zero) return SignedBlade::zero();
  const int sign = (std::popcount(t.bits() & row.flip) & 1) ? -1 : 1;
  return {sign, s ^ t};
}

int blade_square(const Signature& sig, IndexSet s) { return blade_product(sig, s, s).sign; }

int duality_coefficient(const Signature& sig, IndexSet s) {
  const IndexSet pseudo(sig.full_mask());
  if (blade_square(sig, s) == 0) throw DegenerateDual("blade " + s.to_string() + " squares to zero");
  const SignedBlade p = blade_product(sig, s ^ pseudo, pseudo);
  if (p.sign == 0) throw DegenerateDual("e_{S^I} e_I vanishes for S = " + s.to_string());
  return p.sign;
}

}  // namespace cliffrep
