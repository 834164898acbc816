#pragma once

#include <span>

#include "cliffrep/index_set.hpp"
#include "cliffrep/signature.hpp"

namespace cliffrep {

/// sign * e_blade with sign in {-1, 0, +1}; a zero sign always carries the empty blade.
struct SignedBlade {
  int sign = 0;
  IndexSet blade;

  static SignedBlade zero() noexcept { return {}; }

  friend bool operator==(const SignedBlade&, const SignedBlade&) = default;
};

/// (-1)^(inversion count) of a generator sequence; repeats allowed, indices in 1..64.
int permutation_sign(std::span<const unsigned> seq);

/// Parity of the transpositions needed to bring e_a e_b into canonical order,
/// computed as parity(b & prefix_xor(a)).
int reorder_sign(IndexSet a, IndexSet b) noexcept;

/// e_S e_T reduced to sign * e_{S xor T}.
SignedBlade blade_product(const Signature& sig, IndexSet s, IndexSet t);

/// Sign of e_S e_S.
int blade_square(const Signature& sig, IndexSet s);

/// q_s with e_{S xor I} e_I = q_s e_S. Throws DegenerateDual when the product vanishes.
int duality_coefficient(const Signature& sig, IndexSet s);

}  // namespace cliffrep
