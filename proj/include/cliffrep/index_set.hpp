#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cliffrep {

/// 1-based position of a blade in the graded-lexicographic basis.
using Ordinal = std::uint32_t;

/// Multi-index S of a basis blade e_S, stored as a bitmask (bit k-1 <=> generator k).
/// The empty set is the scalar blade.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint32_t bits) : bits_(bits) {}

  /// Throws IndexOutOfRange for an index outside 1..32 and std::invalid_argument on repeats.
  static IndexSet of(std::initializer_list<unsigned> indices);
  static IndexSet of(std::span<const unsigned> indices);

  constexpr std::uint32_t bits() const noexcept { return bits_; }
  constexpr unsigned grade() const noexcept { return static_cast<unsigned>(std::popcount(bits_)); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(unsigned k) const noexcept { return k >= 1 && k <= 32 && ((bits_ >> (k - 1)) & 1u); }

  /// Highest generator index present, 0 for the scalar blade.
  constexpr unsigned max_index() const noexcept { return 32u - static_cast<unsigned>(std::countl_zero(bits_)); }

  /// Indices in increasing order.
  std::vector<unsigned> indices() const;

  constexpr IndexSet symmetric_difference(IndexSet o) const noexcept { return IndexSet(bits_ ^ o.bits_); }
  constexpr IndexSet intersection(IndexSet o) const noexcept { return IndexSet(bits_ & o.bits_); }

  friend constexpr IndexSet operator^(IndexSet a, IndexSet b) noexcept { return a.symmetric_difference(b); }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) noexcept { return a.intersection(b); }
  friend constexpr bool operator==(IndexSet, IndexSet) = default;

  /// "{1,3}" style.
  std::string to_string() const;

 private:
  std::uint32_t bits_ = 0;
};

/// Graded-lexicographic strict order: grade first, then lexicographic on sorted indices.
bool graded_lex_less(IndexSet a, IndexSet b) noexcept;

/// Position of e_S in the graded-lex basis of dimension n. Throws IndexOutOfRange if S uses
/// generators above n.
Ordinal basis_ordinal(unsigned n, IndexSet s);

/// Inverse of basis_ordinal. Throws IndexOutOfRange unless 1 <= j <= 2^n.
IndexSet ordinal_to_indexset(unsigned n, Ordinal j);

/// Complement S xor {1..n}.
IndexSet dual_blade(unsigned n, IndexSet s);

/// Cached ordinal <-> mask lookup for one dimension.
class BasisOrder {
 public:
  explicit BasisOrder(unsigned n);

  unsigned n() const noexcept { return n_; }
  std::size_t size() const noexcept { return masks_.size(); }

  /// Masks in ordinal order; element j-1 holds the blade of ordinal j.
  std::span<const std::uint32_t> masks() const noexcept { return masks_; }

  IndexSet blade(Ordinal j) const { return IndexSet(masks_.at(j - 1)); }
  Ordinal ordinal(IndexSet s) const { return ordinals_.at(s.bits()); }
  Ordinal ordinal_of_mask(std::uint32_t mask) const noexcept { return ordinals_[mask]; }

 private:
  unsigned n_;
  std::vector<std::uint32_t> masks_;
  std::vector<Ordinal> ordinals_;
};

/// Shared lookup for 1 <= n <= kMaxBladeDimension; built once.
const BasisOrder& basis_order(unsigned n);

}  // namespace cliffrep
