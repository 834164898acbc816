#pragma once

#include <cstdint>
#include <string>

namespace cliffrep {

/// Counts of generators squaring to +1, -1 and 0, in that block order.
class Signature {
 public:
  /// Throws std::invalid_argument for n = 0 and CapExceeded above blade_cap().
  Signature(unsigned p, unsigned q, unsigned r = 0);

  unsigned p() const noexcept { return p_; }
  unsigned q() const noexcept { return q_; }
  unsigned r() const noexcept { return r_; }
  unsigned n() const noexcept { return p_ + q_ + r_; }
  bool degenerate() const noexcept { return r_ > 0; }

  /// Square of generator e_k, k in 1..n. Throws IndexOutOfRange.
  int sigma(unsigned k) const;

  // Bit k-1 set for every generator k in the respective block.
  std::uint32_t negative_mask() const noexcept { return negative_; }
  std::uint32_t null_mask() const noexcept { return null_; }
  std::uint32_t full_mask() const noexcept { return (std::uint32_t{1} << n()) - 1; }

  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  unsigned p_;
  unsigned q_;
  unsigned r_;
  std::uint32_t negative_;
  std::uint32_t null_;
};

inline int sigma(const Signature& sig, unsigned k) { return sig.sigma(k); }

}  // namespace cliffrep
