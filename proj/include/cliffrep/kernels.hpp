#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace cliffrep::kernels {

// Row kernel for the blade product e_a e_b over a batch of right-hand blades b[i]:
//
//   blade[i] = a ^ b[i]
//   sign[i]  = 0                               if a & b[i] & null != 0
//            = (-1)^parity(b[i] & flip)        otherwise
//
// where flip = prefix_xor(a) ^ (a & negative) folds the reordering transpositions and the
// negative squares into one mask (see row_flip_mask).

struct RowMasks {
  std::uint32_t flip;  // row_flip_mask(a, negative)
  std::uint32_t zero;  // a & null
  std::uint32_t left;  // a
};

/// Bit j is the parity of the bits of a above position j.
constexpr std::uint32_t prefix_xor_above(std::uint32_t a) noexcept {
  std::uint32_t x = a >> 1;
  x ^= x >> 1;
  x ^= x >> 2;
  x ^= x >> 4;
  x ^= x >> 8;
  x ^= x >> 16;
  return x;
}

constexpr RowMasks row_masks(std::uint32_t a, std::uint32_t negative, std::uint32_t null) noexcept {
  return {prefix_xor_above(a) ^ (a & negative), a & null, a};
}

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa) noexcept;

/// Best ISA available on this CPU.
Isa detect_isa() noexcept;
/// ISA currently used by blade_row.
Isa active_isa() noexcept;
/// Returns false (and changes nothing) if the ISA is not compiled in or not supported.
bool select_isa(Isa isa) noexcept;
bool isa_available(Isa isa) noexcept;

/// Dispatching entry point. Spans must have equal length.
void blade_row(RowMasks row, std::span<const std::uint32_t> right, std::span<std::int8_t> sign,
               std::span<std::uint32_t> blade);

// Individual variants, exposed for equivalence tests and benchmarks.
void blade_row_scalar(RowMasks row, const std::uint32_t* right, std::int8_t* sign, std::uint32_t* blade,
                      std::size_t count) noexcept;
#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)
void blade_row_avx2(RowMasks row, const std::uint32_t* right, std::int8_t* sign, std::uint32_t* blade,
                    std::size_t count) noexcept;
#endif
#if defined(__aarch64__)
void blade_row_neon(RowMasks row, const std::uint32_t* right, std::int8_t* sign, std::uint32_t* blade,
                    std::size_t count) noexcept;
#endif

}  // namespace cliffrep::kernels
