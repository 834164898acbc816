// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "cliffrep/kernels.hpp"

namespace cliffrep::kernels {
namespace {

// Per-lane parity of a 32-bit word, left in bit 0.
inline __m256i parity32(__m256i x) {
  x = _mm256_xor_si256(x, _mm256_srli_epi32(x, 16));
  x = _mm256_xor_si256(x, _mm256_srli_epi32(x, 8));
  x = _mm256_xor_si256(x, _mm256_srli_epi32(x, 4));
  x = _mm256_xor_si256(x, _mm256_srli_epi32(x, 2));
  x = _mm256_xor_si256(x, _mm256_srli_epi32(x, 1));
  return _mm256_and_si256(x, _mm256_set1_epi32(1));
}

}  // namespace

void blade_row_avx2(RowMasks row, const std::uint32_t* right, std::int8_t* sign, std::uint32_t* blade,
                    std::size_t count) noexcept {
  const __m256i flip = _mm256_set1_epi32(static_cast<int>(row.flip));
  const __m256i zero_mask = _mm256_set1_epi32(static_cast<int>(row.zero));
  const __m256i left = _mm256_set1_epi32(static_cast<int>(row.left));
  const __m256i one = _mm256_set1_epi32(1);
  const __m256i zero = _mm256_setzero_si256();

  std::size_t i = 0;
  for (; i + 8 <= count; i += 8) {
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(right + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(blade + i), _mm256_xor_si256(left, b));

    // 1 - 2 * parity, then cleared where a null generator repeats.
    const __m256i odd = parity32(_mm256_and_si256(b, flip));
    __m256i s = _mm256_sub_epi32(one, _mm256_add_epi32(odd, odd));
    const __m256i alive = _mm256_cmpeq_epi32(_mm256_and_si256(b, zero_mask), zero);
    s = _mm256_and_si256(s, alive);

    // Narrow 8 x int32 to 8 x int8.
    const __m128i lo = _mm256_castsi256_si128(s);
    const __m128i hi = _mm256_extracti128_si256(s, 1);
    const __m128i w16 = _mm_packs_epi32(lo, hi);
    const __m128i w8 = _mm_packs_epi16(w16, w16);
    _mm_storel_epi64(reinterpret_cast<__m128i*>(sign + i), w8);
  }
  if (i < count) blade_row_scalar(row, right + i, sign + i, blade + i, count - i);
}

}  // namespace cliffrep::kernels
