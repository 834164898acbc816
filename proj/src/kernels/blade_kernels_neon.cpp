#include <arm_neon.h>

#include "cliffrep/kernels.hpp"

namespace cliffrep::kernels {

void blade_row_neon(RowMasks row, const std::uint32_t* right, std::int8_t* sign, std::uint32_t* blade,
                    std::size_t count) noexcept {
  const uint32x4_t flip = vdupq_n_u32(row.flip);
  const uint32x4_t zero_mask = vdupq_n_u32(row.zero);
  const uint32x4_t left = vdupq_n_u32(row.left);
  const int32x4_t one = vdupq_n_s32(1);

  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const uint32x4_t b = vld1q_u32(right + i);
    vst1q_u32(blade + i, veorq_u32(left, b));

    // Byte popcount of b & flip, summed per lane, gives the parity in bit 0.
    const uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u32(vandq_u32(b, flip)));
    const uint32x4_t counts = vpaddlq_u16(vpaddlq_u8(bytes));
    const int32x4_t odd = vreinterpretq_s32_u32(vandq_u32(counts, vdupq_n_u32(1)));
    int32x4_t s = vsubq_s32(one, vaddq_s32(odd, odd));
    const uint32x4_t alive = vceqq_u32(vandq_u32(b, zero_mask), vdupq_n_u32(0));
    s = vandq_s32(s, vreinterpretq_s32_u32(alive));

    const int16x4_t w16 = vmovn_s32(s);
    const int8x8_t w8 = vmovn_s16(vcombine_s16(w16, w16));
    sign[i + 0] = vget_lane_s8(w8, 0);
    sign[i + 1] = vget_lane_s8(w8, 1);
    sign[i + 2] = vget_lane_s8(w8, 2);
    sign[i + 3] = vget_lane_s8(w8, 3);
  }
  if (i < count) blade_row_scalar(row, right + i, sign + i, blade + i, count - i);
}

}  // namespace cliffrep::kernels
