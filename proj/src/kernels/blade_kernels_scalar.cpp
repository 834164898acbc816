#include <bit>

#include "cliffrep/kernels.hpp"

namespace cliffrep::kernels {

void blade_row_scalar(RowMasks row, const std::uint32_t* right, std::int8_t* sign, std::uint32_t* blade,
                      std::size_t count) noexcept {
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint32_t b = right[i];
    const int odd = std::popcount(b & row.flip) & 1;
    sign[i] = (b & row.zero) ? std::int8_t{0} : static_cast<std::int8_t>(1 - 2 * odd);
    blade[i] = row.left ^ b;
  }
}

}  // namespace cliffrep::kernels
