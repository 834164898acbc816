#include <atomic>
#include <cassert>

#include "cliffrep/kernels.hpp"

namespace cliffrep::kernels {
namespace {

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect_isa()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa detect_isa() noexcept {
  if (isa_available(Isa::avx2)) return Isa::avx2;
  if (isa_available(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

Isa active_isa() noexcept { return current().load(std::memory_order_relaxed); }

bool select_isa(Isa isa) noexcept {
  if (!isa_available(isa)) return false;
  current().store(isa, std::memory_order_relaxed);
  return true;
}

void blade_row(RowMasks row, std::span<const std::uint32_t> right, std::span<std::int8_t> sign,
               std::span<std::uint32_t> blade) {
  assert(sign.size() == right.size() && blade.size() == right.size());
  switch (active_isa()) {
#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)
    case Isa::avx2:
      blade_row_avx2(row, right.data(), sign.data(), blade.data(), right.size());
      return;
#endif
#if defined(__aarch64__)
    case Isa::neon:
      blade_row_neon(row, right.data(), sign.data(), blade.data(), right.size());
      return;
#endif
    default:
      blade_row_scalar(row, right.data(), sign.data(), blade.data(), right.size());
  }
}

}  // namespace cliffrep::kernels
