#include "cliffrep/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "cliffrep/error.hpp"

namespace cliffrep {
namespace {

unsigned env_cap(unsigned hard_cap) {
  const char* raw = std::getenv("CLIFFREP_MAX_N");
  if (raw == nullptr) return hard_cap;
  unsigned value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end) return hard_cap;
  return value < hard_cap ? value : hard_cap;
}

}  // namespace

unsigned blade_cap() { return env_cap(kMaxBladeDimension); }

unsigned dense_cap() { return env_cap(kMaxDenseDimension); }

void require_dense(unsigned n) {
  const unsigned cap = dense_cap();
  if (n > cap) {
    throw CapExceeded("dense 2^n x 2^n structures need n <= " + std::to_string(cap) + ", got n = " +
                      std::to_string(n));
  }
}

}  // namespace cliffrep
