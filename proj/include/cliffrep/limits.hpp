#pragma once

namespace cliffrep {

inline constexpr unsigned kMaxBladeDimension = 16;
inline constexpr unsigned kMaxDenseDimension = 12;

// Both caps honour CLIFFREP_MAX_N, which can only lower them.
unsigned blade_cap();
unsigned dense_cap();

/// Throws CapExceeded when n is above dense_cap().
void require_dense(unsigned n);

}  // namespace cliffrep
