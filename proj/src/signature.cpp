#include "cliffrep/signature.hpp"

#include <stdexcept>

#include "cliffrep/error.hpp"
#include "cliffrep/limits.hpp"

namespace cliffrep {
namespace {

std::uint32_t block_mask(unsigned first, unsigned count) {
  if (count == 0) return 0;
  return ((std::uint32_t{1} << count) - 1) << first;
}

}  // namespace

Signature::Signature(unsigned p, unsigned q, unsigned r) : p_(p), q_(q), r_(r) {
  const unsigned n = p + q + r;
  if (n == 0) throw std::invalid_argument("signature needs at least one generator");
  const unsigned cap = blade_cap();
  if (n > cap) {
    throw CapExceeded("signature dimension " + std::to_string(n) + " exceeds the cap of " + std::to_string(cap));
  }
  negative_ = block_mask(p, q);
  null_ = block_mask(p + q, r);
}

int Signature::sigma(unsigned k) const {
  if (k < 1 || k > n()) {
    throw IndexOutOfRange("generator e" + std::to_string(k) + " outside 1.." + std::to_string(n()));
  }
  if (k <= p_) return 1;
  if (k <= p_ + q_) return -1;
  return 0;
}

std::string Signature::to_string() const {
  std::string s = "Cl(" + std::to_string(p_) + "," + std::to_string(q_);
  if (r_ > 0) s += "," + std::to_string(r_);
  return s + ")";
}

}  // namespace cliffrep
