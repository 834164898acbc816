#include "cliffrep/index_set.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "cliffrep/error.hpp"
#include "cliffrep/limits.hpp"

namespace cliffrep {
namespace {

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t c = 1;
  for (unsigned i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

void check_dimension(unsigned n) {
  if (n == 0 || n > 31) throw IndexOutOfRange("dimension " + std::to_string(n) + " out of range");
}

}  // namespace

IndexSet IndexSet::of(std::span<const unsigned> indices) {
  std::uint32_t bits = 0;
  for (unsigned k : indices) {
    if (k < 1 || k > 32) throw IndexOutOfRange("generator index " + std::to_string(k) + " out of range");
    const std::uint32_t bit = std::uint32_t{1} << (k - 1);
    if (bits & bit) throw std::invalid_argument("repeated generator index " + std::to_string(k));
    bits |= bit;
  }
  return IndexSet(bits);
}

IndexSet IndexSet::of(std::initializer_list<unsigned> indices) {
  return of(std::span<const unsigned>(indices.begin(), indices.size()));
}

std::vector<unsigned> IndexSet::indices() const {
  std::vector<unsigned> out;
  out.reserve(grade());
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<unsigned>(std::countr_zero(b)) + 1);
  return out;
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (unsigned k : indices()) {
    if (!first) s += ",";
    s += std::to_string(k);
    first = false;
  }
  return s + "}";
}

bool graded_lex_less(IndexSet a, IndexSet b) noexcept {
  if (a.grade() != b.grade()) return a.grade() < b.grade();
  // Same grade: the first differing generator decides, the lower index comes first.
  const std::uint32_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const std::uint32_t lowest = diff & (~diff + 1);
  return (a.bits() & lowest) != 0;
}

Ordinal basis_ordinal(unsigned n, IndexSet s) {
  check_dimension(n);
  if (s.max_index() > n) throw IndexOutOfRange("blade " + s.to_string() + " outside dimension " + std::to_string(n));
  const unsigned k = s.grade();
  std::uint64_t ordinal = 1;
  for (unsigned g = 0; g < k; ++g) ordinal += binomial(n, g);
  unsigned prev = 0;
  unsigned i = 1;
  for (unsigned c : s.indices()) {
    for (unsigned j = prev + 1; j < c; ++j) ordinal += binomial(n - j, k - i);
    prev = c;
    ++i;
  }
  return static_cast<Ordinal>(ordinal);
}

IndexSet ordinal_to_indexset(unsigned n, Ordinal j) {
  check_dimension(n);
  const std::uint64_t total = std::uint64_t{1} << n;
  if (j < 1 || j > total) {
    throw IndexOutOfRange("ordinal " + std::to_string(j) + " outside 1.." + std::to_string(total));
  }
  std::uint64_t rank = j - 1;
  unsigned k = 0;
  while (rank >= binomial(n, k)) rank -= binomial(n, k++);
  std::uint32_t bits = 0;
  unsigned next = 1;
  for (unsigned i = 1; i <= k; ++i) {
    for (;; ++next) {
      const std::uint64_t block = binomial(n - next, k - i);
      if (rank < block) break;
      rank -= block;
    }
    bits |= std::uint32_t{1} << (next - 1);
    ++next;
  }
  return IndexSet(bits);
}

IndexSet dual_blade(unsigned n, IndexSet s) {
  check_dimension(n);
  if (s.max_index() > n) throw IndexOutOfRange("blade " + s.to_string() + " outside dimension " + std::to_string(n));
  return IndexSet(s.bits() ^ ((std::uint32_t{1} << n) - 1));
}

BasisOrder::BasisOrder(unsigned n) : n_(n) {
  check_dimension(n);
  const std::size_t size = std::size_t{1} << n;
  masks_.resize(size);
  ordinals_.resize(size);
  // Walk grades in order; within a grade, Gosper's hack enumerates k-subsets in colex order
  // of the bitmask, so sort each block into lexicographic order afterwards.
  std::size_t pos = 0;
  for (unsigned k = 0; k <= n; ++k) {
    const std::size_t begin = pos;
    if (k == 0) {
      masks_[pos++] = 0;
    } else {
      std::uint64_t v = (std::uint64_t{1} << k) - 1;
      while (v < (std::uint64_t{1} << n)) {
        masks_[pos++] = static_cast<std::uint32_t>(v);
        const std::uint64_t t = v | (v - 1);
        v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
      }
    }
    std::sort(masks_.begin() + static_cast<std::ptrdiff_t>(begin), masks_.begin() + static_cast<std::ptrdiff_t>(pos),
              [](std::uint32_t a, std::uint32_t b) { return graded_lex_less(IndexSet(a), IndexSet(b)); });
  }
  for (std::size_t i = 0; i < size; ++i) ordinals_[masks_[i]] = static_cast<Ordinal>(i + 1);
}

const BasisOrder& basis_order(unsigned n) {
  static std::array<std::once_flag, kMaxBladeDimension + 1> once;
  static std::array<std::unique_ptr<BasisOrder>, kMaxBladeDimension + 1> orders;
  if (n == 0 || n > kMaxBladeDimension) throw IndexOutOfRange("dimension " + std::to_string(n) + " out of range");
  std::call_once(once[n], [n] { orders[n] = std::make_unique<BasisOrder>(n); });
  return *orders[n];
}

}  // namespace cliffrep
