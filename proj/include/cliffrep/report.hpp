#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace cliffrep {

enum class CheckStatus { pass, fail, skip };

struct CheckLine {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::size_t checked = 0;  // number of instances examined
  std::string detail;       // witness, first counterexample or skip reason
};

struct Report {
  std::vector<CheckLine> lines;

  /// True when no line failed (skips do not count as failures).
  bool passed() const noexcept;
  const CheckLine* find(const std::string& name) const noexcept;
  void append(const Report& other);
};

std::ostream& operator<<(std::ostream& os, const Report& report);

}  // namespace cliffrep
