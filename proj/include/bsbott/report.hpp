#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace bsbott {

/// Outcome of an exhaustive property check.
struct Report {
  explicit Report(std::string report_name) : name(std::move(report_name)) {}

  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }

  // Keeps the first few counterexamples only; the count stays exact.
  void fail(std::string what) {
    ++failure_count;
    if (failures.size() < 20) failures.push_back(std::move(what));
  }
  std::size_t failure_count = 0;
};

}  // namespace bsbott
