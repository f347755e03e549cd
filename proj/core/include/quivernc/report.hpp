#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace quivernc {

/// Outcome of an exhaustive check: how many instances were examined and a
/// payload describing each failing one.
struct Report {
  std::string check;
  std::size_t instances = 0;
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
  void record(bool ok, const std::string& payload) {
    ++instances;
    if (!ok) failures.push_back(payload);
  }
  void merge(const Report& other) {
    instances += other.instances;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
};

}  // namespace quivernc
