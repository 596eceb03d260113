#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ktypes {

/// One witness or counterexample record: a short description plus ordered
/// key/value payload (weights and rationals as exact strings).
struct Finding {
  std::string what;
  std::vector<std::pair<std::string, std::string>> data;
};

/// Machine-readable outcome of a lemma/theorem check.
struct VerificationReport {
  std::string subject;  // e.g. "su:3,2"
  std::string check;    // e.g. "classification"
  std::vector<std::pair<std::string, std::int64_t>> counts;
  std::vector<std::string> notes;
  std::vector<Finding> witnesses;
  std::vector<Finding> counterexamples;

  bool passed() const { return counterexamples.empty(); }

  void count(const std::string& key, std::int64_t v) { counts.emplace_back(key, v); }
  std::int64_t get_count(const std::string& key) const {
    for (const auto& [k, v] : counts)
      if (k == key) return v;
    return 0;
  }
};

} // namespace ktypes
