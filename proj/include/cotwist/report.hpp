#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cotwist/linmap.hpp"

namespace cotwist {

/// Counterexample for a failed equation check: the first domain basis column
/// on which the two sides differ, with both output vectors.
struct Witness {
  std::string input_label;
  std::vector<std::string> lhs;
  std::vector<std::string> rhs;
};

struct CheckEntry {
  std::string name;
  bool pass = false;
  std::optional<Witness> witness;
};

class CheckReport {
 public:
  bool ok() const;
  void add(CheckEntry e) { entries_.push_back(std::move(e)); }
  void add_pass(const std::string& name);
  void add_fail(const std::string& name, std::optional<Witness> w = std::nullopt);

  /// Records name: pass iff lhs == rhs entrywise (shapes must agree).
  void add_equal(const std::string& name, const LinMap& lhs, const LinMap& rhs);

  /// Appends another report's entries under "prefix/".
  void merge(const std::string& prefix, const CheckReport& other);

  const std::vector<CheckEntry>& entries() const { return entries_; }
  const CheckEntry* find(const std::string& name) const;
  bool passed(const std::string& name) const;

  std::string text() const;
  std::string json_str() const;

 private:
  std::vector<CheckEntry> entries_;
};

/// Shape-checked equality with witness extraction (shared by add_equal and the
/// expression-language checker).
std::optional<Witness> first_difference(const LinMap& lhs, const LinMap& rhs);

}  // namespace cotwist
