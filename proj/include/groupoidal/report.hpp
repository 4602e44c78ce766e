#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace groupoidal {

struct Violation {
  std::string axiom;
  std::string detail;
};

/// Outcome of an exhaustive structural check. Empty means every axiom holds.
class ValidationReport {
 public:
  void add(std::string axiom, std::string detail);
  void note(std::string text);
  /// Appends the other report's entries, prefixing each detail with `scope`.
  void merge(const ValidationReport& other, std::string_view scope = {});

  bool ok() const { return violations_.empty(); }
  const std::vector<Violation>& violations() const { return violations_; }
  const std::vector<std::string>& notes() const { return notes_; }

  std::size_t count(std::string_view axiom) const;
  bool has(std::string_view axiom) const { return count(axiom) > 0; }

 private:
  std::vector<Violation> violations_;
  std::vector<std::string> notes_;
};

}  // namespace groupoidal
