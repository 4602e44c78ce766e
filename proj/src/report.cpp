#include "groupoidal/report.hpp"

#include <algorithm>

namespace groupoidal {

void ValidationReport::add(std::string axiom, std::string detail) {
  violations_.push_back({std::move(axiom), std::move(detail)});
}

void ValidationReport::note(std::string text) { notes_.push_back(std::move(text)); }

void ValidationReport::merge(const ValidationReport& other, std::string_view scope) {
  for (const auto& v : other.violations_) {
    std::string detail = scope.empty() ? v.detail : std::string(scope) + ": " + v.detail;
    violations_.push_back({v.axiom, std::move(detail)});
  }
  for (const auto& n : other.notes_) {
    notes_.push_back(scope.empty() ? n : std::string(scope) + ": " + n);
  }
}

std::size_t ValidationReport::count(std::string_view axiom) const {
  return static_cast<std::size_t>(std::count_if(
      violations_.begin(), violations_.end(), [&](const Violation& v) { return v.axiom == axiom; }));
}

}  // namespace groupoidal
