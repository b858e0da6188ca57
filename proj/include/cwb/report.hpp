#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cwb {

/// One named verdict. A failing check carries a witness naming the
/// first counterexample found in enumeration order.
struct Check {
  std::string name;
  bool passed = true;
  std::string witness;
  std::string note;
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string title) : title_(std::move(title)) {}

  const std::string& title() const { return title_; }
  const std::vector<Check>& checks() const { return checks_; }

  Check& add(Check check);
  Check& add(std::string name, bool passed, std::string witness = {}, std::string note = {});
  /// Appends another report's checks with "prefix/" prepended to their names.
  void merge(const Report& other, std::string_view prefix = {});

  bool passed() const;
  const Check* find(std::string_view name) const;
  const Check* first_failure() const;
  std::string summary() const;

 private:
  std::string title_;
  std::vector<Check> checks_;
};

}  // namespace cwb
