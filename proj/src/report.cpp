#include "cwb/report.hpp"

#include <algorithm>

namespace cwb {

Check& Report::add(Check check) {
  checks_.push_back(std::move(check));
  return checks_.back();
}

Check& Report::add(std::string name, bool passed, std::string witness, std::string note) {
  return add(Check{std::move(name), passed, passed ? std::string{} : std::move(witness), std::move(note)});
}

void Report::merge(const Report& other, std::string_view prefix) {
  for (Check c : other.checks()) {
    if (!prefix.empty()) c.name = std::string(prefix) + "/" + c.name;
    checks_.push_back(std::move(c));
  }
}

bool Report::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

const Check* Report::find(std::string_view name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

const Check* Report::first_failure() const {
  for (const auto& c : checks_)
    if (!c.passed) return &c;
  return nullptr;
}

std::string Report::summary() const {
  std::string out = title_.empty() ? std::string("report") : title_;
  out += passed() ? ": pass" : ": FAIL";
  for (const auto& c : checks_) {
    out += "\n  ";
    out += c.passed ? "[ok]   " : "[FAIL] ";
    out += c.name;
    if (!c.witness.empty()) out += "  witness: " + c.witness;
    if (!c.note.empty()) out += "  (" + c.note + ")";
  }
  return out;
}

}  // namespace cwb
