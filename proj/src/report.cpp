#include "pdalg/report.hpp"

#include <algorithm>

#include "pdalg/errors.hpp"
#include "pdalg/expr_io.hpp"

namespace pdalg {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::not_applicable:
      return "n/a";
  }
  return "?";
}

void VerificationReport::add(CheckEntry e) { entries_.push_back(std::move(e)); }

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& e : other.entries_) entries_.push_back(e);
}

std::vector<CheckEntry> VerificationReport::sorted() const {
  std::vector<CheckEntry> out = entries_;
  std::stable_sort(out.begin(), out.end(), [](const CheckEntry& a, const CheckEntry& b) { return a.name < b.name; });
  return out;
}

bool VerificationReport::passed() const {
  return std::none_of(entries_.begin(), entries_.end(),
                      [](const CheckEntry& e) { return e.status == CheckStatus::fail; });
}

bool VerificationReport::has(const std::string& name) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const CheckEntry& e) { return e.name == name; });
}

const CheckEntry& VerificationReport::get(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.name == name) return e;
  throw DomainError("no check named '" + name + "'");
}

bool Check::expect_zero(const DiffForm& residual, const std::string& location) {
  ++entry_.cases;
  if (residual.is_zero()) return true;
  fail(residual, location);
  return false;
}

void Check::fail(const DiffForm& witness, const std::string& location) {
  if (entry_.status == CheckStatus::fail) return;  // keep the first witness
  entry_.status = CheckStatus::fail;
  entry_.residual = witness;
  entry_.residual_text = to_string(witness, chart_);
  entry_.location = location;
}

void Check::not_applicable(std::string why) {
  entry_.status = CheckStatus::not_applicable;
  entry_.note = std::move(why);
}

}  // namespace pdalg
