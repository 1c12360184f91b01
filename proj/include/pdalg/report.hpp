#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pdalg/chart.hpp"
#include "pdalg/forms.hpp"

namespace pdalg {

enum class CheckStatus { pass, fail, not_applicable };

std::string to_string(CheckStatus s);

/// One checked identity. A failing entry keeps the first nonzero residual
/// found, with the inputs that produced it in `location`.
struct CheckEntry {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::size_t cases = 0;
  DiffForm residual;
  std::string residual_text;
  std::string location;
  std::string note;
};

class VerificationReport {
 public:
  void add(CheckEntry e);
  void merge(const VerificationReport& other);
  /// Entries sorted by name.
  std::vector<CheckEntry> sorted() const;
  const std::vector<CheckEntry>& entries() const { return entries_; }
  /// True when no entry failed.
  bool passed() const;
  /// Throws DomainError for an unknown name.
  const CheckEntry& get(const std::string& name) const;
  bool has(const std::string& name) const;

 private:
  std::vector<CheckEntry> entries_;
};

/// Accumulates cases of one named identity; every case contributes a
/// residual that must vanish.
class Check {
 public:
  Check(std::string name, const Chart& chart) : chart_(chart) { entry_.name = std::move(name); }

  /// Returns true when the residual is zero.
  bool expect_zero(const DiffForm& residual, const std::string& location);
  bool expect_zero(const RatExpr& residual, const std::string& location) {
    return expect_zero(DiffForm(residual), location);
  }
  /// Records a failure that is not an identity residual (e.g. a degree violation).
  void fail(const DiffForm& witness, const std::string& location);
  void note(std::string text) { entry_.note = std::move(text); }
  void not_applicable(std::string why);
  bool ok() const { return entry_.status != CheckStatus::fail; }

  CheckEntry finish() const { return entry_; }

 private:
  const Chart& chart_;
  CheckEntry entry_;
};

}  // namespace pdalg
