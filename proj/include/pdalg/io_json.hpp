#pragma once

#include <string>
#include <string_view>

#include "pdalg/canonical.hpp"
#include "pdalg/report.hpp"
#include "pdalg/structure.hpp"
#include "pdalg/tensor.hpp"

namespace pdalg {

// All readers throw InputError for malformed JSON or fields, and ParseError
// for malformed expressions inside otherwise valid JSON.

/// {"coords": [...], "kind": "real"|"complex", "pairing": {"z": "zb"}}
Chart chart_from_json_text(std::string_view text);

/// {"chart": {...}, "P": [[expr, ...], ...], "Gamma": [[[expr, ...]]]}.
/// Gamma is optional and defaults to zero.
PoissonStructure read_structure(std::string_view text);
/// Pretty-printed with two-space indentation, a trailing newline and the
/// full Gamma array.
std::string write_structure(const PoissonStructure& s);

struct ConstantsFile {
  CanonicalConstants constants;
  Chart chart;  // canonical_chart(dim) unless the file names one
};

/// {"dim": n, "Rt": [{"A","B","C","D","value"}], "f": [{"A","B","C","value"}],
///  "g": [{"A","B","value"}], "chart"?: {...}}.
/// A value is an integer, an expression string, or {"re": .., "im": ..}.
/// Entries implied by the index symmetries are filled in unless listed.
ConstantsFile read_constants(std::string_view text);
/// Lists every nonzero entry.
std::string write_constants(const CanonicalConstants& c, const Chart* chart = nullptr);

GaussianRational scalar_from_json_text(std::string_view text);

enum class ReportFormat { text, machine };

/// Text: one line per check in name order, then a summary line.
/// Machine: JSON with the same entries and the exact residual strings.
std::string render_report(const VerificationReport& r, ReportFormat fmt);
/// Reads the machine format back. Residuals are kept as text only.
VerificationReport read_report(std::string_view text);

/// Nonzero components as `T^0_1_1 = expr`, one per line.
std::string render_tensor(const Tensor& t, const Chart& chart, const std::string& symbol);

}  // namespace pdalg
