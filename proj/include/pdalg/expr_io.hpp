#pragma once

#include <string>
#include <string_view>

#include "pdalg/chart.hpp"
#include "pdalg/forms.hpp"
#include "pdalg/ratexpr.hpp"

namespace pdalg {

/// Parses the expression grammar: integers, `i`, coordinate names, `+ - * /`,
/// `^` with an integer exponent (possibly negative) and parentheses.
/// Multiplication must be written explicitly. Throws ParseError.
RatExpr parse_expr(std::string_view text, const Chart& chart);

/// Parses a differential form. Extends the expression grammar with the
/// one-forms `d[name]`; `*` multiplies by a function or wedges, and `^`
/// between forms is the wedge product.
DiffForm parse_form(std::string_view text, const Chart& chart);

/// Canonical text: terms in descending grlex order, one leading sign,
/// the denominator printed once.
std::string to_string(const Polynomial& p, const Chart& chart);
std::string to_string(const RatExpr& e, const Chart& chart);
/// `coeff * d[x] ^ d[y] + ...`, terms by degree then index order.
std::string to_string(const DiffForm& f, const Chart& chart);

}  // namespace pdalg
