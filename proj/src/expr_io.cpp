#include "pdalg/expr_io.hpp"

#include <cctype>

#include "pdalg/errors.hpp"

namespace pdalg {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Chart& chart, bool forms) : s_(text), chart_(chart), forms_(forms) {}

  DiffForm parse_all() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    DiffForm v = sum();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  DiffForm sum() {
    DiffForm v = product();
    while (true) {
      if (peek('+')) {
        ++pos_;
        v += product();
      } else if (peek('-')) {
        ++pos_;
        v -= product();
      } else {
        return v;
      }
    }
  }

  DiffForm product() {
    DiffForm v = unary();
    while (true) {
      if (peek('*')) {
        ++pos_;
        v = wedge(v, unary());
      } else if (peek('/')) {
        std::size_t at = ++pos_;
        DiffForm d = unary();
        RatExpr f = function_of(d, at, "divisor");
        if (f.is_zero()) throw ParseError("division by zero", at);
        v *= f.inverse();
      } else {
        return v;
      }
    }
  }

  DiffForm unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  DiffForm power() {
    DiffForm base = primary();
    while (peek('^')) {
      std::size_t at = pos_++;
      skip();
      bool negative = false;
      std::size_t p = pos_;
      if (p < s_.size() && s_[p] == '-') {
        negative = true;
        ++p;
        while (p < s_.size() && std::isspace(static_cast<unsigned char>(s_[p]))) ++p;
      }
      if (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) {
        pos_ = p;
        long e = integer_literal_long();
        RatExpr f = function_of(base, at, "base of a power");
        if (negative) e = -e;
        if (e < 0 && f.is_zero()) throw ParseError("zero raised to a negative power", at);
        base = DiffForm(f.pow(e));
      } else if (forms_ && !negative) {
        base = wedge(base, primary());
      } else {
        throw ParseError("expected integer exponent", pos_);
      }
    }
    return base;
  }

  DiffForm primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      DiffForm v = sum();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class z(std::string(s_.substr(start, pos_ - start)));
      return DiffForm(RatExpr(GaussianRational(Rational(z))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (name == "i") return DiffForm(RatExpr(GaussianRational::i()));
      if (name == "d" && peek('[')) {
        if (!forms_) throw ParseError("one-forms are not allowed in an expression", start);
        ++pos_;
        skip();
        std::size_t nstart = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        std::string coord(s_.substr(nstart, pos_ - nstart));
        auto idx = chart_.find(coord);
        if (!idx) throw ParseError("unknown coordinate '" + coord + "'", nstart);
        expect(']');
        return DiffForm::dx(*idx);
      }
      auto idx = chart_.find(name);
      if (!idx) throw ParseError("unknown coordinate '" + name + "'", start);
      return DiffForm(RatExpr::var(*idx));
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  long integer_literal_long() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string digits(s_.substr(start, pos_ - start));
    if (digits.size() > 6) throw ParseError("exponent too large", start);
    return std::stol(digits);
  }

  RatExpr function_of(const DiffForm& f, std::size_t at, const char* what) {
    for (const auto& [m, c] : f.terms())
      if (m != 0) throw ParseError(std::string(what) + " must be a function", at);
    return f.as_function();
  }

  std::string_view s_;
  const Chart& chart_;
  bool forms_;
  std::size_t pos_ = 0;
};

std::string monomial_str(const Monomial& m, const Chart& chart) {
  std::string out;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    unsigned e = m[v];
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += v < chart.dim() ? chart.name(v) : "x" + std::to_string(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

// Prints one term without its sign; returns true when the term is negative.
bool term_str(const Monomial& m, const GaussianRational& c, const Chart& chart, std::string& out) {
  const bool negative = c.leading_sign() < 0;
  GaussianRational mag = negative ? -c : c;
  if (m.is_one()) {
    out = mag.str();
  } else if (mag.is_one()) {
    out = monomial_str(m, chart);
  } else {
    out = mag.str() + "*" + monomial_str(m, chart);
  }
  return negative;
}

std::string wedge_str(WedgeMask m, const Chart& chart) {
  std::string out;
  for (auto i : mask_indices(m)) {
    if (!out.empty()) out += " ^ ";
    out += "d[" + (i < chart.dim() ? chart.name(i) : "x" + std::to_string(i)) + "]";
  }
  return out;
}

}  // namespace

RatExpr parse_expr(std::string_view text, const Chart& chart) {
  DiffForm f = Parser(text, chart, false).parse_all();
  return f.as_function();
}

DiffForm parse_form(std::string_view text, const Chart& chart) { return Parser(text, chart, true).parse_all(); }

std::string to_string(const Polynomial& p, const Chart& chart) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    std::string t;
    bool neg = term_str(m, c, chart, t);
    if (first) {
      out = neg ? "-" + t : t;
      first = false;
    } else {
      out += neg ? " - " : " + ";
      out += t;
    }
  }
  return out;
}

std::string to_string(const RatExpr& e, const Chart& chart) {
  std::string num = to_string(e.numerator(), chart);
  if (e.is_polynomial()) return num;
  if (e.numerator().terms().size() > 1) num = "(" + num + ")";
  const Polynomial& den = e.denominator();
  std::string ds = to_string(den, chart);
  bool bare = den.terms().size() == 1 && den.terms()[0].first.max_var() >= 0 &&
              den.terms()[0].first.degree() == den.terms()[0].first[static_cast<std::size_t>(den.terms()[0].first.max_var())];
  return num + "/" + (bare ? ds : "(" + ds + ")");
}

std::string to_string(const DiffForm& f, const Chart& chart) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    std::string t;
    if (m == 0) {
      t = to_string(c, chart);
    } else if (c.is_one()) {
      t = wedge_str(m, chart);
    } else if (c == RatExpr(-1)) {
      t = "-" + wedge_str(m, chart);
    } else {
      std::string cs = to_string(c, chart);
      if (c.numerator().terms().size() > 1) cs = "(" + cs + ")";
      t = cs + " * " + wedge_str(m, chart);
    }
    if (first) {
      out = t;
      first = false;
    } else if (t[0] == '-' && (m != 0 || c.numerator().terms().size() == 1)) {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

}  // namespace pdalg
