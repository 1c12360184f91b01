#include "pdalg/io_json.hpp"

#include <json.hpp>

#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "pdalg/errors.hpp"
#include "pdalg/expr_io.hpp"

namespace pdalg {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) throw InputError("expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t index_field(const json& obj, const char* key, std::size_t dim) {
  const json& v = field(obj, key);
  if (!v.is_number_integer() || v.get<long long>() < 0 || static_cast<std::size_t>(v.get<long long>()) >= dim)
    throw InputError(std::string("index \"") + key + "\" out of range");
  return static_cast<std::size_t>(v.get<long long>());
}

std::string expr_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw InputError("expected an expression string or integer");
}

Rational rational_from(const json& v) {
  GaussianRational g = GaussianRational::parse(expr_text(v));
  if (!g.is_real()) throw InputError("expected a real value");
  return g.re();
}

GaussianRational scalar_from(const json& v) {
  if (v.is_object()) {
    Rational re = v.contains("re") ? rational_from(v["re"]) : Rational(0);
    Rational im = v.contains("im") ? rational_from(v["im"]) : Rational(0);
    return {re, im};
  }
  return GaussianRational::parse(expr_text(v));
}

json scalar_to(const GaussianRational& g) {
  return json{{"re", rational_str(g.re())}, {"im", rational_str(g.im())}};
}

Chart chart_from(const json& j) {
  const json& coords = field(j, "coords");
  if (!coords.is_array()) throw InputError("\"coords\" must be an array");
  std::vector<std::string> names;
  for (const auto& c : coords) {
    if (!c.is_string()) throw InputError("coordinate names must be strings");
    names.push_back(c.get<std::string>());
  }
  std::string kind = j.contains("kind") ? j["kind"].get<std::string>() : "real";
  try {
    if (kind == "real") return Chart::real(names);
    if (kind == "complex") {
      std::map<std::string, std::string> pairing;
      for (const auto& [k, v] : field(j, "pairing").items()) pairing[k] = v.get<std::string>();
      return Chart::complex(names, pairing);
    }
  } catch (const DomainError& e) {
    throw InputError(std::string("invalid chart: ") + e.what());
  }
  throw InputError("chart kind must be \"real\" or \"complex\"");
}

json chart_to(const Chart& c) {
  json j;
  j["coords"] = c.names();
  j["kind"] = c.is_complex() ? "complex" : "real";
  if (c.is_complex()) {
    json p = json::object();
    for (const auto& [k, v] : c.pairing()) p[k] = v;
    j["pairing"] = p;
  }
  return j;
}

const json& sized_array(const json& v, std::size_t n, const char* what) {
  if (!v.is_array() || v.size() != n) throw InputError(std::string(what) + " has the wrong shape");
  return v;
}

template <class Fn>
auto guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed file: ") + e.what());
  }
}

}  // namespace

Chart chart_from_json_text(std::string_view text) {
  return guarded([&] { return chart_from(parse_json(text)); });
}

GaussianRational scalar_from_json_text(std::string_view text) {
  return guarded([&] { return scalar_from(parse_json(text)); });
}

static PoissonStructure read_structure_impl(std::string_view text) {
  json j = parse_json(text);
  Chart chart = chart_from(field(j, "chart"));
  const std::size_t n = chart.dim();
  ExprMatrix P(n, n);
  const json& pj = sized_array(field(j, "P"), n, "P");
  for (std::size_t a = 0; a < n; ++a) {
    const json& row = sized_array(pj[a], n, "P");
    for (std::size_t b = 0; b < n; ++b) P(a, b) = parse_expr(expr_text(row[b]), chart);
  }
  Connection gamma(n);
  if (j.contains("Gamma") && !j["Gamma"].is_null()) {
    const json& gj = sized_array(j["Gamma"], n, "Gamma");
    for (std::size_t a = 0; a < n; ++a) {
      const json& ga = sized_array(gj[a], n, "Gamma");
      for (std::size_t b = 0; b < n; ++b) {
        const json& gb = sized_array(ga[b], n, "Gamma");
        for (std::size_t c = 0; c < n; ++c) gamma(a, b, c) = parse_expr(expr_text(gb[c]), chart);
      }
    }
  }
  try {
    return PoissonStructure(chart, P, gamma);
  } catch (const DomainError& e) {
    throw InputError(std::string("invalid structure: ") + e.what());
  }
}

std::string write_structure(const PoissonStructure& s) {
  const Chart& chart = s.chart();
  const std::size_t n = s.dim();
  json j;
  j["chart"] = chart_to(chart);
  json P = json::array();
  for (std::size_t a = 0; a < n; ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < n; ++b) row.push_back(to_string(s.P(a, b), chart));
    P.push_back(row);
  }
  j["P"] = P;
  json G = json::array();
  for (std::size_t a = 0; a < n; ++a) {
    json ga = json::array();
    for (std::size_t b = 0; b < n; ++b) {
      json gb = json::array();
      for (std::size_t c = 0; c < n; ++c) gb.push_back(to_string(s.gamma(a, b, c), chart));
      ga.push_back(gb);
    }
    G.push_back(ga);
  }
  j["Gamma"] = G;
  return j.dump(2) + "\n";
}

static ConstantsFile read_constants_impl(std::string_view text) {
  json j = parse_json(text);
  const json& dj = field(j, "dim");
  if (!dj.is_number_integer() || dj.get<long long>() <= 0 || dj.get<long long>() > 8)
    throw InputError("\"dim\" must be an integer in 1..8");
  const auto n = static_cast<std::size_t>(dj.get<long long>());
  ConstantsFile out{CanonicalConstants(n), canonical_chart(n)};
  CanonicalConstants& c = out.constants;

  auto list = [&](const char* key) -> json {
    if (!j.contains(key)) return json::array();
    if (!j[key].is_array()) throw InputError(std::string("\"") + key + "\" must be a list");
    return j[key];
  };

  // Listed entries are taken verbatim; the implied ones are filled only where
  // nothing was listed, so inconsistent input still reaches the symmetry checks.
  std::set<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> listed;
  std::vector<std::pair<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>, GaussianRational>> rt;
  for (const auto& e : list("Rt")) {
    auto key = std::make_tuple(index_field(e, "A", n), index_field(e, "B", n), index_field(e, "C", n),
                               index_field(e, "D", n));
    rt.emplace_back(key, scalar_from(field(e, "value")));
    listed.insert(key);
  }
  for (const auto& [k, v] : rt) {
    auto [A, B, C, D] = k;
    c.Rt(A, B, C, D) = v;
    for (auto [a, b, cc, d, sign] : {std::make_tuple(B, A, C, D, -1), std::make_tuple(A, B, D, C, 1),
                                     std::make_tuple(B, A, D, C, -1)})
      if (!listed.count({a, b, cc, d})) c.Rt(a, b, cc, d) = sign < 0 ? -v : v;
  }

  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> listed_f;
  std::vector<std::pair<std::tuple<std::size_t, std::size_t, std::size_t>, GaussianRational>> fv;
  for (const auto& e : list("f")) {
    auto key = std::make_tuple(index_field(e, "A", n), index_field(e, "B", n), index_field(e, "C", n));
    fv.emplace_back(key, scalar_from(field(e, "value")));
    listed_f.insert(key);
  }
  for (const auto& [k, v] : fv) {
    auto [A, B, C] = k;
    c.f(A, B, C) = v;
    if (!listed_f.count({B, A, C})) c.f(B, A, C) = -v;
  }

  std::set<std::pair<std::size_t, std::size_t>> listed_g;
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, GaussianRational>> gv;
  for (const auto& e : list("g")) {
    auto key = std::make_pair(index_field(e, "A", n), index_field(e, "B", n));
    gv.emplace_back(key, scalar_from(field(e, "value")));
    listed_g.insert(key);
  }
  for (const auto& [k, v] : gv) {
    c.g(k.first, k.second) = v;
    if (!listed_g.count({k.second, k.first})) c.g(k.second, k.first) = -v;
  }

  if (j.contains("chart")) {
    out.chart = chart_from(j["chart"]);
    if (out.chart.dim() != n) throw InputError("chart dimension does not match \"dim\"");
  }
  return out;
}

std::string write_constants(const CanonicalConstants& c, const Chart* chart) {
  const std::size_t n = c.dim();
  json j;
  j["dim"] = n;
  json rt = json::array(), f = json::array(), g = json::array();
  for (std::size_t A = 0; A < n; ++A)
    for (std::size_t B = 0; B < n; ++B) {
      if (!c.g(A, B).is_zero()) g.push_back({{"A", A}, {"B", B}, {"value", scalar_to(c.g(A, B))}});
      for (std::size_t C = 0; C < n; ++C) {
        if (!c.f(A, B, C).is_zero())
          f.push_back({{"A", A}, {"B", B}, {"C", C}, {"value", scalar_to(c.f(A, B, C))}});
        for (std::size_t D = 0; D < n; ++D)
          if (!c.Rt(A, B, C, D).is_zero())
            rt.push_back({{"A", A}, {"B", B}, {"C", C}, {"D", D}, {"value", scalar_to(c.Rt(A, B, C, D))}});
      }
    }
  j["Rt"] = rt;
  j["f"] = f;
  j["g"] = g;
  if (chart) j["chart"] = chart_to(*chart);
  return j.dump(2) + "\n";
}

std::string render_report(const VerificationReport& r, ReportFormat fmt) {
  const auto entries = r.sorted();
  if (fmt == ReportFormat::machine) {
    json checks = json::array();
    for (const auto& e : entries) {
      json x;
      x["name"] = e.name;
      x["status"] = to_string(e.status);
      x["cases"] = e.cases;
      if (!e.location.empty()) x["location"] = e.location;
      if (e.status == CheckStatus::fail) x["residual"] = e.residual_text;
      if (!e.note.empty()) x["note"] = e.note;
      checks.push_back(x);
    }
    json j;
    j["passed"] = r.passed();
    j["checks"] = checks;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  std::size_t np = 0, nf = 0, nn = 0;
  for (const auto& e : entries) {
    os << (e.status == CheckStatus::not_applicable ? "n/a " : to_string(e.status)) << "  " << e.name;
    if (e.status != CheckStatus::not_applicable) os << "  cases=" << e.cases;
    if (e.status == CheckStatus::fail) os << "  at " << e.location << "  residual " << e.residual_text;
    if (!e.note.empty()) os << "  # " << e.note;
    os << "\n";
    switch (e.status) {
      case CheckStatus::pass: ++np; break;
      case CheckStatus::fail: ++nf; break;
      case CheckStatus::not_applicable: ++nn; break;
    }
  }
  os << "summary: " << np << " pass, " << nf << " fail, " << nn << " n/a\n";
  return os.str();
}

static VerificationReport read_report_impl(std::string_view text) {
  json j = parse_json(text);
  VerificationReport r;
  for (const auto& x : field(j, "checks")) {
    CheckEntry e;
    e.name = field(x, "name").get<std::string>();
    std::string st = field(x, "status").get<std::string>();
    if (st == "pass") e.status = CheckStatus::pass;
    else if (st == "fail") e.status = CheckStatus::fail;
    else if (st == "n/a") e.status = CheckStatus::not_applicable;
    else throw InputError("unknown check status \"" + st + "\"");
    e.cases = x.value("cases", std::size_t{0});
    e.location = x.value("location", std::string());
    e.residual_text = x.value("residual", std::string());
    e.note = x.value("note", std::string());
    r.add(std::move(e));
  }
  return r;
}

std::string render_tensor(const Tensor& t, const Chart& chart, const std::string& symbol) {
  std::ostringstream os;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t.flat_at(k).is_zero()) continue;
    auto idx = t.index_of(k);
    os << symbol;
    for (std::size_t s = 0; s < idx.size(); ++s)
      os << (t.signature()[s].variance == Variance::up ? '^' : '_') << idx[s];
    os << " = " << to_string(t.flat_at(k), chart) << "\n";
  }
  return os.str();
}

PoissonStructure read_structure(std::string_view text) {
  return guarded([&] { return read_structure_impl(text); });
}

ConstantsFile read_constants(std::string_view text) {
  return guarded([&] { return read_constants_impl(text); });
}

VerificationReport read_report(std::string_view text) {
  return guarded([&] { return read_report_impl(text); });
}

}  // namespace pdalg
