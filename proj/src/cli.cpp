#include "pdalg/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pdalg/axioms.hpp"
#include "pdalg/errors.hpp"
#include "pdalg/expr_io.hpp"
#include "pdalg/geometry.hpp"
#include "pdalg/one_dim.hpp"

namespace pdalg {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  if (path.empty()) throw InputError("no input file given");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string& param(const CommandSpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end() || it->second.empty()) throw InputError("missing --" + key);
  return it->second;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::vector<GaussianRational> parse_vector(const std::string& text) {
  std::vector<GaussianRational> v;
  for (const auto& s : split(text, ',')) v.push_back(GaussianRational::parse(s));
  return v;
}

/// Rows separated by ';', entries by ','.
ScalarMatrix parse_matrix(const std::string& text, std::size_t n) {
  auto rows = split(text, ';');
  if (rows.size() != n) throw InputError("--N must have " + std::to_string(n) + " rows");
  ScalarMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    auto v = parse_vector(rows[r]);
    if (v.size() != n) throw InputError("--N must have " + std::to_string(n) + " columns");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = v[c];
  }
  return m;
}

HermitianTriple triple_of(const CommandSpec& spec) {
  return parse_triple(param(spec, "a"), param(spec, "b"), param(spec, "c"));
}

json triple_json(const HermitianTriple& t) {
  return {{"a", rational_str(t.a)}, {"b", t.b.str()}, {"c", rational_str(t.c)}};
}

std::string triple_text(const HermitianTriple& t) {
  return "a = " + rational_str(t.a) + ", b = " + t.b.str() + ", c = " + rational_str(t.c);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

/// Writes `text` to spec.emit, or appends it to the command output.
void emit_or_print(const CommandSpec& spec, const std::string& text, CommandResult& r) {
  if (spec.emit.empty()) {
    r.output += text;
    return;
  }
  std::ofstream out(spec.emit, std::ios::binary);
  if (!out) throw InputError("cannot write " + spec.emit);
  out << text;
}

CommandResult report_result(const VerificationReport& rep, ReportFormat fmt) {
  CommandResult r;
  r.output = render_report(rep, fmt);
  r.status = rep.passed() ? exit_code::ok : exit_code::violation;
  return r;
}

const Chart* nondefault_chart(const ConstantsFile& f) {
  return f.chart == canonical_chart(f.constants.dim()) ? nullptr : &f.chart;
}

CommandResult cmd_verify(const CommandSpec& spec) {
  PoissonStructure s = read_structure(read_file(spec.input));
  VerificationReport rep = verify_axioms(s, spec.plan);
  rep.merge(check_integrability(s));
  return report_result(rep, spec.format);
}

CommandResult cmd_canonical(const CommandSpec& spec, const std::string& sub) {
  ConstantsFile file = read_constants(read_file(spec.input));
  const CanonicalConstants& c = file.constants;
  if (sub == "check") return report_result(check_constants(c), spec.format);

  CommandResult r;
  if (sub == "build") {
    VerificationReport rep = check_constants(c);
    if (!rep.passed()) return report_result(rep, spec.format);
    CanonicalBuild b = build_canonical(c, file.chart);
    emit_or_print(spec, write_structure(b.structure), r);
    return r;
  }
  if (sub == "transform") {
    CanonicalTransform t{parse_matrix(param(spec, "N"), c.dim()), parse_vector(param(spec, "V"))};
    if (t.V.size() != c.dim()) throw InputError("--V must have " + std::to_string(c.dim()) + " entries");
    emit_or_print(spec, write_constants(transform_constants(c, t), nondefault_chart(file)), r);
    return r;
  }
  if (sub == "torsion-zero") {
    auto t = find_torsion_zero(c);
    if (!t) {
      r.status = exit_code::violation;
      r.output = spec.format == ReportFormat::machine ? dump(json{{"V", nullptr}})
                                                      : "no translation removes f\n";
      return r;
    }
    std::string constants = write_constants(transform_constants(c, *t), nondefault_chart(file));
    json V = json::array();
    std::string vtext;
    for (std::size_t k = 0; k < t->V.size(); ++k) {
      V.push_back(t->V[k].str());
      vtext += (k ? ", " : "") + t->V[k].str();
    }
    if (spec.format == ReportFormat::machine)
      r.output = dump(json{{"V", V}, {"constants", json::parse(constants)}});
    else
      r.output = "V = " + vtext + "\n";
    if (!spec.emit.empty()) emit_or_print(spec, constants, r);
    else if (spec.format == ReportFormat::text) r.output += constants;
    return r;
  }
  throw InputError("unknown command: canonical " + sub);
}

CommandResult cmd_onedim(const CommandSpec& spec, const std::string& sub) {
  CommandResult r;
  const bool machine = spec.format == ReportFormat::machine;
  if (sub == "build") {
    emit_or_print(spec, write_structure(build_one_dim(triple_of(spec))), r);
    return r;
  }
  if (sub == "classify") {
    HermitianTriple t = triple_of(spec);
    SurfaceClass by_det = classify(t), by_diag = classify_by_diagonalization(t);
    if (by_det != by_diag) r.status = exit_code::violation;
    if (machine) {
      json j{{"class", to_string(by_det)}, {"determinant", rational_str(t.determinant())}};
      if (by_det != by_diag) j["diagonalized_class"] = to_string(by_diag);
      r.output = dump(j);
    } else {
      r.output = to_string(by_det) + "\n";
      if (by_det != by_diag) r.output += "diagonalized triple gives " + to_string(by_diag) + "\n";
    }
    return r;
  }
  if (sub == "curvature") {
    HermitianTriple t = triple_of(spec);
    std::string k = to_string(gaussian_curvature(t), one_dim_chart());
    std::string cls = to_string(classify(t));
    r.output = machine ? dump(json{{"curvature", k}, {"class", cls}}) : "curvature " + k + "\nclass " + cls + "\n";
    return r;
  }
  if (sub == "moebius") {
    HermitianTriple t = triple_of(spec);
    MoebiusMap m = parse_moebius(param(spec, "map"));
    HermitianTriple u = moebius(t, m);
    std::string h = to_string(moebius_metric(t, m), one_dim_chart());
    std::string cls = to_string(classify(u));
    r.output = machine ? dump(json{{"triple", triple_json(u)}, {"metric", h}, {"class", cls}})
                       : triple_text(u) + "\nmetric " + h + "\nclass " + cls + "\n";
    return r;
  }
  throw InputError("unknown command: onedim " + sub);
}

}  // namespace

CommandResult run(const CommandSpec& spec) {
  try {
    auto words = split(spec.command, ' ');
    if (words.empty()) throw InputError("no command given");
    const std::string sub = words.size() > 1 ? words[1] : "";
    if (words[0] == "verify" && words.size() == 1) return cmd_verify(spec);
    if (words[0] == "canonical" && words.size() == 2) return cmd_canonical(spec, sub);
    if (words[0] == "onedim" && words.size() == 2) return cmd_onedim(spec, sub);
    if (words[0] == "report" && words.size() == 1)
      return report_result(read_report(read_file(spec.input)), spec.format);
    throw InputError("unknown command: " + spec.command);
  } catch (const Error& e) {
    CommandResult r;
    r.status = exit_code::input_error;
    r.error = std::string("error: ") + e.what() + "\n";
    return r;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Poisson differential algebra toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  CommandSpec spec;
  std::string format = "text";
  app.add_option("--degree", spec.plan.max_degree, "Maximum degree of sampled forms")->capture_default_str();
  app.add_option("--samples", spec.plan.count, "Number of sampled forms")->capture_default_str();
  app.add_option("--seed", spec.plan.seed, "Sampling seed")->capture_default_str();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "machine"}))->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Check the axioms and integrability of a structure file");
  verify->add_option("file", spec.input, "Structure file")->required();

  auto* canonical = app.add_subcommand("canonical", "Canonical structures from constants files");
  canonical->require_subcommand(1);
  canonical->fallthrough();
  for (auto [name, help] : {std::pair{"check", "Check the constraints on the constants"},
                            std::pair{"build", "Build the canonical structure"},
                            std::pair{"transform", "Constants after the coordinate change N phi + V"},
                            std::pair{"torsion-zero", "Find a translation removing f"}}) {
    auto* sc = canonical->add_subcommand(name, help);
    sc->add_option("file", spec.input, "Constants file")->required();
    sc->add_option("--emit", spec.emit, "Write the result to this file");
    if (std::string(name) == "transform") {
      sc->add_option("--N", spec.params["N"], "Matrix rows separated by ';', entries by ','")->required();
      sc->add_option("--V", spec.params["V"], "Translation entries separated by ','")->required();
    }
  }

  auto* onedim = app.add_subcommand("onedim", "The one-dimensional complex case");
  onedim->require_subcommand(1);
  onedim->fallthrough();
  for (auto [name, help] : {std::pair{"build", "Build the structure for (a, b, c)"},
                            std::pair{"classify", "Classify the surface of (a, b, c)"},
                            std::pair{"curvature", "Gaussian curvature of (a, b, c)"},
                            std::pair{"moebius", "Apply a fractional transformation"}}) {
    auto* sc = onedim->add_subcommand(name, help);
    sc->add_option("--a", spec.params["a"], "Real coefficient of z zb")->required();
    sc->add_option("--b", spec.params["b"], "Complex coefficient of z")->required();
    sc->add_option("--c", spec.params["c"], "Real constant term")->required();
    if (std::string(name) == "build") sc->add_option("--emit", spec.emit, "Write the structure to this file");
    if (std::string(name) == "moebius")
      sc->add_option("--map", spec.params["map"], "alpha,beta,gamma,delta")->required();
  }

  auto* report = app.add_subcommand("report", "Re-render a machine-format report");
  report->add_option("file", spec.input, "Report file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_code::input_error;
  }

  spec.format = format == "machine" ? ReportFormat::machine : ReportFormat::text;
  for (auto* sc = app.get_subcommands().front(); sc;) {
    spec.command += (spec.command.empty() ? "" : " ") + sc->get_name();
    auto subs = sc->get_subcommands();
    sc = subs.empty() ? nullptr : subs.front();
  }

  CommandResult r = run(spec);
  out << r.output;
  err << r.error;
  return r.status;
}

}  // namespace pdalg
