#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pdalg/axioms.hpp"
#include "pdalg/cli.hpp"
#include "pdalg/errors.hpp"

using namespace pdalg;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "pdalg_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string write_file(const std::string& name, const std::string& text) {
  fs::path p = scratch(name);
  std::ofstream(p) << text;
  return p.string();
}

CommandResult cli(std::vector<std::string> args) {
  std::vector<const char*> argv{"pdalg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CommandResult r;
  r.status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.output = out.str();
  r.error = err.str();
  return r;
}

}  // namespace

TEST_CASE("structure files round-trip") {
  for (const auto& s : {oracle::darboux(2), build_canonical(fixture::rt_f_dim2()).structure,
                        build_one_dim(fixture::triple(2, GaussianRational(1, 3), -1))}) {
    std::string text = write_structure(s);
    PoissonStructure back = read_structure(text);
    CHECK(back.chart() == s.chart());
    CHECK(back.P() == s.P());
    CHECK(back.gamma() == s.gamma());
    CHECK(write_structure(back) == text);
  }
}

TEST_CASE("Gamma may be omitted") {
  PoissonStructure s = read_structure(R"({"chart": {"coords": ["q", "p"]}, "P": [["0", "1"], ["-1", 0]]})");
  CHECK(s.gamma().is_zero());
  CHECK(s.P(0, 1) == RatExpr(1));
}

TEST_CASE("malformed structure files") {
  CHECK_THROWS_AS(read_structure("{"), InputError);
  CHECK_THROWS_AS(read_structure(R"({"P": []})"), InputError);
  CHECK_THROWS_AS(read_structure(R"({"chart": {"coords": ["x"]}, "P": [["0", "1"]]})"), InputError);
  CHECK_THROWS_AS(read_structure(R"({"chart": {"coords": ["x", "y"]}, "P": [["0", "1"], ["1", "0"]]})"),
                  InputError);
  CHECK_THROWS_AS(read_structure(R"({"chart": {"coords": ["x", "y"]}, "P": [["0", "1 +"], ["-1", "0"]]})"),
                  ParseError);
  CHECK_THROWS_AS(read_structure(R"({"chart": {"coords": ["x", "x"]}, "P": [["0", "1"], ["-1", "0"]]})"),
                  InputError);
  CHECK_THROWS_AS(read_structure(R"({"chart": {"coords": 3}, "P": []})"), InputError);
}

TEST_CASE("constants files fill implied entries") {
  ConstantsFile f = read_constants(R"({
    "dim": 2,
    "Rt": [{"A": 0, "B": 1, "C": 0, "D": 1, "value": {"re": "1/2", "im": "0"}}],
    "f": [{"A": 0, "B": 1, "C": 1, "value": "2"}],
    "g": [{"A": 1, "B": 0, "value": -3}]
  })");
  const auto& c = f.constants;
  CHECK(c.Rt(1, 0, 1, 0) == GaussianRational(Rational(-1, 2)));
  CHECK(c.Rt(0, 1, 1, 0) == GaussianRational(Rational(1, 2)));
  CHECK(c.f(1, 0, 1) == GaussianRational(-2));
  CHECK(c.g(0, 1) == GaussianRational(3));
  CHECK(f.chart == canonical_chart(2));
  CHECK(check_constants(c).passed());
}

TEST_CASE("explicit inconsistent entries are kept") {
  ConstantsFile f = read_constants(R"({"dim": 2, "g": [{"A": 0, "B": 1, "value": 1}, {"A": 1, "B": 0, "value": 1}]})");
  CHECK(check_constants(f.constants).get("constants.symmetry-g").status == CheckStatus::fail);
}

TEST_CASE("constants files round-trip") {
  for (const auto& c : {fixture::rt_f_dim2(), fixture::bad_cybe_dim3(), one_dim_constants(fixture::triple(2, GaussianRational(1, 3), -1))}) {
    ConstantsFile f = read_constants(write_constants(c));
    CHECK(f.constants == c);
  }
  Chart ch = one_dim_chart();
  ConstantsFile f = read_constants(write_constants(one_dim_constants(fixture::triple(1, 0, 1)), &ch));
  CHECK(f.chart == ch);
}

TEST_CASE("malformed constants files") {
  CHECK_THROWS_AS(read_constants(R"({"dim": 0})"), InputError);
  CHECK_THROWS_AS(read_constants(R"({"dim": 2, "g": [{"A": 0, "B": 2, "value": 1}]})"), InputError);
  CHECK_THROWS_AS(read_constants(R"({"dim": 2, "g": [{"A": 0, "B": 1}]})"), InputError);
  CHECK_THROWS_AS(read_constants(R"({"dim": 2, "g": {"A": 0}})"), InputError);
  CHECK_THROWS_AS(read_constants(R"({"dim": 2, "g": [{"A": 0, "B": 1, "value": {"re": "i"}}]})"), InputError);
  CHECK_THROWS_AS(read_constants(R"({"dim": 2, "chart": {"coords": ["x"]}})"), InputError);
}

TEST_CASE("reports render in both formats and read back") {
  VerificationReport r = check_constants(fixture::bad_cybe_dim3());
  std::string machine = render_report(r, ReportFormat::machine);
  VerificationReport back = read_report(machine);
  CHECK(render_report(back, ReportFormat::machine) == machine);
  CHECK(render_report(back, ReportFormat::text) == render_report(r, ReportFormat::text));
  CHECK_FALSE(back.passed());
  std::string text = render_report(r, ReportFormat::text);
  CHECK(text.find("fail  constants.cybe") != std::string::npos);
  CHECK(text.find("summary: 6 pass, 1 fail, 0 n/a") != std::string::npos);
}

TEST_CASE("tensors print their nonzero components") {
  PoissonStructure s = build_one_dim(fixture::triple(1, 0, 1));
  std::string text = render_tensor(torsion(s), s.chart(), "T");
  CHECK(text.find("T^0_0_0") == std::string::npos);
  CHECK(render_tensor(Tensor(2, {up(), down()}), s.chart(), "X").empty());
}

TEST_CASE("cli exit codes") {
  std::string darboux = write_file("darboux.json", write_structure(oracle::darboux(1)));
  std::string bad = write_file("bad_cybe.json", write_constants(fixture::bad_cybe_dim3()));
  CHECK(cli({"verify", darboux}).status == 0);
  PoissonStructure s = build_canonical(fixture::rt_dim2()).structure;
  Connection G = s.gamma();
  G(1, 1, 1) += RatExpr(1);
  std::string corrupted = write_file("corrupted.json", write_structure(PoissonStructure(s.chart(), s.P(), G)));
  CommandResult v = cli({"verify", corrupted});
  CHECK(v.status == 1);
  CHECK(v.output.find("fail  axioms.jacobi") != std::string::npos);
  CommandResult r = cli({"canonical", "check", bad});
  CHECK(r.status == 1);
  CHECK(r.output.find("fail  constants.cybe") != std::string::npos);
  CHECK(cli({"verify", scratch("missing.json").string()}).status == 2);
  CHECK(cli({"verify", write_file("broken.json", "{ nope")}).status == 2);
  CHECK(cli({"frobnicate"}).status == 2);
  CHECK(cli({"onedim", "classify", "--a", "1", "--b", "0"}).status == 2);
  CHECK(cli({"onedim", "classify", "--a", "0", "--b", "0", "--c", "0"}).status == 2);
  CHECK(cli({"--format", "yaml", "verify", darboux}).status == 2);
  CHECK(cli({"--help"}).status == 0);
}

TEST_CASE("cli onedim commands") {
  CommandResult r = cli({"onedim", "classify", "--a", "1", "--b", "0", "--c", "-1"});
  CHECK(r.status == 0);
  CHECK(r.output == "lobachevskian\n");
  r = cli({"onedim", "curvature", "--a", "1", "--b", "0", "--c", "1"});
  CHECK(r.output == "curvature 2\nclass sphere\n");
  r = cli({"--format", "machine", "onedim", "classify", "--a", "1", "--b", "1/2+i", "--c", "1"});
  CHECK(r.output.find("\"class\": \"lobachevskian\"") != std::string::npos);
  r = cli({"onedim", "moebius", "--a", "1", "--b", "0", "--c", "1", "--map", "0,1,1,0"});
  CHECK(r.status == 0);
  CHECK(r.output.find("class sphere") != std::string::npos);
  std::string emitted = scratch("onedim.json").string();
  CHECK(cli({"onedim", "build", "--a", "1", "--b", "0", "--c", "1", "--emit", emitted}).status == 0);
  std::ifstream in(emitted);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(read_structure(text.str()).gamma() == build_one_dim(fixture::triple(1, 0, 1)).gamma());
}

TEST_CASE("cli canonical commands") {
  std::string rt = write_file("rt.json", write_constants(fixture::rt_dim2()));
  std::string out = scratch("rt_structure.json").string();
  CHECK(cli({"canonical", "build", rt, "--emit", out}).status == 0);
  CommandResult v = cli({"verify", out});
  CHECK(v.status == 0);

  CommandResult t = cli({"canonical", "transform", rt, "--N", "1,0;0,1", "--V", "3,0"});
  REQUIRE(t.status == 0);
  CHECK(read_constants(t.output).constants ==
        transform_constants(fixture::rt_dim2(), CanonicalTransform::translation({GaussianRational(3), GaussianRational(0)})));
  std::string shifted = write_file("shifted.json", t.output);
  CommandResult z = cli({"canonical", "torsion-zero", shifted});
  CHECK(z.status == 0);
  CHECK(z.output.rfind("V = -3, 0\n", 0) == 0);
  CHECK(cli({"canonical", "torsion-zero", write_file("f.json", write_constants(fixture::f_dim2()))}).status == 1);
  CHECK(cli({"canonical", "transform", rt, "--N", "1,0;0,0", "--V", "0,0"}).status == 2);
  CHECK(cli({"canonical", "build", write_file("bad.json", write_constants(fixture::bad_cybe_dim3()))}).status == 1);
}

TEST_CASE("cli report re-rendering and determinism") {
  std::string bad = write_file("bad_cybe2.json", write_constants(fixture::bad_cybe_dim3()));
  CommandResult m1 = cli({"--format", "machine", "canonical", "check", bad});
  CommandResult m2 = cli({"canonical", "check", bad, "--format", "machine"});
  CHECK(m1.output == m2.output);
  std::string saved = write_file("report.json", m1.output);
  CommandResult text = cli({"report", saved});
  CHECK(text.status == 1);
  CHECK(text.output == cli({"canonical", "check", bad}).output);

  std::string s = write_file("onedim2.json", write_structure(build_one_dim(fixture::triple(2, GaussianRational(1, 3), -1))));
  CHECK(cli({"--seed", "5", "verify", s}).output == cli({"--seed", "5", "verify", s}).output);
  CHECK(cli({"--samples", "3", "--degree", "1", "verify", s}).output.find("cases=3") != std::string::npos);
}
