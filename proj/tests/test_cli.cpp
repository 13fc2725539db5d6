#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sys/wait.h>

#include "blk/error.hpp"
#include "blk/rational.hpp"
#include "blk/report.hpp"
#include "doctest.h"

using namespace blk;
using json = nlohmann::json;

namespace {

JobConfig cfg(Command c, std::string poly, Format fmt = Format::Json) {
  JobConfig j;
  j.command = c;
  j.poly = std::move(poly);
  j.format = fmt;
  return j;
}

json run_json(Command c, const std::string& poly) {
  Report r = run(cfg(c, poly));
  REQUIRE(r.exit_code == 0);
  return json::parse(r.out);
}

struct Exec {
  int code;
  std::string out;
};

Exec exec(const std::string& args) {
  const std::string cmd = std::string(BLK_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("command names") {
  CHECK(parse_command("spectral-pairs") == Command::SpectralPairs);
  CHECK(parse_command("tmatrix-jet") == Command::TMatrixJet);
  CHECK(!parse_command("spectra").has_value());
}

TEST_CASE("report examples") {
  CHECK(run_json(Command::Milnor, "x^3+y^3") == json::parse(R"({"mu":4})"));
  CHECK(run_json(Command::Spectrum, "x^2+y^2")["spectrum"] == json::parse(R"([{"alpha":"0/1","mult":1}])"));

  json t = run_json(Command::TMatrix, "x^2*y^2+x^5+y^5");
  CHECK(t["mu"] == 11);
  for (int i = 0; i < 11; ++i)
    for (int j = 0; j < 11; ++j) CHECK(t["A0"][i][j] == ((i == 10 && j == 0) ? "1/1" : "0/1"));
  const char* diag[] = {"1/2", "7/10", "7/10", "9/10", "9/10", "1/1", "11/10", "11/10", "13/10", "13/10", "3/2"};
  for (int i = 0; i < 11; ++i)
    for (int j = 0; j < 11; ++j) CHECK(t["A1"][i][j] == (i == j ? diag[i] : "0/1"));
}

TEST_CASE("all command contents") {
  JobConfig c = cfg(Command::All, "x^2*y^2+x^5+y^5");
  c.audit = true;
  Report r = run(c);
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  for (const char* key : {"mu", "A0", "A1", "spectral_pairs", "spectrum", "monodromy", "audit"}) CHECK(j.contains(key));
  CHECK(j["variables"] == json::parse(R"(["x","y"])"));
  CHECK(j["spectral_pairs"][0] == json::parse(R"({"alpha":"-1/2","l":2,"mult":1})"));
  CHECK(j["audit"]["conjugation_ok"] == true);
  json half;
  for (const auto& m : j["monodromy"])
    if (m["alpha_class"] == "-1/2") half = m;
  CHECK(half["jordan_blocks"] == json::parse("[2]"));
}

TEST_CASE("prefix commands") {
  json jet = run_json(Command::TMatrixJet, "x^3+y^3");
  CHECK(jet["degree"] == 10);
  CHECK(jet["A"].size() == 11);
  json sat = run_json(Command::Saturate, "x^2*y^2+x^5+y^5");
  CHECK(sat["kappa"].get<int>() >= 1);
  json vf = run_json(Command::VFilt, "x^3+y^3+z^3");
  CHECK(vf["eigenvalues"].size() == 8);
  json mono = run_json(Command::Monodromy, "x^3+y^3");
  CHECK(mono["monodromy"].size() == 3);
  JobConfig bad = cfg(Command::TMatrixJet, "x^3+y^3");
  bad.jet_degree = 0;
  CHECK(run(bad).exit_code == 2);
}

TEST_CASE("rationals round-trip and output is deterministic") {
  Report a = run(cfg(Command::All, "x^2*y^2+x^6+y^7"));
  Report b = run(cfg(Command::All, "x^2*y^2+x^6+y^7"));
  CHECK(a.out == b.out);
  json j = json::parse(a.out);
  for (const auto& row : j["A1"])
    for (const auto& e : row) CHECK(to_string(parse_rational(e.get<std::string>())) == e.get<std::string>());
  for (const auto& p : j["spectrum"]) CHECK(to_string(parse_rational(p["alpha"].get<std::string>())) == p["alpha"]);
  Report text = run(cfg(Command::All, "x^2*y^2+x^6+y^7", Format::Text));
  CHECK(text.out.find("spectral pairs:") != std::string::npos);
}

TEST_CASE("error kinds and exit codes") {
  auto code = [](const std::string& poly) { return run(cfg(Command::All, poly)).exit_code; };
  CHECK(code("x+y") == 2);
  CHECK(code("x^2+1") == 2);
  CHECK(code("x^2.5") == 2);
  CHECK(code("x^2*") == 2);
  CHECK(code("x^2*y^2") == 3);
  Report r = run(cfg(Command::All, "x+y^2"));
  CHECK(json::parse(r.err)["error"] == "NotSingular");
}

TEST_CASE("saturation valve from the environment") {
  setenv("BLK_MAX_SATURATION_STEPS", "0", 1);
  Report r = run(cfg(Command::TMatrix, "x^2*y^2+x^5+y^5"));
  CHECK(r.exit_code == 4);
  CHECK(json::parse(r.err)["error"] == "SaturationDiverged");
  CHECK(run(cfg(Command::TMatrix, "x^3+y^3")).exit_code == 0);
  setenv("BLK_MAX_SATURATION_STEPS", "many", 1);
  CHECK(run(cfg(Command::TMatrix, "x^3+y^3")).exit_code == 2);
  unsetenv("BLK_MAX_SATURATION_STEPS");
  CHECK(run(cfg(Command::TMatrix, "x^2*y^2+x^5+y^5")).exit_code == 0);
}

TEST_CASE("executable") {
  Exec m = exec("milnor --poly 'x^3+y^3' --format json");
  CHECK(m.code == 0);
  CHECK(json::parse(m.out) == json::parse(R"({"mu":4})"));
  const std::string path = "blk_cli_test_input.txt";
  {
    std::ofstream f(path);
    f << "x^2*y^2+x^5+y^5\n";
  }
  Exec t = exec("spectral-pairs --file " + path + " --format json");
  CHECK(t.code == 0);
  CHECK(json::parse(t.out)["spectral_pairs"].size() == 7);
  std::remove(path.c_str());
  CHECK(exec("milnor --poly 'x+y'").code == 2);
  CHECK(exec("milnor --poly 'x^2*y^2'").code == 3);
  CHECK(exec("nonsense --poly 'x^2'").code == 2);
  CHECK(exec("milnor").code == 2);
  CHECK(exec("milnor --poly x^2 --format yaml").code == 2);
}
