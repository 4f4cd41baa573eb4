#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "germcalc/cli.hpp"

using namespace germcalc;
using nlohmann::ordered_json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// timings vary run to run; zero them before comparing reports
std::string normalized_report(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  for (auto& [key, value] : j.at("timings_ms").items()) value = 0;
  return j.dump(2);
}

std::string temp_germ(const std::string& name, const std::string& content) {
  std::filesystem::path p = std::filesystem::temp_directory_path() / name;
  std::ofstream f(p);
  f << content;
  return p.string();
}

}  // namespace

TEST_CASE("check reports the corank-3 germ and passes the gate") {
  CliResult r = run({"check", "germs/corank3_deg7.germ"});
  CHECK(r.code == 0);
  CHECK(r.out.find("corank: 3") != std::string::npos);
  CHECK(r.out.find("weighted homogeneous: yes") != std::string::npos);
  CHECK(r.out.find("ramification dim: 1 (codim 2)") != std::string::npos);
  CHECK(r.out.find("gate: PASS") != std::string::npos);
}

TEST_CASE("check fails the gate on the cuspidal edge") {
  CliResult r = run({"check", "germs/cuspidal_edge.germ"});
  CHECK(r.code == 2);
  CHECK(r.out.find("gate: FAIL") != std::string::npos);
}

TEST_CASE("input errors exit with code 1") {
  CliResult missing = run({"check", "no_such_file.germ"});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("error:") != std::string::npos);

  std::string bad = temp_germ("germcalc_bad.germ", "nonsense = 1\n");
  CliResult malformed = run({"check", bad});
  CHECK(malformed.code == 1);
  CHECK(malformed.err.find("unknown key") != std::string::npos);

  std::string arity = temp_germ(
      "germcalc_arity.germ",
      "source_vars = x\ntarget_vars = Y Z\nweights = 1 5\ndegrees = 2 3\n"
      "components:\n  x^2\n  x^3\n");
  CHECK(run({"check", arity}).code == 1);

  CliResult nosub = run({});
  CHECK(nosub.code == 1);
}

TEST_CASE("help exits cleanly") {
  CliResult r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("check") != std::string::npos);
  CHECK(r.out.find("aecodim") != std::string::npos);
}

TEST_CASE("family and greuel print bare integers") {
  CHECK(run({"family", "--k", "3"}).out == "18967\n");
  CHECK(run({"family", "--k", "4"}).out == "41244\n");
  CHECK(run({"family", "--k", "6"}).out == "127295\n");
  CHECK(run({"family", "--k", "1"}).out == "1280\n");
  CHECK(run({"family", "--k", "0"}).code == 1);
  CHECK(run({"family"}).code == 1);

  CHECK(run({"greuel", "--tau", "168356", "--cmtype", "16"}).out ==
        "168341\n");
  CHECK(run({"greuel", "--tau", "127", "--cmtype", "3"}).out == "125\n");
  CHECK(run({"greuel", "--tau", "1", "--cmtype", "1"}).out == "1\n");
  CHECK(run({"greuel", "--tau", "1", "--cmtype", "3"}).code == 1);
}

TEST_CASE("aecodim runs the stable cross-cap to zero") {
  CliResult r = run({"aecodim", "germs/crosscap.germ"});
  CHECK(r.code == 0);
  CHECK(r.out.find("characteristic: 31991") != std::string::npos);
  CHECK(r.out.find("ae_codim: 0") != std::string::npos);
  CHECK(r.err.find("stage image:") != std::string::npos);
  CHECK(r.err.find("stage quotient:") != std::string::npos);
}

TEST_CASE("aecodim respects the gate unless forced") {
  CliResult blocked = run({"aecodim", "germs/cuspidal_edge.germ"});
  CHECK(blocked.code == 2);
  CHECK(blocked.err.find("--force") != std::string::npos);
  CHECK(blocked.out.empty());

  CliResult forced = run({"aecodim", "germs/cuspidal_edge.germ", "--force"});
  CHECK(forced.code == 0);
  CHECK(forced.out.find("dim N_f (hypothesis unmet):") != std::string::npos);
}

TEST_CASE("characteristic override flows through") {
  CliResult r = run({"aecodim", "germs/crosscap.germ", "--char", "101"});
  CHECK(r.code == 0);
  CHECK(r.out.find("characteristic: 101") != std::string::npos);
  CliResult bad = run({"aecodim", "germs/crosscap.germ", "--char", "10"});
  CHECK(bad.code == 1);
}

TEST_CASE("json report has the fixed schema") {
  CliResult r = run({"report", "germs/crosscap.germ"});
  REQUIRE(r.code == 0);
  ordered_json j = ordered_json::parse(r.out);
  std::vector<std::string> keys;
  for (auto& [key, value] : j.items()) keys.push_back(key);
  CHECK(keys == std::vector<std::string>{
                    "germ", "corank", "ramification_dim", "gate",
                    "multiplicity", "ae_codim", "mu_image", "verdict",
                    "characteristic", "timings_ms"});
  CHECK(j["corank"] == 1);
  CHECK(j["ramification_dim"] == 0);
  CHECK(j["gate"] == true);
  CHECK(j["multiplicity"] == 2);
  CHECK(j["ae_codim"] == 0);
  CHECK(j["mu_image"] == 0);
  CHECK(j["verdict"] == "EQUAL");
  CHECK(j["characteristic"] == 31991);
  CHECK(j["germ"]["components"].size() == 3);
  // round-trips
  CHECK(ordered_json::parse(j.dump(2)) == j);
}

TEST_CASE("aecodim --json emits the same report") {
  CliResult a = run({"aecodim", "germs/crosscap.germ", "--json"});
  CliResult b = run({"report", "germs/crosscap.germ"});
  REQUIRE(a.code == 0);
  CHECK(normalized_report(a.out) == normalized_report(b.out));
}

TEST_CASE("output is reproducible across runs") {
  CliResult a = run({"aecodim", "germs/crosscap.germ"});
  CliResult b = run({"aecodim", "germs/crosscap.germ"});
  CHECK(a.out == b.out);

  CliResult ja = run({"report", "germs/cusp.germ", "--force"});
  CliResult jb = run({"report", "germs/cusp.germ", "--force"});
  REQUIRE(ja.code == 0);
  CHECK(normalized_report(ja.out) == normalized_report(jb.out));

  CliResult ca = run({"check", "germs/corank3_deg7.germ"});
  CliResult cb = run({"check", "germs/corank3_deg7.germ"});
  CHECK(ca.out == cb.out);
}

TEST_CASE("gate failure shows up in the json report") {
  CliResult r = run({"report", "germs/cuspidal_edge.germ"});
  CHECK(r.code == 2);
  ordered_json j = ordered_json::parse(r.out);
  CHECK(j["gate"] == false);
  CHECK(j["ae_codim"].is_null());
  CHECK(j["verdict"] == "NOT_APPLICABLE");
  REQUIRE(j.contains("errors"));
  CHECK(!j["errors"].empty());
}

TEST_CASE("timeouts exit with code 3 and name the last completed stage") {
  CliResult r =
      run({"aecodim", "germs/corank3_deg7.germ", "--timeout", "0.05"});
  CHECK(r.code == 3);
  CHECK(r.err.find("last completed stage:") != std::string::npos);
}
