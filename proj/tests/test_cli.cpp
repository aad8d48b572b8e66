#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct run_result {
  int exit_code = -1;
  std::string out;
};

run_result run_cli(const std::string& args) {
  std::string cmd = std::string(SEPTOPE_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  run_result r;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("ehrhart subcommand") {
  auto r = run_cli("ehrhart --d 3 --basis binomial --format json");
  REQUIRE(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["d"] == 3);
  CHECK(j["dim"] == 2);
  CHECK(j["payload"]["coeffs"] == json({"1", "6", "6"}));
  CHECK(j["payload"]["normalized_volume"] == "6");
  CHECK(j["meta"]["version"] == "0.1.0");

  auto rm = run_cli("ehrhart --d 3 --basis monomial --format json");
  REQUIRE(rm.exit_code == 0);
  CHECK(json::parse(rm.out)["payload"]["coeffs"] == json({"1", "3", "3"}));

  auto rc = run_cli("ehrhart --d 4 --basis binomial --format csv");
  REQUIRE(rc.exit_code == 0);
  CHECK(rc.out == "i,coeff\n0,1\n1,8\n2,18\n3,12\n");
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("ehrhart --d 2").exit_code == 2);
  CHECK(run_cli("ehrhart").exit_code == 2);
  CHECK(run_cli("ehrhart --d 3 --basis nope").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("hvector subcommand") {
  auto r = run_cli("hvector --d 5 --method all --format json");
  REQUIRE(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["payload"]["entries"] == json({"1", "6", "16", "6", "1"}));
  CHECK(j["payload"]["consistent"] == true);

  auto r35 = run_cli("hvector --d 35 --method closed --format json");
  REQUIRE(r35.exit_code == 0);
  auto j35 = json::parse(r35.out);
  CHECK(j35["payload"]["entries"][17] == "17179869184");  // 2^34 middle entry
}

TEST_CASE("roots subcommand reports certified data") {
  auto r = run_cli("roots --d 3 --format json");
  REQUIRE(r.exit_code == 0);
  auto j = json::parse(r.out);
  auto roots = j["payload"]["roots"];
  REQUIRE(roots.size() == 2);
  double im0 = std::stod(roots[0]["im"].get<std::string>());
  double im1 = std::stod(roots[1]["im"].get<std::string>());
  CHECK(std::stod(roots[0]["re"].get<std::string>()) == doctest::Approx(-0.5).epsilon(1e-9));
  CHECK(std::stod(roots[1]["re"].get<std::string>()) == doctest::Approx(-0.5).epsilon(1e-9));
  CHECK(std::min(im0, im1) == doctest::Approx(-0.28867513).epsilon(1e-6));
  CHECK(std::max(im0, im1) == doctest::Approx(0.28867513).epsilon(1e-6));
  CHECK(j["payload"]["vieta"]["sum_ok"] == true);
  CHECK(j["payload"]["vieta"]["product_ok"] == true);
  CHECK(j["payload"]["flags"]["violates_fano_upper"] == false);
  CHECK(j["payload"]["polytope"] == "smooth Fano");

  auto r4 = run_cli("roots --d 4 --format json");
  REQUIRE(r4.exit_code == 0);
  CHECK(json::parse(r4.out)["payload"]["polytope"] == "Gorenstein Fano (not smooth)");
}

TEST_CASE("roots csv format with summary comments") {
  auto r = run_cli("roots --d 3 --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.rfind("index,re,im,radius\n", 0) == 0);
  CHECK(r.out.find("# d=3 dim=2 degree=2") != std::string::npos);
  CHECK(r.out.find("# vieta_sum_ok=1 vieta_product_ok=1") != std::string::npos);
}

TEST_CASE("roots writes report file") {
  std::string path = "/tmp/septope_test_roots.json";
  std::remove(path.c_str());
  auto r = run_cli("roots --d 5 --format json --out " + path);
  REQUIRE(r.exit_code == 0);
  std::ifstream f(path);
  REQUIRE(f.good());
  json j;
  f >> j;
  CHECK(j["payload"]["degree"] == 4);
  std::remove(path.c_str());
}

TEST_CASE("verify subcommands") {
  CHECK(run_cli("verify reciprocity --d-min 3 --d-max 10").exit_code == 0);
  CHECK(run_cli("verify hvector --d-min 3 --d-max 12").exit_code == 0);
  CHECK(run_cli("verify lattice --d-min 3 --d-max 4 --m-max 3").exit_code == 0);
  CHECK(run_cli("verify groebner --d-min 3 --d-max 4").exit_code == 0);
  CHECK(run_cli("verify nonsense").exit_code == 2);
  // guard violations are skipped with a warning, not failed
  auto r = run_cli("verify lattice --d-min 6 --d-max 8 --m-max 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("SKIP") != std::string::npos);
}

TEST_CASE("scan produces stable schema and reproducible bytes") {
  auto r1 = run_cli("scan --d-min 3 --d-max 6 --format csv");
  REQUIRE(r1.exit_code == 0);
  CHECK(r1.out.rfind("d,dim,parity,max_re,max_re_radius,volume,violates_dstrip_upper,"
                     "violates_dstrip_lower,violates_fano_upper,violates_fano_lower,"
                     "exceeds_dimension,status\n",
                     0) == 0);
  auto r2 = run_cli("scan --d-min 3 --d-max 6 --format csv");
  CHECK(r1.out == r2.out);
  // four rows plus header plus five summary comments
  CHECK(std::count(r1.out.begin(), r1.out.end(), '\n') == 10);

  auto rj = run_cli("scan --d-min 3 --d-max 5 --parity odd --format json");
  REQUIRE(rj.exit_code == 0);
  auto j = json::parse(rj.out);
  REQUIRE(j["payload"]["rows"].size() == 2);
  CHECK(j["payload"]["rows"][0]["status"] == "ok");
  CHECK(j["meta"]["wall_time_ms"] == 0);  // timings off by default
}

TEST_CASE("plot emits deterministic svg") {
  std::string path = "/tmp/septope_test_plot.svg";
  std::remove(path.c_str());
  auto r = run_cli("plot --d 3 --out " + path);
  REQUIRE(r.exit_code == 0);
  std::ifstream f(path);
  REQUIRE(f.good());
  std::string first_line;
  std::getline(f, first_line);
  CHECK(first_line.rfind("<svg", 0) == 0);
  std::remove(path.c_str());

  auto direct1 = run_cli("plot --d 3");
  auto direct2 = run_cli("plot --d 3");
  CHECK(direct1.out == direct2.out);
  CHECK(direct1.out.find("</svg>") != std::string::npos);
}
