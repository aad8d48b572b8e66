// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion.  Exit code 0 iff all pass.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "septope/combinatorics.hpp"
#include "septope/groebner.hpp"
#include "septope/lattice.hpp"
#include "septope/roots.hpp"

using json = nlohmann::json;
using namespace septope;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " - " << name;
  if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << "\n";
  std::cout.flush();
  if (!ok) ++failures;
}

struct cli_run {
  int exit_code = -1;
  double seconds = 0;
  std::string out;
};

cli_run run_cli(const std::string& args) {
  std::string cmd = std::string(SEPTOPE_BIN) + " " + args + " 2>/dev/null";
  auto start = std::chrono::steady_clock::now();
  FILE* pipe = popen(cmd.c_str(), "r");
  cli_run r;
  if (!pipe) return r;
  std::array<char, 65536> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

double num(const json& j) { return std::stod(j.get<std::string>()); }

// certified interval of the CLI's max_re lies within target +- tol
bool interval_within(const json& payload, double target, double tol) {
  double lo = num(payload["max_re"]["lo"]);
  double hi = num(payload["max_re"]["hi"]);
  return lo >= target - tol && hi <= target + tol && lo <= hi;
}

}  // namespace

int main() {
  // --- headline root-location values ----------------------------------------
  auto r35 = run_cli("roots --d 35 --format json");
  json j35 = r35.exit_code == 0 ? json::parse(r35.out) : json();
  report("roots --d 35: max real part = 16.35734046 +- 1e-6",
         r35.exit_code == 0 && interval_within(j35["payload"], 16.35734046, 1e-6),
         r35.exit_code == 0 ? j35["payload"]["max_re"].dump() : "exit " + std::to_string(r35.exit_code));
  report("roots --d 35: runtime < 30 s", r35.exit_code == 0 && r35.seconds < 30.0,
         std::to_string(r35.seconds) + " s");

  auto r125 = run_cli("roots --d 125 --format json");
  json j125 = r125.exit_code == 0 ? json::parse(r125.out) : json();
  report("roots --d 125: max real part = 123.5298262 +- 1e-6",
         r125.exit_code == 0 && interval_within(j125["payload"], 123.5298262, 1e-6),
         r125.exit_code == 0 ? j125["payload"]["max_re"].dump() : "exit " + std::to_string(r125.exit_code));
  report("roots --d 125: runtime < 10 min", r125.exit_code == 0 && r125.seconds < 600.0,
         std::to_string(r125.seconds) + " s");

  auto r127 = run_cli("roots --d 127 --format json");
  json j127 = r127.exit_code == 0 ? json::parse(r127.out) : json();
  bool v127 = r127.exit_code == 0 && interval_within(j127["payload"], 126.5725840, 1e-6);
  report("roots --d 127: max real part = 126.5725840 +- 1e-6", v127,
         r127.exit_code == 0 ? j127["payload"]["max_re"].dump() : "exit " + std::to_string(r127.exit_code));
  report("roots --d 127: certified strictly greater than dim = 126",
         r127.exit_code == 0 && num(j127["payload"]["max_re"]["lo"]) > 126.0 &&
             j127["payload"]["flags"]["exceeds_dimension"] == true);

  {
    bool ok = r35.exit_code == 0;
    std::string detail;
    if (ok) {
      const auto& f = j35["payload"]["flags"];
      ok = f["violates_fano_upper"] == true && f["violates_dstrip_upper"] == false &&
           f["exceeds_dimension"] == false;
      detail = f.dump();
    }
    report("d=35 flags: fano-upper is the only upper-bound violation", ok, detail);
  }
  {
    bool ok = r125.exit_code == 0;
    std::string detail;
    if (ok) {
      const auto& f = j125["payload"]["flags"];
      ok = f["violates_dstrip_upper"] == true && f["violates_dstrip_lower"] == true;
      detail = f.dump();
    }
    report("d=125 flags: dual dstrip violation (neither bound holds)", ok, detail);
  }
  {
    auto scan = run_cli("scan --d-min 3 --d-max 35 --parity odd --format json");
    bool ok = scan.exit_code == 0;
    std::string detail = "exit " + std::to_string(scan.exit_code);
    if (ok) {
      auto js = json::parse(scan.out);
      ok = js["payload"]["first_violations"]["fano_upper"] == 35;
      int earlier = 0;
      for (const auto& row : js["payload"]["rows"]) {
        if (row["status"] != "ok") ok = false;
        if (row["d"] < 35 && row["flags"]["violates_fano_upper"] == true) earlier = row["d"];
      }
      ok = ok && earlier == 0;
      detail = js["payload"]["first_violations"].dump();
    }
    report("scan odd 3..35: first fano-upper violation is d=35", ok, detail);
  }

  // --- oracle equivalence ---------------------------------------------------
  {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (int d = 3; d <= 6 && ok; ++d) {
      for (int m = 0; m <= 5 && ok; ++m) {
        Int minkowski = count_points(d, m);
        Int standard = standard_monomial_count(d, m);
        Int formula = ehrhart_eval(d, m);
        if (minkowski != standard || standard != formula) {
          ok = false;
          detail = "d=" + std::to_string(d) + " m=" + std::to_string(m) + ": " +
                   minkowski.get_str() + "/" + standard.get_str() + "/" + formula.get_str();
        }
      }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report("oracle equivalence: 24 exact three-way equalities (d=3..6, m=0..5)", ok, detail);
    report("oracle equivalence: runtime < 60 s", secs < 60.0, std::to_string(secs) + " s");
    bool hexa = true;
    for (int m = 0; m <= 5; ++m) {
      if (count_points(3, m) != Int(3 * m * m + 3 * m + 1)) hexa = false;
    }
    report("d=3 counts equal 3m^2+3m+1 for m <= 5", hexa);
  }

  // --- groebner verification ------------------------------------------------
  {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (int d = 3; d <= 7; ++d) {
      auto rep = buchberger_verify(d);
      if (!rep.all_ok()) {
        ok = false;
        detail = "d=" + std::to_string(d) + (rep.failures.empty() ? "" : ": " + rep.failures[0]);
      }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report("buchberger_verify passes all five checks for d=3..7", ok, detail);
    report("groebner verification: runtime < 2 min", secs < 120.0, std::to_string(secs) + " s");

    bool sizes = true;
    for (int d = 3; d <= 40; ++d) {
      int k = half_up(d);
      Int expected = d % 2 == 1 ? Int(d) + 2 * binom(d, k) : Int(d) + 2 * binom(d - 1, k);
      if (claimed_basis_size(d) != expected) sizes = false;
      if (d <= 16 && Int(static_cast<long>(claimed_basis(d).size())) != expected) sizes = false;
    }
    report("claimed basis sizes match d+2C(d,k) / d+2C(d-1,k) for d <= 40", sizes);
  }

  // --- h-vector consistency ---------------------------------------------------
  {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (int d = 3; d <= 40 && ok; ++d) {
      auto h1 = h_vector_closed(d);
      auto h2 = h_vector_recurrence(d);
      auto h3 = h_vector_genfunc(d);
      auto h4 = h_vector_from_ehrhart(d);
      bool same = h1 == h2 && h1 == h3 && h1 == h4;
      Int sum = 0;
      bool palin = true, positive = true;
      for (int j = 0; j < d; ++j) {
        sum += h1.entries[j];
        if (h1.entries[j] != h1.entries[d - 1 - j]) palin = false;
        if (h1.entries[j] <= 0) positive = false;
      }
      bool middle = d % 2 == 0 || h1.entries[half_up(d) - 1] == pow2(d - 1);
      if (!(same && palin && positive && sum == normalized_volume(d) && middle)) {
        ok = false;
        detail = "d=" + std::to_string(d);
      }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report("four independent h-vector routes agree for 3 <= d <= 40", ok, detail);
    report("h-vector suite: runtime < 10 s", secs < 10.0, std::to_string(secs) + " s");
  }

  // --- reciprocity and root symmetry -----------------------------------------
  {
    bool ok = true;
    std::string detail;
    for (int d = 3; d <= 40; ++d) {
      if (!reciprocity_check(d)) {
        ok = false;
        detail = "d=" + std::to_string(d);
      }
    }
    report("exact reciprocity L(-m) = (-1)^(d-1) L(m-1) for 3 <= d <= 40", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    std::vector<std::vector<certified_root>> cached(41);
    for (int d = 3; d <= 40; ++d) {
      cached[d] = all_roots(ehrhart_int_poly(d), 10);
      bigfloat two_rad = bigfloat::from_double(2.0) * max_radius(cached[d]);
      if (!(symmetry_defect(cached[d]) <= two_rad)) {
        ok = false;
        detail = "d=" + std::to_string(d);
      }
    }
    for (const json& j : {j125, j127}) {
      if (j.is_null()) {
        ok = false;
        continue;
      }
      double defect = num(j["payload"]["symmetry_defect"]);
      double maxrad = num(j["payload"]["max_radius"]);
      if (!(defect <= 2.0 * maxrad)) {
        ok = false;
        detail = "d=" + std::to_string(j["d"].get<int>());
      }
    }
    report("root symmetry defect <= 2 max radius for d in {3..40, 125, 127}", ok, detail);

    // --- root-finder sanity ---------------------------------------------------
    bool vieta_ok = true;
    for (int d = 3; d <= 40; ++d) {
      auto v = vieta_check(ehrhart_int_poly(d), cached[d]);
      if (!v.sum_ok || !v.product_ok) {
        vieta_ok = false;
        detail = "d=" + std::to_string(d);
      }
    }
    for (const json& j : {j125, j127}) {
      if (j.is_null() || j["payload"]["vieta"]["sum_ok"] != true ||
          j["payload"]["vieta"]["product_ok"] != true) {
        vieta_ok = false;
      }
    }
    report("vieta sum/product checks hold within certified radii for every computed d",
           vieta_ok, detail);
  }
  {
    auto a = all_roots(ehrhart_int_poly(35), 10);
    auto b = all_roots(ehrhart_int_poly(35), 10);
    bool ok = a.size() == b.size();
    for (size_t i = 0; ok && i < a.size(); ++i) {
      ok = a[i].re == b[i].re && a[i].im == b[i].im && a[i].radius == b[i].radius &&
           a[i].re.to_string(40) == b[i].re.to_string(40);
    }
    auto c1 = run_cli("roots --d 35 --format json");
    auto c2 = run_cli("roots --d 35 --format json");
    bool cli_ok = c1.exit_code == 0 && c2.exit_code == 0 &&
                  json::parse(c1.out)["payload"] == json::parse(c2.out)["payload"];
    report("determinism: repeated runs produce bitwise-identical roots", ok && cli_ok);
  }

  std::cout << (failures == 0 ? "ALL ACCEPTANCE CRITERIA PASSED"
                              : std::to_string(failures) + " CRITERIA FAILED")
            << "\n";
  return failures == 0 ? 0 : 1;
}
