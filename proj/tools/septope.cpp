// septope: Ehrhart polynomials, h-vectors, toric Groebner verification and
// certified Ehrhart roots for symmetric edge polytopes of cycles.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "septope/combinatorics.hpp"
#include "septope/groebner.hpp"
#include "septope/lattice.hpp"
#include "septope/roots.hpp"
#include "septope/svgplot.hpp"

using json = nlohmann::ordered_json;
using namespace septope;

namespace {

constexpr const char* kVersion = "0.1.0";

// exit codes per the external contract
constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

using clock_type = std::chrono::steady_clock;

long elapsed_ms(clock_type::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(clock_type::now() - start).count();
}

std::string rat_str(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string polytope_label(int d) {
  return d % 2 == 1 ? "smooth Fano" : "Gorenstein Fano (not smooth)";
}

json envelope(int d, json payload, int digits, long wall_ms) {
  json out;
  if (d >= 3) {
    out["d"] = d;
    out["dim"] = d - 1;
  } else {
    out["d"] = nullptr;
    out["dim"] = nullptr;
  }
  out["payload"] = std::move(payload);
  out["meta"] = {{"version", kVersion}, {"digits", digits}, {"wall_time_ms", wall_ms}};
  return out;
}

int write_output(const std::string& content, const std::string& path) {
  if (path.empty()) {
    std::cout << content;
    return kOk;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open output file: " << path << "\n";
    return kResource;
  }
  f << content;
  if (!f.good()) {
    std::cerr << "error: failed writing output file: " << path << "\n";
    return kResource;
  }
  return kOk;
}

json flags_json(const conjecture_flags& f) {
  return {{"violates_dstrip_upper", f.violates_dstrip_upper},
          {"violates_dstrip_lower", f.violates_dstrip_lower},
          {"violates_fano_upper", f.violates_fano_upper},
          {"violates_fano_lower", f.violates_fano_lower},
          {"exceeds_dimension", f.exceeds_dimension}};
}

// ---------------------------------------------------------------- ehrhart --

struct ehrhart_args {
  int d = 0;
  std::string basis = "binomial";
  std::string format = "text";
};

int cmd_ehrhart(const ehrhart_args& a) {
  auto start = clock_type::now();
  std::vector<std::string> coeffs;
  if (a.basis == "binomial") {
    auto p = ehrhart_binomial_basis(a.d);
    for (const auto& c : p.coeffs) coeffs.push_back(c.get_str());
  } else {
    auto p = ehrhart_monomial_basis(a.d);
    for (const auto& c : p.coeffs) coeffs.push_back(rat_str(c));
  }
  Int volume = normalized_volume(a.d);

  if (a.format == "json") {
    json payload = {{"basis", a.basis},
                    {"coeffs", coeffs},
                    {"normalized_volume", volume.get_str()},
                    {"polytope", polytope_label(a.d)}};
    std::cout << envelope(a.d, payload, 0, elapsed_ms(start)).dump(2) << "\n";
  } else if (a.format == "csv") {
    std::cout << "i,coeff\n";
    for (size_t i = 0; i < coeffs.size(); ++i) std::cout << i << "," << coeffs[i] << "\n";
  } else {
    std::cout << "Conv(A_" << a.d << "), dim " << a.d - 1 << ", " << polytope_label(a.d) << "\n";
    std::cout << (a.basis == "binomial" ? "L(m) = sum coeffs[i]*C(m,i), coeffs:" : "monomial coefficients, ascending:")
              << "\n";
    for (size_t i = 0; i < coeffs.size(); ++i) std::cout << "  [" << i << "] " << coeffs[i] << "\n";
    std::cout << "normalized volume: " << volume.get_str() << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- hvector --

struct hvector_args {
  int d = 0;
  std::string method = "all";
  std::string format = "text";
};

int cmd_hvector(const hvector_args& a) {
  auto start = clock_type::now();
  std::map<std::string, hvector> computed;
  if (a.method == "closed" || a.method == "all") computed["closed"] = h_vector_closed(a.d);
  if (a.method == "recurrence" || a.method == "all") computed["recurrence"] = h_vector_recurrence(a.d);
  if (a.method == "genfunc" || a.method == "all") computed["genfunc"] = h_vector_genfunc(a.d);
  if (a.method == "ehrhart" || a.method == "all") computed["ehrhart"] = h_vector_from_ehrhart(a.d);

  bool consistent = true;
  const hvector& ref = computed.begin()->second;
  for (const auto& [name, h] : computed) {
    if (!(h == ref)) consistent = false;
  }

  auto entries_json = [](const hvector& h) {
    std::vector<std::string> v;
    for (const auto& e : h.entries) v.push_back(e.get_str());
    return v;
  };

  if (a.format == "json") {
    json payload;
    payload["method"] = a.method;
    if (a.method == "all") {
      json methods;
      for (const auto& [name, h] : computed) methods[name] = entries_json(h);
      payload["methods"] = methods;
      payload["consistent"] = consistent;
    }
    payload["entries"] = entries_json(ref);
    payload["sum"] = normalized_volume(a.d).get_str();
    payload["polytope"] = polytope_label(a.d);
    std::cout << envelope(a.d, payload, 0, elapsed_ms(start)).dump(2) << "\n";
  } else if (a.format == "csv") {
    std::cout << "j,h_j\n";
    for (size_t j = 0; j < ref.entries.size(); ++j) {
      std::cout << j << "," << ref.entries[j].get_str() << "\n";
    }
  } else {
    std::cout << "h-vector of Conv(A_" << a.d << "):";
    for (const auto& e : ref.entries) std::cout << " " << e.get_str();
    std::cout << "\n";
    if (a.method == "all") {
      std::cout << "four-way consistency: " << (consistent ? "ok" : "MISMATCH") << "\n";
    }
  }
  if (!consistent) {
    std::cerr << "error: h-vector methods disagree:\n";
    for (const auto& [name, h] : computed) {
      std::cerr << "  " << name << ":";
      for (const auto& e : h.entries) std::cerr << " " << e.get_str();
      std::cerr << "\n";
    }
    return kVerifyFail;
  }
  return kOk;
}

// ------------------------------------------------------------------ roots --

struct roots_args {
  int d = 0;
  int digits = 10;
  std::string out;
  std::string format = "json";
};

struct roots_bundle {
  int_poly poly;
  std::vector<certified_root> roots;
  float_interval max_re, min_re;
  bigfloat defect, maxrad;
  vieta_result vieta;
  conjecture_flags flags;
};

roots_bundle compute_roots_bundle(int d, int digits) {
  roots_bundle b;
  b.poly = ehrhart_int_poly(d);
  b.roots = all_roots(b.poly, digits);
  b.max_re = max_real_part(b.roots);
  b.min_re = min_real_part(b.roots);
  b.defect = symmetry_defect(b.roots);
  b.maxrad = max_radius(b.roots);
  b.vieta = vieta_check(b.poly, b.roots);
  b.flags = report_conjectures(d, b.roots, digits);
  return b;
}

int cmd_roots(const roots_args& a) {
  auto start = clock_type::now();
  roots_bundle b = compute_roots_bundle(a.d, a.digits);
  int digits = a.digits;

  std::string content;
  if (a.format == "json") {
    json roots_json = json::array();
    for (const auto& r : b.roots) {
      roots_json.push_back({{"re", r.re.to_string(digits)},
                            {"im", r.im.to_string(digits)},
                            {"radius", r.radius.to_string(3)}});
    }
    json payload = {{"degree", b.poly.degree()},
                    {"digits", digits},
                    {"polytope", polytope_label(a.d)},
                    {"normalized_volume", normalized_volume(a.d).get_str()},
                    {"roots", roots_json},
                    {"max_re", {{"lo", b.max_re.lo.to_string(digits + 2)}, {"hi", b.max_re.hi.to_string(digits + 2)}}},
                    {"min_re", {{"lo", b.min_re.lo.to_string(digits + 2)}, {"hi", b.min_re.hi.to_string(digits + 2)}}},
                    {"symmetry_defect", b.defect.to_string(3)},
                    {"max_radius", b.maxrad.to_string(3)},
                    {"vieta", {{"sum_ok", b.vieta.sum_ok}, {"product_ok", b.vieta.product_ok}}},
                    {"flags", flags_json(b.flags)},
                    {"flags_digits_used", b.flags.digits_used}};
    content = envelope(a.d, payload, digits, elapsed_ms(start)).dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "index,re,im,radius\n";
    for (size_t i = 0; i < b.roots.size(); ++i) {
      os << i << "," << b.roots[i].re.to_string(digits) << "," << b.roots[i].im.to_string(digits)
         << "," << b.roots[i].radius.to_string(3) << "\n";
    }
    os << "# d=" << a.d << " dim=" << a.d - 1 << " degree=" << b.poly.degree() << "\n";
    os << "# max_re_lo=" << b.max_re.lo.to_string(digits + 2)
       << " max_re_hi=" << b.max_re.hi.to_string(digits + 2) << "\n";
    os << "# symmetry_defect=" << b.defect.to_string(3) << " max_radius=" << b.maxrad.to_string(3)
       << "\n";
    os << "# vieta_sum_ok=" << b.vieta.sum_ok << " vieta_product_ok=" << b.vieta.product_ok << "\n";
    os << "# violates_dstrip_upper=" << b.flags.violates_dstrip_upper
       << " violates_dstrip_lower=" << b.flags.violates_dstrip_lower
       << " violates_fano_upper=" << b.flags.violates_fano_upper
       << " violates_fano_lower=" << b.flags.violates_fano_lower
       << " exceeds_dimension=" << b.flags.exceeds_dimension << "\n";
    content = os.str();
  }

  int rc = write_output(content, a.out);
  if (rc != kOk) return rc;
  if (!a.out.empty()) {
    std::cout << "d=" << a.d << " dim=" << a.d - 1 << " degree=" << b.poly.degree()
              << " max_re=[" << b.max_re.lo.to_string(digits) << ", " << b.max_re.hi.to_string(digits)
              << "] -> " << a.out << "\n";
  }
  return kOk;
}

// ----------------------------------------------------------------- verify --

struct verify_args {
  std::string target;
  int d_min = 3;
  int d_max = 0;  // 0 -> per-target default
  int m_max = 5;
};

int cmd_verify(const verify_args& a) {
  int d_max = a.d_max;
  if (d_max == 0) {
    if (a.target == "lattice" || a.target == "groebner") d_max = 6;
    else d_max = 40;
  }
  if (a.d_min < 3 || d_max < a.d_min) {
    std::cerr << "error: bad d range\n";
    return kUsage;
  }

  int passed = 0, failed = 0, skipped = 0;
  auto report = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
    (ok ? passed : failed)++;
  };

  for (int d = a.d_min; d <= d_max; ++d) {
    try {
      if (a.target == "lattice") {
        for (int m = 0; m <= a.m_max; ++m) {
          Int oracle = count_points(d, m);
          Int formula = ehrhart_eval(d, m);
          Int hilbert = standard_monomial_count(d, m, {7, static_cast<long>(a.m_max)});
          bool ok = oracle == formula && formula == hilbert;
          report("lattice d=" + std::to_string(d) + " m=" + std::to_string(m) + "  (oracle " +
                     oracle.get_str() + ", formula " + formula.get_str() + ", standard-monomials " +
                     hilbert.get_str() + ")",
                 ok);
        }
      } else if (a.target == "groebner") {
        auto rep = buchberger_verify(d, a.m_max);
        std::string detail = " [membership " + std::string(rep.membership_ok ? "ok" : "FAIL") +
                             ", spairs " + (rep.spairs_ok ? "ok" : "FAIL") + " (" +
                             std::to_string(rep.spairs_checked) + " checked, " +
                             std::to_string(rep.spairs_skipped) + " coprime-skipped), reduced " +
                             (rep.reduced_ok ? "ok" : "FAIL") + ", squarefree " +
                             (rep.squarefree_ok ? "ok" : "FAIL") + ", hilbert " +
                             (rep.hilbert_ok ? "ok" : "FAIL") + "]";
        report("groebner d=" + std::to_string(d) + " basis=" + std::to_string(rep.basis_size) + detail,
               rep.all_ok());
        for (const auto& f : rep.failures) std::cout << "      " << f << "\n";
      } else if (a.target == "hvector") {
        auto h1 = h_vector_closed(d);
        auto h2 = h_vector_recurrence(d);
        auto h3 = h_vector_genfunc(d);
        auto h4 = h_vector_from_ehrhart(d);
        bool equal = h1 == h2 && h2 == h3 && h3 == h4;
        bool palindromic = true, positive = true;
        Int sum = 0;
        for (int j = 0; j < d; ++j) {
          if (h1.entries[j] != h1.entries[d - 1 - j]) palindromic = false;
          if (h1.entries[j] <= 0) positive = false;
          sum += h1.entries[j];
        }
        bool volume_ok = sum == normalized_volume(d);
        bool middle_ok = d % 2 == 0 || h1.entries[half_up(d) - 1] == pow2(d - 1);
        report("hvector d=" + std::to_string(d), equal && palindromic && positive && volume_ok && middle_ok);
      } else if (a.target == "reciprocity") {
        report("reciprocity d=" + std::to_string(d), reciprocity_check(d));
      }
    } catch (const resource_limit_error& e) {
      std::cout << "SKIP  " << a.target << " d=" << d << "  (guard: " << e.what() << ")\n";
      ++skipped;
    }
  }
  std::cout << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
  return failed == 0 ? kOk : kVerifyFail;
}

// ------------------------------------------------------------------- scan --

struct scan_args {
  int d_min = 3;
  int d_max = 0;
  std::string parity = "all";
  int digits = 10;
  std::string out;
  std::string format = "csv";
  int jobs = 0;
  bool timings = false;
};

struct scan_row {
  int d = 0;
  bool ok = false;
  std::string error;
  std::string max_re_mid, max_re_rad, volume;
  conjecture_flags flags;
  long wall_ms = 0;
};

scan_row compute_scan_row(int d, int digits) {
  scan_row row;
  row.d = d;
  auto start = clock_type::now();
  try {
    roots_bundle b = compute_roots_bundle(d, digits);
    bigfloat mid = (b.max_re.lo + b.max_re.hi) / bigfloat::from_double(2.0);
    bigfloat rad(64);
    mpfr_sub(rad.get(), b.max_re.hi.get(), b.max_re.lo.get(), MPFR_RNDU);
    mpfr_div_2ui(rad.get(), rad.get(), 1, MPFR_RNDU);
    row.max_re_mid = mid.to_string(digits);
    row.max_re_rad = rad.to_string(3);
    row.volume = normalized_volume(d).get_str();
    row.flags = b.flags;
    row.ok = true;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  row.wall_ms = elapsed_ms(start);
  return row;
}

int cmd_scan(const scan_args& a) {
  auto start = clock_type::now();
  int d_max = a.d_max == 0 ? a.d_min : a.d_max;
  if (a.d_min < 3 || d_max < a.d_min) {
    std::cerr << "error: bad d range\n";
    return kUsage;
  }
  std::vector<int> ds;
  for (int d = a.d_min; d <= d_max; ++d) {
    if (a.parity == "odd" && d % 2 == 0) continue;
    if (a.parity == "even" && d % 2 == 1) continue;
    ds.push_back(d);
  }

  int jobs = a.jobs;
  if (jobs <= 0) {
    jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    if (jobs > 8) jobs = 8;
  }
  jobs = std::min<int>(jobs, static_cast<int>(ds.size()));

  // fan out per-d jobs; rows are assembled in d order afterwards
  std::vector<scan_row> rows(ds.size());
  std::mutex next_mutex;
  size_t next = 0;
  auto worker = [&]() {
    for (;;) {
      size_t idx;
      {
        std::lock_guard<std::mutex> lock(next_mutex);
        if (next >= ds.size()) {
          mpfr_free_cache();
          return;
        }
        idx = next++;
      }
      rows[idx] = compute_scan_row(ds[idx], a.digits);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  // first d at which each flag fires
  auto first_with = [&](auto pred) -> int {
    for (const auto& r : rows) {
      if (r.ok && pred(r.flags)) return r.d;
    }
    return 0;
  };
  int first_dstrip_upper = first_with([](const conjecture_flags& f) { return f.violates_dstrip_upper; });
  int first_dstrip_lower = first_with([](const conjecture_flags& f) { return f.violates_dstrip_lower; });
  int first_fano_upper = first_with([](const conjecture_flags& f) { return f.violates_fano_upper; });
  int first_fano_lower = first_with([](const conjecture_flags& f) { return f.violates_fano_lower; });
  int first_exceeds = first_with([](const conjecture_flags& f) { return f.exceeds_dimension; });

  std::string content;
  if (a.format == "json") {
    json rows_json = json::array();
    for (const auto& r : rows) {
      json rj = {{"d", r.d}, {"dim", r.d - 1}, {"parity", r.d % 2 == 1 ? "odd" : "even"}};
      if (r.ok) {
        rj["max_re"] = r.max_re_mid;
        rj["max_re_radius"] = r.max_re_rad;
        rj["volume"] = r.volume;
        rj["flags"] = flags_json(r.flags);
        rj["status"] = "ok";
      } else {
        rj["status"] = "error: " + r.error;
      }
      if (a.timings) rj["wall_time_ms"] = r.wall_ms;
      rows_json.push_back(rj);
    }
    json payload = {{"rows", rows_json},
                    {"first_violations",
                     {{"dstrip_upper", first_dstrip_upper},
                      {"dstrip_lower", first_dstrip_lower},
                      {"fano_upper", first_fano_upper},
                      {"fano_lower", first_fano_lower},
                      {"exceeds_dimension", first_exceeds}}}};
    content = envelope(0, payload, a.digits, a.timings ? elapsed_ms(start) : 0).dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "d,dim,parity,max_re,max_re_radius,volume,violates_dstrip_upper,violates_dstrip_lower,"
          "violates_fano_upper,violates_fano_lower,exceeds_dimension,status";
    if (a.timings) os << ",wall_time_ms";
    os << "\n";
    for (const auto& r : rows) {
      os << r.d << "," << r.d - 1 << "," << (r.d % 2 == 1 ? "odd" : "even") << ",";
      if (r.ok) {
        os << r.max_re_mid << "," << r.max_re_rad << "," << r.volume << ","
           << r.flags.violates_dstrip_upper << "," << r.flags.violates_dstrip_lower << ","
           << r.flags.violates_fano_upper << "," << r.flags.violates_fano_lower << ","
           << r.flags.exceeds_dimension << ",ok";
      } else {
        os << ",,,,,,,," << "error: " << r.error;
      }
      if (a.timings) os << "," << r.wall_ms;
      os << "\n";
    }
    os << "# first_violates_dstrip_upper=" << first_dstrip_upper << "\n";
    os << "# first_violates_dstrip_lower=" << first_dstrip_lower << "\n";
    os << "# first_violates_fano_upper=" << first_fano_upper << "\n";
    os << "# first_violates_fano_lower=" << first_fano_lower << "\n";
    os << "# first_exceeds_dimension=" << first_exceeds << "\n";
    content = os.str();
  }

  int rc = write_output(content, a.out);
  if (rc != kOk) return rc;
  if (!a.out.empty()) {
    std::cout << rows.size() << " rows -> " << a.out << "\n";
  }
  for (const auto& r : rows) {
    if (!r.ok) return kVerifyFail;
  }
  return kOk;
}

// ------------------------------------------------------------------- plot --

struct plot_args {
  int d = 0;
  int digits = 10;
  std::string out;
};

int cmd_plot(const plot_args& a) {
  auto roots = all_roots(ehrhart_int_poly(a.d), a.digits);
  std::string svg = root_scatter_svg(a.d, roots);
  int rc = write_output(svg, a.out);
  if (rc != kOk) return rc;
  if (!a.out.empty()) {
    std::cout << roots.size() << " roots plotted -> " << a.out << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symmetric edge polytopes of cycles: exact Ehrhart data and certified roots"};
  app.require_subcommand(1);

  ehrhart_args ea;
  auto* ehrhart_cmd = app.add_subcommand("ehrhart", "Ehrhart polynomial coefficients");
  ehrhart_cmd->add_option("--d", ea.d, "cycle length (>= 3)")->required();
  ehrhart_cmd->add_option("--basis", ea.basis, "binomial|monomial")
      ->check(CLI::IsMember({"binomial", "monomial"}));
  ehrhart_cmd->add_option("--format", ea.format, "json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  hvector_args ha;
  auto* hvector_cmd = app.add_subcommand("hvector", "h-vector by one or all methods");
  hvector_cmd->add_option("--d", ha.d, "cycle length (>= 3)")->required();
  hvector_cmd->add_option("--method", ha.method, "closed|recurrence|genfunc|ehrhart|all")
      ->check(CLI::IsMember({"closed", "recurrence", "genfunc", "ehrhart", "all"}));
  hvector_cmd->add_option("--format", ha.format, "json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  roots_args ra;
  auto* roots_cmd = app.add_subcommand("roots", "certified Ehrhart polynomial roots");
  roots_cmd->add_option("--d", ra.d, "cycle length (>= 3)")->required();
  roots_cmd->add_option("--digits", ra.digits, "certified significant digits (default 10)");
  roots_cmd->add_option("--out", ra.out, "write the report to this file");
  roots_cmd->add_option("--format", ra.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

  verify_args va;
  auto* verify_cmd = app.add_subcommand("verify", "verification harnesses");
  verify_cmd->add_option("target", va.target, "lattice|groebner|hvector|reciprocity")
      ->required()
      ->check(CLI::IsMember({"lattice", "groebner", "hvector", "reciprocity"}));
  verify_cmd->add_option("--d-min", va.d_min, "smallest d (default 3)");
  verify_cmd->add_option("--d-max", va.d_max, "largest d (default per target)");
  verify_cmd->add_option("--m-max", va.m_max, "largest dilate degree (default 5)");

  scan_args sa;
  auto* scan_cmd = app.add_subcommand("scan", "root scan over a range of d");
  scan_cmd->add_option("--d-min", sa.d_min, "smallest d")->required();
  scan_cmd->add_option("--d-max", sa.d_max, "largest d (default: d-min)");
  scan_cmd->add_option("--parity", sa.parity, "odd|even|all (default all)")
      ->check(CLI::IsMember({"odd", "even", "all"}));
  scan_cmd->add_option("--digits", sa.digits, "certified digits per d (default 10)");
  scan_cmd->add_option("--out", sa.out, "write CSV/JSON to this file");
  scan_cmd->add_option("--format", sa.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  scan_cmd->add_option("--jobs", sa.jobs, "worker threads (default: min(cores, 8))");
  scan_cmd->add_flag("--timings", sa.timings, "include wall_time_ms (breaks byte reproducibility)");

  plot_args pa;
  auto* plot_cmd = app.add_subcommand("plot", "SVG scatter of the root set");
  plot_cmd->add_option("--d", pa.d, "cycle length (>= 3)")->required();
  plot_cmd->add_option("--digits", pa.digits, "certified digits (default 10)");
  plot_cmd->add_option("--out", pa.out, "output SVG path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (app.got_subcommand(ehrhart_cmd)) return cmd_ehrhart(ea);
    if (app.got_subcommand(hvector_cmd)) return cmd_hvector(ha);
    if (app.got_subcommand(roots_cmd)) return cmd_roots(ra);
    if (app.got_subcommand(verify_cmd)) return cmd_verify(va);
    if (app.got_subcommand(scan_cmd)) return cmd_scan(sa);
    if (app.got_subcommand(plot_cmd)) return cmd_plot(pa);
  } catch (const resource_limit_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const escalation_error& e) {
    std::cerr << "escalation failure: " << e.what() << "\n";
    return kResource;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFail;
  }
  return kUsage;
}
