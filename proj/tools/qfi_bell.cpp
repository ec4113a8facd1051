// Command-line driver: single-state reports, parameter scans, the
// (xi^2, C) region map and the brute-force verification suite.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "qfibell/bell.hpp"
#include "qfibell/qfi.hpp"
#include "qfibell/scan.hpp"
#include "qfibell/serialize.hpp"
#include "qfibell/states.hpp"
#include "qfibell/verify.hpp"

namespace {

using nlohmann::json;
using namespace qfibell;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitVerify = 3;
constexpr int kExitIo = 4;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open output file '" + path + "'");
  return out;
}

struct Report {
  int n = 0;
  QfiReport qfi;
  SqueezingSummary summary;
  WitnessResult w1m, w2m;
  PhiOptimum bell2;
  BellEvaluation bellm;
  BellEvaluation mermin;
  int bellm_settings = 6;
};

Report build_report(const SymmetricState& state, int m_settings) {
  Report r;
  r.n = state.n_parties();
  r.qfi = qfi_exact(state, collective_sz(r.n));
  r.summary = squeezing_summary(state);
  r.w1m = witness_two_settings(r.summary);
  r.w2m = witness_infinite_settings(r.summary);
  r.bell2 = optimize_two_settings_phi(state);
  r.bellm = bell_multi_settings(state, default_angle_fan(m_settings));
  r.mermin = mermin_check(state);
  r.bellm_settings = m_settings;
  return r;
}

void print_report_text(const Report& r, std::ostream& out) {
  auto flag = [](bool v) { return v ? "yes" : "no"; };
  out << "n_parties:        " << r.n << "\n";
  out << "qfi_sz:           " << format_sig(r.qfi.qfi) << "\n";
  out << "qfi_over_N:       " << format_sig(r.qfi.shot_noise_ratio) << "\n";
  out << "qfi_over_N2:      " << format_sig(r.qfi.heisenberg_ratio) << "\n";
  out << "contrast:         " << format_sig(r.summary.contrast) << "\n";
  out << "zeta2:            " << format_sig(r.summary.zeta2) << "\n";
  out << "xi2:              "
      << (r.summary.xi2_defined ? format_sig(r.summary.xi2) : "undefined")
      << "\n";
  out << "w1m_margin:       " << format_sig(r.w1m.margin) << "  violated: "
      << flag(r.w1m.violated) << "\n";
  out << "w2m_margin:       " << format_sig(r.w2m.margin) << "  violated: "
      << flag(r.w2m.violated) << "\n";
  out << "bell2_phi:        " << format_sig(r.bell2.phi) << "\n";
  out << "bell2_value:      " << format_sig(r.bell2.value) << "  violated: "
      << flag(r.bell2.value < 0.0) << "\n";
  out << "bellm_settings:   " << r.bellm_settings << "\n";
  out << "bellm_value:      " << format_sig(r.bellm.value) << "  violated: "
      << flag(r.bellm.violated) << "\n";
  out << "mermin_value:     " << format_sig(r.mermin.value) << "\n";
  out << "mermin_bound:     " << format_sig(r.mermin.classical_bound_offset)
      << "  violated: " << flag(r.mermin.violated) << "\n";
}

json report_to_json(const Report& r) {
  json j;
  j["n_parties"] = r.n;
  j["qfi_sz"] = r.qfi.qfi;
  j["qfi_over_N"] = r.qfi.shot_noise_ratio;
  j["qfi_over_N2"] = r.qfi.heisenberg_ratio;
  j["contrast"] = r.summary.contrast;
  j["zeta2"] = r.summary.zeta2;
  if (r.summary.xi2_defined)
    j["xi2"] = r.summary.xi2;
  else
    j["xi2"] = nullptr;
  j["w1m_margin"] = r.w1m.margin;
  j["w1m_violated"] = r.w1m.violated;
  j["w2m_margin"] = r.w2m.margin;
  j["w2m_violated"] = r.w2m.violated;
  j["bell2_phi"] = r.bell2.phi;
  j["bell2_value"] = r.bell2.value;
  j["bell2_violated"] = r.bell2.value < 0.0;
  j["bellm_settings"] = r.bellm_settings;
  j["bellm_value"] = r.bellm.value;
  j["bellm_violated"] = r.bellm.violated;
  j["mermin_value"] = r.mermin.value;
  j["mermin_bound"] = r.mermin.classical_bound_offset;
  j["mermin_violated"] = r.mermin.violated;
  return j;
}

json scan_rows_to_json(const std::vector<ScanRow>& rows) {
  json arr = json::array();
  for (const ScanRow& r : rows) {
    json j;
    j["param"] = r.param;
    j["xi2"] = std::isfinite(r.xi2) ? json(r.xi2) : json(nullptr);
    j["C"] = r.contrast;
    j["zeta2"] = r.zeta2;
    j["qfi"] = r.qfi;
    j["qfi_over_N"] = r.qfi_over_n;
    j["qfi_lb"] = r.qfi_lb;
    j["bell2_phi"] = r.bell2_phi;
    j["bell2_value"] = r.bell2_value;
    j["bell2_violated"] = r.bell2_violated;
    j["bellm_value"] = r.bellm_value;
    j["bellm_violated"] = r.bellm_violated;
    j["w1m_margin"] = r.w1m_margin;
    j["w2m_margin"] = r.w2m_margin;
    j["w1m_violated"] = r.w1m_violated;
    j["w2m_violated"] = r.w2m_violated;
    j["mermin_value"] = r.mermin_value;
    j["mermin_bound"] = r.mermin_bound;
    j["mermin_violated"] = r.mermin_violated;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::vector<double> parse_range_grid(const std::string& range, int* steps_out) {
  // a:b:steps
  const auto first = range.find(':');
  const auto second = range.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw SpecParseError("param range must be a:b:steps, got '" + range + "'");
  std::vector<double> grid(2);
  try {
    grid[0] = std::stod(range.substr(0, first));
    grid[1] = std::stod(range.substr(first + 1, second - first - 1));
    *steps_out = std::stoi(range.substr(second + 1));
  } catch (const std::exception&) {
    throw SpecParseError("param range must be a:b:steps, got '" + range + "'");
  }
  return grid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qfi_bell: quantum Fisher information and Bell-correlation witnesses "
      "for collective-spin states"};
  app.require_subcommand(1);

  // report
  std::string report_spec;
  std::string report_format = "text";
  std::string report_dump;
  std::string report_from_json;
  CLI::App* report = app.add_subcommand(
      "report", "Evaluate one state (spec grammar family:N[:param], families "
                "ghz, ghzp, css, oat, tat, mix)");
  report->add_option("spec", report_spec, "state spec, e.g. ghz:8 or oat:50:0.05");
  report->add_option("--format", report_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  report->add_option("--dump-state", report_dump,
                     "write the state as JSON to this path");
  report->add_option("--from-json", report_from_json,
                     "load the state from a JSON file instead of a spec");

  // region-map
  std::string region_out;
  int region_cells = 200;
  CLI::App* region = app.add_subcommand(
      "region-map", "Witness margins over a cell-centered (xi2, C) grid");
  region->add_option("--out", region_out, "output CSV path (default stdout)");
  region->add_option("--grid", region_cells, "cells per axis (default 200)");

  // scan
  ScanConfig scan_config;
  std::string scan_range;
  std::string scan_out;
  std::string scan_format = "csv";
  CLI::App* scan = app.add_subcommand(
      "scan", "Sweep a state family parameter and evaluate every witness");
  scan->add_option("--family", scan_config.family, "oat | tat | mix | css")
      ->required();
  scan->add_option("--n", scan_config.n_parties, "number of qubits")->required();
  scan->add_option("--param-range", scan_range, "a:b:steps")->required();
  scan->add_option("--angles", scan_config.multi_setting_count,
                   "settings m for the multi-setting inequality (default 6)");
  scan->add_option("--grid", scan_config.grid_resolution,
                   "phi optimization resolution (default 64)");
  scan->add_option("--out", scan_out, "output path (default stdout)");
  scan->add_option("--format", scan_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  // verify
  VerifyOptions verify_options;
  CLI::App* verify = app.add_subcommand(
      "verify", "Cross-check the Dicke-basis pipeline against 2^N brute force");
  verify->add_option("--seed", verify_options.seed,
                     "seed for the random-state corpus");
  verify->add_option("--n-max", verify_options.max_parties,
                     "largest qubit count (default 8)")
      ->check(CLI::Range(2, 8));
  verify
      ->add_option("--inject-fault", verify_options.inject_fault,
                   "perturb the named check (negative-control test hook)")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (app.got_subcommand(report)) {
      if (report_spec.empty() == report_from_json.empty())
        throw SpecParseError("report needs a state spec or --from-json");
      SymmetricState state = [&] {
        if (!report_from_json.empty()) {
          std::ifstream in(report_from_json);
          if (!in) throw IoError("cannot open '" + report_from_json + "'");
          json j;
          in >> j;
          return state_from_json(j);
        }
        return parse_state_spec(report_spec);
      }();
      if (!report_dump.empty()) {
        auto out = open_output(report_dump);
        out << state_to_json(state).dump(2) << "\n";
      }
      const Report r = build_report(state, 6);
      if (report_format == "json")
        std::cout << report_to_json(r).dump(2) << "\n";
      else
        print_report_text(r, std::cout);
      return kExitOk;
    }

    if (app.got_subcommand(region)) {
      const std::vector<double> grid = unit_grid(region_cells);
      const std::vector<RegionRow> rows = region_map(grid, grid);
      if (region_out.empty()) {
        write_region_csv(rows, std::cout);
      } else {
        auto out = open_output(region_out);
        write_region_csv(rows, out);
      }
      return kExitOk;
    }

    if (app.got_subcommand(scan)) {
      int steps = 0;
      const std::vector<double> bounds = parse_range_grid(scan_range, &steps);
      scan_config.param_lo = bounds[0];
      scan_config.param_hi = bounds[1];
      scan_config.steps = steps;
      const std::vector<ScanRow> rows = run_scan(scan_config);
      std::ostream* out = &std::cout;
      std::ofstream file;
      if (!scan_out.empty()) {
        file = open_output(scan_out);
        out = &file;
      }
      if (scan_format == "json")
        *out << scan_rows_to_json(rows).dump(2) << "\n";
      else
        write_scan_csv(rows, *out);
      return kExitOk;
    }

    if (app.got_subcommand(verify)) {
      const std::vector<VerifyCheck> checks = run_verify(verify_options);
      const bool ok = print_verify_table(checks, std::cout);
      return ok ? kExitOk : kExitVerify;
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const SpecParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}
