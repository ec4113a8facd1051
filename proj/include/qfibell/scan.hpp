#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qfibell/bell.hpp"
#include "qfibell/symmetric_state.hpp"

namespace qfibell {

// Raised on malformed CLI input (state specs, ranges); maps to exit code 2.
struct SpecParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// State mini-grammar family:N[:param...], e.g. ghz:8, oat:50:0.05,
// mix:6:0.4, css:8:1.57:0, tat:50:0.02, ghzp:4.
SymmetricState parse_state_spec(const std::string& spec);

struct ScanConfig {
  std::string family;  // oat | tat | mix | css
  int n_parties = 2;
  double param_lo = 0.0;
  double param_hi = 0.0;
  int steps = 0;
  int multi_setting_count = 6;  // m for the multi-setting inequality
  int grid_resolution = 64;     // coarse points for the phi optimization
};

struct ScanRow {
  double param = 0.0;
  double xi2 = 0.0;  // +inf when the contrast vanishes
  double contrast = 0.0;
  double zeta2 = 0.0;
  double qfi = 0.0;
  double qfi_over_n = 0.0;
  double qfi_lb = 0.0;  // N / xi^2
  double bell2_phi = 0.0;
  double bell2_value = 0.0;
  bool bell2_violated = false;
  double bellm_value = 0.0;
  bool bellm_violated = false;
  double w1m_margin = 0.0;
  double w2m_margin = 0.0;
  bool w1m_violated = false;
  bool w2m_violated = false;
  double mermin_value = 0.0;
  double mermin_bound = 0.0;
  bool mermin_violated = false;
};

// Rows in ascending parameter order, computed by a worker pool capped by the
// QFI_BELL_THREADS environment variable.
std::vector<ScanRow> run_scan(const ScanConfig& config);

extern const char* const kScanCsvHeader;
void write_scan_csv(const std::vector<ScanRow>& rows, std::ostream& out);

extern const char* const kRegionCsvHeader;
void write_region_csv(const std::vector<RegionRow>& rows, std::ostream& out);

// Cell-centered grid of `cells` points covering (0, 1).
std::vector<double> unit_grid(int cells);

// Floating point with 12 significant digits, the precision used in every
// CSV and report.
std::string format_sig(double value);

// Worker pool size: min(hardware, QFI_BELL_THREADS when set).
int thread_budget();

}  // namespace qfibell
