#include "qfibell/scan.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <thread>

#include "qfibell/qfi.hpp"
#include "qfibell/states.hpp"

namespace qfibell {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    const size_t next = s.find(sep, pos);
    if (next == std::string::npos) {
      out.push_back(s.substr(pos));
      break;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

int parse_int(const std::string& tok) {
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw SpecParseError("invalid integer '" + tok + "'");
  }
  if (used != tok.size()) throw SpecParseError("invalid integer '" + tok + "'");
  return v;
}

double parse_real(const std::string& tok) {
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    throw SpecParseError("invalid number '" + tok + "'");
  }
  if (used != tok.size()) throw SpecParseError("invalid number '" + tok + "'");
  return v;
}

void expect_arity(const std::vector<std::string>& toks, size_t lo, size_t hi) {
  if (toks.size() < lo || toks.size() > hi)
    throw SpecParseError("wrong number of fields in state spec");
}

}  // namespace

SymmetricState parse_state_spec(const std::string& spec) {
  const std::vector<std::string> toks = split(spec, ':');
  if (toks.empty() || toks[0].empty())
    throw SpecParseError("empty state spec");
  const std::string& family = toks[0];
  try {
    if (family == "ghz") {
      expect_arity(toks, 2, 2);
      return state_ghz(parse_int(toks[1]));
    }
    if (family == "ghzp") {
      expect_arity(toks, 2, 2);
      return state_ghz_perp(parse_int(toks[1]));
    }
    if (family == "css") {
      expect_arity(toks, 3, 4);
      return state_css(parse_int(toks[1]), parse_real(toks[2]),
                       toks.size() > 3 ? parse_real(toks[3]) : 0.0);
    }
    if (family == "oat") {
      expect_arity(toks, 3, 3);
      return state_oat(parse_int(toks[1]), parse_real(toks[2]));
    }
    if (family == "tat") {
      expect_arity(toks, 3, 3);
      return state_tat(parse_int(toks[1]), parse_real(toks[2]));
    }
    if (family == "mix") {
      expect_arity(toks, 3, 3);
      return state_ghz_mixture(parse_int(toks[1]), parse_real(toks[2]));
    }
  } catch (const SpecParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw SpecParseError(std::string("invalid state parameters: ") + e.what());
  }
  throw SpecParseError("unknown state family '" + family + "'");
}

int thread_budget() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("QFI_BELL_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap >= 1) hw = std::min(hw, cap);
    } catch (const std::exception&) {
      // ignore malformed values, keep hardware default
    }
  }
  return hw;
}

namespace {

void parallel_for(int count, const std::function<void(int)>& body) {
  const int workers = std::min(thread_budget(), std::max(count, 1));
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1))
        body(i);
    });
  }
  for (auto& t : pool) t.join();
}

SymmetricState build_family_state(const std::string& family, int n,
                                  double param) {
  if (family == "oat") return state_oat(n, param);
  if (family == "tat") return state_tat(n, param);
  if (family == "mix") return state_ghz_mixture(n, param);
  if (family == "css") return state_css(n, param, 0.0);
  throw SpecParseError("unknown scan family '" + family + "'");
}

}  // namespace

std::vector<ScanRow> run_scan(const ScanConfig& config) {
  if (config.steps < 2)
    throw SpecParseError("scan needs at least 2 parameter steps");
  if (config.n_parties < 2) throw SpecParseError("scan needs N >= 2");
  if (!(config.param_lo <= config.param_hi) ||
      !std::isfinite(config.param_lo) || !std::isfinite(config.param_hi))
    throw SpecParseError("invalid parameter range");
  if (config.multi_setting_count < 2)
    throw SpecParseError("multi-setting count must be >= 2");
  build_family_state(config.family, config.n_parties, config.param_lo);

  const int n = config.n_parties;
  const std::vector<double> fan = default_angle_fan(config.multi_setting_count);
  std::vector<ScanRow> rows(config.steps);
  parallel_for(config.steps, [&](int i) {
    const double param =
        config.param_lo +
        (config.param_hi - config.param_lo) * i / (config.steps - 1);
    const SymmetricState state = build_family_state(config.family, n, param);

    ScanRow row;
    row.param = param;
    const SqueezingSummary sum = squeezing_summary(state);
    row.xi2 = sum.xi2;
    row.contrast = sum.contrast;
    row.zeta2 = sum.zeta2;
    row.qfi = qfi_exact(state, collective_sz(n)).qfi;
    row.qfi_over_n = row.qfi / n;
    row.qfi_lb = sum.xi2_defined
                     ? n / sum.xi2
                     : 0.0;  // no lower bound when the contrast vanishes

    const PhiOptimum opt = optimize_two_settings_phi(state, config.grid_resolution);
    row.bell2_phi = opt.phi;
    row.bell2_value = opt.value;
    row.bell2_violated = opt.value < 0.0;

    const BellEvaluation bm = bell_multi_settings(state, fan);
    row.bellm_value = bm.value;
    row.bellm_violated = bm.violated;

    const WitnessResult w1 = witness_two_settings(sum);
    const WitnessResult w2 = witness_infinite_settings(sum);
    row.w1m_margin = w1.margin;
    row.w1m_violated = w1.violated;
    row.w2m_margin = w2.margin;
    row.w2m_violated = w2.violated;

    const BellEvaluation mer = mermin_check(state);
    row.mermin_value = mer.value;
    row.mermin_bound = mer.classical_bound_offset;
    row.mermin_violated = mer.violated;
    rows[i] = row;
  });
  return rows;
}

std::string format_sig(double value) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

const char* const kScanCsvHeader =
    "param,xi2,C,zeta2,qfi,qfi_over_N,qfi_lb,bell2_phi,bell2_value,"
    "bell2_violated,bellm_value,bellm_violated,w1m_margin,w2m_margin,"
    "w1m_violated,w2m_violated,mermin_value,mermin_bound,mermin_violated";

void write_scan_csv(const std::vector<ScanRow>& rows, std::ostream& out) {
  out << kScanCsvHeader << "\n";
  for (const ScanRow& r : rows) {
    out << format_sig(r.param) << ',' << format_sig(r.xi2) << ','
        << format_sig(r.contrast) << ',' << format_sig(r.zeta2) << ','
        << format_sig(r.qfi) << ',' << format_sig(r.qfi_over_n) << ','
        << format_sig(r.qfi_lb) << ',' << format_sig(r.bell2_phi) << ','
        << format_sig(r.bell2_value) << ',' << (r.bell2_violated ? 1 : 0)
        << ',' << format_sig(r.bellm_value) << ','
        << (r.bellm_violated ? 1 : 0) << ',' << format_sig(r.w1m_margin)
        << ',' << format_sig(r.w2m_margin) << ',' << (r.w1m_violated ? 1 : 0)
        << ',' << (r.w2m_violated ? 1 : 0) << ',' << format_sig(r.mermin_value)
        << ',' << format_sig(r.mermin_bound) << ','
        << (r.mermin_violated ? 1 : 0) << "\n";
  }
}

const char* const kRegionCsvHeader =
    "xi2,C,w1m_margin,w2m_margin,w1m_violated,w2m_violated";

void write_region_csv(const std::vector<RegionRow>& rows, std::ostream& out) {
  out << kRegionCsvHeader << "\n";
  for (const RegionRow& r : rows) {
    out << format_sig(r.xi2) << ',' << format_sig(r.contrast) << ','
        << format_sig(r.w1m_margin) << ',' << format_sig(r.w2m_margin) << ','
        << (r.w1m_violated ? 1 : 0) << ',' << (r.w2m_violated ? 1 : 0) << "\n";
  }
}

std::vector<double> unit_grid(int cells) {
  if (cells < 2) throw SpecParseError("grid resolution must be >= 2");
  std::vector<double> g(cells);
  for (int i = 0; i < cells; ++i) g[i] = (i + 0.5) / cells;
  return g;
}

}  // namespace qfibell
