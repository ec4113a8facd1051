#include "qfibell/bell.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "qfibell/states.hpp"

namespace qfibell {

SqueezingSummary squeezing_summary(const SymmetricState& rho) {
  const int n = rho.n_parties();
  const Matrix sx = collective_sx(n).matrix;
  const Matrix sy = collective_sy(n).matrix;
  const double mean_sx = rho.expectation(sx);
  const double sy2 = rho.expectation(sy * sy);
  SqueezingSummary s;
  s.n_parties = n;
  s.contrast = mean_sx / (n / 2.0);
  s.zeta2 = std::max(0.0, sy2 / (n / 4.0));
  if (std::abs(s.contrast) > 1e-9) {
    s.xi2 = s.zeta2 / (s.contrast * s.contrast);
    s.xi2_defined = true;
  } else {
    s.xi2 = std::numeric_limits<double>::infinity();
    s.xi2_defined = false;
  }
  return s;
}

SqueezingSummary summary_at(double xi2, double contrast) {
  SqueezingSummary s;
  s.n_parties = 0;
  s.contrast = contrast;
  s.zeta2 = xi2 * contrast * contrast;
  s.xi2 = xi2;
  s.xi2_defined = true;
  return s;
}

MeasurementSettings MeasurementSettings::two_settings(double phi) {
  MeasurementSettings s;
  s.mode = Mode::two_setting_phi;
  s.phi = phi;
  s.thetas = {phi, -phi};
  return s;
}

MeasurementSettings MeasurementSettings::from_angles(
    std::vector<double> thetas) {
  if (thetas.size() < 2)
    throw std::invalid_argument("MeasurementSettings: need at least 2 settings");
  for (double t : thetas)
    if (!std::isfinite(t))
      throw std::invalid_argument("MeasurementSettings: angle not finite");
  MeasurementSettings s;
  s.mode = Mode::multi_setting_angles;
  s.thetas = std::move(thetas);
  return s;
}

std::map<std::string, double> Correlators::as_map() const {
  std::map<std::string, double> m;
  for (size_t k = 0; k < one_body.size(); ++k)
    m["C_" + std::to_string(k)] = one_body[k];
  for (Eigen::Index k = 0; k < two_body.rows(); ++k)
    for (Eigen::Index l = 0; l < two_body.cols(); ++l)
      m["C_" + std::to_string(k) + "," + std::to_string(l)] = two_body(k, l);
  return m;
}

Correlators collective_correlators(const SymmetricState& rho,
                                   const MeasurementSettings& settings) {
  const int n = rho.n_parties();
  const int m = settings.count();
  const Matrix sx = collective_sx(n).matrix;
  const Matrix sy = collective_sy(n).matrix;

  std::vector<Matrix> dirs;
  dirs.reserve(m);
  for (double t : settings.thetas)
    dirs.push_back(std::sin(t) * sx + std::cos(t) * sy);

  Correlators c;
  c.one_body.resize(m);
  c.two_body = RealMatrix::Zero(m, m);
  for (int k = 0; k < m; ++k) c.one_body[k] = 2.0 * rho.expectation(dirs[k]);
  for (int k = 0; k < m; ++k) {
    for (int l = k; l < m; ++l) {
      const double anti =
          rho.expectation(dirs[k] * dirs[l] + dirs[l] * dirs[k]);
      const double dot = std::cos(settings.thetas[k] - settings.thetas[l]);
      const double val = 2.0 * anti - n * dot;
      c.two_body(k, l) = val;
      c.two_body(l, k) = val;
    }
  }
  return c;
}

BellEvaluation bell_two_settings(const SymmetricState& rho, double phi) {
  if (!(phi > 0.0 && phi < std::numbers::pi / 2.0))
    throw std::invalid_argument("bell_two_settings: phi must be in (0, pi/2)");
  const int n = rho.n_parties();
  BellEvaluation ev;
  ev.inequality = BellInequality::two_settings;
  ev.correlators = collective_correlators(
      rho, MeasurementSettings::from_angles({-phi, phi}));
  const auto& one = ev.correlators.one_body;
  const auto& two = ev.correlators.two_body;
  ev.value = one[0] - one[1] + 0.5 * two(0, 0) + two(0, 1) + 0.5 * two(1, 1) +
             2.0 * n;
  ev.classical_bound_offset = 2.0 * n;
  ev.violated = ev.value < 0.0;
  return ev;
}

BellEvaluation bell_multi_settings(const SymmetricState& rho,
                                   const std::vector<double>& thetas) {
  const int m = static_cast<int>(thetas.size());
  if (m < 2)
    throw std::invalid_argument("bell_multi_settings: need m >= 2 settings");
  const long long n = rho.n_parties();
  BellEvaluation ev;
  ev.inequality = BellInequality::multi_settings;
  ev.correlators =
      collective_correlators(rho, MeasurementSettings::from_angles(thetas));
  double value = 0.0;
  for (int k = 0; k < m; ++k)
    value += (m - 2.0 * k - 1.0) * ev.correlators.one_body[k];
  value += 0.5 * ev.correlators.two_body.sum();
  const double beta_c =
      static_cast<double>((static_cast<long long>(m) * m * n) / 2);
  ev.value = value + beta_c;
  ev.classical_bound_offset = beta_c;
  ev.violated = ev.value < 0.0;
  return ev;
}

std::vector<double> default_angle_fan(int m) {
  if (m < 2) throw std::invalid_argument("default_angle_fan: m must be >= 2");
  std::vector<double> t(m);
  for (int k = 0; k < m; ++k)
    t[k] = -std::numbers::pi / 2.0 + std::numbers::pi * (k + 0.5) / m;
  return t;
}

Matrix ghz_witness_operator(int n_parties) {
  const SymmetricState g = state_ghz(n_parties);
  const SymmetricState gp = state_ghz_perp(n_parties);
  return static_cast<double>(n_parties) *
         (g.density_matrix() - gp.density_matrix());
}

double mermin_classical_bound(int n_parties) {
  if (n_parties < 2)
    throw std::invalid_argument("mermin_classical_bound: N must be >= 2");
  const double n = n_parties;
  const double exponent =
      n_parties % 2 == 0 ? -n / 2.0 + 1.0 : -n / 2.0 + 0.5;
  return n * std::pow(2.0, exponent);
}

BellEvaluation mermin_check(const SymmetricState& rho) {
  const int n = rho.n_parties();
  BellEvaluation ev;
  ev.inequality = BellInequality::mermin;
  ev.value = rho.expectation(ghz_witness_operator(n));
  ev.classical_bound_offset = mermin_classical_bound(n);
  ev.violated = ev.value > ev.classical_bound_offset;
  return ev;
}

double witness_two_settings_bound(double contrast) {
  const double c2 = std::min(contrast * contrast, 1.0);
  return 0.5 * (1.0 - std::sqrt(1.0 - c2));
}

WitnessResult witness_two_settings(const SqueezingSummary& summary) {
  const double c = std::abs(summary.contrast);
  if (c > 1.0 + 1e-9)
    throw std::invalid_argument("witness_two_settings: |contrast| > 1");
  WitnessResult r;
  r.margin = summary.zeta2 - witness_two_settings_bound(c);
  r.violated = r.margin < 0.0;
  return r;
}

double witness_two_settings_min_contrast(double xi2) {
  if (xi2 <= 0.25) return 0.0;
  if (xi2 >= 0.5) return std::numeric_limits<double>::infinity();
  const double c2 = (4.0 * xi2 - 1.0) / (4.0 * xi2 * xi2);
  return std::sqrt(c2);
}

double witness_infinite_settings_bound(double contrast) {
  const double c = std::abs(contrast);
  if (c >= 1.0) return 1.0;
  if (c < 1e-4) return c * c / 3.0;
  const double cc = std::min(c, 1.0 - 1e-12);
  return 1.0 - cc / std::atanh(cc);
}

WitnessResult witness_infinite_settings(const SqueezingSummary& summary) {
  const double c = std::abs(summary.contrast);
  WitnessResult r;
  r.contrast_clamped = c >= 1.0;
  r.margin = summary.zeta2 - witness_infinite_settings_bound(c);
  r.violated = r.margin < 0.0;
  return r;
}

std::vector<RegionRow> region_map(const std::vector<double>& xi2_grid,
                                  const std::vector<double>& c_grid) {
  if (xi2_grid.empty() || c_grid.empty())
    throw std::invalid_argument("region_map: empty grid");
  for (double x : xi2_grid)
    if (!(x > 0.0 && x <= 1.0))
      throw std::invalid_argument("region_map: xi2 grid must lie in (0, 1]");
  for (double c : c_grid)
    if (!(c > 0.0 && c < 1.0))
      throw std::invalid_argument("region_map: C grid must lie in (0, 1)");
  std::vector<RegionRow> rows;
  rows.reserve(xi2_grid.size() * c_grid.size());
  for (double xi2 : xi2_grid) {
    for (double c : c_grid) {
      const SqueezingSummary s = summary_at(xi2, c);
      const WitnessResult w1 = witness_two_settings(s);
      const WitnessResult w2 = witness_infinite_settings(s);
      rows.push_back({xi2, c, w1.margin, w2.margin, w1.violated, w2.violated});
    }
  }
  return rows;
}

QfiCondition qfi_necessary_condition(const SqueezingSummary& summary) {
  if (!summary.xi2_defined)
    throw std::invalid_argument(
        "qfi_necessary_condition: xi2 undefined (contrast ~ 0)");
  if (!(summary.xi2 > 0.0))
    throw std::invalid_argument("qfi_necessary_condition: xi2 must be > 0");
  QfiCondition q;
  q.qfi_lb = summary.n_parties / summary.xi2;
  q.beats_shot_noise = q.qfi_lb > summary.n_parties;
  return q;
}

PhiOptimum optimize_two_settings_phi(const SymmetricState& rho,
                                     int coarse_points) {
  // The LHS equals 2N (sin^2 phi + zeta^2 cos^2 phi - C sin phi), so one
  // expectation pass suffices for the whole phi sweep.
  const SqueezingSummary s = squeezing_summary(rho);
  const double n = rho.n_parties();
  auto lhs = [&](double phi) {
    const double sp = std::sin(phi), cp = std::cos(phi);
    return 2.0 * n * (sp * sp + s.zeta2 * cp * cp - s.contrast * sp);
  };
  const double eps = 1e-9;
  const double phi = minimize_on_interval(
      lhs, eps, std::numbers::pi / 2.0 - eps, coarse_points, 1e-8);
  return {phi, bell_two_settings(rho, phi).value};
}

}  // namespace qfibell
