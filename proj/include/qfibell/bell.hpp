#pragma once

#include <map>
#include <string>
#include <vector>

#include "qfibell/symmetric_state.hpp"

namespace qfibell {

struct SqueezingSummary {
  int n_parties = 0;
  double contrast = 0.0;    // C = <Sx> / (N/2)
  double zeta2 = 0.0;       // zeta^2 = <Sy^2> / (N/4)
  double xi2 = 0.0;         // xi^2 = N <Sy^2> / <Sx>^2 = zeta^2 / C^2
  bool xi2_defined = true;  // false when |C| <= 1e-9; xi2 is +inf then
};

SqueezingSummary squeezing_summary(const SymmetricState& rho);

// Synthetic summary placed at a point of the (xi^2, C) plane; used by the
// region map where no concrete state is involved.
SqueezingSummary summary_at(double xi2, double contrast);

// Equatorial measurement directions n_k = cos(theta_k) y + sin(theta_k) x,
// identical for all parties. At least two settings.
struct MeasurementSettings {
  enum class Mode { two_setting_phi, multi_setting_angles };

  Mode mode = Mode::multi_setting_angles;
  double phi = 0.0;            // two-setting parametrization only
  std::vector<double> thetas;  // always populated

  // M_0 along (cos phi) y + (sin phi) x, M_1 along (cos phi) y - (sin phi) x.
  static MeasurementSettings two_settings(double phi);
  static MeasurementSettings from_angles(std::vector<double> thetas);

  int count() const { return static_cast<int>(thetas.size()); }
};

// Symmetrized one- and two-body correlators for identical collective
// settings:
//   C_k    = 2 <S_{n_k}>
//   C_{kl} = 2 <S_{n_k} S_{n_l} + S_{n_l} S_{n_k}> - N (n_k . n_l)
// equal to the sums over ordered tuples of distinct sites.
struct Correlators {
  std::vector<double> one_body;
  RealMatrix two_body;

  std::map<std::string, double> as_map() const;
};

Correlators collective_correlators(const SymmetricState& rho,
                                   const MeasurementSettings& settings);

enum class BellInequality { two_settings, multi_settings, mermin };

struct BellEvaluation {
  BellInequality inequality = BellInequality::two_settings;
  double value = 0.0;                  // LHS of "... >= 0", or <W> for mermin
  double classical_bound_offset = 0.0; // 2N, floor(m^2 N / 2), or Mermin bound
  bool violated = false;
  Correlators correlators;
};

// Two-setting inequality C_0 - C_1 + C_00/2 + C_01 + C_11/2 + 2N >= 0 at the
// settings theta_0 = -phi, theta_1 = +phi, phi in (0, pi/2). With this
// assignment the LHS equals 2N sin^2(phi) + 8 cos^2(phi) <Sy^2>
// - 4 sin(phi) <Sx>, so states squeezed along y with contrast along +x can
// violate it.
BellEvaluation bell_two_settings(const SymmetricState& rho, double phi);

// m-setting family: sum_k (m - 2k - 1) C_k + (1/2) sum_{k,l} C_{kl}
// + floor(m^2 N / 2) >= 0, the double sum running over all ordered pairs
// including k = l.
BellEvaluation bell_multi_settings(const SymmetricState& rho,
                                   const std::vector<double>& thetas);

// Default equatorial fan theta_k = -pi/2 + pi (k + 1/2) / m.
std::vector<double> default_angle_fan(int m);

// W = N(|GHZ><GHZ| - |GHZ_perp><GHZ_perp|) in the Dicke basis.
Matrix ghz_witness_operator(int n_parties);

// Classical bound on <W>: N 2^{-N/2+1} for even N, N 2^{-N/2+1/2} for odd N.
double mermin_classical_bound(int n_parties);

// Evaluates <W> against the Mermin bound; violated when <W> exceeds it.
BellEvaluation mermin_check(const SymmetricState& rho);

struct WitnessResult {
  bool violated = false;
  double margin = 0.0;           // zeta^2 minus the witness curve
  bool contrast_clamped = false; // infinite-settings witness at |C| >= 1
};

// Witness of the two-setting inequality: zeta^2 >= (1 - sqrt(1 - C^2)) / 2.
WitnessResult witness_two_settings(const SqueezingSummary& summary);
double witness_two_settings_bound(double contrast);
// Smallest violating contrast at a given xi^2, from the closed-form boundary
// C* = sqrt((4 xi^2 - 1) / (4 xi^4)); returns > 1 when no violation exists.
double witness_two_settings_min_contrast(double xi2);

// Witness of the m -> infinity setting family:
// zeta^2 >= 1 - C / arctanh(C). Below |C| = 1e-4 the curve is evaluated by
// its series C^2/3; at |C| >= 1 the boundary value 1 is used and flagged.
WitnessResult witness_infinite_settings(const SqueezingSummary& summary);
double witness_infinite_settings_bound(double contrast);

struct RegionRow {
  double xi2 = 0.0;
  double contrast = 0.0;
  double w1m_margin = 0.0;
  double w2m_margin = 0.0;
  bool w1m_violated = false;
  bool w2m_violated = false;
};

// Margins of both witnesses over a (xi^2, C) grid, xi^2 major, C minor.
std::vector<RegionRow> region_map(const std::vector<double>& xi2_grid,
                                  const std::vector<double>& c_grid);

struct QfiCondition {
  double qfi_lb = 0.0;  // N / xi^2, the uncertainty bound with A=Sz, B=Sy
  bool beats_shot_noise = false;
};

// Necessary condition tied to the witnesses: a violation requires
// F(rho, Sz) >= N / xi^2 > N. Throws on an undefined or nonpositive xi^2.
QfiCondition qfi_necessary_condition(const SqueezingSummary& summary);

struct PhiOptimum {
  double phi = 0.0;
  double value = 0.0;
};

// Minimizes the two-setting inequality LHS over phi in (0, pi/2) by coarse
// scan plus golden-section refinement.
PhiOptimum optimize_two_settings_phi(const SymmetricState& rho,
                                     int coarse_points = 64);

}  // namespace qfibell
