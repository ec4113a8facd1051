#include "qfibell/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qfibell {

namespace {

void require_parties(int n, int min) {
  if (n < min)
    throw std::invalid_argument("state constructor: n_parties too small");
}

Vector ghz_like(int n, double sign) {
  Vector a = Vector::Zero(n + 1);
  a(0) = 1.0 / std::numbers::sqrt2;
  a(n) = sign / std::numbers::sqrt2;
  return a;
}

// Largest-|a| component made real positive; removes the global phase.
Vector fix_global_phase(Vector a) {
  Eigen::Index idx = 0;
  a.cwiseAbs().maxCoeff(&idx);
  Complex pivot = a(idx);
  if (std::abs(pivot) > 0) a *= std::conj(pivot) / std::abs(pivot);
  return a;
}

}  // namespace

SymmetricState state_ghz(int n_parties) {
  require_parties(n_parties, 2);
  return SymmetricState::pure(n_parties, ghz_like(n_parties, 1.0));
}

SymmetricState state_ghz_perp(int n_parties) {
  require_parties(n_parties, 2);
  return SymmetricState::pure(n_parties, ghz_like(n_parties, -1.0));
}

SymmetricState state_css(int n_parties, double theta, double phi) {
  require_parties(n_parties, 1);
  const int n = n_parties;
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  Vector a = Vector::Zero(n + 1);
  if (s == 0.0) {
    a(0) = std::pow(c, n);
  } else if (c == 0.0) {
    a(n) = std::pow(s, n) * std::exp(Complex(0, n * phi));
  } else {
    // sqrt(C(N,k)) c^{N-k} s^k e^{ik phi}, evaluated in log space so large
    // binomials at N ~ 64 do not lose precision
    const double lc = std::log(std::abs(c));
    const double ls = std::log(std::abs(s));
    for (int k = 0; k <= n; ++k) {
      double log_binom = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                         std::lgamma(n - k + 1.0);
      double mag = std::exp(0.5 * log_binom + (n - k) * lc + k * ls);
      double sign = ((c < 0 && (n - k) % 2) ? -1.0 : 1.0) *
                    ((s < 0 && k % 2) ? -1.0 : 1.0);
      a(k) = sign * mag * std::exp(Complex(0, k * phi));
    }
    a /= a.norm();
  }
  return SymmetricState::pure(n, std::move(a));
}

SymmetricState evolve(const SymmetricState& state,
                      const CollectiveOperator& generator, double t) {
  if (generator.n_parties != state.n_parties())
    throw std::invalid_argument("evolve: dimension mismatch");
  SpectralDecomposition eig = spectral(generator.matrix);
  Vector phases(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < phases.size(); ++i)
    phases(i) = std::exp(Complex(0, -eig.eigenvalues(i) * t));
  Matrix u = eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
  if (state.is_pure()) {
    Vector a = u * state.amplitudes();
    a /= a.norm();
    return SymmetricState::pure(state.n_parties(), std::move(a));
  }
  Matrix r = u * state.density() * u.adjoint();
  r = 0.5 * (r + Matrix(r.adjoint()));  // scrub roundoff asymmetry
  r /= r.trace().real();
  return SymmetricState::mixed(state.n_parties(), std::move(r));
}

double optimal_squeezing_frame_angle(const SymmetricState& state) {
  const int n = state.n_parties();
  const Matrix sy = collective_sy(n).matrix;
  const Matrix sz = collective_sz(n).matrix;
  // Under rotation of the state by exp(-i nu Sx), <Sy^2> becomes
  // <(cos(nu) Sy - sin(nu) Sz)^2>; expand once instead of re-evolving.
  const double syy = state.expectation(sy * sy);
  const double szz = state.expectation(sz * sz);
  const double cross = state.expectation(sy * sz + sz * sy);
  auto f = [&](double nu) {
    const double cn = std::cos(nu), sn = std::sin(nu);
    return cn * cn * syy + sn * sn * szz - cn * sn * cross;
  };
  return minimize_on_interval(f, 0.0, std::numbers::pi, 64, 1e-10);
}

namespace {

SymmetricState squeeze_frame_conventions(SymmetricState s) {
  const int n = s.n_parties();
  const double nu = optimal_squeezing_frame_angle(s);
  s = evolve(s, collective_sx(n), nu);
  if (s.expectation(collective_sx(n).matrix) < 0)
    s = evolve(s, collective_sz(n), std::numbers::pi);  // flip Sx -> -Sx
  return SymmetricState::pure(n, fix_global_phase(s.amplitudes()));
}

}  // namespace

SymmetricState state_oat(int n_parties, double mu) {
  require_parties(n_parties, 2);
  SymmetricState s = state_css(n_parties, std::numbers::pi / 2.0, 0.0);
  const Matrix sz = collective_sz(n_parties).matrix;
  s = evolve(s, CollectiveOperator::custom(n_parties, sz * sz, "Sz^2"), mu);
  return squeeze_frame_conventions(std::move(s));
}

SymmetricState state_tat(int n_parties, double chi) {
  require_parties(n_parties, 2);
  SymmetricState s = state_css(n_parties, std::numbers::pi / 2.0, 0.0);
  const Matrix sy = collective_sy(n_parties).matrix;
  const Matrix sz = collective_sz(n_parties).matrix;
  Matrix g = sy * sz + sz * sy;
  s = evolve(s, CollectiveOperator::custom(n_parties, std::move(g), "SySz+SzSy"),
             chi);
  return squeeze_frame_conventions(std::move(s));
}

SymmetricState state_ghz_mixture(int n_parties, double p) {
  require_parties(n_parties, 2);
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("state_ghz_mixture: p must lie in [0, 1]");
  const Vector g = ghz_like(n_parties, 1.0);
  const Vector gp = ghz_like(n_parties, -1.0);
  Matrix rho = 0.5 * (1.0 + p) * (g * g.adjoint()) +
               0.5 * (1.0 - p) * (gp * gp.adjoint());
  return SymmetricState::mixed(n_parties, std::move(rho));
}

}  // namespace qfibell
