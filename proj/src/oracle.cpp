#include "qfibell/oracle.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qfibell {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kHermTol = 1e-12;

void require_max_parties(int n, int cap, const char* what) {
  if (n < 1 || n > cap)
    throw std::invalid_argument(std::string(what) + ": N out of range");
}

// site is 1-based with qubit 1 most significant
int bit_position(int n, int site) { return n - site; }

Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

Eigen::Matrix2cd pauli_y() {
  Eigen::Matrix2cd m;
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

Eigen::Matrix2cd setting_operator(double theta) {
  return std::cos(theta) * pauli_y() + std::sin(theta) * pauli_x();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
         std::lgamma(n - k + 1.0);
}

}  // namespace

FullState FullState::pure(int n_parties, Vector amplitudes) {
  require_max_parties(n_parties, kMaxParties, "FullState");
  const Eigen::Index d = Eigen::Index(1) << n_parties;
  if (amplitudes.size() != d)
    throw std::invalid_argument("FullState: amplitude vector must have 2^N entries");
  if (std::abs(amplitudes.squaredNorm() - 1.0) > kNormTol)
    throw std::invalid_argument("FullState: amplitudes not normalized");
  return FullState(n_parties, std::move(amplitudes));
}

FullState FullState::mixed(int n_parties, Matrix density) {
  require_max_parties(n_parties, kMaxParties, "FullState");
  const Eigen::Index d = Eigen::Index(1) << n_parties;
  if (density.rows() != d || density.cols() != d)
    throw std::invalid_argument("FullState: density must be 2^N x 2^N");
  if (!is_hermitian(density, kHermTol))
    throw std::invalid_argument("FullState: density not Hermitian");
  if (std::abs(density.trace().real() - 1.0) > kNormTol)
    throw std::invalid_argument("FullState: density trace != 1");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(density, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -1e-10)
    throw std::invalid_argument("FullState: density has a negative eigenvalue");
  return FullState(n_parties, std::move(density));
}

const Vector& FullState::amplitudes() const {
  if (!pure_) throw std::logic_error("FullState: amplitudes() on mixed state");
  return amp_;
}

const Matrix& FullState::density() const {
  if (pure_) throw std::logic_error("FullState: density() on pure state");
  return rho_;
}

Matrix FullState::density_matrix() const {
  if (pure_) return amp_ * amp_.adjoint();
  return rho_;
}

double FullState::expectation(const Matrix& op) const {
  if (pure_) return amp_.dot(op * amp_).real();
  return (rho_ * op).trace().real();
}

namespace {

// Column k of the Dicke isometry: uniform over Hamming-weight-k strings.
Vector dicke_column(int n, int k) {
  const Eigen::Index d = Eigen::Index(1) << n;
  Vector v = Vector::Zero(d);
  const double amp = std::exp(-0.5 * log_binomial(n, k));
  for (Eigen::Index idx = 0; idx < d; ++idx)
    if (std::popcount(static_cast<unsigned long long>(idx)) == k) v(idx) = amp;
  return v;
}

Matrix dicke_isometry(int n) {
  Matrix d(Eigen::Index(1) << n, n + 1);
  for (int k = 0; k <= n; ++k) d.col(k) = dicke_column(n, k);
  return d;
}

}  // namespace

FullState embed_symmetric(const SymmetricState& state) {
  const int n = state.n_parties();
  require_max_parties(n, FullState::kMaxParties, "embed_symmetric");
  Matrix d = dicke_isometry(n);
  if (state.is_pure()) {
    Vector full = d * state.amplitudes();
    full /= full.norm();
    return FullState::pure(n, std::move(full));
  }
  Matrix rho = d * state.density() * d.adjoint();
  rho = 0.5 * (rho + Matrix(rho.adjoint()));
  rho /= rho.trace().real();
  return FullState::mixed(n, std::move(rho));
}

SymmetricState project_symmetric(const FullState& state) {
  const int n = state.n_parties();
  Matrix d = dicke_isometry(n);
  if (state.is_pure()) {
    Vector a = d.adjoint() * state.amplitudes();
    a /= a.norm();
    return SymmetricState::pure(n, std::move(a));
  }
  Matrix rho = d.adjoint() * state.density() * d;
  rho = 0.5 * (rho + Matrix(rho.adjoint()));
  rho /= rho.trace().real();
  return SymmetricState::mixed(n, std::move(rho));
}

namespace {

Matrix one_site_full(int n, int site, const Eigen::Matrix2cd& m) {
  const int pos = bit_position(n, site);
  const Eigen::Index d = Eigen::Index(1) << n;
  Matrix out = Matrix::Zero(d, d);
  for (Eigen::Index idx = 0; idx < d; ++idx) {
    const int x = (idx >> pos) & 1;
    for (int y = 0; y < 2; ++y) {
      const Eigen::Index jdx = (idx & ~(Eigen::Index(1) << pos)) |
                               (Eigen::Index(y) << pos);
      out(jdx, idx) += m(y, x);
    }
  }
  return out;
}

// <x|rho_site|y> with every other qubit traced out
Eigen::Matrix2cd reduced_one(const FullState& s, int site) {
  const int pos = bit_position(s.n_parties(), site);
  const Eigen::Index d = s.dim();
  Eigen::Matrix2cd red = Eigen::Matrix2cd::Zero();
  for (Eigen::Index idx = 0; idx < d; ++idx) {
    const int x = (idx >> pos) & 1;
    for (int y = 0; y < 2; ++y) {
      const Eigen::Index jdx = (idx & ~(Eigen::Index(1) << pos)) |
                               (Eigen::Index(y) << pos);
      red(x, y) += s.is_pure()
                       ? s.amplitudes()(idx) * std::conj(s.amplitudes()(jdx))
                       : s.density()(idx, jdx);
    }
  }
  return red;
}

// two-site reduced state with site_a as the first tensor factor
Eigen::Matrix4cd reduced_two(const FullState& s, int site_a, int site_b) {
  const int pa = bit_position(s.n_parties(), site_a);
  const int pb = bit_position(s.n_parties(), site_b);
  const Eigen::Index d = s.dim();
  Eigen::Matrix4cd red = Eigen::Matrix4cd::Zero();
  for (Eigen::Index idx = 0; idx < d; ++idx) {
    const int xa = (idx >> pa) & 1;
    const int xb = (idx >> pb) & 1;
    const Eigen::Index base =
        idx & ~(Eigen::Index(1) << pa) & ~(Eigen::Index(1) << pb);
    for (int ya = 0; ya < 2; ++ya) {
      for (int yb = 0; yb < 2; ++yb) {
        const Eigen::Index jdx =
            base | (Eigen::Index(ya) << pa) | (Eigen::Index(yb) << pb);
        red(xa * 2 + xb, ya * 2 + yb) +=
            s.is_pure()
                ? s.amplitudes()(idx) * std::conj(s.amplitudes()(jdx))
                : s.density()(idx, jdx);
      }
    }
  }
  return red;
}

}  // namespace

Matrix full_collective(int n_parties, char axis) {
  require_max_parties(n_parties, FullState::kMaxParties, "full_collective");
  Eigen::Matrix2cd p;
  switch (axis) {
    case 'x': p = pauli_x(); break;
    case 'y': p = pauli_y(); break;
    case 'z': p = pauli_z(); break;
    default: throw std::invalid_argument("full_collective: axis must be x/y/z");
  }
  const Eigen::Index d = Eigen::Index(1) << n_parties;
  Matrix out = Matrix::Zero(d, d);
  for (int site = 1; site <= n_parties; ++site)
    out += one_site_full(n_parties, site, p);
  return 0.5 * out;
}

Correlators correlators_bruteforce(const FullState& state,
                                   const MeasurementSettings& settings) {
  const int n = state.n_parties();
  const int m = settings.count();
  std::vector<Eigen::Matrix2cd> ops;
  ops.reserve(m);
  for (double t : settings.thetas) ops.push_back(setting_operator(t));

  Correlators c;
  c.one_body.assign(m, 0.0);
  c.two_body = RealMatrix::Zero(m, m);

  std::vector<Eigen::Matrix2cd> red1(n);
  for (int site = 1; site <= n; ++site) red1[site - 1] = reduced_one(state, site);
  for (int k = 0; k < m; ++k) {
    double sum = 0.0;
    for (int site = 1; site <= n; ++site)
      sum += (red1[site - 1] * ops[k]).trace().real();
    c.one_body[k] = sum;
  }

  for (int i1 = 1; i1 <= n; ++i1) {
    for (int i2 = 1; i2 <= n; ++i2) {
      if (i1 == i2) continue;
      const Eigen::Matrix4cd red = reduced_two(state, i1, i2);
      for (int k = 0; k < m; ++k) {
        for (int l = 0; l < m; ++l) {
          Eigen::Matrix4cd pair = Eigen::Matrix4cd::Zero();
          for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
              pair.block<2, 2>(a * 2, b * 2) = ops[k](a, b) * ops[l];
          c.two_body(k, l) += (red * pair).trace().real();
        }
      }
    }
  }
  return c;
}

LhvCoefficients two_settings_coefficients(int n_parties) {
  return {{1.0, -1.0}, 0.5, 2.0 * n_parties};
}

LhvCoefficients multi_settings_coefficients(int n_parties, int m) {
  if (m < 2)
    throw std::invalid_argument("multi_settings_coefficients: m must be >= 2");
  LhvCoefficients c;
  c.one_body.resize(m);
  for (int k = 0; k < m; ++k) c.one_body[k] = m - 2.0 * k - 1.0;
  c.two_body_weight = 0.5;
  c.constant = static_cast<double>(
      (static_cast<long long>(m) * m * n_parties) / 2);
  return c;
}

double lhv_value(const LhvCoefficients& coeffs,
                 const DeterministicStrategy& strategy) {
  const int m = static_cast<int>(coeffs.one_body.size());
  const size_t types = size_t(1) << m;
  if (strategy.counts.size() != types)
    throw std::invalid_argument("lhv_value: counts size must be 2^m");

  auto eps = [](size_t s, int k) { return ((s >> k) & 1) ? -1.0 : 1.0; };

  std::vector<double> t(m, 0.0);
  RealMatrix d = RealMatrix::Zero(m, m);
  for (size_t s = 0; s < types; ++s) {
    const double c = static_cast<double>(strategy.counts[s]);
    if (c == 0.0) continue;
    if (strategy.counts[s] < 0)
      throw std::invalid_argument("lhv_value: negative count");
    for (int k = 0; k < m; ++k) {
      t[k] += c * eps(s, k);
      for (int l = 0; l < m; ++l) d(k, l) += c * eps(s, k) * eps(s, l);
    }
  }

  double value = coeffs.constant;
  for (int k = 0; k < m; ++k) value += coeffs.one_body[k] * t[k];
  double two = 0.0;
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l) two += t[k] * t[l] - d(k, l);
  return value + coeffs.two_body_weight * two;
}

namespace {

double composition_count(long long n, long long parts) {
  // C(n + parts - 1, parts - 1), evaluated in floating point for the cap test
  double result = 1.0;
  for (long long i = 1; i < parts; ++i) result *= (n + i) / double(i);
  return result;
}

void enumerate_compositions(int slot, long long remaining,
                            std::vector<long long>& counts,
                            const std::function<void()>& visit) {
  const int last = static_cast<int>(counts.size()) - 1;
  if (slot == last) {
    counts[slot] = remaining;
    visit();
    return;
  }
  for (long long c = 0; c <= remaining; ++c) {
    counts[slot] = c;
    enumerate_compositions(slot + 1, remaining - c, counts, visit);
  }
}

}  // namespace

LhvBound lhv_bound_symmetric(int n_parties, const LhvCoefficients& coeffs) {
  if (n_parties < 1)
    throw std::invalid_argument("lhv_bound_symmetric: N must be >= 1");
  const int m = static_cast<int>(coeffs.one_body.size());
  const long long types = 1LL << m;
  if (composition_count(n_parties, types) > 1e7)
    throw std::invalid_argument("lhv_bound_symmetric: enumeration budget exceeded");

  LhvBound bound;
  bound.min_value = std::numeric_limits<double>::infinity();
  std::vector<long long> counts(types, 0);
  enumerate_compositions(0, n_parties, counts, [&] {
    bound.n_classes++;
    const double v = lhv_value(coeffs, {counts});
    if (v < bound.min_value) {
      bound.min_value = v;
      bound.argmin.counts = counts;
    }
  });
  return bound;
}

double lhv_bound_naive(int n_parties, const LhvCoefficients& coeffs) {
  const int m = static_cast<int>(coeffs.one_body.size());
  if (n_parties > 4 || m > 3)
    throw std::invalid_argument("lhv_bound_naive: size cap is N <= 4, m <= 3");
  const long long types = 1LL << m;
  long long total = 1;
  for (int i = 0; i < n_parties; ++i) total *= types;

  auto eps = [](long long s, int k) { return ((s >> k) & 1) ? -1.0 : 1.0; };

  double best = std::numeric_limits<double>::infinity();
  std::vector<long long> assign(n_parties, 0);
  for (long long code = 0; code < total; ++code) {
    long long rest = code;
    for (int i = 0; i < n_parties; ++i) {
      assign[i] = rest % types;
      rest /= types;
    }
    std::vector<double> t(m, 0.0);
    RealMatrix d = RealMatrix::Zero(m, m);
    for (int i = 0; i < n_parties; ++i)
      for (int k = 0; k < m; ++k) {
        t[k] += eps(assign[i], k);
        for (int l = 0; l < m; ++l) d(k, l) += eps(assign[i], k) * eps(assign[i], l);
      }
    double value = coeffs.constant;
    for (int k = 0; k < m; ++k) value += coeffs.one_body[k] * t[k];
    double two = 0.0;
    for (int k = 0; k < m; ++k)
      for (int l = 0; l < m; ++l) two += t[k] * t[l] - d(k, l);
    value += coeffs.two_body_weight * two;
    best = std::min(best, value);
  }
  return best;
}

MerminOperator mermin_operator(int n_parties) {
  require_max_parties(n_parties, FullState::kMaxParties, "mermin_operator");
  if (n_parties < 2)
    throw std::invalid_argument("mermin_operator: N must be >= 2");
  const Eigen::Matrix2cd raising = pauli_x() + Complex(0, 1) * pauli_y();
  Matrix e = Matrix::Ones(1, 1);
  for (int i = 0; i < n_parties; ++i) e = kron(e, raising);
  Matrix m = (e - Matrix(e.adjoint())) / Complex(0, 2);

  MerminOperator op;
  op.n_parties = n_parties;
  const Complex corner = m(0, m.cols() - 1);
  op.normalization = n_parties / std::abs(corner);
  op.branch_phase = std::arg(corner);
  op.matrix = std::move(m);
  return op;
}

Matrix mermin_normalized(const MerminOperator& op) {
  const Eigen::Index d = op.matrix.rows();
  Vector v = Vector::Ones(d);
  v(d - 1) = std::exp(Complex(0, op.branch_phase));
  return op.normalization *
         (v.asDiagonal() * op.matrix * v.conjugate().asDiagonal());
}

double mermin_lhv_max(int n_parties) {
  if (n_parties < 2 || n_parties > 8)
    throw std::invalid_argument("mermin_lhv_max: N must be in [2, 8]");
  const long long lim = 1LL << n_parties;
  double best = -std::numeric_limits<double>::infinity();
  for (long long a = 0; a < lim; ++a) {
    for (long long b = 0; b < lim; ++b) {
      Complex prod = 1.0;
      for (int j = 0; j < n_parties; ++j) {
        const double aj = ((a >> j) & 1) ? -1.0 : 1.0;
        const double bj = ((b >> j) & 1) ? -1.0 : 1.0;
        prod *= Complex(aj, bj);
      }
      best = std::max(best, prod.imag());
    }
  }
  return best;
}

PptReport ppt_bipartite_check(const FullState& state, int cut) {
  const int n = state.n_parties();
  if (n > 8)
    throw std::invalid_argument("ppt_bipartite_check: size cap is N <= 8");
  if (cut < 1 || cut >= n)
    throw std::invalid_argument("ppt_bipartite_check: cut must be in [1, N-1]");
  const Eigen::Index da = Eigen::Index(1) << cut;
  const Eigen::Index db = Eigen::Index(1) << (n - cut);
  Matrix rho = state.density_matrix();
  Matrix pt(rho.rows(), rho.cols());
  for (Eigen::Index a = 0; a < da; ++a)
    for (Eigen::Index b = 0; b < db; ++b)
      for (Eigen::Index ap = 0; ap < da; ++ap)
        for (Eigen::Index bp = 0; bp < db; ++bp)
          pt(a * db + b, ap * db + bp) = rho(a * db + bp, ap * db + b);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(pt, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  return {min_eig, min_eig < -1e-10};
}

double qfi_exact_full(const FullState& state, const Matrix& a_full) {
  if (a_full.rows() != state.dim() || a_full.cols() != state.dim())
    throw std::invalid_argument("qfi_exact_full: operator dimension mismatch");
  if (state.is_pure()) {
    const Vector& psi = state.amplitudes();
    const Vector apsi = a_full * psi;
    const double e2 = psi.dot(a_full * apsi).real();
    const double e1 = psi.dot(apsi).real();
    return 4.0 * std::max(0.0, e2 - e1 * e1);
  }
  if (state.n_parties() > 8)
    throw std::invalid_argument("qfi_exact_full: mixed states capped at N <= 8");
  SpectralDecomposition eig = spectral(state.density());
  Matrix a_eig = eig.eigenvectors.adjoint() * a_full * eig.eigenvectors;
  const Eigen::Index d = eig.eigenvalues.size();
  double f = 0.0;
  for (Eigen::Index k = 0; k < d; ++k) {
    const double pk = std::max(eig.eigenvalues(k), 0.0);
    for (Eigen::Index l = 0; l < d; ++l) {
      const double pl = std::max(eig.eigenvalues(l), 0.0);
      if (pk + pl <= 1e-12) continue;
      const double diff = pk - pl;
      f += 2.0 * diff * diff / (pk + pl) * std::norm(a_eig(k, l));
    }
  }
  return f;
}

}  // namespace qfibell
