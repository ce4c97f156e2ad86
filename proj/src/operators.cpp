#include "dfock/operators.hpp"

#include <algorithm>
#include <cmath>

#include "dfock/errors.hpp"

namespace dfock {

namespace {

Mat expm_sector_tridiagonal(const Mat& gen) {
  // small dense fallback, still exact
  return expm_antihermitian(gen);
}

}  // namespace

Mat expm_antihermitian(const Mat& gen) {
  // gen = -iH with H Hermitian; exp(gen) = V e^{-i lambda} V^dag
  Mat H = Complex(0, 1) * gen;
  Eigen::SelfAdjointEigenSolver<Mat> es(H);
  const auto& lam = es.eigenvalues();
  Vec phases(lam.size());
  for (Eigen::Index i = 0; i < lam.size(); ++i)
    phases[i] = std::exp(Complex(0, -lam[i]));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

int ModeOperator::joint_dim() const {
  int d = 1;
  for (int x : dims) d *= x;
  return d;
}

double ModeOperator::unitarity_residual(int guard) const {
  const int d = joint_dim();
  const int k = std::max(0, d - guard);
  if (k == 0) return 0.0;
  Mat mm = matrix * matrix.adjoint();
  mm.diagonal().array() -= 1.0;
  return mm.topLeftCorner(k, k).cwiseAbs().maxCoeff();
}

int displaced_guard_band(double alpha_mag, int dim) {
  const double a = std::abs(alpha_mag);
  const double margin = 14.0 * std::sqrt(a);
  int lmax = -1;
  for (int l = 0; l < dim; ++l) {
    if (l + a * a + 2.0 * a * std::sqrt(l + 1.0) + margin <= dim)
      lmax = l;
    else
      break;
  }
  return dim - 1 - lmax;
}

int cutoff_for_amplitude(double alpha_mag) {
  const double a = std::abs(alpha_mag);
  return static_cast<int>(std::ceil(a * a + 6.0 * a + 10.0));
}

std::pair<ModeOperator, ModeOperator> ladder_ops(int dim) {
  if (dim < 2) throw InvalidDimensionError("ladder_ops: dim must be >= 2");
  Mat a = Mat::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  ModeOperator lower{1, {dim}, a, false, 0};
  ModeOperator raise{1, {dim}, a.adjoint(), false, 0};
  return {lower, raise};
}

ModeOperator displacement_operator(Complex alpha, int dim) {
  if (dim < 2) throw InvalidDimensionError("displacement_operator: dim must be >= 2");
  if (std::norm(alpha) > dim / 4.0)
    throw TruncationRiskError("displacement_operator: |alpha|^2 > dim/4, cutoff too small");
  auto [a, adag] = ladder_ops(dim);
  Mat gen = alpha * adag.matrix - std::conj(alpha) * a.matrix;
  ModeOperator op{1, {dim}, expm_antihermitian(gen), true,
                  displaced_guard_band(std::abs(alpha), dim)};
  return op;
}

ModeOperator phase_shifter(double theta, int dim) {
  if (dim < 1) throw InvalidDimensionError("phase_shifter: dim must be >= 1");
  Vec d(dim);
  for (int n = 0; n < dim; ++n) d[n] = std::exp(Complex(0, theta * n));
  ModeOperator op{1, {dim}, Mat(d.asDiagonal()), true, 0};
  return op;
}

ModeOperator single_mode_squeezer(double r, int dim) {
  if (dim < 2) throw InvalidDimensionError("single_mode_squeezer: dim must be >= 2");
  if (r < 0) throw InvalidSqueezingError("single_mode_squeezer: r must be >= 0");
  if (std::pow(std::tanh(r), dim) > 1e-6)
    throw TruncationRiskError("single_mode_squeezer: tanh(r)^dim > 1e-6, cutoff too small");
  auto [a, adag] = ladder_ops(dim);
  Mat gen = 0.5 * r * (adag.matrix * adag.matrix - a.matrix * a.matrix);
  ModeOperator op{1, {dim}, expm_antihermitian(gen), true, 0};
  return op;
}

ModeOperator two_mode_squeezer(double r, std::pair<int, int> dims) {
  const auto [d1, d2] = dims;
  if (d1 < 2 || d2 < 2) throw InvalidDimensionError("two_mode_squeezer: dims must be >= 2");
  if (r < 0) throw InvalidSqueezingError("two_mode_squeezer: r must be >= 0");
  if (std::pow(std::tanh(r), std::min(d1, d2)) > 1e-6)
    throw TruncationRiskError("two_mode_squeezer: tanh(r)^min(dims) > 1e-6");

  // r (a1+ a2+ - a1 a2) conserves n1 - n2: exponentiate per difference sector.
  Mat U = Mat::Zero(d1 * d2, d1 * d2);
  for (int diff = -(d2 - 1); diff <= d1 - 1; ++diff) {
    const int k_lo = std::max(0, diff);
    const int k_hi = std::min(d1 - 1, d2 - 1 + diff);
    const int m = k_hi - k_lo + 1;
    if (m <= 0) continue;
    Mat gen = Mat::Zero(m, m);
    for (int i = 0; i + 1 < m; ++i) {
      const int k = k_lo + i;  // couples |k, k-diff> -> |k+1, k-diff+1>
      const double c = std::sqrt((k + 1.0) * (k - diff + 1.0));
      gen(i + 1, i) += r * c;
      gen(i, i + 1) -= r * c;
    }
    Mat Ub = expm_sector_tridiagonal(gen);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        const int ki = k_lo + i, kj = k_lo + j;
        U(ki * d2 + (ki - diff), kj * d2 + (kj - diff)) = Ub(i, j);
      }
  }
  ModeOperator op{2, {d1, d2}, std::move(U), true, 0};
  return op;
}

ModeOperator beam_splitter(double t, double r, double phi, std::pair<int, int> dims,
                           BsConvention convention) {
  const auto [d1, d2] = dims;
  if (d1 < 1 || d2 < 1) throw InvalidDimensionError("beam_splitter: dims must be >= 1");
  if (std::abs(t * t + r * r - 1.0) > 1e-12)
    throw InvalidSplitterError("beam_splitter: t^2 + r^2 != 1");

  double eff_phi = phi;
  switch (convention) {
    case BsConvention::B13: break;
    case BsConvention::B24: eff_phi = -phi; break;
    case BsConvention::B12: eff_phi = 0.0; break;
    case BsConvention::B12prime: eff_phi = M_PI; break;
  }

  // K = theta (e^{-i phi} a1+ a2 - e^{i phi} a1 a2+), theta = -asin(r),
  // conserves total photon number: exponentiate per total-n sector.
  const double theta = -std::asin(r);
  const Complex em = std::exp(Complex(0, -eff_phi));
  const Complex ep = std::exp(Complex(0, eff_phi));
  Mat U = Mat::Zero(d1 * d2, d1 * d2);
  for (int N = 0; N <= d1 + d2 - 2; ++N) {
    const int k_lo = std::max(0, N - d2 + 1);
    const int k_hi = std::min(N, d1 - 1);
    const int m = k_hi - k_lo + 1;
    if (m <= 0) continue;
    Mat gen = Mat::Zero(m, m);
    for (int i = 0; i + 1 < m; ++i) {
      const int k = k_lo + i;  // |k, N-k> -> |k+1, N-k-1> via a1+ a2
      const double c = std::sqrt((k + 1.0) * (N - k));
      gen(i + 1, i) += theta * em * c;
      gen(i, i + 1) -= theta * ep * c;
    }
    Mat Ub = expm_sector_tridiagonal(gen);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        const int ki = k_lo + i, kj = k_lo + j;
        U(ki * d2 + (N - ki), kj * d2 + (N - kj)) = Ub(i, j);
      }
  }
  ModeOperator op{2, {d1, d2}, std::move(U), true, 0};
  return op;
}

}  // namespace dfock
