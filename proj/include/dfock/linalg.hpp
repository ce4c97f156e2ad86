#pragma once

#include <Eigen/Dense>
#include <complex>

namespace dfock {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// exp(G) for anti-Hermitian G, via the spectral decomposition of iG.
// The result is exactly unitary on the truncated space.
Mat expm_antihermitian(const Mat& gen);

// z^k for integer k >= 0; well-defined at z = 0 (std::pow is not).
inline Complex cpow(Complex z, int k) {
  Complex out{1.0, 0.0};
  for (int i = 0; i < k; ++i) out *= z;
  return out;
}

}  // namespace dfock
