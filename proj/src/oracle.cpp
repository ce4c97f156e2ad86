#include "dfock/oracle.hpp"

#include <cmath>

#include "dfock/errors.hpp"

namespace dfock {

double laguerre(int n, int k, double x) {
  if (n < 0) throw InvalidLevelError("laguerre: n must be >= 0");
  if (n == 0) return 1.0;
  double lm1 = 1.0;
  double l0 = 1.0 + k - x;
  for (int i = 1; i < n; ++i) {
    double l1 = ((2.0 * i + 1.0 + k - x) * l0 - (i + k) * lm1) / (i + 1.0);
    lm1 = l0;
    l0 = l1;
  }
  return l0;
}

Complex displacement_matrix_element(int m, int n, Complex alpha) {
  if (m < 0 || n < 0) throw InvalidLevelError("displacement_matrix_element: negative level");
  const double x = std::norm(alpha);
  const double gauss = std::exp(-x / 2.0);
  if (m >= n) {
    double ratio = 1.0;  // sqrt(n!/m!)
    for (int j = n + 1; j <= m; ++j) ratio /= std::sqrt(static_cast<double>(j));
    return ratio * cpow(alpha, m - n) * gauss * laguerre(n, m - n, x);
  }
  double ratio = 1.0;  // sqrt(m!/n!)
  for (int j = m + 1; j <= n; ++j) ratio /= std::sqrt(static_cast<double>(j));
  return ratio * cpow(-std::conj(alpha), n - m) * gauss * laguerre(m, n - m, x);
}

}  // namespace dfock
