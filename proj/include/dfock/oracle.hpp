#pragma once

#include "dfock/linalg.hpp"

namespace dfock {

/// Generalized Laguerre polynomial L_n^(k)(x), three-term recurrence.
double laguerre(int n, int k, double x);

/// Closed-form displacement matrix element <m|D(alpha)|n>.
///
/// m >= n:  sqrt(n!/m!) alpha^(m-n) e^(-|alpha|^2/2) L_n^(m-n)(|alpha|^2)
/// m <  n:  sqrt(m!/n!) (-conj(alpha))^(n-m) e^(-|alpha|^2/2) L_m^(n-m)(|alpha|^2)
///
/// Independent of the matrix-exponential route; serves as the ground truth
/// the analytic expansion coefficients are validated against.
Complex displacement_matrix_element(int m, int n, Complex alpha);

}  // namespace dfock
