#include <doctest.h>

#include <cmath>

#include "dfock/operators.hpp"
#include "dfock/oracle.hpp"

using namespace dfock;

TEST_CASE("associated Laguerre values") {
  CHECK(laguerre(0, 0, 3.7) == doctest::Approx(1.0));
  CHECK(laguerre(1, 0, 1.0) == doctest::Approx(0.0));
  CHECK(laguerre(1, 2, 0.5) == doctest::Approx(2.5));
  // L_2^(0)(x) = x^2/2 - 2x + 1
  CHECK(laguerre(2, 0, 2.0) == doctest::Approx(2.0 - 4.0 + 1.0));
  // L_3^(1)(x) via explicit polynomial: 4 - 6x + 2x^2 - x^3/6
  const double x = 0.8;
  CHECK(laguerre(3, 1, x) == doctest::Approx(4 - 6 * x + 2 * x * x - x * x * x / 6));
}

TEST_CASE("closed-form displacement elements") {
  const double e12 = std::exp(-0.5);
  CHECK(displacement_matrix_element(0, 0, 1.0).real() == doctest::Approx(e12));
  CHECK(std::abs(displacement_matrix_element(1, 1, 1.0)) == doctest::Approx(0.0));
  const Complex v = displacement_matrix_element(1, 0, Complex(0, 1));
  CHECK(v.real() == doctest::Approx(0.0));
  CHECK(v.imag() == doctest::Approx(e12));
}

TEST_CASE("oracle equals matrix exponential") {
  for (Complex a : {Complex(0.5, 0), Complex(1.5, 0), Complex(0.7, 0.3), Complex(-1.1, 1.4)}) {
    const Mat D = displacement_operator(a, 50).matrix;
    double worst = 0;
    for (int m = 0; m <= 12; ++m)
      for (int n = 0; n <= 12; ++n)
        worst = std::max(worst, std::abs(D(m, n) - displacement_matrix_element(m, n, a)));
    CHECK(worst < 1e-10);
  }
}
