#include <doctest.h>

#include <cmath>

#include "dfock/alpha.hpp"
#include "dfock/errors.hpp"
#include "dfock/oracle.hpp"
#include "dfock/state.hpp"

using namespace dfock;

TEST_CASE("expansion coefficients, low rows") {
  // row 0: Poisson amplitudes with alternating sign
  for (int n = 0; n <= 6; ++n) {
    double fact = 1;
    for (int j = 2; j <= n; ++j) fact *= j;
    const Complex expect = ((n % 2) ? -1.0 : 1.0) * std::pow(0.9, n) / std::sqrt(fact);
    CHECK(std::abs(alpha_coeff(0, n, 0.9) - expect) < 1e-12);
  }
  CHECK(std::abs(alpha_coeff(1, 1, 1.0)) < 1e-14);
  CHECK(alpha_coeff(2, 1, 0.5).real() == doctest::Approx(0.5 * 1.75 / std::sqrt(2.0)));
  CHECK(alpha_coeff(3, 2, 1.0).real() == doctest::Approx(1.0 / std::sqrt(12.0)));

  // row 1 at alpha = 0.8: c10 = conj(alpha), c1n = (-1)^(n-1) a^(n-1) (n - |a|^2)/sqrt(n!)
  const double a = 0.8;
  CHECK(alpha_coeff(1, 0, a).real() == doctest::Approx(a));
  double fact = 1;
  for (int n = 1; n <= 8; ++n) {
    fact *= n;
    const double expect = ((n - 1) % 2 ? -1.0 : 1.0) * std::pow(a, n - 1) * (n - a * a) / std::sqrt(fact);
    CHECK(alpha_coeff(1, n, a).real() == doctest::Approx(expect));
  }
}

TEST_CASE("oracle supremacy over a complex grid") {
  double worst = 0;
  for (Complex a : {Complex(0.5, 0), Complex(1.2, -0.9), Complex(0.3, 0.8), Complex(2.0, 0)}) {
    const double pref = std::exp(-std::norm(a) / 2.0);
    for (int l = 0; l <= 10; ++l)
      for (int n = 0; n <= 10; ++n)
        worst = std::max(worst,
                         std::abs(pref * alpha_coeff(l, n, a) - displacement_matrix_element(n, l, -a)));
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("probabilities") {
  CHECK(alpha_prob(0, 0, 1.0) == doctest::Approx(std::exp(-1.0)));
  CHECK(alpha_prob(1, 1, 1.0) == doctest::Approx(0.0));
  double sum = 0;
  for (int n = 0; n <= 40; ++n) sum += alpha_prob(3, n, 1.2);
  CHECK(sum >= 1.0 - 1e-6);
}

TEST_CASE("displaced overlaps") {
  // same basis: Kronecker delta
  for (int l = 0; l <= 4; ++l)
    for (int n = 0; n <= 4; ++n) {
      const Complex v = displaced_overlap(l, Complex(0.7, 0.2), n, Complex(0.7, 0.2));
      CHECK(std::abs(v - (l == n ? 1.0 : 0.0)) < 1e-12);
    }
  // alpha = 0 reduces to plain Fock amplitudes of |l, alpha'>
  for (int l = 0; l <= 5; ++l)
    for (int n = 0; n <= 8; ++n) {
      const Complex v = displaced_overlap(l, 1.1, n, 0.0);
      CHECK(std::abs(v - displacement_matrix_element(n, l, 1.1)) < 1e-12);
    }
  // coherent overlap magnitude
  CHECK(std::abs(displaced_overlap(0, 1.0, 0, -1.0)) == doctest::Approx(std::exp(-2.0)));
  // group-composition cross-check, phase included
  for (Complex ap : {Complex(0.9, 0.4), Complex(-0.6, 0.0)})
    for (Complex a : {Complex(0.3, -0.5), Complex(1.0, 0.0)})
      for (int l = 0; l <= 6; ++l)
        for (int n = 0; n <= 6; ++n) {
          const Complex phase = std::exp((std::conj(a) * ap - a * std::conj(ap)) / 2.0);
          const Complex truth = phase * displacement_matrix_element(n, l, ap - a);
          CHECK(std::abs(displaced_overlap(l, ap, n, a) - truth) < 1e-11);
        }
}

TEST_CASE("alpha matrix") {
  AlphaMatrix id = alpha_matrix(0.0, 12);
  CHECK((id.coeffs - Mat::Identity(12, 12)).cwiseAbs().maxCoeff() < 1e-14);

  AlphaMatrix m = alpha_matrix(1.5, 40);
  CHECK(m.guarded_rows() > 8);
  CHECK(m.unitarity_residual() < 1e-8);
  CHECK(m.oracle_residual() < 1e-9);

  CHECK_THROWS_AS(alpha_matrix(2.0, 10), TruncationRiskError);
}

TEST_CASE("TMSV representation record") {
  const double r = std::atanh(0.5);
  TmsvAlphaRepr rep = tmsv_alpha_repr(1.0, r, 12);
  CHECK(rep.delta.real() == doctest::Approx(1.5));
  CHECK(rep.norms[1] == doctest::Approx(std::sqrt(3.25)));

  // delta -> 0 as r -> infinity
  TmsvAlphaRepr far = tmsv_alpha_repr(1.0, 10.0, 2);
  CHECK(std::abs(far.delta) < 2e-8);

  const Complex alpha = 1.0 * std::sinh(0.5) * std::cosh(0.5);  // delta = 1
  const int nmax = TmsvAlphaRepr::recommended_n_max(alpha, 0.5);
  CHECK(tmsv_alpha_repr(alpha, 0.5, nmax).prob_sum() >= 1.0 - 1e-6);

  CHECK_THROWS_AS(tmsv_alpha_repr(1.0, 0.0, 4), InvalidSqueezingError);
  CHECK_THROWS_AS(tmsv_alpha_repr(1.0, -0.3, 4), InvalidSqueezingError);

  // probabilities even in the sign of delta
  TmsvAlphaRepr neg = tmsv_alpha_repr(-alpha, 0.5, 8);
  TmsvAlphaRepr pos = tmsv_alpha_repr(alpha, 0.5, 8);
  for (int n = 0; n <= 8; ++n) CHECK(pos.probs[n] == doctest::Approx(neg.probs[n]).epsilon(1e-13));
}

TEST_CASE("partner state, closed form") {
  MultiModeState p0 = tmsv_partner_closed(0, 0.7, 8);
  CHECK(std::abs(p0.amplitudes()[0]) == doctest::Approx(1.0));

  MultiModeState p1 = tmsv_partner_closed(1, 1.0, 8);
  CHECK(p1.amplitudes()[1].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(p1.amplitudes()[0].real() == doctest::Approx(-1.0 / std::sqrt(2.0)));

  CHECK(tmsv_partner_closed(5, Complex(0.7, 0.2), 12).norm() == doctest::Approx(1.0));
  CHECK_THROWS_AS(tmsv_partner_closed(9, 1.0, 8), InvalidLevelError);
}

TEST_CASE("partner state, series route") {
  // alpha = 0: reduces to |n>
  MultiModeState s0 = tmsv_partner_series(2, 0.0, 0.5, 20);
  CHECK(std::abs(s0.amplitudes()[2]) == doctest::Approx(1.0));

  for (double a : {0.5, 1.0})
    for (double r : {0.3, 0.8})
      for (int n : {0, 1, 4}) {
        const double lam = std::tanh(r);
        MultiModeState series = tmsv_partner_series(n, a, r, 60);
        MultiModeState closed = tmsv_partner_closed(n, a * (1 - lam * lam) / lam, 61);
        closed.apply_one_mode(displacement_operator(a * lam, 61), 0);
        CHECK(fidelity(closed, series) >= 1.0 - 1e-8);
      }

  CHECK_THROWS_AS(tmsv_partner_series(2, 1.5, 1.0, 12), TruncationRiskError);
}

TEST_CASE("vacuum/photon superposition representation") {
  const Complex f0 = superpos_amp(+1, 0, 1.0);
  CHECK(f0.real() == doctest::Approx(std::exp(-0.5) * 2.0 / std::sqrt(2.0)));

  SuperposAlphaRepr at0p = superpos_alpha_repr(+1, 0.0, 6);
  SuperposAlphaRepr at0m = superpos_alpha_repr(-1, 0.0, 6);
  CHECK(at0p.probs[0] == doctest::Approx(0.5));
  CHECK(at0p.probs[1] == doctest::Approx(0.5));
  CHECK(at0m.probs[0] == doctest::Approx(0.5));
  for (int n = 2; n <= 6; ++n) CHECK(at0p.probs[n] == doctest::Approx(0.0));

  // parity of the amplitudes at alpha = 0.9
  for (int n = 0; n <= 12; ++n) {
    const Complex fp = superpos_amp(+1, n, 0.9);
    const Complex fm = superpos_amp(-1, n, -0.9);
    const double par = (n % 2) ? -1.0 : 1.0;
    CHECK(std::abs(fp - par * fm) < 1e-14);
  }

  // probability mirror P_{n+}(a) = P_{n-}(-a) for real a
  for (double a : {0.5, 1.0, 2.0})
    for (int n = 0; n <= 10; ++n)
      CHECK(std::norm(superpos_amp(+1, n, a)) ==
            doctest::Approx(std::norm(superpos_amp(-1, n, -a))).epsilon(1e-13));

  // closed-form probability for n >= 1
  for (int n = 1; n <= 8; ++n) {
    const double a = 1.3;
    double fact = 1;
    for (int j = 2; j <= n; ++j) fact *= j;
    const double expect =
        std::exp(-a * a) * std::pow(a * a, n - 1) / (2 * fact) * std::norm(Complex(a - (n - a * a)));
    CHECK(std::norm(superpos_amp(+1, n, a)) == doctest::Approx(expect).epsilon(1e-12));
  }

  // normalization at the policy cutoff
  for (double a : {0.5, 1.5, 3.0}) {
    SuperposAlphaRepr rep = superpos_alpha_repr(+1, a, cutoff_for_amplitude(a) + 12);
    CHECK(rep.prob_sum() >= 1.0 - 1e-8);
  }

  // consistency with the change-of-basis rows: f_n = e^{-|a|^2/2}(c_0n + s c_1n)/sqrt2
  for (int sign : {+1, -1})
    for (int n = 0; n <= 8; ++n) {
      const Complex a(0.6, 0.3);
      const Complex expect = std::exp(-std::norm(a) / 2.0) *
                             (alpha_coeff(0, n, a) + double(sign) * alpha_coeff(1, n, a)) /
                             std::sqrt(2.0);
      CHECK(std::abs(superpos_amp(sign, n, a) - expect) < 1e-13);
    }
}
