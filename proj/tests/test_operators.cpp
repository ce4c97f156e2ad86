#include <doctest.h>

#include <cmath>

#include "dfock/errors.hpp"
#include "dfock/operators.hpp"
#include "dfock/state.hpp"

using namespace dfock;

TEST_CASE("ladder operators") {
  CHECK_THROWS_AS(ladder_ops(1), InvalidDimensionError);
  auto [a2, c2] = ladder_ops(2);
  CHECK(a2.matrix(0, 1).real() == doctest::Approx(1.0));
  CHECK(a2.matrix.cwiseAbs().sum() == doctest::Approx(1.0));
  auto [a4, c4] = ladder_ops(4);
  CHECK(a4.matrix(2, 3).real() == doctest::Approx(std::sqrt(3.0)));
  Mat num = c4.matrix * a4.matrix;
  for (int n = 0; n < 4; ++n) CHECK(num(n, n).real() == doctest::Approx(n));
}

TEST_CASE("displacement operator") {
  Mat D0 = displacement_operator(0.0, 8).matrix;
  CHECK((D0 - Mat::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-14);

  ModeOperator D1 = displacement_operator(1.0, 30);
  CHECK(D1.matrix(0, 0).real() == doctest::Approx(std::exp(-0.5)));
  CHECK(D1.unitarity_residual() < 1e-10);

  const Complex a(0.7, 0.3);
  Mat prod = displacement_operator(a, 30).matrix * displacement_operator(-a, 30).matrix;
  const int keep = 30 - displaced_guard_band(std::abs(a), 30);
  prod.diagonal().array() -= 1.0;
  CHECK(prod.topLeftCorner(keep, keep).cwiseAbs().maxCoeff() < 1e-10);

  CHECK_THROWS_AS(displacement_operator(3.0, 8), TruncationRiskError);
}

TEST_CASE("phase shifter flips coherent sign") {
  MultiModeState st = MultiModeState::coherent(0.6, 16);
  st.apply_one_mode(phase_shifter(M_PI, 16), 0);
  MultiModeState flipped = MultiModeState::coherent(-0.6, 16);
  CHECK(fidelity(st, flipped) == doctest::Approx(1.0));
}

TEST_CASE("single-mode squeezer") {
  Mat S0 = single_mode_squeezer(0.0, 12).matrix;
  CHECK((S0 - Mat::Identity(12, 12)).cwiseAbs().maxCoeff() < 1e-14);

  MultiModeState st = MultiModeState::fock(0, 40);
  st.apply_one_mode(single_mode_squeezer(0.4, 40), 0);
  for (int n = 1; n < 40; n += 2) CHECK(std::abs(st.amplitudes()[n]) < 1e-14);
  CHECK(std::abs(st.amplitudes()[0]) == doctest::Approx(1.0 / std::sqrt(std::cosh(0.4))));

  CHECK_THROWS_AS(single_mode_squeezer(1.2, 20), TruncationRiskError);
}

TEST_CASE("two-mode squeezer") {
  MultiModeState st = MultiModeState::vacuum({20, 20});
  st.apply_two_mode(two_mode_squeezer(0.0, {20, 20}), 0, 1);
  CHECK(std::abs(st.amplitudes()[0]) == doctest::Approx(1.0));

  MultiModeState tm = MultiModeState::vacuum({20, 20});
  tm.apply_two_mode(two_mode_squeezer(0.5, {20, 20}), 0, 1);
  const double lam = std::tanh(0.5);
  CHECK(std::abs(tm.amplitudes()[tm.flat_index({1, 1})]) ==
        doctest::Approx(lam / std::cosh(0.5)));
  CHECK(std::abs(tm.amplitudes()[tm.flat_index({3, 3})]) ==
        doctest::Approx(std::pow(lam, 3) / std::cosh(0.5)));
  double off = 0;
  for (int n = 0; n < 20; ++n)
    for (int m = 0; m < 20; ++m)
      if (n != m) off = std::max(off, std::abs(tm.amplitudes()[tm.flat_index({n, m})]));
  CHECK(off < 1e-12);

  CHECK_THROWS_AS(two_mode_squeezer(0.5, {8, 8}), TruncationRiskError);
}

TEST_CASE("beam splitter conventions and conservation") {
  CHECK_THROWS_AS(beam_splitter(0.9, 0.6, 0.0, {4, 4}, BsConvention::B13), InvalidSplitterError);

  Mat I = beam_splitter(1.0, 0.0, 0.3, {6, 6}, BsConvention::B13).matrix;
  CHECK((I - Mat::Identity(36, 36)).cwiseAbs().maxCoeff() < 1e-12);

  // coherent amplitude map for B13 at t=0.8, r=0.6, phi=pi/3
  const double t = 0.8, r = 0.6, phi = M_PI / 3;
  const Complex b1(0.5, 0.0), b2(0.0, -0.2);
  const Complex o1 = t * b1 - r * std::exp(Complex(0, -phi)) * b2;
  const Complex o2 = r * std::exp(Complex(0, phi)) * b1 + t * b2;
  MultiModeState in = MultiModeState::product(MultiModeState::coherent(b1, 16),
                                              MultiModeState::coherent(b2, 16));
  in.apply_two_mode(beam_splitter(t, r, phi, {16, 16}, BsConvention::B13), 0, 1);
  MultiModeState expect = MultiModeState::product(MultiModeState::coherent(o1, 16),
                                                  MultiModeState::coherent(o2, 16));
  CHECK(fidelity(in, expect) > 1.0 - 1e-9);

  // B24 is B13 with the phase reversed
  MultiModeState in2 = MultiModeState::product(MultiModeState::coherent(b1, 16),
                                               MultiModeState::coherent(b2, 16));
  in2.apply_two_mode(beam_splitter(t, r, phi, {16, 16}, BsConvention::B24), 0, 1);
  const Complex p1 = t * b1 - r * std::exp(Complex(0, phi)) * b2;
  const Complex p2 = r * std::exp(Complex(0, -phi)) * b1 + t * b2;
  MultiModeState expect2 = MultiModeState::product(MultiModeState::coherent(p1, 16),
                                                   MultiModeState::coherent(p2, 16));
  CHECK(fidelity(in2, expect2) > 1.0 - 1e-9);

  // photon number conserved on an arbitrary two-mode state
  Vec v(5 * 5);
  for (int i = 0; i < 25; ++i) v[i] = Complex(std::sin(1.3 * i + 0.2), std::cos(0.7 * i));
  MultiModeState rnd({5, 5}, v);
  rnd.normalize();
  const double before = rnd.total_mean_photon();
  rnd.apply_two_mode(beam_splitter(0.8, 0.6, 1.1, {5, 5}, BsConvention::B13), 0, 1);
  CHECK(std::abs(rnd.total_mean_photon() - before) < 1e-10);

  // B12prime is the inverse of B12
  Mat fw = beam_splitter(0.8, 0.6, 0.0, {6, 6}, BsConvention::B12).matrix;
  Mat bw = beam_splitter(0.8, 0.6, 0.0, {6, 6}, BsConvention::B12prime).matrix;
  CHECK((fw * bw - Mat::Identity(36, 36)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("guard band grows with amplitude") {
  CHECK(displaced_guard_band(0.0, 40) < displaced_guard_band(1.0, 40));
  CHECK(displaced_guard_band(1.0, 40) < displaced_guard_band(2.0, 40));
  // guarded rows of D(1.5) on dim 40 really are unitary rows
  ModeOperator D = displacement_operator(1.5, 40);
  CHECK(D.guard_band < 40);
  CHECK(D.unitarity_residual() < 1e-8);
}
