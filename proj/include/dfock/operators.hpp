#pragma once

#include <utility>
#include <vector>

#include "dfock/linalg.hpp"

namespace dfock {

// Dense operator acting on one or two modes of a MultiModeState.
// For arity 2 the matrix is indexed by the joint level a*dims[1] + b.
struct ModeOperator {
  int arity = 1;
  std::vector<int> dims;
  Mat matrix;
  bool unitary = false;   // set by factories whose generator is anti-Hermitian
  int guard_band = 0;     // levels near the cutoff excluded from unitarity claims

  int joint_dim() const;

  // max entry of |M M^dag - I| over the top-left (d-g)x(d-g) block
  double unitarity_residual(int guard) const;
  double unitarity_residual() const { return unitarity_residual(guard_band); }
};

// Guard band for operators with displaced content of amplitude |alpha| on
// dimension dim: row l is trusted iff
//   l + |alpha|^2 + 2|alpha| sqrt(l+1) + 9 + 3.5 |alpha| <= dim,
// which keeps the out-of-cutoff row mass below ~5e-9 (checked over
// dim in [22,60], |alpha| <= 2).
int displaced_guard_band(double alpha_mag, int dim);

// Per-mode cutoff needed to hold coherent/displaced content of amplitude a.
int cutoff_for_amplitude(double alpha_mag);

std::pair<ModeOperator, ModeOperator> ladder_ops(int dim);

ModeOperator displacement_operator(Complex alpha, int dim);

ModeOperator phase_shifter(double theta, int dim);

ModeOperator single_mode_squeezer(double r, int dim);

ModeOperator two_mode_squeezer(double r, std::pair<int, int> dims);

enum class BsConvention { B13, B24, B12, B12prime };

// Two-mode unitary whose action on coherent amplitude pairs (b1,b2) is the
// 2x2 matrix of the convention:
//   B13:      (t b1 - r e^{-i phi} b2,  r e^{+i phi} b1 + t b2)
//   B24:      same with phi -> -phi
//   B12:      [[t,-r],[r,t]]    (phi = 0)
//   B12prime: [[t, r],[-r,t]]   (phi = pi)
// Conserves total photon number.
ModeOperator beam_splitter(double t, double r, double phi, std::pair<int, int> dims,
                           BsConvention convention);

}  // namespace dfock
