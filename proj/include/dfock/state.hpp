#pragma once

#include <vector>

#include "dfock/linalg.hpp"
#include "dfock/operators.hpp"

namespace dfock {

// Pure state over K modes with per-mode Fock cutoffs. Amplitudes are stored
// flat, last mode fastest. Immutable in spirit: operations return new states
// or write through the explicit apply_* methods used by gate code.
class MultiModeState {
 public:
  MultiModeState() = default;
  MultiModeState(std::vector<int> cutoffs, Vec amplitudes, double norm_tolerance = 1e-10);

  static MultiModeState vacuum(const std::vector<int>& cutoffs);
  static MultiModeState fock(int n, int dim);
  static MultiModeState coherent(Complex alpha, int dim);
  // Tensor product, modes of `a` first.
  static MultiModeState product(const MultiModeState& a, const MultiModeState& b);

  int num_modes() const { return static_cast<int>(cutoffs_.size()); }
  const std::vector<int>& cutoffs() const { return cutoffs_; }
  const Vec& amplitudes() const { return amps_; }
  Vec& amplitudes() { return amps_; }
  double norm_tolerance() const { return norm_tol_; }

  double norm() const;
  void normalize();

  void apply_one_mode(const ModeOperator& op, int mode);
  void apply_two_mode(const ModeOperator& op, int mode1, int mode2);

  Complex inner(const MultiModeState& other) const;  // <this|other>

  double mean_photon(int mode) const;
  double total_mean_photon() const;
  // Marginal Fock distribution of one mode.
  std::vector<double> mode_probabilities(int mode) const;

  // Flat index of a multi-index (helper for tests and extraction code).
  Eigen::Index flat_index(const std::vector<int>& levels) const;

 private:
  std::vector<int> cutoffs_;
  Vec amps_;
  double norm_tol_ = 1e-10;

  Eigen::Index stride(int mode) const;
  void check_mode(int mode) const;
};

struct ConditionalOutcome {
  double probability = 0.0;
  MultiModeState state;       // normalized; measured mode removed (project_fock)
  bool zero_branch = false;   // probability below 1e-15, state not meaningful
};

// Rank-one projection |n><n| on one mode; the mode is removed from the result.
ConditionalOutcome project_fock(const MultiModeState& state, int mode, int n);

// On/off POVM element I - |0><0| on one mode; the mode is kept.
ConditionalOutcome apd_click(const MultiModeState& state, int mode);

// |<s1|s2>|^2 for pure states with matching cutoffs.
double fidelity(const MultiModeState& s1, const MultiModeState& s2);

// D(alpha)|n> on a single mode.
MultiModeState displaced_number_state(int n, Complex alpha, int dim);

}  // namespace dfock
