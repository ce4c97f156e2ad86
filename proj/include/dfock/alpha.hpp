#pragma once

#include <vector>

#include "dfock/linalg.hpp"
#include "dfock/state.hpp"

namespace dfock {

/// Coefficient c_ln(alpha) of |n,alpha> in the expansion of the Fock state
/// |l>, without the common Gaussian prefactor:
///   e^(-|alpha|^2/2) c_ln(alpha) = <n,alpha|l>.
/// Evaluated by the finite binomial sums (one branch for n >= l, one for
/// n < l); validated elsewhere against the Laguerre oracle.
Complex alpha_coeff(int l, int n, Complex alpha);

/// Probability to find n photons displaced by alpha in the l-photon state,
/// prefactor included so the distribution over n is normalized:
///   P_ln = e^(-|alpha|^2) |c_ln|^2.
double alpha_prob(int l, int n, Complex alpha);

/// Coefficient of |n,alpha> in the expansion of |l,alpha'>, i.e. the full
/// overlap <n,alpha|l,alpha'> with phase.
Complex displaced_overlap(int l, Complex alpha_prime, int n, Complex alpha);

// Cutoff-truncated change-of-basis matrix between Fock states and displaced
// number states: row l, column n holds c_ln(alpha); prefactor * coeffs is
// unitary on the guarded block.
struct AlphaMatrix {
  Complex alpha;
  int cutoff = 0;
  Mat coeffs;         // cutoff x cutoff, c_ln
  double prefactor;   // e^(-|alpha|^2/2)
  int guard_band = 0;

  int guarded_rows() const { return cutoff - guard_band; }
  // max entry of |U U^dag - I| over the guarded block, U = prefactor*coeffs
  double unitarity_residual() const;
  // max entry of |prefactor*coeffs - oracle| over the guarded block
  double oracle_residual() const;
};

AlphaMatrix alpha_matrix(Complex alpha, int cutoff);

// Two-mode squeezed vacuum decomposed over correlated displaced number
// states: record of the displacement-ratio parameter, per-n normalization
// factors, amplitudes and probabilities.
struct TmsvAlphaRepr {
  Complex alpha;
  double r = 0.0;
  Complex delta;                // conj(alpha) (1 - tanh^2 r) / tanh r
  int n_max = 0;
  std::vector<double> norms;    // N_n
  std::vector<double> amps;     // p_n
  std::vector<double> probs;    // P_n

  double prob_sum() const;
  static int recommended_n_max(Complex alpha, double r, double tail = 1e-9);
};

TmsvAlphaRepr tmsv_alpha_repr(Complex alpha, double r, int n_max);

// Normalized partner-mode state extracted from the TMSV when n displaced
// photons are found in the other mode (finite superposition of |n-l>).
MultiModeState tmsv_partner_closed(int n, Complex delta, int dim);

// The same state built the slow way: sum_l c_ln(alpha) (tanh r)^l |l>,
// truncated at l_max and normalized. Proportional to
// D(conj(alpha) tanh r) applied to tmsv_partner_closed.
MultiModeState tmsv_partner_series(int n, Complex alpha, double r, int l_max);

// Balanced vacuum/single-photon superposition (|0> +/- |1>)/sqrt(2)
// decomposed over displaced number states.
struct SuperposAlphaRepr {
  int sign = +1;                // +1 or -1
  Complex alpha;
  int n_max = 0;
  std::vector<Complex> amps;    // f_n
  std::vector<double> probs;    // P_n = |f_n|^2

  double prob_sum() const;
};

SuperposAlphaRepr superpos_alpha_repr(int sign, Complex alpha, int n_max);

/// Single amplitude f_n of the superposition, sign = +1/-1.
Complex superpos_amp(int sign, int n, Complex alpha);

}  // namespace dfock
