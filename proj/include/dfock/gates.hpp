#pragma once

#include <array>
#include <string>
#include <vector>

#include "dfock/state.hpp"

namespace dfock {

// Parameters of the Mach-Zehnder scheme: TMSV squeezing s, unbalanced
// splitter (bs_r, phi), coherent displacement scale alpha (signed; the
// Hadamard regime uses alpha = -sinh(s)cosh(s) so the extracted qubit is
// balanced). Cutoffs follow mode order (control, second arm, partner,
// heralded).
struct GateConfig {
  double s = 0.1;
  double bs_r = 0.05;
  double phi = 0.0;
  double alpha = 0.0;
  std::array<int, 4> cutoffs = {40, 40, 8, 8};

  double lambda() const;      // tanh s
  double t() const;           // sqrt(1 - bs_r^2)
  double gamma() const;       // alpha * t * sqrt(1 + lambda^2) / bs_r
  Complex delta_eff() const;  // e^{i phi} alpha (1 - lambda^2) / lambda

  void validate() const;

  static GateConfig reference_cz();
  static GateConfig reference_hadamard();
};

// Normalized two-component qubit amplitudes.
struct Qubit2 {
  Complex a;
  Complex b;
  Qubit2(Complex a_, Complex b_);
};

struct GateReport {
  std::string kind;
  double success_probability = 0.0;
  MultiModeState output;
  MultiModeState ideal;
  double fidelity = 0.0;
  GateConfig config;
  Qubit2 control{1.0, 0.0};
  std::vector<std::string> warnings;
};

enum class HeraldMode { projector, apd };

// Four-mode input: control-qubit coherent superposition at amplitude
// +/- gamma/t in mode 0, vacuum in mode 1, TMSV(s) in modes 2,3.
MultiModeState build_input(const GateConfig& config, const Qubit2& control);

// Control-sign gate: the full splitter chain, heralded on a single photon
// in mode 3 (or an APD click). Output modes: (coherent control, near-vacuum
// arm, target qubit).
GateReport run_cz(const GateConfig& config, const Qubit2& control,
                  HeraldMode herald = HeraldMode::projector);

// Same chain compared against the hybrid-basis image of the Hadamard matrix.
GateReport run_hadamard_hybrid(const GateConfig& config, const Qubit2& control,
                               HeraldMode herald = HeraldMode::projector);

// Hybrid basis states (Phi+, Phi-) on modes (coherent, vacuum arm, target).
std::pair<MultiModeState, MultiModeState> hybrid_basis(const GateConfig& config);

// Chain plus a photon-number projection on the coherent mode; the output
// branches on the parity of n_measured. Output modes: (near-vacuum arm,
// target qubit).
GateReport run_hadamard_macro_micro(const GateConfig& config, const Qubit2& control,
                                    int n_measured);

// Reverse Hadamard: mixes the hybrid state with its coherent mode on one
// unbalanced splitter (phi = pi) and heralds a single photon in the
// microscopic mode; the surviving coherent superposition carries H^(-1) of
// the hybrid amplitudes. Output: single coherent mode.
GateReport run_reverse_hadamard(const GateConfig& config, const Qubit2& hybrid_in);

// Rows (s, P1/P2, ..., P1/P_k_max) of the heralding-probability ratios at
// fixed delta.
struct RatioTable {
  std::vector<double> s;
  std::vector<std::vector<double>> ratios;  // ratios[i][k-2] = P1/Pk at s[i]
  int k_max = 2;
};

RatioTable apd_ratio_curve(Complex delta, const std::vector<double>& s_grid, int k_max);

// Absorbing-medium model: alpha -> alpha / T, T >= 1.
Complex attenuate_coherent(Complex alpha_in, double T);

enum class CatParity { even, odd };

// Fidelity of the squeezed vacuum (even) or squeezed photon (odd) against
// the normalized coherent-state superposition of amplitude alpha.
double scs_fidelity(double r, double alpha, CatParity which);
// Squeezed (a|0> + b|1>) against ((a+b)|0,alpha> + (a-b)|0,-alpha>)/sqrt(2).
double scs_fidelity(double r, double alpha, Complex a, Complex b);

}  // namespace dfock
