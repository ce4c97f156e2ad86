#include "dfock/gates.hpp"

#include <algorithm>
#include <cmath>

#include "dfock/alpha.hpp"
#include "dfock/errors.hpp"

namespace dfock {

double GateConfig::lambda() const { return std::tanh(s); }
double GateConfig::t() const { return std::sqrt(1.0 - bs_r * bs_r); }
double GateConfig::gamma() const {
  return alpha * t() * std::sqrt(1.0 + lambda() * lambda()) / bs_r;
}
Complex GateConfig::delta_eff() const {
  const double lam = lambda();
  return std::exp(Complex(0, phi)) * alpha * (1.0 - lam * lam) / lam;
}

void GateConfig::validate() const {
  if (s < 0) throw InvalidSqueezingError("GateConfig: s must be >= 0");
  if (bs_r <= 0 || bs_r > 0.3)
    throw InvalidSplitterError("GateConfig: bs_r must be in (0, 0.3]");
  if (alpha == 0) throw InvalidDimensionError("GateConfig: alpha must be nonzero");
  for (int c : cutoffs)
    if (c < 2) throw InvalidDimensionError("GateConfig: cutoffs must be >= 2");
  const double g = gamma();
  if (std::exp(-4.0 * g * g) >= 1e-4)
    throw TruncationRiskError("GateConfig: logical basis not orthogonal, e^(-4 gamma^2) >= 1e-4");
  if (cutoffs[0] < cutoff_for_amplitude(std::abs(g) / t()))
    throw TruncationRiskError("GateConfig: control cutoff too small for gamma");
  if (cutoffs[1] < cutoff_for_amplitude(std::abs(g)))
    throw TruncationRiskError("GateConfig: second-arm cutoff too small for gamma");
}

GateConfig GateConfig::reference_cz() {
  GateConfig c;
  c.s = 0.1;
  c.bs_r = 0.05;
  c.phi = 0.0;
  c.alpha = std::sinh(0.1) * std::cosh(0.1);
  c.cutoffs = {40, 40, 8, 8};
  return c;
}

GateConfig GateConfig::reference_hadamard() {
  GateConfig c = reference_cz();
  c.alpha = -c.alpha;  // delta = -1 branch reproduces the hybrid basis literally
  return c;
}

Qubit2::Qubit2(Complex a_, Complex b_) : a(a_), b(b_) {
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  if (n <= 0) throw ZeroProbabilityError("Qubit2: zero amplitudes");
  a /= n;
  b /= n;
}

namespace {

MultiModeState coherent_superposition(Complex wa, Complex wb, double amp, int dim) {
  MultiModeState p = MultiModeState::coherent(amp, dim);
  MultiModeState m = MultiModeState::coherent(-amp, dim);
  Vec v = wa * p.amplitudes() + wb * m.amplitudes();
  MultiModeState out({dim}, std::move(v));
  out.normalize();
  return out;
}

// interferometer chain of the Mach-Zehnder scheme; herald on mode 3
MultiModeState run_chain(const GateConfig& cfg, const Qubit2& control) {
  cfg.validate();
  if (cfg.s <= 0) throw InvalidSqueezingError("gate chain requires s > 0");
  const double lam = cfg.lambda();
  const double t = cfg.t();
  const double t1 = lam / std::sqrt(1.0 + lam * lam);
  const double r1 = 1.0 / std::sqrt(1.0 + lam * lam);
  const auto& cut = cfg.cutoffs;

  MultiModeState st = build_input(cfg, control);
  ModeOperator b12p = beam_splitter(t1, r1, 0.0, {cut[0], cut[1]}, BsConvention::B12prime);
  ModeOperator b24 = beam_splitter(t, cfg.bs_r, cfg.phi, {cut[1], cut[3]}, BsConvention::B24);
  ModeOperator b13 = beam_splitter(t, cfg.bs_r, cfg.phi, {cut[0], cut[2]}, BsConvention::B13);
  ModeOperator b12 = beam_splitter(t1, r1, 0.0, {cut[0], cut[1]}, BsConvention::B12);
  st.apply_two_mode(b12p, 0, 1);
  st.apply_two_mode(b24, 1, 3);
  st.apply_two_mode(b13, 0, 2);
  st.apply_two_mode(b12, 0, 1);
  return st;
}

// target-qubit amplitudes extracted alongside the heralded photon
std::pair<Complex, Complex> target_amps(const GateConfig& cfg) {
  const Complex d = cfg.delta_eff();
  const double nn = std::sqrt(1.0 + std::norm(d));
  return {-std::conj(d) / nn, 1.0 / nn};
}

MultiModeState cz_ideal(const GateConfig& cfg, const Qubit2& control) {
  const auto [a1, b1] = target_amps(cfg);
  const double g = cfg.gamma();
  const auto& cut = cfg.cutoffs;
  MultiModeState cp = MultiModeState::coherent(g, cut[0]);
  MultiModeState cm = MultiModeState::coherent(-g, cut[0]);
  Vec qp = Vec::Zero(cut[2]), qm = Vec::Zero(cut[2]);
  qp[0] = a1;
  qp[1] = b1;
  qm[0] = -a1;
  qm[1] = b1;
  const Eigen::Index n1 = cut[1];
  Vec v = Vec::Zero(static_cast<Eigen::Index>(cut[0]) * n1 * cut[2]);
  for (int i = 0; i < cut[0]; ++i)
    for (int k = 0; k < cut[2]; ++k) {
      const Eigen::Index idx = (static_cast<Eigen::Index>(i) * n1 + 0) * cut[2] + k;
      v[idx] = control.a * cp.amplitudes()[i] * qp[k] + control.b * cm.amplitudes()[i] * qm[k];
    }
  MultiModeState out({cut[0], cut[1], cut[2]}, std::move(v));
  out.normalize();
  return out;
}

// sum_k |<ideal, k|state>|^2 over the trailing mode of `state`
double trailing_mode_projector_fidelity(const MultiModeState& ideal, const MultiModeState& state) {
  const int last = state.num_modes() - 1;
  const Eigen::Index d = state.cutoffs()[last];
  const Eigen::Index rest = state.amplitudes().size() / d;
  if (ideal.amplitudes().size() != rest)
    throw DimensionMismatchError("projector fidelity: shapes do not match");
  double total = 0.0;
  for (Eigen::Index k = 0; k < d; ++k) {
    Complex acc = 0.0;
    for (Eigen::Index i = 0; i < rest; ++i)
      acc += std::conj(ideal.amplitudes()[i]) * state.amplitudes()[i * d + k];
    total += std::norm(acc);
  }
  return total;
}

}  // namespace

MultiModeState build_input(const GateConfig& config, const Qubit2& control) {
  config.validate();
  const auto& cut = config.cutoffs;
  const double gin = config.gamma() / config.t();
  MultiModeState ctrl = coherent_superposition(control.a, control.b, gin, cut[0]);
  MultiModeState arm2 = MultiModeState::fock(0, cut[1]);
  MultiModeState tmsv = MultiModeState::vacuum({cut[2], cut[3]});
  if (config.s > 0) {
    ModeOperator sq = two_mode_squeezer(config.s, {cut[2], cut[3]});
    tmsv.apply_two_mode(sq, 0, 1);
  }
  return MultiModeState::product(MultiModeState::product(ctrl, arm2), tmsv);
}

GateReport run_cz(const GateConfig& config, const Qubit2& control, HeraldMode herald) {
  GateReport rep;
  rep.kind = "cz";
  rep.config = config;
  rep.control = control;
  MultiModeState st = run_chain(config, control);

  rep.ideal = cz_ideal(config, control);
  if (herald == HeraldMode::projector) {
    ConditionalOutcome out = project_fock(st, 3, 1);
    if (out.zero_branch) throw ZeroProbabilityError("run_cz: heralding branch has zero probability");
    rep.success_probability = out.probability;
    rep.output = out.state;
    rep.fidelity = fidelity(rep.ideal, rep.output);
  } else {
    ConditionalOutcome out = apd_click(st, 3);
    if (out.zero_branch) throw ZeroProbabilityError("run_cz: APD never clicks");
    rep.success_probability = out.probability;
    rep.output = out.state;  // heralded mode kept (on/off POVM)
    rep.fidelity = trailing_mode_projector_fidelity(rep.ideal, rep.output);
    rep.warnings.push_back("apd herald: fidelity evaluated with the clicked mode traced by projector expectation");
  }
  return rep;
}

std::pair<MultiModeState, MultiModeState> hybrid_basis(const GateConfig& config) {
  const double g = config.gamma();
  const auto& cut = config.cutoffs;
  MultiModeState cp = MultiModeState::coherent(g, cut[0]);
  MultiModeState cm = MultiModeState::coherent(-g, cut[0]);
  const Eigen::Index n1 = cut[1];
  auto assemble = [&](double sign) {
    Vec v = Vec::Zero(static_cast<Eigen::Index>(cut[0]) * n1 * cut[2]);
    for (int i = 0; i < cut[0]; ++i) {
      const Eigen::Index base = static_cast<Eigen::Index>(i) * n1 * cut[2];
      // (|0>+|1>) with +gamma, sign * (-|0>+|1>) with -gamma
      v[base + 0] += cp.amplitudes()[i] - sign * cm.amplitudes()[i];
      v[base + 1] += cp.amplitudes()[i] + sign * cm.amplitudes()[i];
    }
    MultiModeState out({cut[0], cut[1], cut[2]}, std::move(v));
    out.normalize();
    return out;
  };
  return {assemble(+1.0), assemble(-1.0)};
}

GateReport run_hadamard_hybrid(const GateConfig& config, const Qubit2& control,
                               HeraldMode herald) {
  GateReport rep = run_cz(config, control, herald);
  rep.kind = "hadamard";
  auto [phip, phim] = hybrid_basis(config);
  const Complex wp = (control.a + control.b) / std::sqrt(2.0);
  const Complex wm = (control.a - control.b) / std::sqrt(2.0);
  Vec v = wp * phip.amplitudes() + wm * phim.amplitudes();
  MultiModeState ideal(std::vector<int>(phip.cutoffs()), std::move(v));
  ideal.normalize();
  rep.ideal = ideal;
  const double ortho = std::abs(phim.inner(phip));
  if (ortho > 1e-6) rep.warnings.push_back("hybrid basis states not orthogonal");
  if (herald == HeraldMode::projector)
    rep.fidelity = fidelity(rep.ideal, rep.output);
  else
    rep.fidelity = trailing_mode_projector_fidelity(rep.ideal, rep.output);
  return rep;
}

GateReport run_hadamard_macro_micro(const GateConfig& config, const Qubit2& control,
                                    int n_measured) {
  if (n_measured < 0 || n_measured >= config.cutoffs[0])
    throw InvalidLevelError("run_hadamard_macro_micro: n_measured outside control cutoff");
  GateReport rep;
  rep.kind = "macro-micro";
  rep.config = config;
  rep.control = control;

  MultiModeState st = run_chain(config, control);
  ConditionalOutcome heralded = project_fock(st, 3, 1);
  if (heralded.zero_branch)
    throw ZeroProbabilityError("run_hadamard_macro_micro: heralding branch empty");

  const std::vector<double> dist = heralded.state.mode_probabilities(0);
  const double peak = *std::max_element(dist.begin(), dist.end());
  ConditionalOutcome counted = project_fock(heralded.state, 0, n_measured);
  if (counted.zero_branch)
    throw ZeroProbabilityError("run_hadamard_macro_micro: no support at n_measured");
  if (counted.probability < 0.05 * peak)
    rep.warnings.push_back("zero-probability branch: n_measured has negligible coherent support");

  rep.success_probability = heralded.probability * counted.probability;
  rep.output = counted.state;  // modes: (near-vacuum arm, target)

  // output branches on parity: ((a + (-1)^{n+1} b)|0> + (a + (-1)^n b)|1>)/sqrt(2)
  const double par = (n_measured % 2) ? -1.0 : 1.0;
  Vec q = Vec::Zero(config.cutoffs[2]);
  q[0] = (control.a - par * control.b) / std::sqrt(2.0);
  q[1] = (control.a + par * control.b) / std::sqrt(2.0);
  Vec v = Vec::Zero(static_cast<Eigen::Index>(config.cutoffs[1]) * config.cutoffs[2]);
  for (int k = 0; k < config.cutoffs[2]; ++k) v[k] = q[k];
  MultiModeState ideal({config.cutoffs[1], config.cutoffs[2]}, std::move(v));
  ideal.normalize();
  rep.ideal = ideal;
  rep.fidelity = fidelity(rep.ideal, rep.output);
  return rep;
}

GateReport run_reverse_hadamard(const GateConfig& config, const Qubit2& hybrid_in) {
  config.validate();
  GateReport rep;
  rep.kind = "reverse";
  rep.config = config;
  rep.control = hybrid_in;

  const int micro_dim = 16;
  const int coh_dim = config.cutoffs[0];
  const double g_in = config.gamma() / config.t();
  const double T = config.t() * config.t();
  const double g_out = config.gamma() / T;

  const Complex wp = (hybrid_in.a + hybrid_in.b) / std::sqrt(2.0);
  const Complex wm = (hybrid_in.a - hybrid_in.b) / std::sqrt(2.0);

  MultiModeState cp = MultiModeState::coherent(g_in, coh_dim);
  MultiModeState cm = MultiModeState::coherent(-g_in, coh_dim);
  Vec v = Vec::Zero(static_cast<Eigen::Index>(micro_dim) * coh_dim);
  const double isq = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < coh_dim; ++j) {
    // (|0>+|1>)/sqrt2 with +gamma branch, (-|0>+|1>)/sqrt2 with -gamma branch
    v[0 * coh_dim + j] = isq * (wp * cp.amplitudes()[j] - wm * cm.amplitudes()[j]);
    v[1 * coh_dim + j] = isq * (wp * cp.amplitudes()[j] + wm * cm.amplitudes()[j]);
  }
  MultiModeState st({micro_dim, coh_dim}, std::move(v));
  st.normalize();

  // mixing splitter with phi = pi, then a single-photon herald on the micro mode
  ModeOperator mix = beam_splitter(config.t(), config.bs_r, M_PI, {micro_dim, coh_dim},
                                   BsConvention::B13);
  st.apply_two_mode(mix, 0, 1);
  ConditionalOutcome out = project_fock(st, 0, 1);
  if (out.zero_branch) throw ZeroProbabilityError("run_reverse_hadamard: herald branch empty");
  rep.success_probability = out.probability;
  rep.output = out.state;

  MultiModeState ip = MultiModeState::coherent(g_out, coh_dim);
  MultiModeState im = MultiModeState::coherent(-g_out, coh_dim);
  Vec iv = wp * ip.amplitudes() + wm * im.amplitudes();
  MultiModeState ideal({coh_dim}, std::move(iv));
  ideal.normalize();
  rep.ideal = ideal;
  rep.fidelity = fidelity(rep.ideal, rep.output);
  return rep;
}

RatioTable apd_ratio_curve(Complex delta, const std::vector<double>& s_grid, int k_max) {
  if (k_max < 2) throw InvalidLevelError("apd_ratio_curve: k_max must be >= 2");
  RatioTable tab;
  tab.k_max = k_max;
  tab.s = s_grid;
  for (double s : s_grid) {
    if (s <= 0) throw InvalidSqueezingError("apd_ratio_curve: s must be > 0");
    const Complex alpha = std::conj(delta) * std::sinh(s) * std::cosh(s);
    TmsvAlphaRepr rep = tmsv_alpha_repr(alpha, s, k_max);
    std::vector<double> row;
    for (int k = 2; k <= k_max; ++k) row.push_back(rep.probs[1] / rep.probs[k]);
    tab.ratios.push_back(std::move(row));
  }
  return tab;
}

Complex attenuate_coherent(Complex alpha_in, double T) {
  if (T < 1.0) throw SimError("attenuate_coherent: T must be >= 1");
  return alpha_in / T;
}

namespace {

int scs_dim(double r, double alpha) {
  int dim = std::max({cutoff_for_amplitude(std::abs(alpha)), 24});
  const double lam = std::tanh(r);
  if (lam > 0) {
    while (dim < 120 && std::pow(lam, dim) > 1e-6) ++dim;
    if (std::pow(lam, dim) > 1e-6)
      throw TruncationRiskError("scs_fidelity: squeezing too large for supported cutoff");
  }
  return dim;
}

MultiModeState cat_state(double alpha, double sign, int dim) {
  MultiModeState p = MultiModeState::coherent(alpha, dim);
  MultiModeState m = MultiModeState::coherent(-alpha, dim);
  Vec v = p.amplitudes() + sign * m.amplitudes();
  MultiModeState out({dim}, std::move(v));
  out.normalize();
  return out;
}

}  // namespace

double scs_fidelity(double r, double alpha, CatParity which) {
  const int dim = scs_dim(r, alpha);
  ModeOperator sq = single_mode_squeezer(r, dim);
  MultiModeState st = MultiModeState::fock(which == CatParity::even ? 0 : 1, dim);
  st.apply_one_mode(sq, 0);
  MultiModeState target = cat_state(alpha, which == CatParity::even ? 1.0 : -1.0, dim);
  return fidelity(target, st);
}

double scs_fidelity(double r, double alpha, Complex a, Complex b) {
  const int dim = scs_dim(r, alpha);
  ModeOperator sq = single_mode_squeezer(r, dim);
  Vec v = Vec::Zero(dim);
  v[0] = a;
  v[1] = b;
  MultiModeState st({dim}, std::move(v));
  st.normalize();
  st.apply_one_mode(sq, 0);
  MultiModeState p = MultiModeState::coherent(alpha, dim);
  MultiModeState m = MultiModeState::coherent(-alpha, dim);
  Vec tv = (a + b) / std::sqrt(2.0) * p.amplitudes() + (a - b) / std::sqrt(2.0) * m.amplitudes();
  MultiModeState target({dim}, std::move(tv));
  target.normalize();
  return fidelity(target, st);
}

}  // namespace dfock
