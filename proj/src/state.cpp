#include "dfock/state.hpp"

#include <cmath>
#include <numeric>

#include "dfock/errors.hpp"

namespace dfock {

MultiModeState::MultiModeState(std::vector<int> cutoffs, Vec amplitudes, double norm_tolerance)
    : cutoffs_(std::move(cutoffs)), amps_(std::move(amplitudes)), norm_tol_(norm_tolerance) {
  Eigen::Index total = 1;
  for (int d : cutoffs_) {
    if (d < 1) throw InvalidDimensionError("MultiModeState: cutoff must be >= 1");
    total *= d;
  }
  if (amps_.size() != total)
    throw DimensionMismatchError("MultiModeState: amplitude size does not match cutoffs");
}

MultiModeState MultiModeState::vacuum(const std::vector<int>& cutoffs) {
  Eigen::Index total = 1;
  for (int d : cutoffs) total *= d;
  Vec v = Vec::Zero(total);
  v[0] = 1.0;
  return MultiModeState(cutoffs, std::move(v));
}

MultiModeState MultiModeState::fock(int n, int dim) {
  if (n < 0 || n >= dim) throw InvalidLevelError("fock: level outside cutoff");
  Vec v = Vec::Zero(dim);
  v[n] = 1.0;
  return MultiModeState({dim}, std::move(v));
}

MultiModeState MultiModeState::coherent(Complex alpha, int dim) {
  if (dim < 1) throw InvalidDimensionError("coherent: dim must be >= 1");
  if (std::norm(alpha) > dim / 4.0)
    throw TruncationRiskError("coherent: |alpha|^2 > dim/4, cutoff too small");
  Vec v(dim);
  Complex term = 1.0;
  v[0] = term;
  for (int n = 1; n < dim; ++n) {
    term *= alpha / std::sqrt(static_cast<double>(n));
    v[n] = term;
  }
  v /= v.norm();
  return MultiModeState({dim}, std::move(v));
}

MultiModeState MultiModeState::product(const MultiModeState& a, const MultiModeState& b) {
  std::vector<int> cut = a.cutoffs_;
  cut.insert(cut.end(), b.cutoffs_.begin(), b.cutoffs_.end());
  Vec v(a.amps_.size() * b.amps_.size());
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < a.amps_.size(); ++i)
    for (Eigen::Index j = 0; j < b.amps_.size(); ++j) v[k++] = a.amps_[i] * b.amps_[j];
  return MultiModeState(cut, std::move(v));
}

double MultiModeState::norm() const { return amps_.norm(); }

void MultiModeState::normalize() {
  const double n = amps_.norm();
  if (n <= 0) throw ZeroProbabilityError("normalize: zero state");
  amps_ /= n;
}

Eigen::Index MultiModeState::stride(int mode) const {
  Eigen::Index s = 1;
  for (int m = num_modes() - 1; m > mode; --m) s *= cutoffs_[m];
  return s;
}

void MultiModeState::check_mode(int mode) const {
  if (mode < 0 || mode >= num_modes()) throw DimensionMismatchError("mode index out of range");
}

Eigen::Index MultiModeState::flat_index(const std::vector<int>& levels) const {
  if (static_cast<int>(levels.size()) != num_modes())
    throw DimensionMismatchError("flat_index: wrong number of levels");
  Eigen::Index idx = 0;
  for (int m = 0; m < num_modes(); ++m) {
    if (levels[m] < 0 || levels[m] >= cutoffs_[m])
      throw InvalidLevelError("flat_index: level outside cutoff");
    idx = idx * cutoffs_[m] + levels[m];
  }
  return idx;
}

void MultiModeState::apply_one_mode(const ModeOperator& op, int mode) {
  check_mode(mode);
  if (op.arity != 1 || op.dims[0] != cutoffs_[mode])
    throw DimensionMismatchError("apply_one_mode: operator does not fit mode");
  const Eigen::Index d = cutoffs_[mode];
  const Eigen::Index s = stride(mode);
  const Eigen::Index blocks = amps_.size() / (d * s);
  Vec scratch(d);
  for (Eigen::Index b = 0; b < blocks; ++b) {
    const Eigen::Index base = b * d * s;
    for (Eigen::Index r = 0; r < s; ++r) {
      for (Eigen::Index i = 0; i < d; ++i) scratch[i] = amps_[base + i * s + r];
      Vec out = op.matrix * scratch;
      for (Eigen::Index i = 0; i < d; ++i) amps_[base + i * s + r] = out[i];
    }
  }
}

void MultiModeState::apply_two_mode(const ModeOperator& op, int mode1, int mode2) {
  check_mode(mode1);
  check_mode(mode2);
  if (mode1 == mode2) throw DimensionMismatchError("apply_two_mode: modes must differ");
  if (op.arity != 2 || op.dims[0] != cutoffs_[mode1] || op.dims[1] != cutoffs_[mode2])
    throw DimensionMismatchError("apply_two_mode: operator does not fit modes");
  const Eigen::Index d1 = cutoffs_[mode1];
  const Eigen::Index d2 = cutoffs_[mode2];
  const Eigen::Index s1 = stride(mode1);
  const Eigen::Index s2 = stride(mode2);
  const Eigen::Index total = amps_.size();
  const Eigen::Index joint = d1 * d2;

  // enumerate all index tuples with modes 1,2 at level 0, then sweep the pair
  Vec scratch(joint), out(joint);
  std::vector<Eigen::Index> bases;
  bases.reserve(total / joint);
  for (Eigen::Index idx = 0; idx < total; ++idx) {
    const Eigen::Index l1 = (idx / s1) % d1;
    const Eigen::Index l2 = (idx / s2) % d2;
    if (l1 == 0 && l2 == 0) bases.push_back(idx);
  }
  for (Eigen::Index base : bases) {
    for (Eigen::Index i = 0; i < d1; ++i)
      for (Eigen::Index j = 0; j < d2; ++j) scratch[i * d2 + j] = amps_[base + i * s1 + j * s2];
    out.noalias() = op.matrix * scratch;
    for (Eigen::Index i = 0; i < d1; ++i)
      for (Eigen::Index j = 0; j < d2; ++j) amps_[base + i * s1 + j * s2] = out[i * d2 + j];
  }
}

Complex MultiModeState::inner(const MultiModeState& other) const {
  if (cutoffs_ != other.cutoffs_) throw DimensionMismatchError("inner: cutoffs differ");
  return amps_.dot(other.amps_);
}

double MultiModeState::mean_photon(int mode) const {
  check_mode(mode);
  const Eigen::Index d = cutoffs_[mode];
  const Eigen::Index s = stride(mode);
  double acc = 0.0;
  for (Eigen::Index idx = 0; idx < amps_.size(); ++idx) {
    const Eigen::Index n = (idx / s) % d;
    acc += static_cast<double>(n) * std::norm(amps_[idx]);
  }
  return acc;
}

double MultiModeState::total_mean_photon() const {
  double acc = 0.0;
  for (int m = 0; m < num_modes(); ++m) acc += mean_photon(m);
  return acc;
}

std::vector<double> MultiModeState::mode_probabilities(int mode) const {
  check_mode(mode);
  const Eigen::Index d = cutoffs_[mode];
  const Eigen::Index s = stride(mode);
  std::vector<double> p(d, 0.0);
  for (Eigen::Index idx = 0; idx < amps_.size(); ++idx)
    p[(idx / s) % d] += std::norm(amps_[idx]);
  return p;
}

ConditionalOutcome project_fock(const MultiModeState& state, int mode, int n) {
  const auto& cut = state.cutoffs();
  if (mode < 0 || mode >= state.num_modes())
    throw DimensionMismatchError("project_fock: mode out of range");
  if (n < 0 || n >= cut[mode]) throw InvalidLevelError("project_fock: level outside cutoff");

  std::vector<int> new_cut;
  for (int m = 0; m < state.num_modes(); ++m)
    if (m != mode) new_cut.push_back(cut[m]);
  if (new_cut.empty()) new_cut.push_back(1);  // scalar remnant kept as a 1-dim mode

  Eigen::Index s = 1;
  for (int m = state.num_modes() - 1; m > mode; --m) s *= cut[m];
  const Eigen::Index d = cut[mode];

  Eigen::Index new_total = 1;
  for (int x : new_cut) new_total *= x;
  Vec slice(new_total);
  Eigen::Index k = 0;
  double p = 0.0;
  const Vec& a = state.amplitudes();
  for (Eigen::Index idx = 0; idx < a.size(); ++idx) {
    if ((idx / s) % d != static_cast<Eigen::Index>(n)) continue;
    slice[k++] = a[idx];
    p += std::norm(a[idx]);
  }
  ConditionalOutcome out;
  out.probability = p;
  if (p < 1e-15) {
    out.zero_branch = true;
    out.state = MultiModeState(new_cut, Vec::Zero(new_total));
    return out;
  }
  slice /= std::sqrt(p);
  out.state = MultiModeState(new_cut, std::move(slice));
  return out;
}

ConditionalOutcome apd_click(const MultiModeState& state, int mode) {
  if (mode < 0 || mode >= state.num_modes())
    throw DimensionMismatchError("apd_click: mode out of range");
  const auto& cut = state.cutoffs();
  Eigen::Index s = 1;
  for (int m = state.num_modes() - 1; m > mode; --m) s *= cut[m];
  const Eigen::Index d = cut[mode];

  Vec v = state.amplitudes();
  for (Eigen::Index idx = 0; idx < v.size(); ++idx)
    if ((idx / s) % d == 0) v[idx] = 0.0;
  const double p = v.squaredNorm();
  ConditionalOutcome out;
  out.probability = p;
  if (p < 1e-15) {
    out.zero_branch = true;
    out.state = MultiModeState(cut, Vec::Zero(v.size()));
    return out;
  }
  v /= std::sqrt(p);
  out.state = MultiModeState(cut, std::move(v));
  return out;
}

double fidelity(const MultiModeState& s1, const MultiModeState& s2) {
  return std::norm(s1.inner(s2));
}

MultiModeState displaced_number_state(int n, Complex alpha, int dim) {
  if (n < 0 || n >= dim) throw InvalidLevelError("displaced_number_state: n >= dim");
  ModeOperator D = displacement_operator(alpha, dim);
  MultiModeState st = MultiModeState::fock(n, dim);
  st.apply_one_mode(D, 0);
  return st;
}

}  // namespace dfock
