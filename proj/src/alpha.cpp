#include "dfock/alpha.hpp"

#include <cmath>

#include "dfock/errors.hpp"
#include "dfock/oracle.hpp"

namespace dfock {

namespace {

double sqrt_factorial(int n) {
  double s = 1.0;
  for (int j = 2; j <= n; ++j) s *= std::sqrt(static_cast<double>(j));
  return s;
}

double binom(int n, int k) {
  double b = 1.0;
  for (int j = 1; j <= k; ++j) b *= static_cast<double>(n - k + j) / j;
  return b;
}

// falling product m! / (m-len)!  = m (m-1) ... (m-len+1)
double falling(int m, int len) {
  double p = 1.0;
  for (int j = 0; j < len; ++j) p *= static_cast<double>(m - j);
  return p;
}

}  // namespace

Complex alpha_coeff(int l, int n, Complex alpha) {
  if (l < 0 || n < 0) throw InvalidLevelError("alpha_coeff: negative level");
  const double x = std::norm(alpha);
  const double pref = 1.0 / (sqrt_factorial(l) * sqrt_factorial(n));
  if (n >= l) {
    // sum_k (-1)^k C(l,k) x^k n!/(n-l+k)!
    double sum = 0.0, xk = 1.0;
    for (int k = 0; k <= l; ++k) {
      sum += ((k % 2) ? -1.0 : 1.0) * binom(l, k) * xk * falling(n, l - k);
      xk *= x;
    }
    const double sign = ((n - l) % 2) ? -1.0 : 1.0;
    return sign * cpow(alpha, n - l) * pref * sum;
  }
  // n < l: sum_k (-1)^k C(n,k) x^k l!/(l-n+k)!
  double sum = 0.0, xk = 1.0;
  for (int k = 0; k <= n; ++k) {
    sum += ((k % 2) ? -1.0 : 1.0) * binom(n, k) * xk * falling(l, n - k);
    xk *= x;
  }
  return cpow(std::conj(alpha), l - n) * pref * sum;
}

double alpha_prob(int l, int n, Complex alpha) {
  return std::exp(-std::norm(alpha)) * std::norm(alpha_coeff(l, n, alpha));
}

Complex displaced_overlap(int l, Complex alpha_prime, int n, Complex alpha) {
  if (l < 0 || n < 0) throw InvalidLevelError("displaced_overlap: negative level");
  // expansion of |l,alpha'> over |., alpha>: term i carries (alpha-alpha')*^i
  // and lifts |l-i> by m = n-l+i quanta
  const Complex d = alpha_prime - alpha;
  const Complex pref =
      std::exp(-(std::norm(alpha_prime) + std::norm(alpha)) / 2.0 + alpha_prime * std::conj(alpha));
  Complex sum = 0.0;
  const double sl = sqrt_factorial(l), sn = sqrt_factorial(n);
  for (int i = std::max(0, l - n); i <= l; ++i) {
    const int m = n - l + i;
    double fact_i = 1.0, fact_m = 1.0, fact_li = 1.0;
    for (int j = 2; j <= i; ++j) fact_i *= j;
    for (int j = 2; j <= m; ++j) fact_m *= j;
    for (int j = 2; j <= l - i; ++j) fact_li *= j;
    sum += cpow(std::conj(-d), i) * cpow(d, m) * sl * sn / (fact_i * fact_m * fact_li);
  }
  return pref * sum;
}

double AlphaMatrix::unitarity_residual() const {
  const int k = guarded_rows();
  if (k <= 0) return 0.0;
  Mat U = prefactor * coeffs;
  Mat mm = U * U.adjoint();
  mm.diagonal().array() -= 1.0;
  return mm.topLeftCorner(k, k).cwiseAbs().maxCoeff();
}

double AlphaMatrix::oracle_residual() const {
  const int k = guarded_rows();
  double worst = 0.0;
  for (int l = 0; l < k; ++l)
    for (int n = 0; n < cutoff; ++n) {
      const Complex truth = displacement_matrix_element(n, l, -alpha);
      worst = std::max(worst, std::abs(prefactor * coeffs(l, n) - truth));
    }
  return worst;
}

AlphaMatrix alpha_matrix(Complex alpha, int cutoff) {
  if (cutoff < 1 || cutoff > 120)
    throw InvalidDimensionError("alpha_matrix: cutoff out of supported range");
  const int guard = displaced_guard_band(std::abs(alpha), cutoff);
  if (guard >= cutoff)
    throw TruncationRiskError("alpha_matrix: cutoff too small for |alpha|, no guarded rows");
  AlphaMatrix m;
  m.alpha = alpha;
  m.cutoff = cutoff;
  m.prefactor = std::exp(-std::norm(alpha) / 2.0);
  m.guard_band = guard;
  m.coeffs = Mat(cutoff, cutoff);
  for (int l = 0; l < cutoff; ++l)
    for (int n = 0; n < cutoff; ++n) m.coeffs(l, n) = alpha_coeff(l, n, alpha);
  return m;
}

double TmsvAlphaRepr::prob_sum() const {
  double s = 0.0;
  for (double p : probs) s += p;
  return s;
}

// ln N_n^2 with N_n^2 = sum_l |delta|^(2l) n!/((n-l)! (l!)^2), log-sum-exp
// so large n and |delta| stay representable
static double log_norm_sq(int n, double x) {
  if (n == 0 || x == 0.0) return 0.0;
  const double lx = std::log(x);
  const double lgn = std::lgamma(n + 1.0);
  double mx = 0.0;
  std::vector<double> terms(n + 1);
  for (int l = 0; l <= n; ++l) {
    terms[l] = l * lx + lgn - std::lgamma(n - l + 1.0) - 2.0 * std::lgamma(l + 1.0);
    mx = std::max(mx, terms[l]);
  }
  double acc = 0.0;
  for (double t : terms) acc += std::exp(t - mx);
  return mx + std::log(acc);
}

int TmsvAlphaRepr::recommended_n_max(Complex alpha, double r, double tail) {
  const double lam = std::tanh(r);
  const Complex delta = std::conj(alpha) * (1.0 - lam * lam) / lam;
  const double x = std::norm(delta);
  const double log_pref = -std::pow(std::sinh(r), 2) * x - 2.0 * std::log(std::cosh(r));
  double partial = 0.0;
  for (int n = 0; n < 4096; ++n) {
    partial += std::exp(log_pref + 2.0 * n * std::log(lam) + log_norm_sq(n, x));
    if (partial >= 1.0 - tail && n >= 4) return n;
  }
  throw TruncationRiskError("recommended_n_max: distribution did not converge");
}

TmsvAlphaRepr tmsv_alpha_repr(Complex alpha, double r, int n_max) {
  if (r <= 0) throw InvalidSqueezingError("tmsv_alpha_repr: r must be > 0");
  if (n_max < 0) throw InvalidLevelError("tmsv_alpha_repr: n_max must be >= 0");
  TmsvAlphaRepr rep;
  rep.alpha = alpha;
  rep.r = r;
  const double lam = std::tanh(r);
  rep.delta = std::conj(alpha) * (1.0 - lam * lam) / lam;
  rep.n_max = n_max;
  const double x = std::norm(rep.delta);
  const double log_pref = -std::pow(std::sinh(r), 2) * x / 2.0 - std::log(std::cosh(r));
  rep.norms.resize(n_max + 1);
  rep.amps.resize(n_max + 1);
  rep.probs.resize(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    const double lns2 = log_norm_sq(n, x);
    rep.norms[n] = std::exp(lns2 / 2.0);
    rep.amps[n] = std::exp(log_pref + n * std::log(lam) + lns2 / 2.0);
    rep.probs[n] = rep.amps[n] * rep.amps[n];
  }
  return rep;
}

MultiModeState tmsv_partner_closed(int n, Complex delta, int dim) {
  if (n < 0 || n >= dim) throw InvalidLevelError("tmsv_partner_closed: n >= dim");
  Vec v = Vec::Zero(dim);
  v[n] = 1.0;
  Complex term = 1.0;
  double fact_l = 1.0;
  for (int l = 1; l <= n; ++l) {
    term *= -std::conj(delta);
    fact_l *= l;
    v[n - l] = term * std::sqrt(falling(n, l)) / fact_l;
  }
  v /= v.norm();
  return MultiModeState({dim}, std::move(v));
}

MultiModeState tmsv_partner_series(int n, Complex alpha, double r, int l_max) {
  if (n < 0) throw InvalidLevelError("tmsv_partner_series: negative n");
  if (l_max < n || l_max < 1)
    throw InvalidDimensionError("tmsv_partner_series: l_max too small");
  const double lam = std::tanh(r);
  Vec v(l_max + 1);
  double lam_l = 1.0;
  for (int l = 0; l <= l_max; ++l) {
    v[l] = alpha_coeff(l, n, alpha) * lam_l;
    lam_l *= lam;
  }
  const double nv = v.norm();
  if (std::abs(v[l_max]) > 1e-12 * nv)
    throw TruncationRiskError("tmsv_partner_series: tail bound violated, raise l_max");
  v /= nv;
  return MultiModeState({l_max + 1}, std::move(v));
}

Complex superpos_amp(int sign, int n, Complex alpha) {
  if (sign != 1 && sign != -1) throw InvalidLevelError("superpos_amp: sign must be +-1");
  if (n < 0) throw InvalidLevelError("superpos_amp: negative n");
  const double g = std::exp(-std::norm(alpha) / 2.0);
  const double s = static_cast<double>(sign);
  if (n == 0) return g * (1.0 + s * std::conj(alpha)) / std::sqrt(2.0);
  const double par = (n % 2) ? -1.0 : 1.0;
  const Complex core = alpha - s * (static_cast<double>(n) - std::norm(alpha));
  return g * par * cpow(alpha, n - 1) * core / (std::sqrt(2.0) * sqrt_factorial(n));
}

double SuperposAlphaRepr::prob_sum() const {
  double s = 0.0;
  for (double p : probs) s += p;
  return s;
}

SuperposAlphaRepr superpos_alpha_repr(int sign, Complex alpha, int n_max) {
  if (sign != 1 && sign != -1) throw InvalidLevelError("superpos_alpha_repr: sign must be +-1");
  if (n_max < 0) throw InvalidLevelError("superpos_alpha_repr: n_max must be >= 0");
  SuperposAlphaRepr rep;
  rep.sign = sign;
  rep.alpha = alpha;
  rep.n_max = n_max;
  rep.amps.resize(n_max + 1);
  rep.probs.resize(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    rep.amps[n] = superpos_amp(sign, n, alpha);
    rep.probs[n] = std::norm(rep.amps[n]);
  }
  return rep;
}

}  // namespace dfock
