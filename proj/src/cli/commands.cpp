#include "cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "dfock/alpha.hpp"
#include "dfock/errors.hpp"
#include "dfock/selftest.hpp"

namespace dfock::cli {

namespace {

using nlohmann::json;

constexpr const char* kToolVersion = "dfock 0.1.0";

std::string timestamp_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
  return buf;
}

struct Table {
  std::string x_name;
  std::vector<double> x;
  std::vector<std::string> col_names;
  std::vector<std::vector<double>> cols;  // cols[c][row]
};

void write_table(const Table& tab, const OutputOptions& out, const json& meta_params,
                 const std::string& reference) {
  std::ofstream f(out.out_path);
  if (!f) throw SimError("cannot open output file: " + out.out_path);
  if (out.format == "csv") {
    f << tab.x_name;
    for (const auto& c : tab.col_names) f << "," << c;
    f << "\n";
    for (size_t i = 0; i < tab.x.size(); ++i) {
      f << format_sig(tab.x[i]);
      for (const auto& col : tab.cols) f << "," << format_sig(col[i]);
      f << "\n";
    }
  } else {
    json j;
    j["columns"] = json::array();
    j["columns"].push_back(tab.x_name);
    for (const auto& c : tab.col_names) j["columns"].push_back(c);
    j["rows"] = json::array();
    for (size_t i = 0; i < tab.x.size(); ++i) {
      json row = json::array();
      row.push_back(format_sig(tab.x[i]));
      for (const auto& col : tab.cols) row.push_back(format_sig(col[i]));
      j["rows"].push_back(row);
    }
    f << j.dump(2) << "\n";
  }

  json meta;
  meta["tool"] = kToolVersion;
  meta["output"] = out.out_path;
  meta["format"] = out.format;
  meta["parameters"] = meta_params;
  meta["reference"] = reference;
  if (out.timestamp) meta["timestamp"] = timestamp_now();
  std::ofstream mf(out.out_path + ".meta.json");
  mf << meta.dump(2) << "\n";
}

}  // namespace

std::string format_sig(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

int cmd_figure(const FigureArgs& args, const OutputOptions& out) {
  Table tab;
  json params;
  std::string ref;
  const std::vector<double> alpha_grid = {0.5, 1.0, 1.5, 2.0, 2.5, 3.0};

  switch (args.id) {
    case 1:
    case 2: {
      const int l = (args.id == 1) ? 1 : 3;
      tab.x_name = "n";
      for (int n = 0; n <= 30; ++n) tab.x.push_back(n);
      std::vector<double> as = args.alpha ? std::vector<double>{*args.alpha} : alpha_grid;
      for (double a : as) {
        std::vector<double> col;
        for (int n = 0; n <= 30; ++n) col.push_back(alpha_prob(l, n, a));
        tab.col_names.push_back("alpha=" + format_sig(a));
        tab.cols.push_back(std::move(col));
      }
      params["l"] = l;
      params["alpha"] = json(as);
      ref = "photon-number distribution over displaced number states";
      break;
    }
    case 3: {
      tab.x_name = "n";
      for (int n = 0; n <= 30; ++n) tab.x.push_back(n);
      std::vector<std::pair<double, double>> grid;
      if (args.delta && args.r)
        grid = {{*args.delta, *args.r}};
      else
        for (double d : {0.5, 1.0, 2.0})
          for (double r : {0.3, 0.8, 1.5}) grid.push_back({d, r});
      for (auto [d, r] : grid) {
        const Complex alpha = d * std::sinh(r) * std::cosh(r);
        TmsvAlphaRepr rep = tmsv_alpha_repr(alpha, r, 30);
        tab.col_names.push_back("delta=" + format_sig(d) + ";r=" + format_sig(r));
        tab.cols.push_back(rep.probs);
      }
      params["grid"] = "delta x r";
      ref = "TMSV distribution over correlated displaced number states";
      break;
    }
    case 4:
    case 5: {
      const int sign = (args.id == 4) ? +1 : -1;
      tab.x_name = "n";
      for (int n = 0; n <= 30; ++n) tab.x.push_back(n);
      std::vector<double> as = args.alpha ? std::vector<double>{*args.alpha} : alpha_grid;
      for (double a : as) {
        auto rep = superpos_alpha_repr(sign, a, 30);
        tab.col_names.push_back("alpha=" + format_sig(a));
        tab.cols.push_back(rep.probs);
      }
      params["sign"] = sign;
      params["alpha"] = json(as);
      ref = "vacuum/single-photon superposition over displaced number states";
      break;
    }
    case 7: {
      const double d = args.delta ? *args.delta : 1.0;
      tab.x_name = "s";
      std::vector<double> grid;
      for (double s = 0.02; s <= 1.0 + 1e-12; s += 0.02) grid.push_back(s);
      RatioTable rt = apd_ratio_curve(d, grid, args.k_max);
      tab.x = rt.s;
      for (int k = 2; k <= args.k_max; ++k) {
        std::vector<double> col;
        for (size_t i = 0; i < rt.s.size(); ++i) col.push_back(rt.ratios[i][k - 2]);
        tab.col_names.push_back("P1/P" + std::to_string(k));
        tab.cols.push_back(std::move(col));
      }
      params["delta"] = d;
      params["k_max"] = args.k_max;
      ref = "single-photon to higher-order heralding probability ratios";
      break;
    }
    default:
      std::cerr << "figure id must be one of 1,2,3,4,5,7\n";
      return 2;
  }
  write_table(tab, out, params, ref);
  return 0;
}

int cmd_matrix(double alpha, int cutoff, const OutputOptions& out) {
  AlphaMatrix m = alpha_matrix(alpha, cutoff);
  std::ofstream f(out.out_path);
  if (!f) throw SimError("cannot open output file: " + out.out_path);
  for (int n = 0; n < cutoff; ++n)
    f << (n ? "," : "") << "re_c" << n << ",im_c" << n;
  f << "\n";
  for (int l = 0; l < cutoff; ++l) {
    for (int n = 0; n < cutoff; ++n)
      f << (n ? "," : "") << format_sig(m.coeffs(l, n).real()) << ","
        << format_sig(m.coeffs(l, n).imag());
    f << "\n";
  }
  json meta;
  meta["tool"] = kToolVersion;
  meta["alpha"] = format_sig(alpha);
  meta["cutoff"] = cutoff;
  meta["prefactor"] = format_sig(m.prefactor);
  meta["guard_band"] = m.guard_band;
  meta["unitarity_residual"] = format_sig(m.unitarity_residual());
  meta["reference"] = "change of basis between Fock and displaced number states";
  if (out.timestamp) meta["timestamp"] = timestamp_now();
  std::ofstream mf(out.out_path + ".meta.json");
  mf << meta.dump(2) << "\n";
  return 0;
}

int cmd_gate(const GateArgs& args, const OutputOptions& out) {
  GateConfig cfg = args.config;
  Qubit2 control(args.a, args.b);
  const HeraldMode herald = args.apd ? HeraldMode::apd : HeraldMode::projector;

  GateReport rep;
  std::string ideal_desc;
  int n_used = args.n_measured;
  if (args.kind == "cz") {
    rep = run_cz(cfg, control, herald);
    ideal_desc = "control-sign image of the input pair over the coherent/fock product basis";
  } else if (args.kind == "hadamard") {
    if (!args.config_alpha_set) cfg.alpha = -std::abs(cfg.alpha);
    rep = run_hadamard_hybrid(cfg, control, herald);
    ideal_desc = "Hadamard image of the control amplitudes over the hybrid basis";
  } else if (args.kind == "macro-micro") {
    if (!args.config_alpha_set) cfg.alpha = -std::abs(cfg.alpha);
    if (n_used < 0) n_used = static_cast<int>(std::lround(cfg.gamma() * cfg.gamma()));
    rep = run_hadamard_macro_micro(cfg, control, n_used);
    ideal_desc = "parity-resolved Hadamard image on the microscopic qubit";
  } else if (args.kind == "reverse") {
    rep = run_reverse_hadamard(cfg, control);
    ideal_desc = "inverse-Hadamard coherent superposition";
  } else {
    std::cerr << "gate kind must be one of cz, hadamard, macro-micro, reverse\n";
    return 2;
  }

  json j;
  j["kind"] = rep.kind;
  j["params"]["s"] = format_sig(rep.config.s);
  j["params"]["bs_r"] = format_sig(rep.config.bs_r);
  j["params"]["phi"] = format_sig(rep.config.phi);
  j["params"]["alpha"] = format_sig(rep.config.alpha);
  j["params"]["gamma"] = format_sig(rep.config.gamma());
  j["params"]["cutoffs"] = rep.config.cutoffs;
  j["params"]["control_a"] = {format_sig(rep.control.a.real()), format_sig(rep.control.a.imag())};
  j["params"]["control_b"] = {format_sig(rep.control.b.real()), format_sig(rep.control.b.imag())};
  j["params"]["herald"] = args.apd ? "apd" : "projector";
  if (args.kind == "macro-micro") j["params"]["n_measured"] = n_used;
  j["success_probability"] = format_sig(rep.success_probability);
  j["fidelity"] = format_sig(rep.fidelity);
  j["ideal_description"] = ideal_desc;
  j["warnings"] = rep.warnings;
  j["tool"] = kToolVersion;
  if (out.timestamp) j["timestamp"] = timestamp_now();

  std::ofstream f(out.out_path);
  if (!f) throw SimError("cannot open output file: " + out.out_path);
  f << j.dump(2) << "\n";
  return 0;
}

int cmd_selftest() { return run_selftest(std::cout) ? 0 : 1; }

}  // namespace dfock::cli
