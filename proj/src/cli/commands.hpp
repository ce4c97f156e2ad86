#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dfock/gates.hpp"

namespace dfock::cli {

struct OutputOptions {
  std::string out_path;
  std::string format = "csv";  // csv | json
  bool timestamp = true;
};

struct FigureArgs {
  int id = 1;
  std::optional<double> alpha;  // figures 1,2,4,5
  std::optional<double> delta;  // figure 3, 7
  std::optional<double> r;      // figure 3
  int k_max = 7;                // figure 7
};

struct GateArgs {
  std::string kind = "cz";  // cz | hadamard | macro-micro | reverse
  GateConfig config;
  bool config_alpha_set = false;
  Complex a{1.0, 0.0};
  Complex b{0.0, 0.0};
  int n_measured = -1;  // macro-micro; -1 = nearest to gamma^2
  bool apd = false;
};

std::string format_sig(double v);  // 12 significant digits

int cmd_figure(const FigureArgs& args, const OutputOptions& out);
int cmd_matrix(double alpha, int cutoff, const OutputOptions& out);
int cmd_gate(const GateArgs& args, const OutputOptions& out);
int cmd_selftest();

}  // namespace dfock::cli
