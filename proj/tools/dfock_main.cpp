#include <iostream>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "dfock/errors.hpp"

using namespace dfock;

int main(int argc, char** argv) {
  CLI::App app{"displaced-Fock state toolkit: figure data, basis matrices, gate simulations"};
  app.set_config("--config", "", "key=value config file ('#' comments; subcommand options go under a [subcommand] section)");
  app.fallthrough();
  app.require_subcommand(1);

  cli::OutputOptions out;
  bool no_timestamp = false;

  // figure
  cli::FigureArgs fig;
  double fig_alpha = 0, fig_delta = 0, fig_r = 0;
  auto* cfig = app.add_subcommand("figure", "write probability-distribution curves");
  cfig->add_option("--id", fig.id, "figure id: 1,2,3,4,5,7")->required();
  auto* oal = cfig->add_option("--alpha", fig_alpha, "displacement amplitude (figs 1,2,4,5)");
  auto* ode = cfig->add_option("--delta", fig_delta, "displacement-ratio parameter (figs 3,7)");
  auto* ora = cfig->add_option("--r", fig_r, "squeezing parameter (fig 3)");
  cfig->add_option("--kmax", fig.k_max, "highest ratio order (fig 7)");
  cfig->add_option("--out", out.out_path, "output path")->required();
  cfig->add_option("--format", out.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cfig->add_flag("--no-timestamp", no_timestamp, "omit timestamp from metadata");

  // matrix
  double mat_alpha = 0.0;
  int mat_cutoff = 0;
  auto* cmat = app.add_subcommand("matrix", "write the Fock/displaced-basis coefficient matrix");
  cmat->add_option("--alpha", mat_alpha, "displacement amplitude")->required();
  cmat->add_option("--cutoff", mat_cutoff, "matrix cutoff")->required()
      ->check(CLI::PositiveNumber);
  cmat->add_option("--out", out.out_path, "output path")->required();
  cmat->add_flag("--no-timestamp", no_timestamp, "omit timestamp from metadata");

  // gate
  cli::GateArgs gate;
  gate.config = GateConfig::reference_cz();
  double a_re = 1, a_im = 0, b_re = 0, b_im = 0;
  auto* cgate = app.add_subcommand("gate", "run a post-selected gate simulation");
  cgate->add_option("--kind", gate.kind, "cz | hadamard | macro-micro | reverse")->required();
  cgate->add_option("--s", gate.config.s, "TMSV squeezing");
  cgate->add_option("--bs-r", gate.config.bs_r, "unbalanced splitter reflectivity");
  cgate->add_option("--phi", gate.config.phi, "splitter phase");
  auto* oa = cgate->add_option("--alpha", gate.config.alpha, "displacement scale (signed)");
  cgate->add_option("--cutoffs", gate.config.cutoffs, "per-mode cutoffs (4 values)")
      ->expected(4);
  cgate->add_option("--a-re", a_re, "control amplitude a, real part");
  cgate->add_option("--a-im", a_im, "control amplitude a, imag part");
  cgate->add_option("--b-re", b_re, "control amplitude b, real part");
  cgate->add_option("--b-im", b_im, "control amplitude b, imag part");
  cgate->add_option("--n-measured", gate.n_measured, "photon count for macro-micro herald");
  cgate->add_flag("--apd", gate.apd, "use the on/off detector model for the herald");
  cgate->add_option("--out", out.out_path, "output path")->required();
  cgate->add_flag("--no-timestamp", no_timestamp, "omit timestamp from metadata");

  // selftest
  app.add_subcommand("selftest", "run the oracle-equivalence and invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  out.timestamp = !no_timestamp;
  try {
    if (cfig->parsed()) {
      if (*oal) fig.alpha = fig_alpha;
      if (*ode) fig.delta = fig_delta;
      if (*ora) fig.r = fig_r;
      return cli::cmd_figure(fig, out);
    }
    if (cmat->parsed()) return cli::cmd_matrix(mat_alpha, mat_cutoff, out);
    if (cgate->parsed()) {
      gate.config_alpha_set = static_cast<bool>(*oa);
      gate.a = Complex(a_re, a_im);
      gate.b = Complex(b_re, b_im);
      return cli::cmd_gate(gate, out);
    }
    return cli::cmd_selftest();
  } catch (const TruncationRiskError& e) {
    std::cerr << "numerical guard: " << e.what() << "\n";
    return 3;
  } catch (const ZeroProbabilityError& e) {
    std::cerr << "numerical guard: " << e.what() << "\n";
    return 3;
  } catch (const SimError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
