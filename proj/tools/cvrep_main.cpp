// Command-line front end: figure/table reproduction as CSV, single-link
// evaluation, custom sweeps, and the cross-validation suite.

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cvrep/oracle.hpp"
#include "cvrep/reports.hpp"

namespace {

using namespace cvrep;
using reports::GridSpec;

AmplifierModel make_model(const std::string& kind, int order, double gain) {
  if (kind == "scissors") return AmplifierModel::scissors(order, gain);
  if (kind == "optimal") return AmplifierModel::optimal(order, gain);
  throw CLI::ValidationError("--kind must be 'scissors' or 'optimal'");
}

void write_output(const std::string& csv, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << csv;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + out_path);
  }
  out << csv;
  if (!out) {
    throw std::runtime_error("write failed: " + out_path);
  }
}

std::string fmt(double v) { return reports::format_value(v); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Continuous-variable repeater performance calculator"};
  app.require_subcommand(1);
  app.set_config("--config");

  std::string out_path;
  std::string grid_text = "0.001:0.9:60:log";
  std::string kind = "scissors";
  int order = 1;
  int links = 2;
  double eta = 0.01;
  double chi = 0.1;
  double gain = 0.0;
  bool use_gain_tuned = false;
  bool with_oracle = false;
  double f_target = 0.99;
  double atten = 0.2;

  auto* fig3 = app.add_subcommand(
      "fig3", "Max two-link fidelity vs effective transmission (CSV)");
  fig3->add_option("--grid", grid_text, "eta grid start:stop:points:log|lin");
  fig3->add_option("--out", out_path, "output CSV path (default stdout)");

  auto* fig4 = app.add_subcommand(
      "fig4", "Success probability at fixed two-link fidelity (CSV)");
  fig4->add_option("--grid", grid_text, "eta grid start:stop:points:log|lin");
  fig4->add_option("--f-target", f_target, "two-link composite fidelity target");
  fig4->add_option("--out", out_path, "output CSV path (default stdout)");

  auto* fig5 = app.add_subcommand(
      "fig5", "Chain fidelity bound vs effective transmission at fixed chi (CSV)");
  fig5->add_option("--grid", grid_text, "eta grid start:stop:points:log|lin");
  fig5->add_option("--chi", chi, "entanglement strength");
  fig5->add_option("--out", out_path, "output CSV path (default stdout)");

  auto* table1 = app.add_subcommand(
      "table1", "Distance table: 200/400/800 km, one- and two-scissor columns");
  table1->add_option("--atten-db-per-km", atten, "fiber attenuation");
  table1->add_option("--chi", chi, "entanglement strength assumption");
  table1->add_option("--out", out_path, "also write CSV to this path");

  auto* link = app.add_subcommand("link", "Evaluate one error-correction link");
  link->add_option("--eta", eta, "channel power transmission")->required();
  link->add_option("--chi", chi, "entanglement strength")->required();
  link->add_option("--gain", gain, "NLA gain");
  link->add_flag("--gain-tuned", use_gain_tuned,
                 "set gain to eta^{-1/4}/chi");
  link->add_option("--kind", kind, "amplifier kind: scissors|optimal");
  link->add_option("--order", order, "truncation order N");
  link->add_flag("--oracle", with_oracle, "cross-check with the Fock oracle");

  auto* sweep = app.add_subcommand(
      "sweep", "Link and chain metrics over an eta grid at fixed chi (CSV)");
  sweep->add_option("--grid", grid_text, "eta grid start:stop:points:log|lin");
  sweep->add_option("--chi", chi, "entanglement strength");
  sweep->add_option("--gain", gain, "NLA gain (default: gain-tuned)");
  sweep->add_option("--kind", kind, "amplifier kind: scissors|optimal");
  sweep->add_option("--order", order, "truncation order N");
  sweep->add_option("--links", links, "chain link count M (power of two)");
  sweep->add_option("--out", out_path, "output CSV path (default stdout)");

  auto* verify = app.add_subcommand(
      "verify", "Run the cross-validation suite (exit 0 iff all checks pass)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (fig3->parsed()) {
      write_output(reports::fig3_csv(reports::fig3_rows(GridSpec::parse(grid_text))),
                   out_path);
    } else if (fig4->parsed()) {
      write_output(
          reports::fig4_csv(reports::fig4_rows(GridSpec::parse(grid_text), f_target)),
          out_path);
    } else if (fig5->parsed()) {
      write_output(reports::fig5_csv(reports::fig5_rows(GridSpec::parse(grid_text),
                                                        chi, {2, 4, 8})),
                   out_path);
    } else if (table1->parsed()) {
      const FiberModel fiber{atten};
      const auto rows = reports::table1_rows(fiber, chi);
      std::printf("%-10s %-3s %-12s %-22s %-22s\n", "distance", "M", "eta_link",
                  "one QS (F_M, P_M)", "two QS (F_M, P_M)");
      for (const auto& r : rows) {
        std::printf("%-10s %-3d %-12s (%.4f, %.3e)      (%.4f, %.3e)\n",
                    (fmt(r.distance_km) + " km").c_str(), r.links,
                    fmt(r.eta_link).c_str(), r.f_one_qs, r.p_one_qs,
                    r.f_two_qs, r.p_two_qs);
      }
      if (!out_path.empty()) write_output(reports::table1_csv(rows), out_path);
    } else if (link->parsed()) {
      double g = gain;
      if (use_gain_tuned) {
        g = gain_tuned(eta, chi);
      } else if (!(g > 0.0)) {
        throw CLI::ValidationError("provide --gain > 0 or --gain-tuned");
      }
      const EcParams params{eta, chi, make_model(kind, order, g)};
      const LinkMetrics m = link_metrics(params);
      std::cout << "gain     = " << fmt(g) << '\n'
                << "F        = " << fmt(m.fidelity) << '\n'
                << "P        = " << fmt(m.success_prob) << '\n'
                << "lambda   = " << fmt(m.effective_gain) << '\n';
      if (with_oracle) {
        const LinkMetrics q = oracle::quadrature_metrics(params, {0.5, 0.0});
        std::cout << "oracle F = " << fmt(q.fidelity) << '\n'
                  << "oracle P = " << fmt(q.success_prob) << '\n';
      }
    } else if (sweep->parsed()) {
      const GridSpec grid = GridSpec::parse(grid_text);
      std::string csv = "eta,chi,gain,F,P,lambda,M,F_M,P_M\n";
      for (double e : grid.values()) {
        const double g = gain > 0.0 ? gain : gain_tuned(e, chi);
        const EcParams params{e, chi, make_model(kind, order, g)};
        const LinkMetrics m = link_metrics(params);
        const RepeaterChain chain = compose(m, links);
        csv += fmt(e) + ',' + fmt(chi) + ',' + fmt(g) + ',' + fmt(m.fidelity) +
               ',' + fmt(m.success_prob) + ',' + fmt(m.effective_gain) + ',' +
               std::to_string(links) + ',' + fmt(chain.f_bound) + ',' +
               fmt(chain.p_total) + '\n';
      }
      write_output(csv, out_path);
    } else if (verify->parsed()) {
      bool all_ok = true;
      for (const auto& check : reports::run_verification()) {
        std::cout << (check.passed ? "[PASS] " : "[FAIL] ") << check.name
                  << " (" << check.detail << ")\n";
        all_ok = all_ok && check.passed;
      }
      return all_ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
