#pragma once

#include <string>
#include <vector>

#include "cvrep/optimizer.hpp"
#include "cvrep/repeater.hpp"

namespace cvrep {
namespace reports {

/// Evaluation grid, parsed from "start:stop:points:log|lin".
struct GridSpec {
  double start = 0.001;
  double stop = 0.9;
  int points = 60;
  bool log_spaced = true;

  std::vector<double> values() const;
  static GridSpec parse(const std::string& text);
};

/// 12-significant-digit formatting shared by every CSV writer.
std::string format_value(double v);

struct Fig3Row {
  double eta_eff;
  AmplifierKind kind;
  int order;
  double f_two_link_max;
  double argmax_chi;
  double p_at_argmax;
};

struct Fig4Row {
  double eta_eff;
  AmplifierKind kind;
  int order;
  bool feasible;
  double chi;           // valid when feasible
  double success_prob;  // valid when feasible
};

struct Fig5Row {
  double eta_eff;
  int links;
  double f_bound;
  double p_total;
};

struct Table1Row {
  double distance_km;
  int links;
  double eta_link;
  double f_one_qs;
  double p_one_qs;
  double f_two_qs;
  double p_two_qs;
};

/// Maximum two-link fidelity curves: Scissors N=1,2,3 and Optimal N=2,
/// grid-major row order.
std::vector<Fig3Row> fig3_rows(const GridSpec& grid);

/// Success probability at fixed two-link fidelity, Scissors N=1,2,3.
std::vector<Fig4Row> fig4_rows(const GridSpec& grid, double f_target);

/// Chain fidelity bound at fixed chi (single scissor, gain-tuned) for the
/// given link counts.
std::vector<Fig5Row> fig5_rows(const GridSpec& grid, double chi,
                               const std::vector<int>& link_counts);

/// Distance table at chi = 0.1: 100 km segments, M = 2, 4, 8 links,
/// one- and two-scissor columns.
std::vector<Table1Row> table1_rows(const FiberModel& fiber, double chi = 0.1);

std::string fig3_csv(const std::vector<Fig3Row>& rows);
std::string fig4_csv(const std::vector<Fig4Row>& rows);
std::string fig5_csv(const std::vector<Fig5Row>& rows);
std::string table1_csv(const std::vector<Table1Row>& rows);

struct VerifyCheck {
  std::string name;
  bool passed;
  std::string detail;
};

/// Cross-validation suite: moment identity, engine vs closed form, oracle
/// agreement, alpha independence, composition identities.
std::vector<VerifyCheck> run_verification();

}  // namespace reports
}  // namespace cvrep
