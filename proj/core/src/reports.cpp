#include "cvrep/reports.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "cvrep/oracle.hpp"

namespace cvrep {
namespace reports {

namespace {

const std::vector<AmplifierModel> kFig3Models = {
    AmplifierModel::scissors(1, 1.0), AmplifierModel::scissors(2, 1.0),
    AmplifierModel::scissors(3, 1.0), AmplifierModel::optimal(2, 1.0)};

const std::vector<AmplifierModel> kFig4Models = {
    AmplifierModel::scissors(1, 1.0), AmplifierModel::scissors(2, 1.0),
    AmplifierModel::scissors(3, 1.0)};

}  // namespace

std::vector<double> GridSpec::values() const {
  if (points < 1) throw std::invalid_argument("grid needs at least 1 point");
  if (!(start > 0.0) || !(stop >= start)) {
    throw std::invalid_argument("grid requires 0 < start <= stop");
  }
  std::vector<double> v(static_cast<size_t>(points));
  if (points == 1) {
    v[0] = start;
    return v;
  }
  if (log_spaced) {
    const double l0 = std::log(start), l1 = std::log(stop);
    for (int i = 0; i < points; ++i) {
      v[static_cast<size_t>(i)] = std::exp(l0 + (l1 - l0) * i / (points - 1));
    }
  } else {
    for (int i = 0; i < points; ++i) {
      v[static_cast<size_t>(i)] = start + (stop - start) * i / (points - 1);
    }
  }
  return v;
}

GridSpec GridSpec::parse(const std::string& text) {
  GridSpec g;
  char mode[8] = {0};
  if (std::sscanf(text.c_str(), "%lf:%lf:%d:%7s", &g.start, &g.stop, &g.points,
                  mode) != 4) {
    throw std::invalid_argument("grid must be start:stop:points:log|lin, got '" +
                                text + "'");
  }
  const std::string m(mode);
  if (m == "log") {
    g.log_spaced = true;
  } else if (m == "lin") {
    g.log_spaced = false;
  } else {
    throw std::invalid_argument("grid spacing must be 'log' or 'lin', got '" +
                                m + "'");
  }
  return g;
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::vector<Fig3Row> fig3_rows(const GridSpec& grid) {
  std::vector<Fig3Row> rows;
  for (double eta : grid.values()) {
    for (const AmplifierModel& model : kFig3Models) {
      const MaxFidelityResult r = max_fidelity_two_links(eta, model);
      rows.push_back({eta, model.kind, model.order, r.f_two_link, r.chi,
                      r.success_prob});
    }
  }
  return rows;
}

std::vector<Fig4Row> fig4_rows(const GridSpec& grid, double f_target) {
  std::vector<Fig4Row> rows;
  for (double eta : grid.values()) {
    for (const AmplifierModel& model : kFig4Models) {
      const auto r = success_at_fixed_fidelity(eta, model, f_target);
      if (r) {
        rows.push_back({eta, model.kind, model.order, true, r->chi,
                        r->success_prob});
      } else {
        rows.push_back({eta, model.kind, model.order, false, 0.0, 0.0});
      }
    }
  }
  return rows;
}

std::vector<Fig5Row> fig5_rows(const GridSpec& grid, double chi,
                               const std::vector<int>& link_counts) {
  std::vector<Fig5Row> rows;
  for (double eta : grid.values()) {
    AmplifierModel model = AmplifierModel::scissors(1, gain_tuned(eta, chi));
    const LinkMetrics per_link = link_metrics(EcParams{eta, chi, model});
    for (int m : link_counts) {
      const RepeaterChain chain = compose(per_link, m);
      rows.push_back({eta, m, chain.f_bound, chain.p_total});
    }
  }
  return rows;
}

std::vector<Table1Row> table1_rows(const FiberModel& fiber, double chi) {
  constexpr double kSegmentKm = 100.0;
  const double eta_link = fiber.transmission(kSegmentKm);
  const double g = gain_tuned(eta_link, chi);
  const LinkMetrics one =
      link_metrics(EcParams{eta_link, chi, AmplifierModel::scissors(1, g)});
  const LinkMetrics two =
      link_metrics(EcParams{eta_link, chi, AmplifierModel::scissors(2, g)});

  std::vector<Table1Row> rows;
  for (int m : {2, 4, 8}) {
    const RepeaterChain c1 = compose(one, m);
    const RepeaterChain c2 = compose(two, m);
    rows.push_back({kSegmentKm * m, m, eta_link, c1.f_bound, c1.p_total,
                    c2.f_bound, c2.p_total});
  }
  return rows;
}

std::string fig3_csv(const std::vector<Fig3Row>& rows) {
  std::ostringstream out;
  out << "eta_eff,kind,N,F_two_link_max,argmax_chi,P_at_argmax\n";
  for (const Fig3Row& r : rows) {
    out << format_value(r.eta_eff) << ',' << to_string(r.kind) << ',' << r.order
        << ',' << format_value(r.f_two_link_max) << ','
        << format_value(r.argmax_chi) << ',' << format_value(r.p_at_argmax)
        << '\n';
  }
  return out.str();
}

std::string fig4_csv(const std::vector<Fig4Row>& rows) {
  std::ostringstream out;
  out << "eta_eff,kind,N,status,chi,P\n";
  for (const Fig4Row& r : rows) {
    out << format_value(r.eta_eff) << ',' << to_string(r.kind) << ',' << r.order
        << ',';
    if (r.feasible) {
      out << "ok," << format_value(r.chi) << ','
          << format_value(r.success_prob) << '\n';
    } else {
      out << "infeasible,,\n";
    }
  }
  return out.str();
}

std::string fig5_csv(const std::vector<Fig5Row>& rows) {
  std::ostringstream out;
  out << "eta_eff,M,F_M,P_M\n";
  for (const Fig5Row& r : rows) {
    out << format_value(r.eta_eff) << ',' << r.links << ','
        << format_value(r.f_bound) << ',' << format_value(r.p_total) << '\n';
  }
  return out.str();
}

std::string table1_csv(const std::vector<Table1Row>& rows) {
  std::ostringstream out;
  out << "distance_km,M,eta_link,F_M_one_qs,P_M_one_qs,F_M_two_qs,P_M_two_qs\n";
  for (const Table1Row& r : rows) {
    out << format_value(r.distance_km) << ',' << r.links << ','
        << format_value(r.eta_link) << ',' << format_value(r.f_one_qs) << ','
        << format_value(r.p_one_qs) << ',' << format_value(r.f_two_qs) << ','
        << format_value(r.p_two_qs) << '\n';
  }
  return out.str();
}

namespace {

void add_check(std::vector<VerifyCheck>& out, const std::string& name,
               bool pass, const std::string& detail) {
  out.push_back({name, pass, detail});
}

double rel_diff(double a, double b) {
  const double denom = std::max(std::abs(a), std::abs(b));
  return denom == 0.0 ? 0.0 : std::abs(a - b) / denom;
}

}  // namespace

std::vector<VerifyCheck> run_verification() {
  std::vector<VerifyCheck> checks;

  // moment identity against the factorial closed form
  {
    double worst = 0.0;
    for (double s : {0.5, 1.0, 2.0}) {
      double kfact = 1.0;
      for (int k = 0; k <= 12; ++k) {
        if (k > 0) kfact *= k;
        RadialPolyGaussian rpg;
        rpg.scale = 1.0;
        rpg.decay = s;
        rpg.coeffs.assign(static_cast<size_t>(k) + 1, 0.0);
        rpg.coeffs.back() = 1.0;
        const double expected = M_PI * kfact / std::pow(s, k + 1);
        worst = std::max(worst, rel_diff(rpg.integral(), expected));
      }
    }
    add_check(checks, "moment identity (k <= 12)", worst <= 1e-12,
              "worst rel diff " + format_value(worst));
  }

  // moment engine vs printed single-scissor closed forms
  {
    double worst = 0.0;
    for (double eta : {0.01, 0.1, 0.5, 0.9}) {
      for (double chi : {0.05, 0.1, 0.3, 0.6}) {
        for (double g : {0.5, 1.0, 3.0, 10.0, 31.6}) {
          const EcParams p{eta, chi, AmplifierModel::scissors(1, g)};
          const LinkMetrics engine = link_metrics(p);
          const LinkMetrics closed = closed_form_n1(p);
          worst = std::max(worst, rel_diff(engine.fidelity, closed.fidelity));
          worst = std::max(worst,
                           rel_diff(engine.success_prob, closed.success_prob));
        }
      }
    }
    add_check(checks, "engine vs closed form (80-point grid)", worst <= 1e-10,
              "worst rel diff " + format_value(worst));
  }

  // oracle vs engine on representative parameter sets
  {
    double worst = 0.0;
    const std::vector<EcParams> sets = {
        {0.01, 0.1, AmplifierModel::scissors(1, gain_tuned(0.01, 0.1))},
        {0.25, 0.3, AmplifierModel::scissors(2, 2.0)},
        {0.1, 0.2, AmplifierModel::scissors(3, gain_tuned(0.1, 0.2))},
        {0.1, 0.2, AmplifierModel::optimal(2, gain_tuned(0.1, 0.2))},
    };
    for (const EcParams& p : sets) {
      const LinkMetrics engine = link_metrics(p);
      const LinkMetrics quad = oracle::quadrature_metrics(p, {0.5, 0.0});
      worst = std::max(worst, rel_diff(engine.fidelity, quad.fidelity));
      worst = std::max(worst, rel_diff(engine.success_prob, quad.success_prob));
    }
    add_check(checks, "oracle vs engine (4 parameter sets)", worst <= 1e-6,
              "worst rel diff " + format_value(worst));
  }

  // alpha independence of the oracle
  {
    const EcParams p{0.1, 0.2,
                     AmplifierModel::scissors(1, gain_tuned(0.1, 0.2))};
    const LinkMetrics a0 = oracle::quadrature_metrics(p, {0.0, 0.0});
    const LinkMetrics a1 = oracle::quadrature_metrics(p, {1.0, 0.5});
    const double worst = std::max(rel_diff(a0.fidelity, a1.fidelity),
                                  rel_diff(a0.success_prob, a1.success_prob));
    add_check(checks, "alpha independence", worst <= 1e-6,
              "worst rel diff " + format_value(worst));
  }

  // composition identity P^{log2 M} = M^{log2 P}
  {
    double worst = 0.0;
    for (double p : {0.9, 0.5, 1e-3}) {
      for (int m : {2, 4, 8, 16}) {
        const double lhs = std::pow(p, std::log2(static_cast<double>(m)));
        const double rhs = std::pow(static_cast<double>(m), std::log2(p));
        worst = std::max(worst, rel_diff(lhs, rhs));
      }
    }
    add_check(checks, "P^{log2 M} = M^{log2 P}", worst <= 1e-12,
              "worst rel diff " + format_value(worst));
  }

  // gain tuning gives effective amplitude gain eta^{1/4}
  {
    double worst = 0.0;
    for (double eta : {0.01, 0.1, 0.5, 0.9}) {
      for (double chi : {0.05, 0.1, 0.3}) {
        const double lambda =
            gain_tuned(eta, chi) * chi * std::sqrt(eta);
        worst = std::max(worst, rel_diff(lambda, std::pow(eta, 0.25)));
      }
    }
    add_check(checks, "gain-tuned lambda = eta^{1/4}", worst <= 1e-12,
              "worst rel diff " + format_value(worst));
  }

  return checks;
}

}  // namespace reports
}  // namespace cvrep
