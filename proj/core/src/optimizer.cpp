#include "cvrep/optimizer.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace cvrep {

namespace {

LinkMetrics tuned_link(double eta, const AmplifierModel& model, double chi) {
  AmplifierModel m = model;
  m.gain = gain_tuned(eta, chi);
  return link_metrics(EcParams{eta, chi, m});
}

std::vector<double> log_grid(double lo, double hi, int points) {
  std::vector<double> g(static_cast<size_t>(points));
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < points; ++i) {
    g[static_cast<size_t>(i)] =
        std::exp(llo + (lhi - llo) * i / (points - 1));
  }
  return g;
}

// golden-section maximization on [lo, hi]
double golden_max(double lo, double hi, double tol,
                  const std::function<double(double)>& f) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

void SweepSpec::validate() const {
  if (!(chi_min >= 1e-6) || !(chi_max <= 0.99) || !(chi_min < chi_max)) {
    throw std::invalid_argument("chi interval must satisfy 1e-6 <= min < max <= 0.99");
  }
  if (coarse_points < 8) {
    throw std::invalid_argument("coarse scan needs at least 8 points");
  }
}

double two_link_fidelity(double eta, const AmplifierModel& model, double chi) {
  const LinkMetrics m = tuned_link(eta, model, chi);
  return m.fidelity * m.fidelity;
}

MaxFidelityResult max_fidelity_two_links(double eta, const AmplifierModel& model,
                                         const SweepSpec& spec) {
  spec.validate();
  if (!(eta > 0.0) || !(eta < 1.0)) {
    throw std::invalid_argument("eta must be in (0, 1)");
  }

  const auto f2 = [&](double chi) { return two_link_fidelity(eta, model, chi); };

  const std::vector<double> grid =
      log_grid(spec.chi_min, spec.chi_max, spec.coarse_points);
  std::vector<double> vals(grid.size());
  double best = -1.0;
  for (size_t i = 0; i < grid.size(); ++i) {
    vals[i] = f2(grid[i]);
    if (vals[i] > best) best = vals[i];
  }
  // smallest chi attaining the coarse max within tolerance
  constexpr double kFlatTol = 1e-9;
  size_t best_i = 0;
  while (vals[best_i] < best - kFlatTol) ++best_i;

  const double lo = best_i == 0 ? grid.front() : grid[best_i - 1];
  const double hi = best_i + 1 == grid.size() ? grid.back() : grid[best_i + 1];
  double chi_star = golden_max(lo, hi, spec.chi_tol, f2);
  double f_star = f2(chi_star);
  // a boundary supremum beats any interior refinement point
  if (vals[best_i] >= f_star) {
    chi_star = grid[best_i];
    f_star = vals[best_i];
  }

  MaxFidelityResult r;
  r.chi = chi_star;
  r.f_two_link = f_star;
  r.success_prob = tuned_link(eta, model, chi_star).success_prob;
  return r;
}

std::optional<FixedFidelityResult> success_at_fixed_fidelity(
    double eta, const AmplifierModel& model, double f_target,
    const SweepSpec& spec) {
  spec.validate();
  if (!(f_target > 0.0) || !(f_target < 1.0)) {
    throw std::invalid_argument("target fidelity must be in (0, 1)");
  }

  const auto h = [&](double chi) {
    return two_link_fidelity(eta, model, chi) - f_target;
  };

  const std::vector<double> grid =
      log_grid(spec.chi_min, spec.chi_max, spec.coarse_points);
  std::vector<double> vals(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) vals[i] = h(grid[i]);

  std::vector<double> roots;
  for (size_t i = 0; i + 1 < grid.size(); ++i) {
    if (vals[i] == 0.0) {
      roots.push_back(grid[i]);
      continue;
    }
    if (vals[i] * vals[i + 1] < 0.0) {
      double a = grid[i], b = grid[i + 1];
      double ha = vals[i];
      while (b - a > 1e-12) {
        const double mid = 0.5 * (a + b);
        const double hm = h(mid);
        if (hm == 0.0) {
          a = b = mid;
          break;
        }
        if (ha * hm < 0.0) {
          b = mid;
        } else {
          a = mid;
          ha = hm;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
  }
  if (vals.back() == 0.0) roots.push_back(grid.back());

  if (roots.empty()) return std::nullopt;

  FixedFidelityResult best;
  best.success_prob = -1.0;
  for (double chi : roots) {
    const double p = tuned_link(eta, model, chi).success_prob;
    if (p > best.success_prob) {
      best.chi = chi;
      best.success_prob = p;
    }
  }
  return best;
}

}  // namespace cvrep
