#pragma once

#include <optional>

#include "cvrep/ec_link.hpp"

namespace cvrep {

struct SweepSpec {
  double chi_min = 1e-6;
  double chi_max = 0.99;
  int coarse_points = 64;   // log-spaced scan before refinement
  double chi_tol = 1e-9;    // golden-section / bisection resolution

  void validate() const;
};

struct MaxFidelityResult {
  double f_two_link = 0.0;  // max over chi of F(eta, chi, g_tuned)^2
  double chi = 0.0;         // smallest chi attaining the max within tol
  double success_prob = 0.0;
};

struct FixedFidelityResult {
  double chi = 0.0;
  double success_prob = 0.0;
};

/// Two-link composite fidelity F(eta, chi, gain_tuned(eta, chi))^2 at one chi.
double two_link_fidelity(double eta, const AmplifierModel& model, double chi);

/// Maximize the two-link composite fidelity over chi under gain tuning.
/// eta is the per-link channel transmission (equal to the chain's effective
/// transmission).
MaxFidelityResult max_fidelity_two_links(double eta, const AmplifierModel& model,
                                         const SweepSpec& spec = {});

/// Solve two-link composite fidelity == f_target for chi; empty when the
/// target exceeds the achievable maximum. Multiple roots resolve to the one
/// with larger success probability.
std::optional<FixedFidelityResult> success_at_fixed_fidelity(
    double eta, const AmplifierModel& model, double f_target,
    const SweepSpec& spec = {});

}  // namespace cvrep
