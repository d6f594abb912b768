#pragma once

#include <utility>
#include <vector>

#include "cvrep/amplifier.hpp"
#include "cvrep/errors.hpp"

namespace cvrep {

/// One error-correction link: EPR of strength chi distributed through a
/// channel of power transmission eta, distilled by the given amplifier,
/// then used for teleportation.
struct EcParams {
  double eta = 1.0;  // channel power transmission, (0, 1]
  double chi = 0.0;  // EPR entanglement strength, [0, 1)
  AmplifierModel amplifier;

  void validate() const;
};

/// c * sum_k a_k x^k * exp(-s x) with x = |w|^2, the canonical shape of the
/// measurement-averaged integrands. Integral over the complex w plane is
/// c * pi * sum_k a_k k! / s^{k+1}.
struct RadialPolyGaussian {
  double scale = 0.0;          // c >= 0
  double decay = 1.0;          // s > 0
  std::vector<double> coeffs;  // a_0..a_K

  double evaluate(double x) const;
  double integral() const;
  void validate() const;
};

struct LinkMetrics {
  double fidelity = 0.0;
  double success_prob = 0.0;
  double effective_gain = 0.0;  // lambda = g * chi * sqrt(eta)
};

/// g = eta^{-1/4} / chi, making the link's effective transmission sqrt(eta).
double gain_tuned(double eta, double chi);

/// (norm integrand, squared-target-overlap integrand), both in canonical
/// radial form with w = beta* + alpha.
std::pair<RadialPolyGaussian, RadialPolyGaussian> output_coefficient_poly(
    const EcParams& params);

/// Exact F and P via the moment identity; alpha-independent.
LinkMetrics link_metrics(const EcParams& params);

/// Printed single-scissor closed forms; regression oracle for the moment
/// engine. Requires a Scissors N=1 amplifier.
LinkMetrics closed_form_n1(const EcParams& params);

}  // namespace cvrep
