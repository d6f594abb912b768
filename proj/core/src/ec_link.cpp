#include "cvrep/ec_link.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cvrep {

namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

void EcParams::validate() const {
  if (!(eta > 0.0) || !(eta <= 1.0)) {
    throw std::invalid_argument("eta must be in (0, 1], got " +
                                std::to_string(eta));
  }
  if (!(chi >= 0.0) || !(chi < 1.0)) {
    throw std::invalid_argument("chi must be in [0, 1), got " +
                                std::to_string(chi));
  }
  amplifier.validate();
}

void RadialPolyGaussian::validate() const {
  if (!(decay > 0.0)) {
    throw ParameterRegimeError(
        "non-integrable radial integrand: decay exponent s = " +
        std::to_string(decay) + " is not positive");
  }
  if (!(scale >= 0.0)) {
    throw std::invalid_argument("radial integrand scale must be >= 0");
  }
}

double RadialPolyGaussian::evaluate(double x) const {
  double poly = 0.0;
  double xk = 1.0;
  for (double a : coeffs) {
    poly += a * xk;
    xk *= x;
  }
  return scale * poly * std::exp(-decay * x);
}

double RadialPolyGaussian::integral() const {
  validate();
  // moment identity: int e^{-s|w|^2} |w|^{2k} d^2w = pi k! / s^{k+1}
  double sum = 0.0;
  double kfact_over_sk1 = 1.0 / decay;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (k > 0) kfact_over_sk1 *= static_cast<double>(k) / decay;
    sum += coeffs[k] * kfact_over_sk1;
  }
  return scale * M_PI * sum;
}

double gain_tuned(double eta, double chi) {
  if (!(eta > 0.0) || !(eta <= 1.0)) {
    throw std::invalid_argument("eta must be in (0, 1]");
  }
  if (!(chi > 0.0) || !(chi < 1.0)) {
    throw std::invalid_argument(
        "gain tuning requires chi in (0, 1); the gain diverges at chi = 0");
  }
  return std::pow(eta, -0.25) / chi;
}

std::pair<RadialPolyGaussian, RadialPolyGaussian> output_coefficient_poly(
    const EcParams& params) {
  params.validate();
  const double eta = params.eta;
  const double chi = params.chi;
  const double g = params.amplifier.gain;
  const int big_n = params.amplifier.order;
  const std::vector<double> t = params.amplifier.coefficients();

  // Post-NLA number-basis amplitudes, w = beta* + alpha:
  //   c_n(w) = sqrt((1-chi^2)/pi) e^{|w|^2 (chi^2-1-eta chi^2)/2}
  //            t_n (sqrt(eta) chi w)^n / sqrt(n!)
  // Norm: sum_n |c_n|^2; overlap with <g sqrt(eta) chi (alpha+beta*)| picks
  // up e^{-|g sqrt(eta) chi w|^2 / 2} (g eta chi^2 |w|^2)^n / n! per term.
  const double s_norm = 1.0 - chi * chi + eta * chi * chi;
  const double lambda2 = g * g * eta * chi * chi;
  const double s_overlap = s_norm + lambda2;

  const double t0 = t[0];
  if (!(t0 > 0.0)) {
    throw ParameterRegimeError("amplifier vacuum coefficient vanished");
  }
  const double base_scale = (1.0 - chi * chi) / M_PI * t0 * t0;

  RadialPolyGaussian norm;
  norm.scale = base_scale;
  norm.decay = s_norm;
  norm.coeffs.resize(static_cast<size_t>(big_n) + 1);
  const double eta_chi2 = eta * chi * chi;
  for (int n = 0; n <= big_n; ++n) {
    const double r = t[static_cast<size_t>(n)] / t0;
    norm.coeffs[static_cast<size_t>(n)] =
        r * r * std::pow(eta_chi2, n) / factorial(n);
  }

  // overlap amplitude poly q(x) = sum_n (t_n/t_0) (g eta chi^2 x)^n / n!,
  // squared to a degree-2N polynomial.
  std::vector<double> q(static_cast<size_t>(big_n) + 1);
  const double g_eta_chi2 = g * eta_chi2;
  for (int n = 0; n <= big_n; ++n) {
    q[static_cast<size_t>(n)] =
        t[static_cast<size_t>(n)] / t0 * std::pow(g_eta_chi2, n) / factorial(n);
  }
  RadialPolyGaussian overlap;
  overlap.scale = base_scale;
  overlap.decay = s_overlap;
  overlap.coeffs.assign(2 * static_cast<size_t>(big_n) + 1, 0.0);
  for (size_t i = 0; i < q.size(); ++i) {
    for (size_t j = 0; j < q.size(); ++j) overlap.coeffs[i + j] += q[i] * q[j];
  }

  norm.validate();
  overlap.validate();
  return {norm, overlap};
}

LinkMetrics link_metrics(const EcParams& params) {
  const auto [norm, overlap] = output_coefficient_poly(params);
  const double p = norm.integral();
  const double f = overlap.integral() / p;
  LinkMetrics m;
  m.success_prob = p;
  m.fidelity = f;
  m.effective_gain =
      params.amplifier.gain * params.chi * std::sqrt(params.eta);
  return m;
}

LinkMetrics closed_form_n1(const EcParams& params) {
  params.validate();
  if (params.amplifier.kind != AmplifierKind::Scissors ||
      params.amplifier.order != 1) {
    throw std::invalid_argument(
        "closed_form_n1 requires a single-scissor amplifier");
  }
  const double eta = params.eta;
  const double c2 = params.chi * params.chi;
  const double c4 = c2 * c2;
  const double g2 = params.amplifier.gain * params.amplifier.gain;
  const double g4 = g2 * g2;

  const double p = (1.0 - c2) / (1.0 + g2) *
                   (1.0 + (-1.0 + eta + g2 * eta) * c2) /
                   ((1.0 + (-1.0 + eta) * c2) * (1.0 + (-1.0 + eta) * c2));

  const double num1 = 1.0 + (-1.0 + eta) * c2;
  const double num2 =
      1.0 + 2.0 * (-1.0 + eta + 2.0 * g2 * eta) * c2 +
      (1.0 + eta * (-2.0 + 4.0 * g2 * (-1.0 + eta) + eta + 5.0 * g4 * eta)) *
          c4;
  const double den = 1.0 + (-1.0 + eta + g2 * eta) * c2;
  const double f = num1 * num1 * num2 / (den * den * den * den);

  LinkMetrics m;
  m.success_prob = p;
  m.fidelity = f;
  m.effective_gain =
      params.amplifier.gain * params.chi * std::sqrt(params.eta);
  return m;
}

}  // namespace cvrep
