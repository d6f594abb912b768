#include "cvrep/amplifier.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cvrep {

namespace {

constexpr std::array<double, AmplifierModel::kMaxOrder + 1> kFactorial = {
    1.0, 1.0, 2.0, 6.0, 24.0, 120.0, 720.0, 5040.0, 40320.0};

}  // namespace

AmplifierModel AmplifierModel::scissors(int order, double gain) {
  AmplifierModel m{AmplifierKind::Scissors, order, gain};
  m.validate();
  return m;
}

AmplifierModel AmplifierModel::optimal(int order, double gain) {
  AmplifierModel m{AmplifierKind::Optimal, order, gain};
  m.validate();
  return m;
}

void AmplifierModel::validate() const {
  if (order < 1 || order > kMaxOrder) {
    throw std::invalid_argument("amplifier order must be in [1, " +
                                std::to_string(kMaxOrder) + "], got " +
                                std::to_string(order));
  }
  if (!(gain >= 0.0) || !std::isfinite(gain)) {
    throw std::invalid_argument("amplifier gain must be finite and >= 0");
  }
}

double AmplifierModel::coefficient(int n) const {
  validate();
  if (n < 0) throw std::invalid_argument("photon number index must be >= 0");
  if (n > order) return 0.0;

  const int big_n = order;
  if (kind == AmplifierKind::Scissors) {
    if (gain == 0.0) return n == 0 ? 1.0 : 0.0;
    // log space: -N/2 ln(1+g^2) + ln N! - ln (N-n)! - n ln N + n ln g
    const double log_t = -0.5 * big_n * std::log1p(gain * gain) +
                         std::log(kFactorial[big_n]) -
                         std::log(kFactorial[big_n - n]) -
                         n * std::log(static_cast<double>(big_n)) +
                         n * std::log(gain);
    return std::exp(log_t);
  }

  // Optimal: t_n = s_N g^n with s_N = g^{-N} for g >= 1, else 1.
  if (gain == 0.0) return n == 0 ? 1.0 : 0.0;
  const double log_prefactor =
      gain >= 1.0 ? -big_n * std::log(gain) : 0.0;
  return std::exp(log_prefactor + n * std::log(gain));
}

std::vector<double> AmplifierModel::coefficients() const {
  std::vector<double> out(static_cast<size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) out[static_cast<size_t>(n)] = coefficient(n);
  return out;
}

const char* to_string(AmplifierKind kind) {
  return kind == AmplifierKind::Scissors ? "scissors" : "optimal";
}

}  // namespace cvrep
