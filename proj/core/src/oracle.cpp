#include "cvrep/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cvrep {
namespace oracle {

namespace {

std::vector<double> log_factorials(int n_max) {
  std::vector<double> lg(static_cast<size_t>(n_max) + 1, 0.0);
  for (int n = 2; n <= n_max; ++n) {
    lg[static_cast<size_t>(n)] = lg[static_cast<size_t>(n - 1)] + std::log(n);
  }
  return lg;
}

double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b *= static_cast<double>(n - k + i) / i;
  return b;
}

// L_n^{(d)}(x) via the finite sum, exact for small n.
double laguerre_sum(int n, int d, double x) {
  double acc = 0.0;
  double xi = 1.0;  // x^i / i!
  for (int i = 0; i <= n; ++i) {
    const double term = binom(n + d, n - i) * xi;
    acc += (i % 2 == 0) ? term : -term;
    xi *= x / (i + 1);
  }
  return acc;
}

// Photon-number support needed to hold a state of low excitation displaced
// by delta, with the lost norm well under 1e-12.
int displaced_support(double delta_abs, int low_order) {
  const double x = delta_abs * delta_abs;
  return static_cast<int>(std::ceil(x + 8.0 * std::sqrt(x + 1.0) + 20.0)) +
         low_order;
}

// out_m = sum_{n<=low_order} <m|D(delta)|n> v_n, for v supported on
// 0..low_order. Only the needed columns of D are formed.
FockVector apply_displacement_columns(Complex delta, const FockVector& v,
                                      int low_order, int n_max) {
  FockVector out(static_cast<size_t>(n_max) + 1, Complex(0.0, 0.0));
  if (std::abs(delta) == 0.0) {
    for (int n = 0; n <= low_order && n <= n_max; ++n) {
      out[static_cast<size_t>(n)] = v[static_cast<size_t>(n)];
    }
    return out;
  }

  const double x = std::norm(delta);
  const double log_abs = std::log(std::abs(delta));
  const Complex phase = delta / std::abs(delta);
  const Complex neg_conj_phase = -std::conj(delta) / std::abs(delta);
  const std::vector<double> lg = log_factorials(std::max(n_max, low_order));

  for (int n = 0; n <= low_order; ++n) {
    const Complex vn = v[static_cast<size_t>(n)];
    if (vn == Complex(0.0, 0.0)) continue;
    Complex ph_up(1.0, 0.0);
    for (int m = n; m <= n_max; ++m) {
      const int d = m - n;
      const double mag =
          std::exp(-0.5 * x +
                   0.5 * (lg[static_cast<size_t>(n)] - lg[static_cast<size_t>(m)]) +
                   d * log_abs);
      out[static_cast<size_t>(m)] += vn * mag * ph_up * laguerre_sum(n, d, x);
      ph_up *= phase;
    }
    Complex ph_dn = neg_conj_phase;
    for (int m = n - 1; m >= 0; --m) {
      const int d = n - m;
      const double mag =
          std::exp(-0.5 * x +
                   0.5 * (lg[static_cast<size_t>(m)] - lg[static_cast<size_t>(n)]) +
                   d * log_abs);
      out[static_cast<size_t>(m)] += vn * mag * ph_dn * laguerre_sum(m, d, x);
      ph_dn *= neg_conj_phase;
    }
  }
  return out;
}

}  // namespace

FockVector coherent_state(Complex gamma, int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  FockVector c(static_cast<size_t>(n_max) + 1);
  c[0] = std::exp(-0.5 * std::norm(gamma));
  for (int n = 1; n <= n_max; ++n) {
    c[static_cast<size_t>(n)] =
        c[static_cast<size_t>(n - 1)] * gamma / std::sqrt(static_cast<double>(n));
  }
  return c;
}

std::vector<Complex> displacement_matrix(Complex gamma, int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  const size_t dim = static_cast<size_t>(n_max) + 1;
  std::vector<Complex> mat(dim * dim, Complex(0.0, 0.0));
  if (std::abs(gamma) == 0.0) {
    for (size_t i = 0; i < dim; ++i) mat[i * dim + i] = 1.0;
    return mat;
  }

  const double x = std::norm(gamma);
  const double log_abs = std::log(std::abs(gamma));
  const Complex phase_up = gamma / std::abs(gamma);
  const Complex phase_dn = -std::conj(gamma) / std::abs(gamma);
  const std::vector<double> lg = log_factorials(n_max);

  // For each offset d >= 0: recurrence in k for L_k^{(d)}(x);
  // <k+d|D|k> and <k|D|k+d> share the same Laguerre value.
  for (int d = 0; d <= n_max; ++d) {
    double l_prev = 0.0;
    double l_cur = 1.0;  // L_0^{(d)}
    Complex ph_up = std::pow(phase_up, d);
    Complex ph_dn = std::pow(phase_dn, d);
    for (int k = 0; k + d <= n_max; ++k) {
      if (k > 0) {
        const double l_next =
            ((2.0 * (k - 1) + 1.0 + d - x) * l_cur - (k - 1 + d) * l_prev) / k;
        l_prev = l_cur;
        l_cur = l_next;
      }
      const double mag = std::exp(
          -0.5 * x +
          0.5 * (lg[static_cast<size_t>(k)] - lg[static_cast<size_t>(k + d)]) +
          d * log_abs);
      mat[static_cast<size_t>(k + d) * dim + static_cast<size_t>(k)] =
          mag * ph_up * l_cur;
      mat[static_cast<size_t>(k) * dim + static_cast<size_t>(k + d)] =
          mag * ph_dn * l_cur;
    }
  }
  return mat;
}

FockVector simulate_link(const EcParams& params, Complex alpha, Complex beta,
                         int n_max) {
  params.validate();
  const double eta = params.eta;
  const double chi = params.chi;
  const double g = params.amplifier.gain;
  const int order = params.amplifier.order;

  int required = order + 1;
  if (chi > 0.0) {
    // EPR tail chi^n below 1e-12
    required = std::max(
        required,
        static_cast<int>(std::ceil(std::log(1e-12) / std::log(chi))));
  }
  const double lambda = g * chi * std::sqrt(eta);
  const Complex delta = -lambda * std::conj(beta);
  required = std::max(required, displaced_support(std::abs(delta), order));
  if (n_max < required) {
    throw CutoffError("Fock cutoff " + std::to_string(n_max) +
                          " too small; need at least " +
                          std::to_string(required),
                      required);
  }

  const Complex w = std::conj(beta) + alpha;
  const double prefactor = std::sqrt((1.0 - chi * chi) / M_PI) *
                           std::exp(0.5 * std::norm(w) * (chi * chi - 1.0));

  // EPR projection then pure-state loss: coherent |sqrt(eta) chi w>
  FockVector v = coherent_state(std::sqrt(eta) * chi * w, n_max);
  for (int n = 0; n <= n_max; ++n) {
    v[static_cast<size_t>(n)] *=
        prefactor * params.amplifier.coefficient(n);
  }
  return apply_displacement_columns(delta, v, order, n_max);
}

LinkMetrics quadrature_metrics(const EcParams& params, Complex alpha,
                               const QuadratureGrid& grid) {
  params.validate();
  const double chi = params.chi;
  const double eta = params.eta;
  const double g = params.amplifier.gain;
  const double s = 1.0 - chi * chi + eta * chi * chi;
  const double lambda = g * chi * std::sqrt(eta);

  const double half_width =
      grid.half_width > 0.0 ? grid.half_width : 8.0 / std::sqrt(s);
  const int pts = grid.points_per_axis;
  if (pts < 3) throw std::invalid_argument("need at least 3 points per axis");

  const Complex center = -std::conj(alpha);  // where w = beta* + alpha = 0
  const double corner =
      std::abs(center) + half_width * std::sqrt(2.0);
  int n_max = grid.n_max;
  if (n_max <= 0) {
    n_max = std::max(30, displaced_support(lambda * corner,
                                           params.amplifier.order));
    if (chi > 0.0) {
      n_max = std::max(n_max, static_cast<int>(std::ceil(
                                  std::log(1e-12) / std::log(chi))));
    }
  }

  const FockVector target = coherent_state(lambda * alpha, n_max);
  const double h = 2.0 * half_width / (pts - 1);

  double sum_norm = 0.0;
  double sum_overlap = 0.0;
  for (int i = 0; i < pts; ++i) {
    const double re = center.real() - half_width + i * h;
    const double wi = (i == 0 || i == pts - 1) ? 0.5 : 1.0;
    for (int j = 0; j < pts; ++j) {
      const double im = center.imag() - half_width + j * h;
      const double wj = (j == 0 || j == pts - 1) ? 0.5 : 1.0;
      const FockVector psi =
          simulate_link(params, alpha, Complex(re, im), n_max);
      double nrm = 0.0;
      Complex ov(0.0, 0.0);
      for (size_t m = 0; m < psi.size(); ++m) {
        nrm += std::norm(psi[m]);
        ov += std::conj(target[m]) * psi[m];
      }
      sum_norm += wi * wj * nrm;
      sum_overlap += wi * wj * std::norm(ov);
    }
  }

  LinkMetrics m;
  m.success_prob = sum_norm * h * h;
  m.fidelity = sum_overlap / sum_norm;
  m.effective_gain = lambda;
  return m;
}

}  // namespace oracle
}  // namespace cvrep
