#pragma once

#include <complex>
#include <vector>

#include "cvrep/ec_link.hpp"
#include "cvrep/errors.hpp"

namespace cvrep {
namespace oracle {

using Complex = std::complex<double>;
using FockVector = std::vector<Complex>;

/// Coherent state |gamma> in the number basis, entries 0..n_max.
FockVector coherent_state(Complex gamma, int n_max);

/// Exact matrix elements <m|D(gamma)|n> on the truncated space,
/// (n_max+1) x (n_max+1), row-major. Associated-Laguerre closed form with
/// log-factorial stabilization.
std::vector<Complex> displacement_matrix(Complex gamma, int n_max);

/// Un-normalized heralded output of one error-correction link for dual
/// homodyne outcome beta and input |alpha>: EPR projection, loss, NLA
/// coefficients, correcting displacement. Throws CutoffError when n_max
/// cannot hold the result.
FockVector simulate_link(const EcParams& params, Complex alpha, Complex beta,
                         int n_max);

struct QuadratureGrid {
  double half_width = 0.0;  // 0 = auto: 8/sqrt(s) around the Gaussian center
  int points_per_axis = 201;
  int n_max = 0;            // 0 = auto from grid geometry
};

/// F and P by trapezoid integration of the simulated norm and target overlap
/// over the measurement-outcome plane.
LinkMetrics quadrature_metrics(const EcParams& params, Complex alpha,
                               const QuadratureGrid& grid = {});

}  // namespace oracle
}  // namespace cvrep
