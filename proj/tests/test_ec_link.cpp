#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "cvrep/ec_link.hpp"

using namespace cvrep;

namespace {

// independent oracle: trapezoid quadrature of the radial integrand over
// (Re w, Im w) in [-half, half]^2
double quadrature_2d(const RadialPolyGaussian& rpg, double half, int pts) {
  const double h = 2.0 * half / (pts - 1);
  double sum = 0.0;
  for (int i = 0; i < pts; ++i) {
    const double re = -half + i * h;
    const double wi = (i == 0 || i == pts - 1) ? 0.5 : 1.0;
    for (int j = 0; j < pts; ++j) {
      const double im = -half + j * h;
      const double wj = (j == 0 || j == pts - 1) ? 0.5 : 1.0;
      sum += wi * wj * rpg.evaluate(re * re + im * im);
    }
  }
  return sum * h * h;
}

double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

}  // namespace

TEST_CASE("moment identity for k <= 12 and several decay rates") {
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
      CHECK(rel_diff(rpg.integral(), expected) <= 1e-12);
    }
  }
}

TEST_CASE("non-positive decay is a parameter-regime error") {
  RadialPolyGaussian rpg;
  rpg.scale = 1.0;
  rpg.decay = 0.0;
  rpg.coeffs = {1.0};
  CHECK_THROWS_AS(rpg.integral(), ParameterRegimeError);
}

TEST_CASE("gain tuning") {
  CHECK(gain_tuned(0.01, 0.1) == doctest::Approx(31.6227766017).epsilon(1e-9));
  CHECK(gain_tuned(0.25, 0.5) == doctest::Approx(2.8284271247).epsilon(1e-9));
  // lambda^2 = sqrt(eta)
  for (double eta : {0.01, 0.3, 0.9}) {
    for (double chi : {0.05, 0.4}) {
      const double g = gain_tuned(eta, chi);
      const double lambda = g * chi * std::sqrt(eta);
      CHECK(rel_diff(lambda * lambda, std::sqrt(eta)) <= 1e-12);
      CHECK(rel_diff(lambda, std::pow(eta, 0.25)) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(gain_tuned(0.01, 0.0), std::invalid_argument);
}

TEST_CASE("N=1 norm integrand reproduces the printed form") {
  const double eta = 0.2, chi = 0.3, g = 2.5;
  const EcParams params{eta, chi, AmplifierModel::scissors(1, g)};
  const auto [norm, overlap] = output_coefficient_poly(params);

  CHECK(norm.coeffs.size() == 2);
  CHECK(norm.coeffs[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(norm.coeffs[1] ==
        doctest::Approx(g * g * eta * chi * chi).epsilon(1e-13));
  CHECK(norm.decay ==
        doctest::Approx(1.0 - chi * chi + eta * chi * chi).epsilon(1e-14));
  CHECK(norm.scale ==
        doctest::Approx((1.0 - chi * chi) / ((1.0 + g * g) * M_PI))
            .epsilon(1e-13));
  CHECK(overlap.decay == doctest::Approx(norm.decay + g * g * eta * chi * chi)
                             .epsilon(1e-14));
}

TEST_CASE("chi = 0 decouples the EPR") {
  const double g = 3.0;
  const EcParams params{0.4, 0.0, AmplifierModel::scissors(1, g)};
  const auto [norm, overlap] = output_coefficient_poly(params);
  for (size_t k = 1; k < norm.coeffs.size(); ++k) CHECK(norm.coeffs[k] == 0.0);
  CHECK(overlap.decay == norm.decay);

  const LinkMetrics m = link_metrics(params);
  CHECK(m.fidelity == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(m.success_prob == doctest::Approx(1.0 / (1.0 + g * g)).epsilon(1e-13));
}

TEST_CASE("N=2 integrands agree with brute-force 2D quadrature") {
  const EcParams params{0.01, 0.1, AmplifierModel::scissors(2, 31.623)};
  const auto [norm, overlap] = output_coefficient_poly(params);
  CHECK(norm.coeffs.size() == 3);
  CHECK(rel_diff(quadrature_2d(norm, 8.0, 801), norm.integral()) <= 1e-8);
  CHECK(rel_diff(quadrature_2d(overlap, 8.0, 801), overlap.integral()) <= 1e-8);
}

TEST_CASE("engine equals the printed closed forms on the 80-point grid") {
  for (double eta : {0.01, 0.1, 0.5, 0.9}) {
    for (double chi : {0.05, 0.1, 0.3, 0.6}) {
      for (double g : {0.5, 1.0, 3.0, 10.0, 31.6}) {
        const EcParams p{eta, chi, AmplifierModel::scissors(1, g)};
        const LinkMetrics engine = link_metrics(p);
        const LinkMetrics closed = closed_form_n1(p);
        CHECK(rel_diff(engine.fidelity, closed.fidelity) <= 1e-10);
        CHECK(rel_diff(engine.success_prob, closed.success_prob) <= 1e-10);
      }
    }
  }
}

TEST_CASE("moment engine agrees with closed forms to machine precision") {
  const EcParams p{0.25, 0.3, AmplifierModel::scissors(1, 2.0)};
  const LinkMetrics engine = link_metrics(p);
  const LinkMetrics closed = closed_form_n1(p);
  CHECK(rel_diff(engine.fidelity, closed.fidelity) <= 1e-12);
  CHECK(rel_diff(engine.success_prob, closed.success_prob) <= 1e-12);
}

TEST_CASE("gain-tuned single scissor at eta = 0.01, chi = 0.1") {
  const double g = gain_tuned(0.01, 0.1);
  const EcParams p{0.01, 0.1, AmplifierModel::scissors(1, g)};
  const LinkMetrics m = link_metrics(p);
  CHECK(m.success_prob > 1.0e-3);
  CHECK(m.success_prob < 1.2e-3);
  CHECK(m.fidelity == doctest::Approx(0.9902).epsilon(5e-4));
  CHECK(m.fidelity * m.fidelity == doctest::Approx(0.98).epsilon(5e-3));
}

TEST_CASE("closed form limits") {
  // chi -> 0 at fixed finite gain: F -> 1, P -> 1/(1+g^2)
  const EcParams p{1.0, 1e-9, AmplifierModel::scissors(1, 2.0)};
  const LinkMetrics m = closed_form_n1(p);
  CHECK(m.fidelity == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m.success_prob == doctest::Approx(0.2).epsilon(1e-9));

  // chi -> 0 gain-tuned: F -> (1 + 4 sqrt(eta) + 5 eta) / (1 + sqrt(eta))^4
  const double eta = 0.01;
  const double chi = 1e-6;
  const EcParams pt{eta, chi,
                    AmplifierModel::scissors(1, gain_tuned(eta, chi))};
  const double expected = (1.0 + 4.0 * std::sqrt(eta) + 5.0 * eta) /
                          std::pow(1.0 + std::sqrt(eta), 4.0);
  CHECK(closed_form_n1(pt).fidelity == doctest::Approx(expected).epsilon(1e-9));
  CHECK(expected == doctest::Approx(0.99037).epsilon(1e-4));
}

TEST_CASE("closed form rejects other amplifiers") {
  CHECK_THROWS_AS(
      closed_form_n1(EcParams{0.5, 0.1, AmplifierModel::scissors(2, 1.0)}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      closed_form_n1(EcParams{0.5, 0.1, AmplifierModel::optimal(1, 1.0)}),
      std::invalid_argument);
}

TEST_CASE("F and P bounded in [0, 1] across kinds and orders") {
  for (double eta : {0.01, 0.1, 0.5, 0.9}) {
    for (double chi : {0.05, 0.1, 0.3, 0.6}) {
      for (double g : {0.5, 1.0, 3.0, 10.0, 31.6}) {
        for (int order : {1, 2, 3}) {
          for (bool optimal : {false, true}) {
            const AmplifierModel model =
                optimal ? AmplifierModel::optimal(order, g)
                        : AmplifierModel::scissors(order, g);
            const LinkMetrics m = link_metrics(EcParams{eta, chi, model});
            CHECK(m.fidelity >= 0.0);
            CHECK(m.fidelity <= 1.0 + 1e-12);
            CHECK(m.success_prob >= 0.0);
            CHECK(m.success_prob <= 1.0 + 1e-12);
          }
        }
      }
    }
  }
}

TEST_CASE("more scissors cost success probability at fixed parameters") {
  for (double eta : {0.01, 0.1, 0.5}) {
    for (double chi : {0.05, 0.1, 0.3}) {
      for (double g : {1.0, 3.0, 10.0}) {
        double prev = 2.0;
        for (int order : {1, 2, 3}) {
          const EcParams p{eta, chi, AmplifierModel::scissors(order, g)};
          const double prob = link_metrics(p).success_prob;
          CHECK(prob < prev);
          prev = prob;
        }
      }
    }
  }
}

TEST_CASE("more scissors raise fidelity under gain tuning") {
  for (double eta : {0.001, 0.01, 0.1, 0.5, 0.9}) {
    for (double chi : {0.05, 0.1, 0.3}) {
      const double g = gain_tuned(eta, chi);
      double prev = -1.0;
      for (int order : {1, 2, 3}) {
        const EcParams p{eta, chi, AmplifierModel::scissors(order, g)};
        const double f = link_metrics(p).fidelity;
        CHECK(f >= prev - 1e-12);
        prev = f;
      }
    }
  }
}

TEST_CASE("invalid link parameters are rejected") {
  CHECK_THROWS_AS(
      link_metrics(EcParams{0.0, 0.1, AmplifierModel::scissors(1, 1.0)}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      link_metrics(EcParams{0.5, 1.0, AmplifierModel::scissors(1, 1.0)}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      link_metrics(EcParams{1.2, 0.1, AmplifierModel::scissors(1, 1.0)}),
      std::invalid_argument);
}
