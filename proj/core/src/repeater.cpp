#include "cvrep/repeater.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cvrep {

double FiberModel::transmission(double distance_km) const {
  if (!(atten_db_per_km > 0.0)) {
    throw std::invalid_argument("fiber attenuation must be > 0 dB/km");
  }
  if (!(distance_km >= 0.0)) {
    throw std::invalid_argument("distance must be >= 0 km");
  }
  return std::pow(10.0, -atten_db_per_km * distance_km / 10.0);
}

double FiberModel::distance(double transmission) const {
  if (!(atten_db_per_km > 0.0)) {
    throw std::invalid_argument("fiber attenuation must be > 0 dB/km");
  }
  if (!(transmission > 0.0) || !(transmission <= 1.0)) {
    throw std::domain_error("transmission must be in (0, 1], got " +
                            std::to_string(transmission));
  }
  return -10.0 * std::log10(transmission) / atten_db_per_km;
}

RepeaterChain compose(const LinkMetrics& per_link, int link_count) {
  const double f = per_link.fidelity;
  const double p = per_link.success_prob;
  if (!(f > 0.0) || f > 1.0 || !(p > 0.0) || p > 1.0) {
    throw std::invalid_argument("per-link F and P must be in (0, 1]");
  }

  RepeaterChain chain;
  chain.link_count = link_count;
  if (link_count == 1) {
    // bare link, no composition law applies
    chain.levels = 0;
    chain.f_bound = f;
    chain.p_total = p;
    return chain;
  }
  if (link_count < 2 || (link_count & (link_count - 1)) != 0) {
    throw std::invalid_argument(
        "link count must be a power of two >= 2 (doubling architecture), got " +
        std::to_string(link_count));
  }

  int k = 0;
  for (int m = link_count; m > 1; m >>= 1) ++k;
  chain.levels = k - 1;
  chain.p_total = std::pow(p, static_cast<double>(k));
  chain.f_bound = std::pow(f, 2.0 * (link_count - 1));
  return chain;
}

}  // namespace cvrep
