#pragma once

#include "cvrep/ec_link.hpp"

namespace cvrep {

/// Composed metrics of an M-link chain of identical error-correction links.
struct RepeaterChain {
  int link_count = 2;  // M, power of two >= 2 (M = 1 means a bare link)
  int levels = 0;      // concatenation depth k-1 for M = 2^k
  double f_bound = 0.0;
  double p_total = 0.0;
};

struct FiberModel {
  double atten_db_per_km = 0.2;

  double transmission(double distance_km) const;
  double distance(double transmission) const;
};

/// P_M = P^{log2 M}, F_M >= F^{2(M-1)}. M must be a power of two >= 2,
/// or 1 for a bare link.
RepeaterChain compose(const LinkMetrics& per_link, int link_count);

}  // namespace cvrep
