#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "cvrep/reports.hpp"

using namespace cvrep;
using namespace cvrep::reports;

TEST_CASE("grid spec parsing") {
  const GridSpec g = GridSpec::parse("0.001:0.9:60:log");
  CHECK(g.start == 0.001);
  CHECK(g.stop == 0.9);
  CHECK(g.points == 60);
  CHECK(g.log_spaced);
  CHECK(g.values().size() == 60);
  CHECK(g.values().front() == doctest::Approx(0.001));
  CHECK(g.values().back() == doctest::Approx(0.9));

  const GridSpec lin = GridSpec::parse("0.1:0.5:5:lin");
  CHECK_FALSE(lin.log_spaced);
  CHECK(lin.values()[1] == doctest::Approx(0.2));

  CHECK_THROWS_AS(GridSpec::parse("nope"), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec::parse("0.1:0.5:5:cubic"), std::invalid_argument);
}

TEST_CASE("value formatting uses 12 significant digits") {
  CHECK(format_value(0.01) == "0.01");
  CHECK(format_value(1.0 / 3.0) == "0.333333333333");
  CHECK(format_value(1.23456789e-9) == "1.23456789e-09");
}

TEST_CASE("fig3 rows: grid x 4 model curves, fidelity ordered in N") {
  GridSpec grid;
  grid.start = 0.005;
  grid.stop = 0.5;
  grid.points = 6;
  const auto rows = fig3_rows(grid);
  CHECK(rows.size() == 24);

  for (size_t i = 0; i < rows.size(); i += 4) {
    // per eta: scissors 1, 2, 3 then optimal 2
    CHECK(rows[i].order == 1);
    CHECK(rows[i + 1].order == 2);
    CHECK(rows[i + 2].order == 3);
    CHECK(rows[i + 3].kind == AmplifierKind::Optimal);
    CHECK(rows[i + 2].f_two_link_max >= rows[i + 1].f_two_link_max - 1e-9);
    CHECK(rows[i + 1].f_two_link_max >= rows[i].f_two_link_max - 1e-9);
    // the exact-gain amplifier beats two scissors only below eta ~ 0.43
    if (rows[i].eta_eff < 0.4) {
      CHECK(rows[i + 3].f_two_link_max >= rows[i + 1].f_two_link_max - 1e-9);
    }
  }
}

TEST_CASE("fig4 infeasible cells appear exactly above the fig3 maximum") {
  GridSpec grid;
  grid.start = 0.005;
  grid.stop = 0.5;
  grid.points = 6;
  const double target = 0.99;
  const auto max_rows = fig3_rows(grid);
  const auto rows = fig4_rows(grid, target);
  CHECK(rows.size() == 18);

  size_t mi = 0;
  for (size_t i = 0; i < rows.size(); ++i) {
    // fig3 rows carry an extra optimal curve per eta
    if (i > 0 && i % 3 == 0) ++mi;
    const auto& m = max_rows[(i / 3) * 4 + (i % 3)];
    CHECK(m.order == rows[i].order);
    CHECK(rows[i].feasible == (m.f_two_link_max >= target));
  }
}

TEST_CASE("fig5: M = 2 rows equal the squared per-link fidelity") {
  GridSpec grid;
  grid.start = 0.005;
  grid.stop = 0.1;
  grid.points = 4;
  const double chi = 0.1;
  const auto rows = fig5_rows(grid, chi, {2, 4, 8});
  CHECK(rows.size() == 12);
  for (size_t i = 0; i < rows.size(); i += 3) {
    const double eta = rows[i].eta_eff;
    const EcParams p{eta, chi,
                     AmplifierModel::scissors(1, gain_tuned(eta, chi))};
    const LinkMetrics m = link_metrics(p);
    CHECK(rows[i].links == 2);
    CHECK(rows[i].f_bound ==
          doctest::Approx(m.fidelity * m.fidelity).epsilon(1e-12));
    CHECK(rows[i].p_total == doctest::Approx(m.success_prob).epsilon(1e-12));
  }
}

TEST_CASE("table rows use 100 km segments at the default attenuation") {
  const auto rows = table1_rows(FiberModel{0.2});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].distance_km == 200.0);
  CHECK(rows[1].distance_km == 400.0);
  CHECK(rows[2].distance_km == 800.0);
  for (const auto& r : rows) {
    CHECK(r.eta_link == doctest::Approx(0.01).epsilon(1e-12));
  }
  CHECK(rows[0].links == 2);
  CHECK(rows[2].links == 8);
}

TEST_CASE("CSV output is deterministic and newline-terminated") {
  GridSpec grid;
  grid.start = 0.01;
  grid.stop = 0.1;
  grid.points = 3;
  const std::string a = fig5_csv(fig5_rows(grid, 0.1, {2, 4}));
  const std::string b = fig5_csv(fig5_rows(grid, 0.1, {2, 4}));
  CHECK(a == b);
  CHECK(a.back() == '\n');
  CHECK(a.substr(0, a.find('\n')) == "eta_eff,M,F_M,P_M");

  const std::string t = table1_csv(table1_rows(FiberModel{0.2}));
  CHECK(t.substr(0, t.find('\n')) ==
        "distance_km,M,eta_link,F_M_one_qs,P_M_one_qs,F_M_two_qs,P_M_two_qs");
}
