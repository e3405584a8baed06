#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "ptwave/diagnostics.hpp"
#include "ptwave/locus.hpp"
#include "ptwave/riemann.hpp"
#include "reference_values.hpp"

using namespace ptwave;
using namespace ptwave::testing;

namespace {

const material m13 = material::dimensionless(1.0, 3.0);
const material m15 = material::dimensionless(1.0, 5.0);

const locus_sample& first(const locus_curve& c) { return c.samples.front(); }
const locus_sample& last(const locus_curve& c) { return c.samples.back(); }

}  // namespace

TEST_SUITE("locus") {

TEST_CASE("fan segment endpoints") {
  const locus_curve oa = curve(m13, locus_label::rarefaction_oa, 33);
  CHECK(oa.parameter_name == "eta");
  REQUIRE(oa.samples.size() == 33);
  CHECK(first(oa).param == 1.0);
  CHECK(first(oa).s_hat == 0.0);
  CHECK(first(oa).v_hat == doctest::Approx(kF2).epsilon(1e-12));  // V*/c1
  CHECK(first(oa).gamma_plus == doctest::Approx(m13.alpha).epsilon(1e-14));
  CHECK(last(oa).param == m13.h);
  CHECK(last(oa).v_hat == 0.0);
  CHECK(last(oa).s_hat == doctest::Approx(m13.c0 / m13.c2).epsilon(1e-14));
}

TEST_CASE("sonic boundary segment endpoints") {
  const locus_curve bc = curve(m13, locus_label::segment_bc, 17);
  CHECK(first(bc).v_hat == doctest::Approx(kF2).epsilon(1e-12));           // V*/c1
  CHECK(last(bc).v_hat == doctest::Approx(kM13_V_TSTAR).epsilon(1e-12));   // V***/c1
  // Every sample keeps the sonic strain identity.
  for (const auto& s : bc.samples) {
    CHECK(2.0 * s.gamma_plus + s.gamma_minus ==
          doctest::Approx(1.5 * (m13.alpha + m13.beta)).epsilon(1e-13));
  }
}

TEST_CASE("sonic segment concords with the solver") {
  const locus_curve bc = curve(m13, locus_label::segment_bc, 9);
  for (size_t i = 2; i < bc.samples.size() - 1; i += 3) {
    const locus_sample& s = bc.samples[i];
    const wave_solution sol = solve_intermediate_md(m13, s.v_hat * m13.c1);
    CHECK(sol.jump->speed == doctest::Approx(s.s_hat * m13.c2).epsilon(1e-9));
    CHECK(sol.jump->gamma_front == doctest::Approx(s.gamma_plus).epsilon(1e-9));
  }
}

TEST_CASE("shock segment endpoints") {
  const locus_curve cd = curve(m13, locus_label::segment_cd, 9);
  CHECK(cd.parameter_name == "phi");
  CHECK(first(cd).param == 2.0 * m13.h);
  CHECK(first(cd).v_hat == doctest::Approx(kM13_V_TSTAR).epsilon(1e-12));
  CHECK(last(cd).param == 4.0 * m13.h);
  const locus_curve wide = curve(m13, locus_label::segment_cd, 9, 10.0);
  CHECK(last(wide).param == 10.0);
  CHECK_THROWS_AS(curve(m13, locus_label::segment_cd, 9, 3.0), std::invalid_argument);
}

TEST_CASE("lone boundary segment endpoints above sqrt(3)") {
  const locus_curve ce = curve(m13, locus_label::segment_ce, 9);
  CHECK(first(ce).param == m13.h);
  CHECK(first(ce).v_hat == doctest::Approx(kM13_V_DSTAR).epsilon(1e-12));   // V**/c1
  CHECK(last(ce).v_hat == doctest::Approx(kM13_V_TSTAR).epsilon(1e-12));    // V***/c1
  for (const auto& s : ce.samples) CHECK(s.gamma_plus == 0.0);
}

TEST_CASE("zero-driving-force segment endpoints") {
  const locus_curve ef = curve(m13, locus_label::segment_ef, 9);
  CHECK(first(ef).param == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  CHECK(first(ef).s_hat == doctest::Approx(0.0).epsilon(1e-7));
  CHECK(first(ef).v_hat == doctest::Approx(kF2 - kF_SQRT3).epsilon(1e-12));
  CHECK(last(ef).param == m13.h);
  CHECK(last(ef).v_hat == doctest::Approx(kM13_V_DSTAR).epsilon(1e-12));    // V**/c1
  for (const auto& s : ef.samples) {
    CHECK(s.gamma_plus + s.gamma_minus ==
          doctest::Approx(m13.alpha + m13.beta).epsilon(1e-13));
  }
}

TEST_CASE("lone boundary segment below sqrt(3)") {
  const locus_curve cf = curve(m15, locus_label::segment_cf, 9);
  // Starts on the axis (stationary boundary), ends at the shock corner.
  CHECK(first(cf).s_hat == doctest::Approx(0.0).epsilon(1e-7));
  CHECK(last(cf).param == 2.0 * m15.h);
  CHECK(last(cf).v_hat == doctest::Approx(kM15_V_TSTAR / m15.c1).epsilon(1e-12));
}

TEST_CASE("axis segment uses the zero-speed locus") {
  const locus_curve axis13 = curve(m13, locus_label::axis_be_bf, 9);
  CHECK(last(axis13).param == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  const locus_curve axis15 = curve(m15, locus_label::axis_be_bf, 9);
  CHECK(last(axis15).param == m15.h);
  for (const auto& s : axis13.samples) {
    CHECK(s.s_hat == 0.0);
    REQUIRE(g_zero_speed(m13, s.gamma_plus).has_value());
    CHECK(s.gamma_minus ==
          doctest::Approx(*g_zero_speed(m13, s.gamma_plus)).epsilon(1e-13));
  }
  CHECK(first(axis13).gamma_minus ==
        doctest::Approx(0.5 * (3.0 * m13.beta - m13.alpha)).epsilon(1e-13));
}

TEST_CASE("curve availability tracks the material case") {
  CHECK_THROWS_AS(curve(m13, locus_label::segment_cf, 9), std::domain_error);
  CHECK_THROWS_AS(curve(m15, locus_label::segment_ce, 9), std::domain_error);
  CHECK_THROWS_AS(curve(m15, locus_label::segment_ef, 9), std::domain_error);
  CHECK_THROWS_AS(curve(m13, locus_label::rarefaction_oa, 1), std::invalid_argument);
}

TEST_CASE("curve collection per material case") {
  const auto curves13 = all_curves(m13, 5);
  REQUIRE(curves13.size() == 6);
  CHECK(curves13[0].label == locus_label::rarefaction_oa);
  CHECK(curves13[1].label == locus_label::segment_bc);
  CHECK(curves13[2].label == locus_label::segment_cd);
  CHECK(curves13[3].label == locus_label::segment_ce);
  CHECK(curves13[4].label == locus_label::segment_ef);
  CHECK(curves13[5].label == locus_label::axis_be_bf);

  const auto curves15 = all_curves(m15, 5);
  REQUIRE(curves15.size() == 5);
  CHECK(curves15[3].label == locus_label::segment_cf);
}

TEST_CASE("region boundary corners above sqrt(3)") {
  const auto edges = region_boundary(m13, 9);
  REQUIRE(edges.size() == 4);
  CHECK(edges[0].label == "BC");
  CHECK(edges[0].points.front().gamma_plus == doctest::Approx(1.0));
  CHECK(edges[0].points.front().gamma_minus == doctest::Approx(4.0));  // (3b-a)/2
  CHECK(edges[0].points.back().gamma_plus == doctest::Approx(0.0));
  CHECK(edges[0].points.back().gamma_minus == doctest::Approx(6.0));   // 3(a+b)/2
  CHECK(edges[1].label == "CE");
  CHECK(edges[1].points.back().gamma_minus == doctest::Approx(4.0));   // a+b
  CHECK(edges[2].label == "EF");
  const double gp_f = m13.gamma_of_eta(std::sqrt(3.0));
  CHECK(edges[2].points.back().gamma_plus == doctest::Approx(gp_f).epsilon(1e-13));
  CHECK(edges[3].label == "FB");
  // The zero-speed arc meets the zero-driving-force line at F.
  CHECK(edges[3].points.front().gamma_minus ==
        doctest::Approx(m13.alpha + m13.beta - gp_f).epsilon(1e-9));
  CHECK(edges[3].points.back().gamma_plus == doctest::Approx(m13.alpha));
  CHECK(edges[3].points.back().gamma_minus == doctest::Approx(4.0));
}

TEST_CASE("region boundary corners below sqrt(3)") {
  const auto edges = region_boundary(m15, 9);
  REQUIRE(edges.size() == 3);
  CHECK(edges[0].label == "BC");
  CHECK(edges[1].label == "CF");
  CHECK(edges[1].points.back().gamma_plus == 0.0);
  CHECK(edges[1].points.back().gamma_minus == doctest::Approx(kM15_G0).epsilon(1e-12));
  CHECK(edges[2].label == "FB");
  CHECK(edges[2].points.front().gamma_minus == doctest::Approx(kM15_G0).epsilon(1e-12));
}

}  // TEST_SUITE
