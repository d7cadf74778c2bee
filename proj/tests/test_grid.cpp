// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "antcal/errors.hpp"
#include "antcal/grid.hpp"

using namespace antcal;

TEST_CASE("default grid matches the range sampling convention") {
  const SphericalGrid g = SphericalGrid::default_grid();
  CHECK(g.n_elevation() == 91);
  CHECK(g.n_azimuth() == 72);
  CHECK(g.size() == 6552);
  CHECK(g.elevations().front() == 0.0);
  CHECK(g.elevations().back() == 90.0);
  CHECK(g.azimuths().front() == 0.0);
  CHECK(g.azimuths().back() == 355.0);
  CHECK(g.zenith_index().has_value());
  CHECK(*g.zenith_index() == 90);
}

TEST_CASE("custom steps") {
  const SphericalGrid g = SphericalGrid::with_steps(90.0, 180.0);
  CHECK(g.elevations() == std::vector<double>{0.0, 90.0});
  CHECK(g.azimuths() == std::vector<double>{0.0, 180.0});
}

TEST_CASE("zero or negative step is ill-formed") {
  CHECK_THROWS_WITH_AS(SphericalGrid::with_steps(0.0, 5.0), doctest::Contains("InvalidStep"),
                       Error);
  CHECK_THROWS_AS(SphericalGrid::with_steps(1.0, -5.0), Error);
  try {
    SphericalGrid::with_steps(0.0, 5.0);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_step);
  }
}

TEST_CASE("grid axes must be strictly increasing and in range") {
  CHECK_THROWS_AS(SphericalGrid({10.0, 10.0}, {0.0}), Error);
  CHECK_THROWS_AS(SphericalGrid({0.0, 91.0}, {0.0}), Error);
  CHECK_THROWS_AS(SphericalGrid({0.0, 90.0}, {0.0, 360.0}), Error);
}

TEST_CASE("direction unit vectors") {
  auto u = Direction(0.0, 123.0).unit_vector();
  CHECK(u[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(u[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(u[2] == doctest::Approx(1.0).epsilon(1e-12));

  u = Direction(90.0, 0.0).unit_vector();
  CHECK(u[0] == doctest::Approx(1.0));
  CHECK(std::abs(u[1]) < 1e-12);
  CHECK(std::abs(u[2]) < 1e-12);

  u = Direction(30.0, 90.0).unit_vector();
  CHECK(std::abs(u[0]) < 1e-12);
  CHECK(u[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(u[2] == doctest::Approx(0.8660254).epsilon(1e-7));
}

TEST_CASE("every grid node direction has unit norm") {
  const SphericalGrid g = SphericalGrid::default_grid();
  for (std::size_t ie = 0; ie < g.n_elevation(); ++ie)
    for (std::size_t ia = 0; ia < g.n_azimuth(); ++ia) {
      const auto u = g.direction(ie, ia).unit_vector();
      const double norm = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
      REQUIRE(std::abs(norm - 1.0) < 1e-12);
    }
}

TEST_CASE("node order is elevation-major, azimuth-minor") {
  const SphericalGrid g = SphericalGrid::with_steps(45.0, 120.0);
  CHECK(g.node_index(0, 0) == 0);
  CHECK(g.node_index(0, 2) == 2);
  CHECK(g.node_index(1, 0) == 3);
  CHECK(g.node_index(2, 1) == 7);
}

TEST_CASE("azimuth normalizes to [0, 360)") {
  CHECK(Direction(10.0, 370.0).phi_deg == doctest::Approx(10.0));
  CHECK(Direction(10.0, -5.0).phi_deg == doctest::Approx(355.0));
  CHECK(Direction(10.0, 360.0).phi_deg == doctest::Approx(0.0));
  CHECK_THROWS_AS(Direction(120.0, 0.0), Error);
  CHECK_THROWS_AS(Direction(-3.0, 0.0), Error);
}

TEST_CASE("wrap_degrees lands in (-180, 180]") {
  CHECK(wrap_degrees(190.0) == doctest::Approx(-170.0));
  CHECK(wrap_degrees(180.0) == doctest::Approx(180.0));
  CHECK(wrap_degrees(-180.0) == doctest::Approx(180.0));
  CHECK(wrap_degrees(720.0 + 37.0) == doctest::Approx(37.0));
  CHECK(wrap_degrees(-350.0) == doctest::Approx(10.0));
}

TEST_CASE("circular mean") {
  CHECK(circular_mean_deg({350.0, 10.0}) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(circular_mean_deg({37.0, 37.0, 37.0}) == doctest::Approx(37.0));
  CHECK(circular_mean_deg({170.0, -170.0}) == doctest::Approx(180.0));
  CHECK(circular_mean_deg({}) == 0.0);
}

TEST_CASE("phase map completeness and finiteness") {
  const SphericalGrid g = SphericalGrid::with_steps(45.0, 180.0);
  std::vector<double> ok(g.size(), 1.0);
  CHECK_NOTHROW(PhaseMap(g, 1176.45, ok));
  std::vector<double> short_values(g.size() - 1, 1.0);
  CHECK_THROWS_AS(PhaseMap(g, 1176.45, short_values), Error);
  std::vector<double> bad = ok;
  bad[1] = std::nan("");
  CHECK_THROWS_AS(PhaseMap(g, 1176.45, bad), Error);
  CHECK_THROWS_AS(PhaseMap(g, -1.0, ok), Error);
}

TEST_CASE("normalized flag requires a zero zenith ring") {
  const SphericalGrid g = SphericalGrid::with_steps(45.0, 180.0);
  std::vector<double> values(g.size(), 0.0);
  CHECK_NOTHROW(PhaseMap(g, 1176.45, values, true));
  values[g.node_index(2, 0)] = 1.0;  // zenith node
  CHECK_THROWS_AS(PhaseMap(g, 1176.45, values, true), Error);
}

TEST_CASE("wavelength sanity") {
  CHECK(wavelength_mm(1575.42) == doctest::Approx(190.294).epsilon(1e-5));
  CHECK(wavelength_mm(1176.45) == doctest::Approx(254.828).epsilon(1e-4));
  CHECK_THROWS_AS(wavelength_mm(0.0), Error);
}
