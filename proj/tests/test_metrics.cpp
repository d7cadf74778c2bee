// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "antcal/errors.hpp"
#include "antcal/metrics.hpp"

using namespace antcal;
using cd = std::complex<double>;

TEST_CASE("vh to circular convention") {
  // V at 0 deg, H at +90 deg is pure RHCP under this convention
  auto [r, l] = vh_to_circular(cd(1.0, 0.0), cd(0.0, 1.0));
  CHECK(std::abs(r - cd(std::sqrt(2.0), 0.0)) < 1e-12);
  CHECK(std::abs(l) < 1e-12);

  // pure vertical splits equally
  auto [r2, l2] = vh_to_circular(cd(1.0, 0.0), cd(0.0, 0.0));
  CHECK(std::abs(r2) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(std::abs(l2) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("vh/circular conversion conserves power and inverts") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 200; ++i) {
    const cd ev(u(rng), u(rng)), eh(u(rng), u(rng));
    auto [r, l] = vh_to_circular(ev, eh);
    CHECK(std::norm(r) + std::norm(l) ==
          doctest::Approx(std::norm(ev) + std::norm(eh)).epsilon(1e-12));
    auto [ev2, eh2] = circular_to_vh(r, l);
    REQUIRE(std::abs(ev2 - ev) < 1e-12);
    REQUIRE(std::abs(eh2 - eh) < 1e-12);
  }
}

TEST_CASE("flipping the V phase by 180 degrees swaps hands, leaving AR alone") {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 100; ++i) {
    const cd ev(u(rng), u(rng)), eh(u(rng), u(rng));
    auto [r1, l1] = vh_to_circular(ev, eh);
    auto [r2, l2] = vh_to_circular(-ev, eh);
    REQUIRE(std::abs(std::abs(r2) - std::abs(l1)) < 1e-12);
    REQUIRE(std::abs(std::abs(l2) - std::abs(r1)) < 1e-12);
    CHECK(axial_ratio(std::abs(r1), std::abs(l1)) ==
          doctest::Approx(axial_ratio(std::abs(r2), std::abs(l2))).epsilon(1e-9));
  }
}

TEST_CASE("axial ratio") {
  CHECK(axial_ratio(1.0, 0.0) == doctest::Approx(0.0));
  CHECK(axial_ratio(1.0, 1.0 / 3.0) == doctest::Approx(6.021).epsilon(1e-4));
  CHECK(axial_ratio(0.7, 0.7) == kAxialRatioCeilingDb);
  CHECK(axial_ratio(0.0, 0.0) == kAxialRatioCeilingDb);
  CHECK(std::abs(axial_ratio(1.0, 1.0 / 3.0) - 6.021) < 1e-3);

  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const double ar = axial_ratio(u(rng), u(rng));
    REQUIRE(ar >= 0.0);
    REQUIRE(ar <= kAxialRatioCeilingDb);
  }
}

namespace {
GainMap two_sample_ring(double rhcp_a, double rhcp_b, double lhcp_a, double lhcp_b) {
  const SphericalGrid g(std::vector<double>{30.0}, std::vector<double>{0.0, 180.0});
  return GainMap(g, 1176.45, {rhcp_a, rhcp_b}, {lhcp_a, lhcp_b});
}
}  // namespace

TEST_CASE("linear average gain") {
  const GainMap constant = two_sample_ring(3.0, 3.0, -10.0, -10.0);
  CHECK(linear_average_gain(constant, 30.0) == doctest::Approx(3.0).epsilon(1e-12));

  const GainMap pair = two_sample_ring(0.0, -10.0, -30.0, -30.0);
  CHECK(std::abs(linear_average_gain(pair, 30.0) - (-2.596)) < 1e-3);

  try {
    linear_average_gain(pair, 31.0);
    FAIL("expected ElevationOffGrid");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::elevation_off_grid);
  }
}

TEST_CASE("lag of a constant map is grid-density independent") {
  for (double step : {5.0, 15.0, 45.0}) {
    const SphericalGrid g = SphericalGrid::with_steps(45.0, step);
    const GainMap map(g, 1575.42, std::vector<double>(g.size(), 2.5),
                      std::vector<double>(g.size(), -12.0));
    CHECK(linear_average_gain(map, 45.0) == doctest::Approx(2.5).epsilon(1e-12));
  }
}

TEST_CASE("average axial ratio in the linear ratio domain") {
  // constant ring: unchanged
  const GainMap constant = two_sample_ring(0.0, 0.0, -9.542425094393249, -9.542425094393249);
  CHECK(average_axial_ratio(constant, 30.0) == doctest::Approx(6.0206).epsilon(1e-4));

  // ring of {0 dB, 6.0206 dB} axial ratios -> linear mean of {1, 2} -> 3.522 dB
  const GainMap mixed = two_sample_ring(0.0, 0.0, -600.0, -9.542425094393249);
  CHECK(std::abs(average_axial_ratio(mixed, 30.0) - 3.522) < 1e-3);
}

TEST_CASE("gain map from dual-linear fields") {
  const SphericalGrid g(std::vector<double>{36.0}, std::vector<double>{0.0, 90.0, 180.0, 270.0});
  std::vector<ComplexFieldSample> v(g.size()), h(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    v[i] = ComplexFieldSample(1.0, 0.0);
    h[i] = ComplexFieldSample(1.0, 90.0);  // pure RHCP, |e_R| = sqrt(2)
  }
  const GainMap gain = vh_to_gain_map(VhFieldMap(g, 1575.42, v, h));
  CHECK(gain.rhcp_at(0, 0) == doctest::Approx(20.0 * std::log10(std::sqrt(2.0))).epsilon(1e-9));
  CHECK(gain.lhcp_at(0, 0) < -300.0);  // fp-level leakage of the vanished hand
  CHECK(average_axial_ratio(gain, 36.0) == doctest::Approx(0.0).epsilon(1e-6));
  CHECK(linear_average_gain(gain, 36.0) ==
        doctest::Approx(20.0 * std::log10(std::sqrt(2.0))).epsilon(1e-9));

  const auto curves = elevation_curves(gain);
  REQUIRE(curves.size() == 1);
  CHECK(curves[0].elevation_deg == 36.0);
  const auto cut = azimuth_cut(gain, 36.0);
  REQUIRE(cut.size() == 4);
  CHECK(cut[2].azimuth_deg == 180.0);
  CHECK(cut[2].ar_db == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("field samples reject negative amplitude") {
  CHECK_THROWS_AS(ComplexFieldSample(-1.0, 0.0), Error);
  const cd e = ComplexFieldSample(2.0, 90.0).to_complex();
  CHECK(std::abs(e - cd(0.0, 2.0)) < 1e-12);
  const auto back = ComplexFieldSample::from_complex(cd(0.0, 2.0));
  CHECK(back.amplitude == doctest::Approx(2.0));
  CHECK(back.phase_deg == doctest::Approx(90.0));
}
