// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "antcal/errors.hpp"
#include "antcal/pco_estimator.hpp"

using namespace antcal;

namespace {

PhaseMap noiseless_normalized(const SphericalGrid& g, double f, const Pco& pco) {
  return unwrap_and_normalize(forward_phase_map(g, f, pco, /*wrapped=*/true));
}

PhaseMap noisy_normalized(const SphericalGrid& g, double f, const Pco& pco, double sigma_deg,
                          std::mt19937_64& rng) {
  PhaseMap truth = forward_phase_map(g, f, pco, false);
  std::normal_distribution<double> n(0.0, sigma_deg);
  std::vector<double> v = truth.values();
  for (double& x : v) x = wrap_degrees(x + n(rng));
  return unwrap_and_normalize(PhaseMap(g, f, std::move(v)));
}

}  // namespace

TEST_CASE("elevation mask node counts on the default grid") {
  const SphericalGrid g = SphericalGrid::default_grid();
  CHECK(apply_elevation_mask(g, 0.0).size() == 6552);
  CHECK(apply_elevation_mask(g, 10.0).size() == 81 * 72);
  CHECK_THROWS_AS(apply_elevation_mask(g, 90.0), Error);
  CHECK_THROWS_AS(apply_elevation_mask(g, -1.0), Error);
}

TEST_CASE("noiseless recovery is exact for random offsets") {
  const SphericalGrid g = SphericalGrid::default_grid();
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (int trial = 0; trial < 100; ++trial) {
    const Pco truth(u(rng), u(rng), u(rng));
    const PcoEstimate est = solve_pco(noiseless_normalized(g, 1176.45, truth), 10.0);
    REQUIRE(std::abs(est.pco.x_mm - truth.x_mm) < 1e-9);
    REQUIRE(std::abs(est.pco.y_mm - truth.y_mm) < 1e-9);
    REQUIRE(std::abs(est.pco.z_mm - truth.z_mm) < 1e-9);
    REQUIRE(est.rms_residual_mm < 1e-9);
  }
}

TEST_CASE("all-zero map gives a zero estimate") {
  const SphericalGrid g = SphericalGrid::default_grid();
  const PhaseMap zero(g, 1176.45, std::vector<double>(g.size(), 0.0), true);
  const PcoEstimate est = solve_pco(zero, 10.0);
  CHECK(est.pco.x_mm == 0.0);
  CHECK(est.pco.y_mm == 0.0);
  CHECK(est.pco.z_mm == 0.0);
  CHECK(est.rms_residual_mm == 0.0);
  CHECK(est.condition_number >= 1.0);
  CHECK(est.n_obs == 80 * 72);  // zenith ring is the datum, not an observation
}

TEST_CASE("noiseless recovery is mask invariant") {
  const SphericalGrid g = SphericalGrid::default_grid();
  const Pco truth(12.5, -7.25, 31.0);
  const PhaseMap norm = noiseless_normalized(g, 1575.42, truth);
  const PcoEstimate a = solve_pco(norm, 0.0);
  const PcoEstimate b = solve_pco(norm, 10.0);
  const PcoEstimate c = solve_pco(norm, 30.0);
  for (const auto* e : {&a, &b, &c}) {
    CHECK(std::abs(e->pco.x_mm - truth.x_mm) < 1e-9);
    CHECK(std::abs(e->pco.y_mm - truth.y_mm) < 1e-9);
    CHECK(std::abs(e->pco.z_mm - truth.z_mm) < 1e-9);
  }
}

TEST_CASE("solver exactness holds with the bias column and sin-theta weights") {
  const SphericalGrid g = SphericalGrid::default_grid();
  const Pco truth(-20.0, 35.0, 44.0);
  const PhaseMap norm = noiseless_normalized(g, 1176.45, truth);
  for (bool bias : {false, true})
    for (Weighting w : {Weighting::equal, Weighting::sin_theta}) {
      const PcoEstimate est = solve_pco(norm, 10.0, bias, w);
      CHECK(std::abs(est.pco.x_mm - truth.x_mm) < 1e-9);
      CHECK(std::abs(est.pco.y_mm - truth.y_mm) < 1e-9);
      CHECK(std::abs(est.pco.z_mm - truth.z_mm) < 1e-9);
      if (bias) CHECK(std::abs(est.bias_mm) < 1e-9);
    }
}

TEST_CASE("rotating the map in azimuth rotates the horizontal estimate") {
  const SphericalGrid g = SphericalGrid::default_grid();
  const Pco truth(9.0, 4.0, -13.0);
  const PhaseMap norm = noiseless_normalized(g, 1176.45, truth);

  for (std::size_t shift : {18u, 36u}) {  // 90 and 180 degrees on the 5-deg axis
    std::vector<double> rotated(g.size());
    for (std::size_t ie = 0; ie < g.n_elevation(); ++ie)
      for (std::size_t ia = 0; ia < g.n_azimuth(); ++ia)
        rotated[g.node_index(ie, (ia + shift) % g.n_azimuth())] = norm.at(ie, ia);
    const PcoEstimate est =
        solve_pco(PhaseMap(g, 1176.45, std::move(rotated), true), 10.0);
    const double d = static_cast<double>(shift) * 5.0 * 3.14159265358979323846 / 180.0;
    const double ex = truth.x_mm * std::cos(d) - truth.y_mm * std::sin(d);
    const double ey = truth.x_mm * std::sin(d) + truth.y_mm * std::cos(d);
    CHECK(std::abs(est.pco.x_mm - ex) < 1e-9);
    CHECK(std::abs(est.pco.y_mm - ey) < 1e-9);
    CHECK(std::abs(est.pco.z_mm - truth.z_mm) < 1e-9);
  }
}

TEST_CASE("the estimate is linear in the map") {
  const SphericalGrid g = SphericalGrid::default_grid();
  const PhaseMap m1 = noiseless_normalized(g, 1176.45, Pco(3, -2, 5));
  const PhaseMap m2 = noiseless_normalized(g, 1176.45, Pco(-11, 6, 17));
  const double a = 1.75, b = -0.5;
  std::vector<double> combo(g.size());
  for (std::size_t i = 0; i < combo.size(); ++i)
    combo[i] = a * m1.values()[i] + b * m2.values()[i];
  const PcoEstimate ec = solve_pco(PhaseMap(g, 1176.45, std::move(combo), true), 10.0);
  const PcoEstimate e1 = solve_pco(m1, 10.0);
  const PcoEstimate e2 = solve_pco(m2, 10.0);
  CHECK(ec.pco.x_mm == doctest::Approx(a * e1.pco.x_mm + b * e2.pco.x_mm).epsilon(1e-10));
  CHECK(ec.pco.y_mm == doctest::Approx(a * e1.pco.y_mm + b * e2.pco.y_mm).epsilon(1e-10));
  CHECK(ec.pco.z_mm == doctest::Approx(a * e1.pco.z_mm + b * e2.pco.z_mm).epsilon(1e-10));
}

TEST_CASE("starved masks and degenerate geometries fail loudly") {
  const SphericalGrid g = SphericalGrid::default_grid();
  const PhaseMap zero(g, 1176.45, std::vector<double>(g.size(), 0.0), true);
  try {
    solve_pco(zero, 89.5);
    FAIL("expected MaskTooTight");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::mask_too_tight);
  }

  // single azimuth column: x and y are inseparable
  const SphericalGrid thin(std::vector<double>{0, 30, 60, 90}, std::vector<double>{45.0});
  const PhaseMap thin_zero(thin, 1176.45, std::vector<double>(thin.size(), 0.0), true);
  try {
    solve_pco(thin_zero, 0.0);
    FAIL("expected RankDeficient");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::rank_deficient);
  }
}

TEST_CASE("per-elevation rings reproduce a pure offset exactly") {
  const SphericalGrid g = SphericalGrid::default_grid();
  const Pco truth(3, -2, 5);
  const PhaseMap norm = noiseless_normalized(g, 1176.45, truth);
  const PcoPointCloud cloud = solve_pco_per_elevation(norm, 0.0);
  CHECK(cloud.points.size() == 90);  // zenith excluded
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    REQUIRE(cloud.elevations_deg[i] < 90.0);
    REQUIRE(std::abs(cloud.points[i].x_mm - truth.x_mm) < 1e-9);
    REQUIRE(std::abs(cloud.points[i].y_mm - truth.y_mm) < 1e-9);
    REQUIRE(std::abs(cloud.points[i].z_mm - truth.z_mm) < 1e-9);
  }
  const PcoEstimate global = solve_pco(norm, 10.0);
  CHECK(std::abs(global.pco.x_mm - cloud.points[0].x_mm) < 1e-9);
}

TEST_CASE("zero map gives zero rings") {
  const SphericalGrid g = SphericalGrid::default_grid();
  const PhaseMap zero(g, 1176.45, std::vector<double>(g.size(), 0.0), true);
  const PcoPointCloud cloud = solve_pco_per_elevation(zero, 10.0);
  for (const Pco& p : cloud.points) {
    REQUIRE(p.x_mm == 0.0);
    REQUIRE(p.y_mm == 0.0);
    REQUIRE(p.z_mm == 0.0);
  }
}

TEST_CASE("the zenith ring is degenerate for per-ring solving") {
  const SphericalGrid g = SphericalGrid::default_grid();
  const PhaseMap zero(g, 1176.45, std::vector<double>(g.size(), 0.0), true);
  try {
    solve_pco_ring(zero, *g.zenith_index());
    FAIL("expected DegenerateRing");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::degenerate_ring);
  }

  const SphericalGrid coarse(std::vector<double>{0, 45, 90}, std::vector<double>{0.0, 180.0});
  const PhaseMap zero2(coarse, 1176.45, std::vector<double>(coarse.size(), 0.0), true);
  try {
    solve_pco_ring(zero2, 0);
    FAIL("expected RankDeficient");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::rank_deficient);
  }
}

TEST_CASE("residual PCV") {
  const SphericalGrid g = SphericalGrid::default_grid();
  const Pco truth(3, -2, 5);
  const PhaseMap norm = noiseless_normalized(g, 1176.45, truth);

  SUBCASE("model-complete map leaves zero residual") {
    const PcvMap res = residual_pcv(norm, truth);
    CHECK(std::abs(res.min_mm()) < 1e-9);
    CHECK(std::abs(res.max_mm()) < 1e-9);
  }
  SUBCASE("zero offset leaves the PCV map itself") {
    const PcvMap res = residual_pcv(norm, Pco(0, 0, 0));
    const PcvMap full = pcv_map(norm);
    for (std::size_t i = 0; i < full.values_mm().size(); ++i)
      REQUIRE(res.values_mm()[i] == doctest::Approx(full.values_mm()[i]).epsilon(1e-12));
  }
  SUBCASE("an azimuth-independent ripple survives, zenith-referenced") {
    const double lambda = wavelength_mm(1176.45);
    std::vector<double> values = forward_phase_map(g, 1176.45, truth, false).values();
    auto ripple_mm = [](double elevation_deg) {
      const double th = (90.0 - elevation_deg) * 3.14159265358979323846 / 180.0;
      return 4.0 * std::sin(th) * std::sin(th);
    };
    for (std::size_t ie = 0; ie < g.n_elevation(); ++ie)
      for (std::size_t ia = 0; ia < g.n_azimuth(); ++ia) {
        auto& v = values[g.node_index(ie, ia)];
        v = wrap_degrees(v + ripple_mm(g.elevations()[ie]) * 360.0 / lambda);
      }
    const PhaseMap rippled = unwrap_and_normalize(PhaseMap(g, 1176.45, values));
    const PcvMap res = residual_pcv(rippled, truth);
    for (std::size_t ie = 0; ie < g.n_elevation(); ++ie)
      REQUIRE(std::abs(res.at(ie, 5) - (ripple_mm(g.elevations()[ie]) - ripple_mm(90.0))) < 1e-9);
  }
}

TEST_CASE("noise propagation matches the oracle bounds") {
  const SphericalGrid g = SphericalGrid::default_grid();
  const Pco truth(3, -2, 5);
  std::mt19937_64 rng(1234);
  const int trials = 300;

  SolveOptions with_bias;
  with_bias.estimate_bias = true;
  SolveOptions plain;
  const PcoSolver solver_bias(g, with_bias);
  const PcoSolver solver_plain(g, plain);

  double sx = 0, sy = 0, sz = 0, szz = 0, sz3 = 0, szz3 = 0, sxx = 0, syy = 0;
  for (int t = 0; t < trials; ++t) {
    const PhaseMap norm = noisy_normalized(g, 1176.0, truth, 1.0, rng);
    const PcoEstimate eb = solver_bias.estimate(norm);
    const PcoEstimate ep = solver_plain.estimate(norm);
    sx += eb.pco.x_mm - truth.x_mm;
    sxx += (eb.pco.x_mm - truth.x_mm) * (eb.pco.x_mm - truth.x_mm);
    sy += eb.pco.y_mm - truth.y_mm;
    syy += (eb.pco.y_mm - truth.y_mm) * (eb.pco.y_mm - truth.y_mm);
    sz += eb.pco.z_mm - truth.z_mm;
    szz += (eb.pco.z_mm - truth.z_mm) * (eb.pco.z_mm - truth.z_mm);
    sz3 += ep.pco.z_mm - truth.z_mm;
    szz3 += (ep.pco.z_mm - truth.z_mm) * (ep.pco.z_mm - truth.z_mm);
  }
  const double std_x = std::sqrt(sxx / trials - (sx / trials) * (sx / trials));
  const double std_y = std::sqrt(syy / trials - (sy / trials) * (sy / trials));
  const double std_z = std::sqrt(szz / trials - (sz / trials) * (sz / trials));
  const double std_z3 = std::sqrt(szz3 / trials - (sz3 / trials) * (sz3 / trials));

  // bias-column solver: oracle predicts ~0.020/0.020/0.037 mm
  CHECK(std_x < 0.05);
  CHECK(std_y < 0.05);
  CHECK(std_z < 0.05);
  // plain 3-parameter solver: the subtracted zenith reference couples its
  // noise into z (oracle ~0.16 mm), which is why the bias column exists
  CHECK(std_z3 > 0.05);
  CHECK(std_z3 < 0.4);
}

TEST_CASE("per-ring z observability weakens toward zenith") {
  // Monte Carlo oracle: with the zenith-referenced response the z column is
  // (cos theta - 1), so high-elevation rings pin z far more loosely than
  // low-elevation rings under i.i.d. phase noise.
  const SphericalGrid g = SphericalGrid::default_grid();
  const auto ie_low = g.find_elevation(10.0);
  const auto ie_high = g.find_elevation(80.0);
  std::mt19937_64 rng(99);
  double acc_low = 0.0, acc_high = 0.0;
  const int trials = 60;
  for (int t = 0; t < trials; ++t) {
    const PhaseMap norm = noisy_normalized(g, 1176.0, Pco(0, 0, 0), 1.0, rng);
    const Pco lo = solve_pco_ring(norm, *ie_low);
    const Pco hi = solve_pco_ring(norm, *ie_high);
    acc_low += lo.z_mm * lo.z_mm;
    acc_high += hi.z_mm * hi.z_mm;
  }
  CHECK(std::sqrt(acc_high / trials) > 3.0 * std::sqrt(acc_low / trials));
}
