// SPDX-License-Identifier: Apache-2.0
#include "antcal/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "antcal/errors.hpp"

namespace antcal {

namespace {
constexpr double kDegToRad = 3.14159265358979323846 / 180.0;
constexpr double kInvSqrt2 = 0.70710678118654752440;

std::size_t ring_index(const GainMap& map, double elevation_deg) {
  auto ie = map.grid().find_elevation(elevation_deg);
  if (!ie)
    raise(Errc::elevation_off_grid,
          "elevation " + std::to_string(elevation_deg) + " is not a grid sample");
  return *ie;
}
}  // namespace

ComplexFieldSample::ComplexFieldSample(double amp, double phase) : amplitude(amp), phase_deg(phase) {
  if (!std::isfinite(amp) || amp < 0.0)
    raise(Errc::unit_error, "field amplitude must be finite and non-negative");
  if (!std::isfinite(phase)) raise(Errc::unit_error, "field phase must be finite");
}

ComplexFieldSample ComplexFieldSample::from_complex(std::complex<double> e) {
  return ComplexFieldSample(std::abs(e), std::arg(e) / kDegToRad);
}

std::complex<double> ComplexFieldSample::to_complex() const {
  return std::polar(amplitude, phase_deg * kDegToRad);
}

VhFieldMap::VhFieldMap(SphericalGrid grid, double frequency_mhz, std::vector<ComplexFieldSample> v,
                       std::vector<ComplexFieldSample> h)
    : grid_(std::move(grid)), frequency_mhz_(frequency_mhz), v_(std::move(v)), h_(std::move(h)) {
  wavelength_mm(frequency_mhz_);
  if (v_.size() != grid_.size() || h_.size() != grid_.size())
    raise(Errc::missing_node, "V/H sample count does not match grid node count");
}

std::pair<std::complex<double>, std::complex<double>> vh_to_circular(std::complex<double> e_v,
                                                                     std::complex<double> e_h) {
  const std::complex<double> j(0.0, 1.0);
  return {(e_v - j * e_h) * kInvSqrt2, (e_v + j * e_h) * kInvSqrt2};
}

std::pair<std::complex<double>, std::complex<double>> circular_to_vh(std::complex<double> e_r,
                                                                     std::complex<double> e_l) {
  const std::complex<double> j(0.0, 1.0);
  return {(e_r + e_l) * kInvSqrt2, j * (e_r - e_l) * kInvSqrt2};
}

GainMap vh_to_gain_map(const VhFieldMap& field) {
  const std::size_t n = field.grid().size();
  std::vector<double> rhcp(n), lhcp(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [e_r, e_l] = vh_to_circular(field.v()[i].to_complex(), field.h()[i].to_complex());
    // floor tiny magnitudes so a vanished hand maps to a deep but finite dBic
    rhcp[i] = 20.0 * std::log10(std::max(std::abs(e_r), 1e-30));
    lhcp[i] = 20.0 * std::log10(std::max(std::abs(e_l), 1e-30));
  }
  return GainMap(field.grid(), field.frequency_mhz(), std::move(rhcp), std::move(lhcp));
}

double linear_average_gain(const GainMap& map, double elevation_deg) {
  const std::size_t ie = ring_index(map, elevation_deg);
  const std::size_t naz = map.grid().n_azimuth();
  double acc = 0.0;
  for (std::size_t ia = 0; ia < naz; ++ia) acc += std::pow(10.0, map.rhcp_at(ie, ia) / 10.0);
  return 10.0 * std::log10(acc / static_cast<double>(naz));
}

double axial_ratio(double e_r_mag, double e_l_mag) {
  if (!std::isfinite(e_r_mag) || !std::isfinite(e_l_mag) || e_r_mag < 0.0 || e_l_mag < 0.0)
    raise(Errc::unit_error, "axial ratio needs finite non-negative magnitudes");
  const double num = e_r_mag + e_l_mag;
  const double den = std::abs(e_r_mag - e_l_mag);
  if (den <= num * std::pow(10.0, -kAxialRatioCeilingDb / 20.0)) return kAxialRatioCeilingDb;
  return 20.0 * std::log10(num / den);
}

double average_axial_ratio(const GainMap& map, double elevation_deg) {
  const std::size_t ie = ring_index(map, elevation_deg);
  const std::size_t naz = map.grid().n_azimuth();
  double acc = 0.0;
  for (std::size_t ia = 0; ia < naz; ++ia) {
    const double r = std::pow(10.0, map.rhcp_at(ie, ia) / 20.0);
    const double l = std::pow(10.0, map.lhcp_at(ie, ia) / 20.0);
    acc += std::pow(10.0, axial_ratio(r, l) / 20.0);
  }
  return 20.0 * std::log10(acc / static_cast<double>(naz));
}

std::vector<ElevationCurveRow> elevation_curves(const GainMap& map) {
  std::vector<ElevationCurveRow> rows;
  rows.reserve(map.grid().n_elevation());
  for (double elev : map.grid().elevations())
    rows.push_back({elev, linear_average_gain(map, elev), average_axial_ratio(map, elev)});
  return rows;
}

std::vector<AzimuthCutRow> azimuth_cut(const GainMap& map, double elevation_deg) {
  const std::size_t ie = ring_index(map, elevation_deg);
  std::vector<AzimuthCutRow> rows;
  rows.reserve(map.grid().n_azimuth());
  for (std::size_t ia = 0; ia < map.grid().n_azimuth(); ++ia) {
    const double g_r = map.rhcp_at(ie, ia);
    const double g_l = map.lhcp_at(ie, ia);
    const double ar = axial_ratio(std::pow(10.0, g_r / 20.0), std::pow(10.0, g_l / 20.0));
    rows.push_back({map.grid().azimuths()[ia], g_r, g_l, ar});
  }
  return rows;
}

}  // namespace antcal
