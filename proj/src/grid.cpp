// SPDX-License-Identifier: Apache-2.0
#include "antcal/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "antcal/errors.hpp"

namespace antcal {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kDegToRad = kPi / 180.0;
constexpr double kAngleTol = 1e-9;
}  // namespace

double wavelength_mm(double frequency_mhz) {
  if (!(frequency_mhz > 0.0))
    raise(Errc::degenerate_frequencies,
          "frequency must be positive, got " + std::to_string(frequency_mhz) + " MHz");
  // c [m/s] / f [Hz] -> m, times 1e3 -> mm; collapses to c*1e-3 / f_MHz.
  return kSpeedOfLight * 1e-3 / frequency_mhz;
}

double wrap_degrees(double deg) {
  double r = std::remainder(deg, 360.0);
  if (r <= -180.0) r += 360.0;
  return r;
}

double circular_mean_deg(const std::vector<double>& angles_deg) {
  if (angles_deg.empty()) return 0.0;
  double sx = 0.0, sy = 0.0;
  for (double a : angles_deg) {
    sx += std::cos(a * kDegToRad);
    sy += std::sin(a * kDegToRad);
  }
  if (std::hypot(sx, sy) < 1e-12) return 0.0;
  double mean = std::atan2(sy, sx) / kDegToRad;
  return wrap_degrees(mean);
}

Direction::Direction(double theta, double phi) : theta_deg(theta), phi_deg(phi) {
  if (!std::isfinite(theta) || theta < -kAngleTol || theta > 90.0 + kAngleTol)
    raise(Errc::invalid_angle, "boresight angle must be in [0, 90], got " + std::to_string(theta));
  theta_deg = std::clamp(theta, 0.0, 90.0);
  if (!std::isfinite(phi)) raise(Errc::invalid_angle, "azimuth must be finite");
  phi_deg = phi - 360.0 * std::floor(phi / 360.0);
  if (phi_deg >= 360.0) phi_deg = 0.0;  // guards the floor rounding edge
}

Direction Direction::from_elevation(double elevation_deg, double azimuth_deg) {
  return Direction(90.0 - elevation_deg, azimuth_deg);
}

std::array<double, 3> Direction::unit_vector() const {
  const double th = theta_deg * kDegToRad;
  const double ph = phi_deg * kDegToRad;
  return {std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th)};
}

SphericalGrid::SphericalGrid(std::vector<double> elevations_deg, std::vector<double> azimuths_deg)
    : elevations_(std::move(elevations_deg)), azimuths_(std::move(azimuths_deg)) {
  if (elevations_.empty() || azimuths_.empty())
    raise(Errc::empty_input, "grid axes must be non-empty");
  for (std::size_t i = 0; i < elevations_.size(); ++i) {
    double e = elevations_[i];
    if (!std::isfinite(e) || e < -kAngleTol || e > 90.0 + kAngleTol)
      raise(Errc::invalid_angle, "elevation sample outside [0, 90]: " + std::to_string(e));
    if (i > 0 && !(elevations_[i - 1] < e - kAngleTol))
      raise(Errc::invalid_angle, "elevation samples must be strictly increasing");
  }
  for (std::size_t i = 0; i < azimuths_.size(); ++i) {
    double a = azimuths_[i];
    if (!std::isfinite(a) || a < -kAngleTol || a >= 360.0 - kAngleTol)
      raise(Errc::invalid_angle, "azimuth sample outside [0, 360): " + std::to_string(a));
    if (i > 0 && !(azimuths_[i - 1] < a - kAngleTol))
      raise(Errc::invalid_angle, "azimuth samples must be strictly increasing");
  }
}

SphericalGrid SphericalGrid::default_grid() { return with_steps(1.0, 5.0); }

SphericalGrid SphericalGrid::with_steps(double elevation_step_deg, double azimuth_step_deg) {
  if (!(elevation_step_deg > 0.0))
    raise(Errc::invalid_step, "elevation step must be positive, got " + std::to_string(elevation_step_deg));
  if (!(azimuth_step_deg > 0.0))
    raise(Errc::invalid_step, "azimuth step must be positive, got " + std::to_string(azimuth_step_deg));
  std::vector<double> elev, azim;
  for (int k = 0;; ++k) {
    double v = k * elevation_step_deg;
    if (v > 90.0 + kAngleTol) break;
    elev.push_back(std::min(v, 90.0));
  }
  for (int k = 0;; ++k) {
    double v = k * azimuth_step_deg;
    if (v >= 360.0 - kAngleTol) break;
    azim.push_back(v);
  }
  return SphericalGrid(std::move(elev), std::move(azim));
}

Direction SphericalGrid::direction(std::size_t ie, std::size_t ia) const {
  return Direction::from_elevation(elevations_[ie], azimuths_[ia]);
}

namespace {
std::optional<std::size_t> find_angle(const std::vector<double>& axis, double value) {
  for (std::size_t i = 0; i < axis.size(); ++i)
    if (std::abs(axis[i] - value) <= kAngleTol) return i;
  return std::nullopt;
}
}  // namespace

std::optional<std::size_t> SphericalGrid::find_elevation(double elevation_deg) const {
  return find_angle(elevations_, elevation_deg);
}

std::optional<std::size_t> SphericalGrid::find_azimuth(double azimuth_deg) const {
  return find_angle(azimuths_, azimuth_deg);
}

PhaseMap::PhaseMap(SphericalGrid grid, double frequency_mhz, std::vector<double> values_deg,
                   bool normalized)
    : grid_(std::move(grid)),
      frequency_mhz_(frequency_mhz),
      values_(std::move(values_deg)),
      normalized_(normalized) {
  wavelength_mm(frequency_mhz_);  // validates positivity
  if (values_.size() != grid_.size())
    raise(Errc::missing_node, "phase map has " + std::to_string(values_.size()) + " values for " +
                                  std::to_string(grid_.size()) + " grid nodes");
  for (double v : values_)
    if (!std::isfinite(v)) raise(Errc::unit_error, "non-finite phase value");
  if (normalized_) {
    auto iz = grid_.zenith_index();
    if (!iz) raise(Errc::missing_zenith, "normalized map requires an elevation=90 ring");
    for (std::size_t ia = 0; ia < grid_.n_azimuth(); ++ia)
      if (std::abs(at(*iz, ia)) > 1e-9)
        raise(Errc::not_normalized, "normalized flag set but zenith phase is nonzero");
  }
}

GainMap::GainMap(SphericalGrid grid, double frequency_mhz, std::vector<double> rhcp_dbic,
                 std::vector<double> lhcp_dbic)
    : grid_(std::move(grid)),
      frequency_mhz_(frequency_mhz),
      rhcp_(std::move(rhcp_dbic)),
      lhcp_(std::move(lhcp_dbic)) {
  wavelength_mm(frequency_mhz_);
  if (rhcp_.size() != grid_.size() || lhcp_.size() != grid_.size())
    raise(Errc::missing_node, "gain map value count does not match grid node count");
  for (double v : rhcp_)
    if (!std::isfinite(v)) raise(Errc::unit_error, "non-finite RHCP gain value");
  for (double v : lhcp_)
    if (!std::isfinite(v)) raise(Errc::unit_error, "non-finite LHCP gain value");
}

}  // namespace antcal
