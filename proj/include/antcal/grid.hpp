// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

namespace antcal {

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s, exact

/// Carrier wavelength in millimeters for a frequency given in MHz.
double wavelength_mm(double frequency_mhz);

/// Wrap an angle in degrees into (-180, 180].
double wrap_degrees(double deg);

/// Mean direction of a set of angles, degrees in, degrees out in (-180, 180].
/// Returns 0 for an empty set or when the resultant vector vanishes.
double circular_mean_deg(const std::vector<double>& angles_deg);

/// A look direction in the antenna-fixed frame.
/// theta is the boresight angle (0 = zenith, 90 = horizon), so
/// theta = 90 - elevation. phi is azimuth, normalized to [0, 360),
/// measured from +x (vehicle forward) toward +y.
struct Direction {
  double theta_deg = 0.0;
  double phi_deg = 0.0;

  Direction() = default;
  Direction(double theta, double phi);
  static Direction from_elevation(double elevation_deg, double azimuth_deg);

  double elevation_deg() const { return 90.0 - theta_deg; }

  /// (sin θ cos φ, sin θ sin φ, cos θ); unit norm.
  std::array<double, 3> unit_vector() const;
};

/// The elevation x azimuth sampling lattice of an antenna range.
/// Node iteration order is elevation-major, azimuth-minor.
class SphericalGrid {
public:
  SphericalGrid(std::vector<double> elevations_deg, std::vector<double> azimuths_deg);

  /// Elevation 0..90 step 1 deg, azimuth 0..355 step 5 deg.
  static SphericalGrid default_grid();
  /// Elevation 0..90 and azimuth 0..<360 with the given steps.
  static SphericalGrid with_steps(double elevation_step_deg, double azimuth_step_deg);

  const std::vector<double>& elevations() const { return elevations_; }
  const std::vector<double>& azimuths() const { return azimuths_; }
  std::size_t n_elevation() const { return elevations_.size(); }
  std::size_t n_azimuth() const { return azimuths_.size(); }
  std::size_t size() const { return elevations_.size() * azimuths_.size(); }

  std::size_t node_index(std::size_t ie, std::size_t ia) const { return ie * azimuths_.size() + ia; }
  Direction direction(std::size_t ie, std::size_t ia) const;

  std::optional<std::size_t> find_elevation(double elevation_deg) const;
  std::optional<std::size_t> find_azimuth(double azimuth_deg) const;
  /// Index of the elevation == 90 ring, if present.
  std::optional<std::size_t> zenith_index() const { return find_elevation(90.0); }

  bool operator==(const SphericalGrid& other) const = default;

private:
  std::vector<double> elevations_;
  std::vector<double> azimuths_;
};

/// Measured carrier phase in degrees over a grid, one value per node.
/// `normalized` means the map has been referenced to the ARP: zenith = 0.
class PhaseMap {
public:
  PhaseMap(SphericalGrid grid, double frequency_mhz, std::vector<double> values_deg,
           bool normalized = false);

  const SphericalGrid& grid() const { return grid_; }
  double frequency_mhz() const { return frequency_mhz_; }
  const std::vector<double>& values() const { return values_; }
  double at(std::size_t ie, std::size_t ia) const { return values_[grid_.node_index(ie, ia)]; }
  bool normalized() const { return normalized_; }

private:
  SphericalGrid grid_;
  double frequency_mhz_;
  std::vector<double> values_;
  bool normalized_;
};

/// RHCP/LHCP gain in dBic over a grid.
class GainMap {
public:
  GainMap(SphericalGrid grid, double frequency_mhz, std::vector<double> rhcp_dbic,
          std::vector<double> lhcp_dbic);

  const SphericalGrid& grid() const { return grid_; }
  double frequency_mhz() const { return frequency_mhz_; }
  const std::vector<double>& rhcp_dbic() const { return rhcp_; }
  const std::vector<double>& lhcp_dbic() const { return lhcp_; }
  double rhcp_at(std::size_t ie, std::size_t ia) const { return rhcp_[grid_.node_index(ie, ia)]; }
  double lhcp_at(std::size_t ie, std::size_t ia) const { return lhcp_[grid_.node_index(ie, ia)]; }

private:
  SphericalGrid grid_;
  double frequency_mhz_;
  std::vector<double> rhcp_;
  std::vector<double> lhcp_;
};

}  // namespace antcal
