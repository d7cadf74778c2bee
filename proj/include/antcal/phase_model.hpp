// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "antcal/grid.hpp"

namespace antcal {

/// Phase center offset in millimeters, antenna-fixed frame:
/// x = forward (azimuth 0), y = left (azimuth 90), z = up (boresight).
struct Pco {
  double x_mm = 0.0;
  double y_mm = 0.0;
  double z_mm = 0.0;

  Pco() = default;
  Pco(double x, double y, double z);
};

/// Phase center variation in millimeters over a grid, referenced so the
/// zenith value is 0 when derived from a normalized phase map.
class PcvMap {
public:
  PcvMap(SphericalGrid grid, double frequency_mhz, std::vector<double> values_mm);

  const SphericalGrid& grid() const { return grid_; }
  double frequency_mhz() const { return frequency_mhz_; }
  const std::vector<double>& values_mm() const { return values_; }
  double at(std::size_t ie, std::size_t ia) const { return values_[grid_.node_index(ie, ia)]; }

  double min_mm() const;
  double max_mm() const;

  /// Bilinear sample at an arbitrary direction; azimuth wraps around 360.
  /// Throws UnresampleableGrid when the elevation is outside the grid span.
  double sample(double elevation_deg, double azimuth_deg) const;

private:
  SphericalGrid grid_;
  double frequency_mhz_;
  std::vector<double> values_;
};

/// Phase in degrees observed from direction d when the phase center sits at
/// `pco` relative to the ARP. Unbounded (not wrapped): one wavelength of
/// displacement along the look direction is 360 degrees.
double forward_phase(const Pco& pco, const Direction& d, double frequency_mhz);

/// Raw phase map of a displaced phase center, optionally wrapped to (-180, 180].
PhaseMap forward_phase_map(const SphericalGrid& grid, double frequency_mhz, const Pco& pco,
                           bool wrapped = false);

/// Unwraps a (possibly wrapped) phase map and references it to the ARP:
/// the elevation-90 samples are collapsed to their circular mean, each azimuth
/// cut is unwrapped walking from zenith down to the horizon, and the zenith
/// reference is subtracted so the zenith phase is exactly zero.
/// Throws UnwrapAmbiguity when adjacent azimuth cuts still disagree by more
/// than 180 degrees after the radial pass (under-sampled data).
PhaseMap unwrap_and_normalize(const PhaseMap& raw);

/// Phase in degrees to millimeters of path length at the given carrier.
double phase_to_pcv(double phase_deg, double frequency_mhz);

/// Nodewise phase-to-millimeter conversion of a normalized map.
PcvMap pcv_map(const PhaseMap& normalized);

}  // namespace antcal
