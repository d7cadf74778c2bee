// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

#include "antcal/grid.hpp"

namespace antcal {

/// One measured field sample: linear amplitude plus phase in degrees.
struct ComplexFieldSample {
  double amplitude = 0.0;  // linear volts (or normalized), >= 0
  double phase_deg = 0.0;

  ComplexFieldSample() = default;
  ComplexFieldSample(double amp, double phase);
  static ComplexFieldSample from_complex(std::complex<double> e);
  std::complex<double> to_complex() const;
};

/// Dual-linear (V/H port) field samples over a grid.
class VhFieldMap {
public:
  VhFieldMap(SphericalGrid grid, double frequency_mhz, std::vector<ComplexFieldSample> v,
             std::vector<ComplexFieldSample> h);

  const SphericalGrid& grid() const { return grid_; }
  double frequency_mhz() const { return frequency_mhz_; }
  const ComplexFieldSample& v_at(std::size_t ie, std::size_t ia) const {
    return v_[grid_.node_index(ie, ia)];
  }
  const ComplexFieldSample& h_at(std::size_t ie, std::size_t ia) const {
    return h_[grid_.node_index(ie, ia)];
  }
  const std::vector<ComplexFieldSample>& v() const { return v_; }
  const std::vector<ComplexFieldSample>& h() const { return h_; }

private:
  SphericalGrid grid_;
  double frequency_mhz_;
  std::vector<ComplexFieldSample> v_;
  std::vector<ComplexFieldSample> h_;
};

/// Dual-linear to circular conversion, e^{+jwt} time convention:
/// e_R = (e_V - j e_H)/sqrt(2), e_L = (e_V + j e_H)/sqrt(2).
/// Power-conserving and invertible.
std::pair<std::complex<double>, std::complex<double>> vh_to_circular(std::complex<double> e_v,
                                                                     std::complex<double> e_h);

/// Inverse of vh_to_circular.
std::pair<std::complex<double>, std::complex<double>> circular_to_vh(std::complex<double> e_r,
                                                                     std::complex<double> e_l);

/// RHCP/LHCP gains in dBic per node from a dual-linear field map.
GainMap vh_to_gain_map(const VhFieldMap& field);

/// Gain averaged in linear power over the azimuth ring at `elevation_deg`.
double linear_average_gain(const GainMap& map, double elevation_deg);

/// Axial ratio in dB from the two circular hand magnitudes, clamped at 60 dB
/// for (near-)linear polarization. 0 dB means pure circular.
double axial_ratio(double e_r_mag, double e_l_mag);

inline constexpr double kAxialRatioCeilingDb = 60.0;

/// Per-azimuth axial ratios converted to linear scale, averaged over the
/// ring, and converted back to dB (same averaging rule as the gain).
double average_axial_ratio(const GainMap& map, double elevation_deg);

struct ElevationCurveRow {
  double elevation_deg;
  double lag_dbi;
  double ar_db;
};

/// Gain/axial-ratio curves over every grid elevation (plot-ready).
std::vector<ElevationCurveRow> elevation_curves(const GainMap& map);

struct AzimuthCutRow {
  double azimuth_deg;
  double rhcp_dbic;
  double lhcp_dbic;
  double ar_db;
};

/// Azimuth cut at a fixed elevation for polar plots.
std::vector<AzimuthCutRow> azimuth_cut(const GainMap& map, double elevation_deg);

}  // namespace antcal
