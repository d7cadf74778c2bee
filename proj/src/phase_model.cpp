// SPDX-License-Identifier: Apache-2.0
#include "antcal/phase_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "antcal/errors.hpp"

namespace antcal {

Pco::Pco(double x, double y, double z) : x_mm(x), y_mm(y), z_mm(z) {
  for (double v : {x, y, z}) {
    if (!std::isfinite(v)) raise(Errc::unit_error, "phase center offset must be finite");
    if (std::abs(v) >= 1000.0)
      raise(Errc::unit_error, "phase center offset component beyond 1000 mm: " + std::to_string(v));
  }
}

double forward_phase(const Pco& pco, const Direction& d, double frequency_mhz) {
  const auto u = d.unit_vector();
  const double projection_mm = u[0] * pco.x_mm + u[1] * pco.y_mm + u[2] * pco.z_mm;
  return 360.0 * projection_mm / wavelength_mm(frequency_mhz);
}

PhaseMap forward_phase_map(const SphericalGrid& grid, double frequency_mhz, const Pco& pco,
                           bool wrapped) {
  std::vector<double> values(grid.size());
  for (std::size_t ie = 0; ie < grid.n_elevation(); ++ie)
    for (std::size_t ia = 0; ia < grid.n_azimuth(); ++ia) {
      double v = forward_phase(pco, grid.direction(ie, ia), frequency_mhz);
      values[grid.node_index(ie, ia)] = wrapped ? wrap_degrees(v) : v;
    }
  return PhaseMap(grid, frequency_mhz, std::move(values));
}

PhaseMap unwrap_and_normalize(const PhaseMap& raw) {
  const SphericalGrid& grid = raw.grid();
  const auto zenith = grid.zenith_index();
  if (!zenith)
    raise(Errc::missing_zenith, "ARP normalization needs the elevation=90 ring on the grid");
  const std::size_t nz = *zenith;  // highest elevation, last row
  const std::size_t naz = grid.n_azimuth();

  // All elevation-90 samples are the same physical direction; collapse them
  // to one reference value before walking down.
  std::vector<double> zenith_values(naz);
  for (std::size_t ia = 0; ia < naz; ++ia) zenith_values[ia] = raw.at(nz, ia);
  const double reference = circular_mean_deg(zenith_values);

  std::vector<double> out(grid.size());
  for (std::size_t ia = 0; ia < naz; ++ia) {
    out[grid.node_index(nz, ia)] = reference;
    double prev = reference;
    for (std::size_t step = 1; step <= nz; ++step) {
      const std::size_t ie = nz - step;
      const double v = raw.at(ie, ia);
      const double unwrapped = v - 360.0 * std::round((v - prev) / 360.0);
      out[grid.node_index(ie, ia)] = unwrapped;
      prev = unwrapped;
    }
  }

  for (double& v : out) v -= reference;

  // Radial unwrapping fixes each cut independently; neighbouring cuts must
  // still agree or the grid is too coarse in azimuth to trust.
  if (naz > 1) {
    for (std::size_t ie = 0; ie < grid.n_elevation(); ++ie)
      for (std::size_t ia = 0; ia < naz; ++ia) {
        const std::size_t ib = (ia + 1) % naz;
        const double d = out[grid.node_index(ie, ia)] - out[grid.node_index(ie, ib)];
        if (std::abs(d) > 180.0)
          raise(Errc::unwrap_ambiguity,
                "azimuth cuts disagree by " + std::to_string(d) + " deg at elevation " +
                    std::to_string(grid.elevations()[ie]) + ", azimuth " +
                    std::to_string(grid.azimuths()[ia]));
      }
  }

  return PhaseMap(grid, raw.frequency_mhz(), std::move(out), /*normalized=*/true);
}

double phase_to_pcv(double phase_deg, double frequency_mhz) {
  return phase_deg / 360.0 * wavelength_mm(frequency_mhz);
}

PcvMap pcv_map(const PhaseMap& normalized) {
  if (!normalized.normalized())
    raise(Errc::not_normalized, "phase map must be ARP-normalized before PCV conversion");
  std::vector<double> mm(normalized.values().size());
  const double lambda = wavelength_mm(normalized.frequency_mhz());
  for (std::size_t i = 0; i < mm.size(); ++i) mm[i] = normalized.values()[i] / 360.0 * lambda;
  return PcvMap(normalized.grid(), normalized.frequency_mhz(), std::move(mm));
}

PcvMap::PcvMap(SphericalGrid grid, double frequency_mhz, std::vector<double> values_mm)
    : grid_(std::move(grid)), frequency_mhz_(frequency_mhz), values_(std::move(values_mm)) {
  wavelength_mm(frequency_mhz_);
  if (values_.size() != grid_.size())
    raise(Errc::missing_node, "PCV map value count does not match grid node count");
  for (double v : values_)
    if (!std::isfinite(v)) raise(Errc::unit_error, "non-finite PCV value");
}

double PcvMap::min_mm() const { return *std::min_element(values_.begin(), values_.end()); }
double PcvMap::max_mm() const { return *std::max_element(values_.begin(), values_.end()); }

double PcvMap::sample(double elevation_deg, double azimuth_deg) const {
  const auto& elev = grid_.elevations();
  const auto& azim = grid_.azimuths();
  constexpr double tol = 1e-9;

  if (elevation_deg < elev.front() - tol || elevation_deg > elev.back() + tol)
    raise(Errc::unresampleable_grid,
          "elevation " + std::to_string(elevation_deg) + " outside grid span [" +
              std::to_string(elev.front()) + ", " + std::to_string(elev.back()) + "]");
  elevation_deg = std::clamp(elevation_deg, elev.front(), elev.back());

  // elevation bracket
  std::size_t ie0 = 0, ie1 = 0;
  double te = 0.0;
  {
    auto it = std::upper_bound(elev.begin(), elev.end(), elevation_deg);
    if (it == elev.begin()) {
      ie0 = ie1 = 0;
    } else if (it == elev.end()) {
      ie0 = ie1 = elev.size() - 1;
    } else {
      ie1 = static_cast<std::size_t>(it - elev.begin());
      ie0 = ie1 - 1;
      te = (elevation_deg - elev[ie0]) / (elev[ie1] - elev[ie0]);
    }
  }

  // azimuth bracket with wrap across 360
  double az = azimuth_deg - 360.0 * std::floor(azimuth_deg / 360.0);
  if (az >= 360.0) az = 0.0;
  std::size_t ia0 = 0, ia1 = 0;
  double ta = 0.0;
  if (azim.size() == 1) {
    ia0 = ia1 = 0;
  } else if (az < azim.front()) {
    ia0 = azim.size() - 1;
    ia1 = 0;
    const double span = 360.0 - azim[ia0] + azim[ia1];
    ta = (az + 360.0 - azim[ia0]) / span;
  } else {
    auto it = std::upper_bound(azim.begin(), azim.end(), az);
    if (it == azim.end()) {
      ia0 = azim.size() - 1;
      ia1 = 0;
      const double span = 360.0 - azim[ia0] + azim[ia1];
      ta = (az - azim[ia0]) / span;
    } else {
      ia1 = static_cast<std::size_t>(it - azim.begin());
      ia0 = ia1 - 1;
      ta = (az - azim[ia0]) / (azim[ia1] - azim[ia0]);
    }
  }

  const double v00 = at(ie0, ia0), v01 = at(ie0, ia1);
  const double v10 = at(ie1, ia0), v11 = at(ie1, ia1);
  const double low = v00 + ta * (v01 - v00);
  const double high = v10 + ta * (v11 - v10);
  return low + te * (high - low);
}

}  // namespace antcal
