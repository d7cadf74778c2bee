// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "antcal/pco_estimator.hpp"

namespace antcal {

struct CepReport {
  double mean_x_mm = 0.0;
  double mean_y_mm = 0.0;
  double cep50_mm = 0.0;
  double cep68_mm = 0.0;
  double cep95_mm = 0.0;
  std::size_t n_points = 0;
};

/// Nearest-rank circular error probable: the radius from the arithmetic mean
/// below which ceil(fraction * n) of the points fall (inclusive). The result
/// is always one of the actual point radii.
double cep(const std::vector<std::pair<double, double>>& points_mm, double fraction);

/// CEP50/68/95 of a PCO point cloud projected onto the horizontal plane.
CepReport cep_report(const PcoPointCloud& cloud);

/// One result column of the summary table:
///
///   L5: 1176MHz
///               EVB
///   PCV [mm]    -36.3 to 16.5
///   PCO
///   CEP50[mm]   1.9
///   CEP68[mm]   2.3
///   CEP95[mm]   3.5
///
/// Millimeter quantities carry one decimal.
std::string render_report(double frequency_mhz, const std::string& scenario, double pcv_min_mm,
                          double pcv_max_mm, const CepReport& cep);

/// "L5" / "L1" / "L2" for the GNSS bands, "F" otherwise.
std::string band_label(double frequency_mhz);

}  // namespace antcal
