// SPDX-License-Identifier: Apache-2.0
#include "antcal/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "antcal/errors.hpp"

namespace antcal {

double cep(const std::vector<std::pair<double, double>>& points_mm, double fraction) {
  if (points_mm.empty()) raise(Errc::empty_input, "CEP needs at least one point");
  if (!(fraction > 0.0) || !(fraction < 1.0))
    raise(Errc::bad_config, "CEP fraction must lie in (0, 1), got " + std::to_string(fraction));

  double mx = 0.0, my = 0.0;
  for (const auto& [x, y] : points_mm) {
    mx += x;
    my += y;
  }
  const std::size_t n = points_mm.size();
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);

  std::vector<double> radii(n);
  for (std::size_t i = 0; i < n; ++i)
    radii[i] = std::hypot(points_mm[i].first - mx, points_mm[i].second - my);
  std::sort(radii.begin(), radii.end());

  // Nearest rank, inclusive: smallest k with k >= fraction*n. The epsilon
  // keeps exact products like 0.68*100 from rounding up to the next rank.
  auto rank = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n) - 1e-9));
  rank = std::clamp<std::size_t>(rank, 1, n);
  return radii[rank - 1];
}

CepReport cep_report(const PcoPointCloud& cloud) {
  if (cloud.points.empty()) raise(Errc::empty_input, "CEP report needs a non-empty point cloud");
  std::vector<std::pair<double, double>> xy;
  xy.reserve(cloud.points.size());
  for (const Pco& p : cloud.points) xy.emplace_back(p.x_mm, p.y_mm);

  CepReport r;
  r.n_points = xy.size();
  for (const auto& [x, y] : xy) {
    r.mean_x_mm += x;
    r.mean_y_mm += y;
  }
  r.mean_x_mm /= static_cast<double>(xy.size());
  r.mean_y_mm /= static_cast<double>(xy.size());
  r.cep50_mm = cep(xy, 0.50);
  r.cep68_mm = cep(xy, 0.68);
  r.cep95_mm = cep(xy, 0.95);
  return r;
}

std::string band_label(double frequency_mhz) {
  if (frequency_mhz >= 1559.0 && frequency_mhz <= 1610.0) return "L1";
  if (frequency_mhz >= 1215.0 && frequency_mhz <= 1237.0) return "L2";
  if (frequency_mhz >= 1164.0 && frequency_mhz <= 1189.0) return "L5";
  return "F";
}

namespace {
std::string format_mhz(double frequency_mhz) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", frequency_mhz);
  std::string s(buf);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

std::string one_decimal(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", v);
  std::string s(buf);
  if (s == "-0.0") s = "0.0";
  return s;
}

void row(std::string& out, const std::string& label, const std::string& value) {
  std::string padded = label;
  while (padded.size() < 12) padded.push_back(' ');
  out += padded + value + "\n";
}
}  // namespace

std::string render_report(double frequency_mhz, const std::string& scenario, double pcv_min_mm,
                          double pcv_max_mm, const CepReport& cep) {
  std::string out;
  out += band_label(frequency_mhz) + ": " + format_mhz(frequency_mhz) + "MHz\n";
  row(out, "", scenario);
  row(out, "PCV [mm]", one_decimal(pcv_min_mm) + " to " + one_decimal(pcv_max_mm));
  out += "PCO\n";
  row(out, "CEP50[mm]", one_decimal(cep.cep50_mm));
  row(out, "CEP68[mm]", one_decimal(cep.cep68_mm));
  row(out, "CEP95[mm]", one_decimal(cep.cep95_mm));
  return out;
}

}  // namespace antcal
