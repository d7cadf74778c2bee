// SPDX-License-Identifier: Apache-2.0
#include "antcal/pco_estimator.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <memory>
#include <string>

#include "antcal/errors.hpp"

namespace antcal {

namespace {
constexpr double kDegToRad = 3.14159265358979323846 / 180.0;
constexpr double kAngleTol = 1e-9;
constexpr double kConditionLimit = 1e12;

/// Zenith-referenced direction response: the normalized map stores phase
/// relative to the boresight datum, so the model row is u(d) - u(zenith).
inline void referenced_row(double elevation_deg, double azimuth_deg, double* row) {
  const double th = (90.0 - elevation_deg) * kDegToRad;
  const double ph = azimuth_deg * kDegToRad;
  row[0] = std::sin(th) * std::cos(ph);
  row[1] = std::sin(th) * std::sin(ph);
  row[2] = std::cos(th) - 1.0;
}
}  // namespace

std::vector<std::size_t> apply_elevation_mask(const SphericalGrid& grid, double mask_deg) {
  if (!(mask_deg >= 0.0) || !(mask_deg < 90.0))
    raise(Errc::invalid_angle, "elevation mask must lie in [0, 90), got " + std::to_string(mask_deg));
  std::vector<std::size_t> nodes;
  for (std::size_t ie = 0; ie < grid.n_elevation(); ++ie) {
    if (grid.elevations()[ie] < mask_deg - kAngleTol) continue;
    for (std::size_t ia = 0; ia < grid.n_azimuth(); ++ia) nodes.push_back(grid.node_index(ie, ia));
  }
  return nodes;
}

struct PcoSolver::Impl {
  std::vector<std::size_t> node_indices;  // rows, excluding the zenith ring
  std::vector<double> sqrt_weights;
  double weight_sum = 0.0;
  Eigen::MatrixXd design;
  Eigen::BDCSVD<Eigen::MatrixXd> svd;
  double condition = 1.0;
};

PcoSolver::PcoSolver(const SphericalGrid& grid, const SolveOptions& options)
    : options_(options), grid_(grid) {
  if (!(options.mask_elevation_deg >= 0.0) || !(options.mask_elevation_deg < 90.0))
    raise(Errc::invalid_angle, "elevation mask must lie in [0, 90)");

  auto impl = std::make_shared<Impl>();
  // The zenith ring is the reference datum itself: after normalization its
  // value is zero by construction and its referenced response row vanishes,
  // so it contributes no observation.
  for (std::size_t ie = 0; ie < grid.n_elevation(); ++ie) {
    const double elev = grid.elevations()[ie];
    if (elev < options.mask_elevation_deg - kAngleTol) continue;
    if (elev > 90.0 - kAngleTol) continue;
    for (std::size_t ia = 0; ia < grid.n_azimuth(); ++ia)
      impl->node_indices.push_back(grid.node_index(ie, ia));
  }
  const std::size_t n = impl->node_indices.size();
  if (n < 3)
    raise(Errc::mask_too_tight, "only " + std::to_string(n) +
                                     " usable nodes survive the " +
                                     std::to_string(options.mask_elevation_deg) + " deg mask");

  const std::size_t ncols = options.estimate_bias ? 4 : 3;
  impl->design.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(ncols));
  impl->sqrt_weights.resize(n);
  const std::size_t naz = grid.n_azimuth();
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t node = impl->node_indices[r];
    const std::size_t ie = node / naz;
    const std::size_t ia = node % naz;
    const double elev = grid.elevations()[ie];
    double row[3];
    referenced_row(elev, grid.azimuths()[ia], row);
    double w = 1.0;
    if (options.weighting == Weighting::sin_theta) w = std::sin((90.0 - elev) * kDegToRad);
    impl->weight_sum += w;
    const double sw = std::sqrt(w);
    impl->sqrt_weights[r] = sw;
    for (std::size_t c = 0; c < 3; ++c)
      impl->design(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = row[c] * sw;
    if (options.estimate_bias) impl->design(static_cast<Eigen::Index>(r), 3) = sw;
  }

  impl->svd.compute(impl->design, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = impl->svd.singularValues();
  const double smax = s(0);
  const double smin = s(s.size() - 1);
  impl->condition = (smin > 0.0) ? smax / smin : std::numeric_limits<double>::infinity();
  if (!(impl->condition <= kConditionLimit))
    raise(Errc::rank_deficient, "masked design matrix is numerically rank deficient (condition " +
                                    std::to_string(impl->condition) + ")");
  impl_ = std::move(impl);
}

PcoEstimate PcoSolver::estimate(const PhaseMap& normalized) const {
  if (!normalized.normalized())
    raise(Errc::not_normalized, "solver input must be an ARP-normalized phase map");
  if (!(normalized.grid() == grid_))
    raise(Errc::mismatched_structure, "phase map grid does not match the solver grid");

  const Impl& im = *impl_;
  const double lambda = wavelength_mm(normalized.frequency_mhz());
  const std::size_t n = im.node_indices.size();
  Eigen::VectorXd b(static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r)
    b(static_cast<Eigen::Index>(r)) =
        normalized.values()[im.node_indices[r]] / 360.0 * lambda * im.sqrt_weights[r];

  const Eigen::VectorXd x = im.svd.solve(b);
  const Eigen::VectorXd resid = im.design * x - b;

  PcoEstimate est;
  est.pco = Pco(x(0), x(1), x(2));
  est.bias_mm = options_.estimate_bias ? x(3) : 0.0;
  est.rms_residual_mm = std::sqrt(resid.squaredNorm() / im.weight_sum);
  est.condition_number = im.condition;
  est.n_obs = n;
  est.mask_elevation_deg = options_.mask_elevation_deg;
  return est;
}

PcoEstimate solve_pco(const PhaseMap& normalized, double mask_elevation_deg, bool estimate_bias,
                      Weighting weighting) {
  SolveOptions opts;
  opts.mask_elevation_deg = mask_elevation_deg;
  opts.estimate_bias = estimate_bias;
  opts.weighting = weighting;
  return PcoSolver(normalized.grid(), opts).estimate(normalized);
}

Pco solve_pco_ring(const PhaseMap& normalized, std::size_t elevation_index) {
  if (!normalized.normalized())
    raise(Errc::not_normalized, "ring solver input must be an ARP-normalized phase map");
  const SphericalGrid& grid = normalized.grid();
  if (elevation_index >= grid.n_elevation())
    raise(Errc::elevation_off_grid, "elevation index out of range");
  const double elev = grid.elevations()[elevation_index];
  const double th = (90.0 - elev) * kDegToRad;
  if (std::sin(th) < 1e-12)
    raise(Errc::degenerate_ring,
          "elevation " + std::to_string(elev) + " ring is a single physical direction");
  const std::size_t naz = grid.n_azimuth();
  if (naz < 3)
    raise(Errc::rank_deficient, "ring needs at least 3 azimuth samples, got " + std::to_string(naz));

  Eigen::MatrixXd a(static_cast<Eigen::Index>(naz), 3);
  Eigen::VectorXd b(static_cast<Eigen::Index>(naz));
  const double lambda = wavelength_mm(normalized.frequency_mhz());
  for (std::size_t ia = 0; ia < naz; ++ia) {
    double row[3];
    referenced_row(elev, grid.azimuths()[ia], row);
    for (int c = 0; c < 3; ++c) a(static_cast<Eigen::Index>(ia), c) = row[c];
    b(static_cast<Eigen::Index>(ia)) = normalized.at(elevation_index, ia) / 360.0 * lambda;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  const double cond = (s(2) > 0.0) ? s(0) / s(2) : std::numeric_limits<double>::infinity();
  if (!(cond <= kConditionLimit))
    raise(Errc::rank_deficient, "elevation " + std::to_string(elev) +
                                    " ring design is rank deficient (condition " +
                                    std::to_string(cond) + ")");
  const Eigen::VectorXd x = svd.solve(b);
  return Pco(x(0), x(1), x(2));
}

PcoPointCloud solve_pco_per_elevation(const PhaseMap& normalized, double mask_elevation_deg) {
  if (!(mask_elevation_deg >= 0.0) || !(mask_elevation_deg < 90.0))
    raise(Errc::invalid_angle, "elevation mask must lie in [0, 90)");
  const SphericalGrid& grid = normalized.grid();
  PcoPointCloud cloud;
  for (std::size_t ie = 0; ie < grid.n_elevation(); ++ie) {
    const double elev = grid.elevations()[ie];
    if (elev < mask_elevation_deg - kAngleTol) continue;
    if (elev > 90.0 - kAngleTol) continue;  // zenith: single direction, never solvable per ring
    try {
      Pco p = solve_pco_ring(normalized, ie);
      cloud.elevations_deg.push_back(elev);
      cloud.points.push_back(p);
    } catch (const Error& e) {
      // A ring whose solution blows past the physical sanity bound carries no
      // usable information (z is nearly unobservable just below zenith).
      if (e.code() != Errc::unit_error) throw;
    }
  }
  if (cloud.points.empty())
    raise(Errc::mask_too_tight, "no elevation ring below zenith survives the mask");
  return cloud;
}

PcvMap residual_pcv(const PhaseMap& normalized, const Pco& pco) {
  if (!normalized.normalized())
    raise(Errc::not_normalized, "residual PCV needs an ARP-normalized phase map");
  const SphericalGrid& grid = normalized.grid();
  const double lambda = wavelength_mm(normalized.frequency_mhz());
  std::vector<double> mm(grid.size());
  for (std::size_t ie = 0; ie < grid.n_elevation(); ++ie) {
    for (std::size_t ia = 0; ia < grid.n_azimuth(); ++ia) {
      double row[3];
      referenced_row(grid.elevations()[ie], grid.azimuths()[ia], row);
      const double model_mm = row[0] * pco.x_mm + row[1] * pco.y_mm + row[2] * pco.z_mm;
      const std::size_t node = grid.node_index(ie, ia);
      mm[node] = normalized.values()[node] / 360.0 * lambda - model_mm;
    }
  }
  return PcvMap(grid, normalized.frequency_mhz(), std::move(mm));
}

}  // namespace antcal
