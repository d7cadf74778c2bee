// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "antcal/phase_model.hpp"

namespace antcal {

enum class Weighting : std::uint8_t {
  equal,      // every node counts the same
  sin_theta,  // equal-area: weight proportional to sin(theta) of the ring
};

struct SolveOptions {
  double mask_elevation_deg = 10.0;
  bool estimate_bias = false;  // adds an all-ones column absorbing a residual reference phase
  Weighting weighting = Weighting::equal;
};

struct PcoEstimate {
  Pco pco;
  double bias_mm = 0.0;  // only meaningful when estimate_bias was set
  double rms_residual_mm = 0.0;
  double condition_number = 1.0;
  std::size_t n_obs = 0;  // design rows used (zenith ring collapses to one)
  double mask_elevation_deg = 0.0;
};

/// One solved offset per elevation ring.
struct PcoPointCloud {
  std::vector<double> elevations_deg;
  std::vector<Pco> points;
};

/// Node indices with elevation >= mask, elevation-major order.
std::vector<std::size_t> apply_elevation_mask(const SphericalGrid& grid, double mask_deg);

/// Least-squares phase-center solver over a fixed grid/mask/options.
/// The design is factored once, so repeated solves over maps sharing a grid
/// (Monte Carlo runs) reuse the decomposition.
///
/// The observation model is the ARP-referenced response: a normalized map
/// stores (u(d) - u(zenith))·pco in phase units, so each design row is
/// [sinθcosφ, sinθsinφ, cosθ - 1] (plus an optional all-ones bias column).
class PcoSolver {
public:
  PcoSolver(const SphericalGrid& grid, const SolveOptions& options);

  PcoEstimate estimate(const PhaseMap& normalized) const;
  const SolveOptions& options() const { return options_; }

private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  SolveOptions options_;
  SphericalGrid grid_;
};

/// One-shot global solve of the phase center offset from a normalized map.
PcoEstimate solve_pco(const PhaseMap& normalized, double mask_elevation_deg,
                      bool estimate_bias = false, Weighting weighting = Weighting::equal);

/// Independent three-parameter solve restricted to one elevation ring.
/// Throws DegenerateRing for the zenith ring (one physical direction).
Pco solve_pco_ring(const PhaseMap& normalized, std::size_t elevation_index);

/// Per-ring solves for every unmasked elevation below zenith.
PcoPointCloud solve_pco_per_elevation(const PhaseMap& normalized, double mask_elevation_deg);

/// PCV remaining after removing the forward model of `pco`; both the map and
/// the model are zenith-referenced, so a map generated from a pure offset
/// leaves an identically zero residual.
PcvMap residual_pcv(const PhaseMap& normalized, const Pco& pco);

}  // namespace antcal
