// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "antcal/grid.hpp"
#include "antcal/metrics.hpp"

namespace antcal {

inline constexpr const char* kScenarioNames[] = {"EVB", "sharkfin", "vehicle"};
bool is_known_scenario(std::string_view name);

/// A parsed far-field measurement file: one antenna/scenario, one quantity,
/// one complete grid per declared frequency.
struct MeasurementSet {
  std::string antenna;
  std::string scenario;
  std::vector<PhaseMap> phase_maps;   // quantity=phase_deg
  std::vector<GainMap> gain_maps;     // quantity=gain_dbic
  std::vector<VhFieldMap> vh_maps;    // quantity=vh_complex

  const PhaseMap* find_phase(double frequency_mhz) const;
  const GainMap* find_gain(double frequency_mhz) const;

  /// Pulls the other set's maps in; antenna and scenario must agree.
  void merge(MeasurementSet other);
};

/// FFD v1: '#' comments; `antenna=`, `scenario=`, `quantity=` headers; then
/// CSV rows `freq_mhz,elev_deg,azim_deg,value[,value2[,value3,value4]]`
/// (1 value for phase_deg, 2 for gain_dbic RHCP/LHCP, 4 for vh_complex
/// V-amp,V-phase,H-amp,H-phase). The grid is inferred per frequency and must
/// be complete: a hole is MissingNode, a repeat is DuplicateNode.
MeasurementSet parse_ffd(std::string_view text);

/// Inverse of parse_ffd; numbers are written shortest-round-trip so a
/// write/parse cycle reproduces every value bit for bit. The set must hold
/// exactly one quantity kind.
std::string write_ffd(const MeasurementSet& set);

}  // namespace antcal
