// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

#include "antcal/observables.hpp"

namespace antcal {

struct AntexOptions {
  // Zenith step of the emitted PCV lattice. 15 deg is the finest divisor of
  // 90 that keeps an azimuth-keyed pattern record (F8.1 + m*F8.2) within the
  // 80-character line budget.
  double dzen_deg = 15.0;
  double dazi_deg = 5.0;
};

/// Renders a calibration as an ANTEX 1.4 antenna section. Fixed columns:
/// data in 1-60, labels from 61; every line is at most 80 characters.
/// PCO maps x->North, y->East, z->Up in millimeters (two decimals); the PCV
/// lattice is zenith 0..90 by `dzen`, azimuth 0..360 inclusive by `dazi`
/// (360 repeating 0), resampled bilinearly from the source grid.
std::string write_antex(const CalibrationProfile& profile, const AntexOptions& options = {});

/// Parses the subset emitted by write_antex (one antenna per file).
/// Throws BadLabel on a label mismatch and TruncatedSection on early EOF.
CalibrationProfile parse_antex(std::string_view text);

/// "G01"/"G02"/"G05" for a frequency inside the L1/L2/L5 bands.
std::string antex_frequency_code(double frequency_mhz);

/// Canonical band frequency in MHz for an ANTEX code.
double antex_code_frequency(std::string_view code);

}  // namespace antcal
