// SPDX-License-Identifier: Apache-2.0
#include "antcal/errors.hpp"

namespace antcal {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_step: return "InvalidStep";
    case Errc::invalid_angle: return "InvalidAngle";
    case Errc::unwrap_ambiguity: return "UnwrapAmbiguity";
    case Errc::missing_zenith: return "MissingZenith";
    case Errc::not_normalized: return "NotNormalized";
    case Errc::rank_deficient: return "RankDeficient";
    case Errc::mask_too_tight: return "MaskTooTight";
    case Errc::degenerate_ring: return "DegenerateRing";
    case Errc::empty_input: return "EmptyInput";
    case Errc::elevation_off_grid: return "ElevationOffGrid";
    case Errc::degenerate_frequencies: return "DegenerateFrequencies";
    case Errc::mismatched_structure: return "MismatchedStructure";
    case Errc::missing_node: return "MissingNode";
    case Errc::duplicate_node: return "DuplicateNode";
    case Errc::bad_header: return "BadHeader";
    case Errc::unit_error: return "UnitError";
    case Errc::unresampleable_grid: return "UnresampleableGrid";
    case Errc::bad_label: return "BadLabel";
    case Errc::truncated_section: return "TruncatedSection";
    case Errc::missing_calibration: return "MissingCalibration";
    case Errc::bad_config: return "BadConfig";
    case Errc::io_error: return "IoError";
  }
  return "UnknownError";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code),
      message_(message) {}

void raise(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace antcal
