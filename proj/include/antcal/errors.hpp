// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace antcal {

/// Machine-checkable failure categories used across the toolkit.
enum class Errc {
  invalid_step,
  invalid_angle,
  unwrap_ambiguity,
  missing_zenith,
  not_normalized,
  rank_deficient,
  mask_too_tight,
  degenerate_ring,
  empty_input,
  elevation_off_grid,
  degenerate_frequencies,
  mismatched_structure,
  missing_node,
  duplicate_node,
  bad_header,
  unit_error,
  unresampleable_grid,
  bad_label,
  truncated_section,
  missing_calibration,
  bad_config,
  io_error,
};

const char* errc_name(Errc code) noexcept;

/// Exception type carrying an Errc next to the human-readable message.
/// what() is "<errc_name>: <message>".
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message);
  Errc code() const noexcept { return code_; }
  /// The message without the errc prefix (for re-wrapping with context).
  const std::string& message() const noexcept { return message_; }

private:
  Errc code_;
  std::string message_;
};

[[noreturn]] void raise(Errc code, const std::string& message);

}  // namespace antcal
