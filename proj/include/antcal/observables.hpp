// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "antcal/phase_model.hpp"

namespace antcal {

inline constexpr double kGpsL1Mhz = 1575.42;
inline constexpr double kGpsL2Mhz = 1227.60;
inline constexpr double kGpsL5Mhz = 1176.45;

/// Per-frequency antenna calibration: offset plus residual variation map.
struct FrequencyCalibration {
  double frequency_mhz;
  Pco pco;
  PcvMap pcv;
};

struct CalibrationProfile {
  std::string antenna;
  std::string scenario;  // EVB | sharkfin | vehicle
  std::vector<FrequencyCalibration> frequencies;

  /// Entry for the band containing `frequency_mhz` (nearest within 50 MHz).
  const FrequencyCalibration& at_frequency(double frequency_mhz) const;
};

/// Antenna phase error seen from `aoa` in meters: the offset projected onto
/// the look direction plus the interpolated residual variation.
double antenna_phase_error_m(const FrequencyCalibration& cal, const Direction& aoa);

/// One labeled synthetic epoch. Every error term is explicit so differencing
/// tests can reconstruct exactly what should cancel.
struct ObservableEpoch {
  std::string satellite_id;
  std::string receiver_id;
  int epoch = 0;
  double frequency_mhz = kGpsL1Mhz;
  double true_range_m = 0.0;
  double iono_code_m = 0.0;  // carrier sees the same magnitude, opposite sign
  double tropo_m = 0.0;
  double recv_clock_s = 0.0;
  double sat_clock_s = 0.0;
  double ambiguity_cycles = 0.0;  // integer-valued
  double phase_center_m = 0.0;    // antenna phase error along this AOA
  double code_noise_m = 0.0;
  double phase_noise_cycles = 0.0;
};

/// rho = d + I + T + c(dt_u - dt_s) + eps.
double synth_code_pseudorange(const ObservableEpoch& e);

/// phi = (d - I + T + eps_phase)/lambda + c(dt_u - dt_s)/lambda + N + eps_phi,
/// using the carrier-side sign of the ionospheric term. When a calibration is
/// supplied its phase error model at `aoa` is subtracted.
double synth_carrier_phase(const ObservableEpoch& e, const Direction& aoa,
                           const CalibrationProfile* calibration = nullptr);

struct Measurement {
  ObservableEpoch meta;
  double code_m = 0.0;
  double phase_cycles = 0.0;
};

Measurement synth_measurement(const ObservableEpoch& e, const Direction& aoa,
                              const CalibrationProfile* calibration = nullptr);

/// Dual-frequency ionospheric group delay at the first frequency:
/// f2^2/(f1^2 - f2^2) * (rho2 - rho1).
double estimate_iono_group(double rho_f1_m, double rho_f2_m, double f1_mhz, double f2_mhz);

/// Dual-frequency ionospheric phase advance at the first frequency, with the
/// integer ambiguities supplied:
/// -f2^2/(f1^2 - f2^2) * [lambda1(phi1 - N1) - lambda2(phi2 - N2)].
double estimate_iono_phase(double phi_f1_cycles, double phi_f2_cycles, double n1_cycles,
                           double n2_cycles, double f1_mhz, double f2_mhz);

/// Helper that rounds (rho - lambda*phi)/lambda to the nearest integer; a
/// practical ambiguity initializer from code. Not an ambiguity search.
double ambiguity_from_code(double rho_m, double phi_cycles, double frequency_mhz);

struct SingleDifference {
  std::string satellite_id;
  std::string receiver_a, receiver_b;
  int epoch = 0;
  double frequency_mhz = 0.0;
  double code_m = 0.0;
  double phase_cycles = 0.0;
};

struct DoubleDifference {
  std::string satellite_i, satellite_j;
  std::string receiver_a, receiver_b;
  int epoch = 0;
  double frequency_mhz = 0.0;
  double code_m = 0.0;
  double phase_cycles = 0.0;
};

struct TripleDifference {
  int epoch_from = 0, epoch_to = 0;
  double code_m = 0.0;
  double phase_cycles = 0.0;
};

/// a - b across receivers; the epochs must share satellite, epoch index and
/// frequency and differ in receiver.
SingleDifference single_difference(const Measurement& a, const Measurement& b);

/// sd_i - sd_j across satellites; receiver pair and epoch must match.
DoubleDifference double_difference(const SingleDifference& sd_i, const SingleDifference& sd_j);

/// dd_to - dd_from across epochs; satellites and receivers must match.
TripleDifference triple_difference(const DoubleDifference& dd_from, const DoubleDifference& dd_to);

}  // namespace antcal
