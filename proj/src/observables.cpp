// SPDX-License-Identifier: Apache-2.0
#include "antcal/observables.hpp"

#include <cmath>
#include <string>

#include "antcal/errors.hpp"

namespace antcal {

const FrequencyCalibration& CalibrationProfile::at_frequency(double frequency_mhz) const {
  const FrequencyCalibration* best = nullptr;
  double best_gap = 50.0;  // same-band tolerance in MHz
  for (const auto& fc : frequencies) {
    const double gap = std::abs(fc.frequency_mhz - frequency_mhz);
    if (gap < best_gap) {
      best_gap = gap;
      best = &fc;
    }
  }
  if (!best)
    raise(Errc::missing_calibration,
          "no calibration entry near " + std::to_string(frequency_mhz) + " MHz");
  return *best;
}

double antenna_phase_error_m(const FrequencyCalibration& cal, const Direction& aoa) {
  const auto u = aoa.unit_vector();
  const double offset_mm = u[0] * cal.pco.x_mm + u[1] * cal.pco.y_mm + u[2] * cal.pco.z_mm;
  const double pcv_mm = cal.pcv.sample(aoa.elevation_deg(), aoa.phi_deg);
  return (offset_mm + pcv_mm) * 1e-3;
}

double synth_code_pseudorange(const ObservableEpoch& e) {
  return e.true_range_m + e.iono_code_m + e.tropo_m +
         kSpeedOfLight * (e.recv_clock_s - e.sat_clock_s) + e.code_noise_m;
}

double synth_carrier_phase(const ObservableEpoch& e, const Direction& aoa,
                           const CalibrationProfile* calibration) {
  const double lambda_m = wavelength_mm(e.frequency_mhz) * 1e-3;
  double eps_phase_m = e.phase_center_m;
  if (calibration)
    eps_phase_m -= antenna_phase_error_m(calibration->at_frequency(e.frequency_mhz), aoa);
  const double iono_phase_m = -e.iono_code_m;  // equal magnitude, opposite sign
  return (e.true_range_m + iono_phase_m + e.tropo_m + eps_phase_m) / lambda_m +
         kSpeedOfLight * (e.recv_clock_s - e.sat_clock_s) / lambda_m + e.ambiguity_cycles +
         e.phase_noise_cycles;
}

Measurement synth_measurement(const ObservableEpoch& e, const Direction& aoa,
                              const CalibrationProfile* calibration) {
  Measurement m;
  m.meta = e;
  m.code_m = synth_code_pseudorange(e);
  m.phase_cycles = synth_carrier_phase(e, aoa, calibration);
  return m;
}

namespace {
double dispersive_factor(double f1_mhz, double f2_mhz) {
  if (!(f1_mhz > 0.0) || !(f2_mhz > 0.0) || f1_mhz == f2_mhz)
    raise(Errc::degenerate_frequencies, "need two distinct positive frequencies, got " +
                                            std::to_string(f1_mhz) + " and " +
                                            std::to_string(f2_mhz) + " MHz");
  return f2_mhz * f2_mhz / (f1_mhz * f1_mhz - f2_mhz * f2_mhz);
}
}  // namespace

double estimate_iono_group(double rho_f1_m, double rho_f2_m, double f1_mhz, double f2_mhz) {
  return dispersive_factor(f1_mhz, f2_mhz) * (rho_f2_m - rho_f1_m);
}

double estimate_iono_phase(double phi_f1_cycles, double phi_f2_cycles, double n1_cycles,
                           double n2_cycles, double f1_mhz, double f2_mhz) {
  const double l1_m = wavelength_mm(f1_mhz) * 1e-3;
  const double l2_m = wavelength_mm(f2_mhz) * 1e-3;
  return -dispersive_factor(f1_mhz, f2_mhz) *
         (l1_m * (phi_f1_cycles - n1_cycles) - l2_m * (phi_f2_cycles - n2_cycles));
}

double ambiguity_from_code(double rho_m, double phi_cycles, double frequency_mhz) {
  const double lambda_m = wavelength_mm(frequency_mhz) * 1e-3;
  return std::round(phi_cycles - rho_m / lambda_m);
}

SingleDifference single_difference(const Measurement& a, const Measurement& b) {
  if (a.meta.satellite_id != b.meta.satellite_id)
    raise(Errc::mismatched_structure, "single difference needs a common satellite");
  if (a.meta.receiver_id == b.meta.receiver_id)
    raise(Errc::mismatched_structure, "single difference needs two distinct receivers");
  if (a.meta.epoch != b.meta.epoch)
    raise(Errc::mismatched_structure, "single difference needs a common epoch");
  if (a.meta.frequency_mhz != b.meta.frequency_mhz)
    raise(Errc::mismatched_structure, "single difference needs a common frequency");
  SingleDifference sd;
  sd.satellite_id = a.meta.satellite_id;
  sd.receiver_a = a.meta.receiver_id;
  sd.receiver_b = b.meta.receiver_id;
  sd.epoch = a.meta.epoch;
  sd.frequency_mhz = a.meta.frequency_mhz;
  sd.code_m = a.code_m - b.code_m;
  sd.phase_cycles = a.phase_cycles - b.phase_cycles;
  return sd;
}

DoubleDifference double_difference(const SingleDifference& sd_i, const SingleDifference& sd_j) {
  if (sd_i.satellite_id == sd_j.satellite_id)
    raise(Errc::mismatched_structure, "double difference needs two distinct satellites");
  if (sd_i.receiver_a != sd_j.receiver_a || sd_i.receiver_b != sd_j.receiver_b)
    raise(Errc::mismatched_structure, "double difference needs the same receiver pair");
  if (sd_i.epoch != sd_j.epoch)
    raise(Errc::mismatched_structure, "double difference needs a common epoch");
  if (sd_i.frequency_mhz != sd_j.frequency_mhz)
    raise(Errc::mismatched_structure, "double difference needs a common frequency");
  DoubleDifference dd;
  dd.satellite_i = sd_i.satellite_id;
  dd.satellite_j = sd_j.satellite_id;
  dd.receiver_a = sd_i.receiver_a;
  dd.receiver_b = sd_i.receiver_b;
  dd.epoch = sd_i.epoch;
  dd.frequency_mhz = sd_i.frequency_mhz;
  dd.code_m = sd_i.code_m - sd_j.code_m;
  dd.phase_cycles = sd_i.phase_cycles - sd_j.phase_cycles;
  return dd;
}

TripleDifference triple_difference(const DoubleDifference& dd_from, const DoubleDifference& dd_to) {
  if (dd_from.satellite_i != dd_to.satellite_i || dd_from.satellite_j != dd_to.satellite_j ||
      dd_from.receiver_a != dd_to.receiver_a || dd_from.receiver_b != dd_to.receiver_b)
    raise(Errc::mismatched_structure, "triple difference needs matching satellite/receiver pairs");
  if (dd_from.epoch == dd_to.epoch)
    raise(Errc::mismatched_structure, "triple difference needs two distinct epochs");
  TripleDifference td;
  td.epoch_from = dd_from.epoch;
  td.epoch_to = dd_to.epoch;
  td.code_m = dd_to.code_m - dd_from.code_m;
  td.phase_cycles = dd_to.phase_cycles - dd_from.phase_cycles;
  return td;
}

}  // namespace antcal
