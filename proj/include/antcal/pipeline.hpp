// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "antcal/antex.hpp"
#include "antcal/dispersion.hpp"
#include "antcal/ffd.hpp"
#include "antcal/observables.hpp"
#include "antcal/pco_estimator.hpp"

namespace antcal {

/// Options shared by the pipeline commands; each command reads the fields it
/// needs and ignores the rest.
struct RunConfig {
  std::filesystem::path out_dir = ".";
  double mask_deg = 10.0;
  bool estimate_bias = false;
  Weighting weighting = Weighting::equal;
  std::vector<double> frequencies_mhz;  // empty: use every frequency present
  std::uint64_t seed = 0;

  // synth
  Pco synth_pco;
  double synth_ripple_mm = 0.0;       // azimuth-independent dome, r(theta) = ripple * sin^2(theta)
  double synth_noise_sigma_deg = 0.0;
  std::string antenna = "PATCH";
  std::string scenario = "EVB";

  // calibrate / report
  std::vector<std::filesystem::path> inputs;
  double cut_elevation_deg = 36.0;  // azimuth-cut CSV for gain data

  // export-atx
  std::filesystem::path calibration_json;
  std::filesystem::path atx_out;
  AntexOptions antex;

  // simulate-rtk
  std::filesystem::path scenario_file;
  std::filesystem::path atx_in;
};

struct SynthResult {
  std::filesystem::path ffd_path;
  Pco truth;
};

/// Writes a synthetic far-field phase file for a known offset, optional
/// ripple and optional seeded phase noise; values are wrapped to (-180, 180]
/// like chamber output. Deterministic for a given config.
SynthResult cmd_synth(const RunConfig& config);

struct FrequencyResult {
  double frequency_mhz = 0.0;
  PcoEstimate estimate;
  double pcv_min_mm = 0.0, pcv_max_mm = 0.0;
  CepReport cep;
};

struct CalibrateResult {
  std::string antenna;
  std::string scenario;
  std::vector<FrequencyResult> frequencies;
  CalibrationProfile profile;
  std::filesystem::path profile_path;  // empty when only reporting
  std::string report_text;
};

/// Full calibration pipeline: parse -> unwrap/normalize -> PCV CSV -> global
/// PCO + per-elevation cloud -> CEP table -> calibration profile on disk.
CalibrateResult cmd_calibrate(const RunConfig& config);

/// Same analysis as cmd_calibrate but writes no calibration profile; also
/// emits gain/axial-ratio CSVs when the inputs carry gain data.
CalibrateResult cmd_report(const RunConfig& config);

/// calibration JSON -> ANTEX file.
std::filesystem::path cmd_export_atx(const RunConfig& config);

struct SimulateRtkResult {
  std::size_t n_satellites = 0;
  std::size_t n_epochs = 0;
  double rms_uncorrected_cycles = 0.0;
  double rms_corrected_cycles = 0.0;
  double max_uncorrected_error_cycles = 0.0;  // |residual - injected antenna-error DD|
  double max_corrected_cycles = 0.0;
  std::string report_text;
  std::filesystem::path observables_csv;
  std::filesystem::path residuals_csv;
};

/// Synthesizes the scenario twice, without and with the calibration applied,
/// and reports double-differenced carrier residual statistics side by side.
SimulateRtkResult cmd_simulate_rtk(const RunConfig& config);

/// Calibration profile (de)serialization used by calibrate/export-atx.
void save_profile_json(const CalibrationProfile& profile, const std::filesystem::path& path);
CalibrationProfile load_profile_json(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace antcal
