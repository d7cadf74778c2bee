// SPDX-License-Identifier: Apache-2.0
//
// antcal: GNSS antenna phase-center calibration from far-field range data.
// Subcommands: synth, calibrate, report, export-atx, simulate-rtk.

#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "antcal/errors.hpp"
#include "antcal/pipeline.hpp"

namespace {

void add_common(CLI::App* cmd, antcal::RunConfig& cfg) {
  cmd->add_option("--out", cfg.out_dir, "output directory")->capture_default_str();
  cmd->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  cmd->add_option("--freq", cfg.frequencies_mhz, "frequency selection in MHz")->delimiter(',');
}

void add_solver(CLI::App* cmd, antcal::RunConfig& cfg, std::string& weight) {
  cmd->add_option("--mask", cfg.mask_deg, "elevation mask in degrees")->capture_default_str();
  cmd->add_flag("--estimate-bias", cfg.estimate_bias,
                "solve a constant phase bias next to the offset");
  cmd->add_option("--weight", weight, "equal|sin-theta observation weighting")
      ->check(CLI::IsMember({"equal", "sin-theta"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GNSS antenna phase-center calibration toolkit"};
  app.require_subcommand(1);

  antcal::RunConfig cfg;
  std::string weight = "equal";
  std::vector<double> pco_mm = {0.0, 0.0, 0.0};

  CLI::App* synth = app.add_subcommand("synth", "write a synthetic far-field phase file");
  add_common(synth, cfg);
  synth->add_option("--pco", pco_mm, "true offset x,y,z in mm")->delimiter(',')->expected(3);
  synth->add_option("--ripple", cfg.synth_ripple_mm, "azimuth-independent PCV dome amplitude in mm");
  synth->add_option("--noise-sigma-deg", cfg.synth_noise_sigma_deg, "phase noise sigma in degrees");
  synth->add_option("--antenna", cfg.antenna, "antenna name")->capture_default_str();
  synth->add_option("--scenario", cfg.scenario, "EVB|sharkfin|vehicle")->capture_default_str();

  CLI::App* calibrate = app.add_subcommand("calibrate", "estimate PCO/PCV and write a calibration");
  add_common(calibrate, cfg);
  add_solver(calibrate, cfg, weight);
  calibrate->add_option("--in", cfg.inputs, "FFD measurement file(s)")->required();

  CLI::App* report = app.add_subcommand("report", "analysis and plots without writing a calibration");
  add_common(report, cfg);
  add_solver(report, cfg, weight);
  report->add_option("--in", cfg.inputs, "FFD measurement file(s)")->required();
  report->add_option("--cut-elev", cfg.cut_elevation_deg, "azimuth-cut elevation for gain CSVs")
      ->capture_default_str();

  CLI::App* export_atx = app.add_subcommand("export-atx", "write the calibration as ANTEX 1.4");
  add_common(export_atx, cfg);
  export_atx->add_option("--calibration", cfg.calibration_json, "calibration JSON from `calibrate`")
      ->required();
  export_atx->add_option("--atx-out", cfg.atx_out, "output .atx path (default <out>/calibration.atx)");
  export_atx->add_option("--dzen", cfg.antex.dzen_deg, "ANTEX zenith step in degrees")
      ->capture_default_str();
  export_atx->add_option("--dazi", cfg.antex.dazi_deg, "ANTEX azimuth step in degrees")
      ->capture_default_str();

  CLI::App* simulate = app.add_subcommand("simulate-rtk",
                                          "double-difference residuals with/without calibration");
  add_common(simulate, cfg);
  simulate->add_option("scenario", cfg.scenario_file, "scenario key=value file")->required();
  simulate->add_option("--atx", cfg.atx_in, "ANTEX calibration to apply")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.weighting = (weight == "sin-theta") ? antcal::Weighting::sin_theta : antcal::Weighting::equal;
    if (synth->parsed()) {
      cfg.synth_pco = antcal::Pco(pco_mm[0], pco_mm[1], pco_mm[2]);
      const auto result = antcal::cmd_synth(cfg);
      std::printf("wrote %s\n", result.ffd_path.string().c_str());
      std::printf("truth_pco_mm %.9f %.9f %.9f\n", result.truth.x_mm, result.truth.y_mm,
                  result.truth.z_mm);
    } else if (calibrate->parsed() || report->parsed()) {
      const auto result =
          calibrate->parsed() ? antcal::cmd_calibrate(cfg) : antcal::cmd_report(cfg);
      std::fputs(result.report_text.c_str(), stdout);
      if (!result.profile_path.empty())
        std::printf("calibration written to %s\n", result.profile_path.string().c_str());
    } else if (export_atx->parsed()) {
      const auto path = antcal::cmd_export_atx(cfg);
      std::printf("wrote %s\n", path.string().c_str());
    } else if (simulate->parsed()) {
      const auto result = antcal::cmd_simulate_rtk(cfg);
      std::fputs(result.report_text.c_str(), stdout);
    }
  } catch (const antcal::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
