// SPDX-License-Identifier: Apache-2.0
#include "antcal/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "json.hpp"

#include "antcal/errors.hpp"
#include "antcal/metrics.hpp"
#include "antcal/phase_model.hpp"

namespace antcal {

namespace {

constexpr double kDegToRad = 3.14159265358979323846 / 180.0;

std::string shortest(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string freq_tag(double frequency_mhz) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", frequency_mhz);
  std::string s(buf);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

/// Deterministic normal deviates: Box-Muller over mt19937_64, so the stream
/// is identical on every platform for a given seed.
class GaussianRng {
public:
  explicit GaussianRng(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t raw() { return rng_(); }

  double uniform01() {  // in (0, 1)
    return (static_cast<double>(rng_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

private:
  std::mt19937_64 rng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double to_number(std::string_view field, const std::string& what) {
  field = trim(field);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size())
    raise(Errc::bad_config, what + ": not a number: '" + std::string(field) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t c = s.find(sep, start);
    out.push_back(s.substr(start, c == std::string_view::npos ? s.size() - start : c - start));
    if (c == std::string_view::npos) break;
    start = c + 1;
  }
  return out;
}

MeasurementSet load_inputs(const RunConfig& config) {
  if (config.inputs.empty()) raise(Errc::bad_config, "no input measurement files given");
  MeasurementSet set;
  bool first = true;
  for (const auto& path : config.inputs) {
    try {
      MeasurementSet one = parse_ffd(read_text_file(path));
      if (first) {
        set = std::move(one);
        first = false;
      } else {
        set.merge(std::move(one));
      }
    } catch (const Error& e) {
      throw Error(e.code(), path.string() + ": " + e.message());
    }
  }
  return set;
}

void write_pcv_csv(const std::filesystem::path& path, const PcvMap& pcv) {
  std::string out = "elev_deg,azim_deg,pcv_mm\n";
  const auto& g = pcv.grid();
  for (std::size_t ie = 0; ie < g.n_elevation(); ++ie)
    for (std::size_t ia = 0; ia < g.n_azimuth(); ++ia)
      out += shortest(g.elevations()[ie]) + ',' + shortest(g.azimuths()[ia]) + ',' +
             shortest(pcv.at(ie, ia)) + '\n';
  write_text_file(path, out);
}

void write_cloud_csv(const std::filesystem::path& path, const PcoPointCloud& cloud) {
  std::string out = "elev_deg,x_mm,y_mm,z_mm\n";
  for (std::size_t i = 0; i < cloud.points.size(); ++i)
    out += shortest(cloud.elevations_deg[i]) + ',' + shortest(cloud.points[i].x_mm) + ',' +
           shortest(cloud.points[i].y_mm) + ',' + shortest(cloud.points[i].z_mm) + '\n';
  write_text_file(path, out);
}

void write_gain_csvs(const RunConfig& config, const GainMap& gain) {
  const std::string tag = freq_tag(gain.frequency_mhz());
  std::string curves = "elev_deg,lag_dbi,ar_db\n";
  for (const auto& row : elevation_curves(gain))
    curves += shortest(row.elevation_deg) + ',' + shortest(row.lag_dbi) + ',' +
              shortest(row.ar_db) + '\n';
  write_text_file(config.out_dir / ("lag_ar_" + tag + ".csv"), curves);

  if (gain.grid().find_elevation(config.cut_elevation_deg)) {
    std::string cut = "azim_deg,rhcp_dbic,lhcp_dbic,ar_db\n";
    for (const auto& row : azimuth_cut(gain, config.cut_elevation_deg))
      cut += shortest(row.azimuth_deg) + ',' + shortest(row.rhcp_dbic) + ',' +
             shortest(row.lhcp_dbic) + ',' + shortest(row.ar_db) + '\n';
    write_text_file(config.out_dir / ("azimuth_cut_" + tag + ".csv"), cut);
  }
}

CalibrateResult run_calibration(const RunConfig& config, bool write_profile) {
  MeasurementSet set = load_inputs(config);
  std::filesystem::create_directories(config.out_dir);

  CalibrateResult result;
  result.antenna = set.antenna;
  result.scenario = set.scenario;
  result.profile.antenna = set.antenna;
  result.profile.scenario = set.scenario;

  std::vector<const PhaseMap*> maps;
  for (const auto& m : set.phase_maps) {
    if (!config.frequencies_mhz.empty()) {
      bool wanted = false;
      for (double f : config.frequencies_mhz)
        if (std::abs(f - m.frequency_mhz()) < 1e-6) wanted = true;
      if (!wanted) continue;
    }
    maps.push_back(&m);
  }
  std::sort(maps.begin(), maps.end(),
            [](const PhaseMap* a, const PhaseMap* b) { return a->frequency_mhz() < b->frequency_mhz(); });
  for (std::size_t i = 1; i < maps.size(); ++i)
    if (std::abs(maps[i]->frequency_mhz() - maps[i - 1]->frequency_mhz()) < 1e-6)
      raise(Errc::mismatched_structure,
            "two phase maps share frequency " + freq_tag(maps[i]->frequency_mhz()) + " MHz");

  for (const PhaseMap* raw : maps) {
    const double f = raw->frequency_mhz();
    const std::string tag = freq_tag(f);

    const PhaseMap norm = unwrap_and_normalize(*raw);
    const PcvMap pcv = pcv_map(norm);
    write_pcv_csv(config.out_dir / ("pcv_" + tag + ".csv"), pcv);

    const PcoEstimate est =
        solve_pco(norm, config.mask_deg, config.estimate_bias, config.weighting);
    const PcoPointCloud cloud = solve_pco_per_elevation(norm, config.mask_deg);
    write_cloud_csv(config.out_dir / ("pco_cloud_" + tag + ".csv"), cloud);
    const CepReport cep = cep_report(cloud);

    FrequencyResult fr;
    fr.frequency_mhz = f;
    fr.estimate = est;
    fr.pcv_min_mm = pcv.min_mm();
    fr.pcv_max_mm = pcv.max_mm();
    fr.cep = cep;
    result.frequencies.push_back(fr);

    result.profile.frequencies.push_back({f, est.pco, residual_pcv(norm, est.pco)});

    result.report_text += render_report(f, set.scenario, pcv.min_mm(), pcv.max_mm(), cep);
    char line[160];
    std::snprintf(line, sizeof(line),
                  "PCO global [mm]  x=%.3f  y=%.3f  z=%.3f  (rms %.3f, n %zu, mask %.1f)\n\n",
                  est.pco.x_mm, est.pco.y_mm, est.pco.z_mm, est.rms_residual_mm, est.n_obs,
                  est.mask_elevation_deg);
    result.report_text += line;
  }
  if (result.frequencies.empty()) raise(Errc::bad_config, "no phase maps selected");

  for (const auto& gain : set.gain_maps) write_gain_csvs(config, gain);
  for (const auto& vh : set.vh_maps) write_gain_csvs(config, vh_to_gain_map(vh));

  if (write_profile) {
    result.profile_path = config.out_dir / "calibration.json";
    save_profile_json(result.profile, result.profile_path);
  }
  write_text_file(config.out_dir / "report.txt", result.report_text);
  return result;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::io_error, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::io_error, "cannot open " + path.string() + " for writing");
  out << content;
  if (!out) raise(Errc::io_error, "failed writing " + path.string());
}

SynthResult cmd_synth(const RunConfig& config) {
  const SphericalGrid grid = SphericalGrid::default_grid();
  std::vector<double> freqs =
      config.frequencies_mhz.empty() ? std::vector<double>{kGpsL5Mhz, kGpsL1Mhz}
                                     : config.frequencies_mhz;
  std::sort(freqs.begin(), freqs.end());

  GaussianRng rng(config.seed);
  MeasurementSet set;
  set.antenna = config.antenna;
  set.scenario = config.scenario;

  for (double f : freqs) {
    const double lambda = wavelength_mm(f);
    std::vector<double> values(grid.size());
    for (std::size_t ie = 0; ie < grid.n_elevation(); ++ie) {
      const double th = (90.0 - grid.elevations()[ie]) * kDegToRad;
      const double ripple_deg =
          config.synth_ripple_mm * std::sin(th) * std::sin(th) * 360.0 / lambda;
      for (std::size_t ia = 0; ia < grid.n_azimuth(); ++ia) {
        double v = forward_phase(config.synth_pco, grid.direction(ie, ia), f) + ripple_deg;
        if (config.synth_noise_sigma_deg > 0.0)
          v += config.synth_noise_sigma_deg * rng.normal();
        values[grid.node_index(ie, ia)] = wrap_degrees(v);
      }
    }
    set.phase_maps.emplace_back(grid, f, std::move(values));
  }

  std::filesystem::create_directories(config.out_dir);
  SynthResult result;
  result.truth = config.synth_pco;
  result.ffd_path = config.out_dir / "synthetic.ffd";
  write_text_file(result.ffd_path, write_ffd(set));
  return result;
}

CalibrateResult cmd_calibrate(const RunConfig& config) { return run_calibration(config, true); }

CalibrateResult cmd_report(const RunConfig& config) { return run_calibration(config, false); }

void save_profile_json(const CalibrationProfile& profile, const std::filesystem::path& path) {
  nlohmann::json j;
  j["antenna"] = profile.antenna;
  j["scenario"] = profile.scenario;
  j["frequencies"] = nlohmann::json::array();
  for (const auto& fc : profile.frequencies) {
    nlohmann::json e;
    e["frequency_mhz"] = fc.frequency_mhz;
    e["pco_mm"] = {fc.pco.x_mm, fc.pco.y_mm, fc.pco.z_mm};
    e["pcv"] = {{"elevations_deg", fc.pcv.grid().elevations()},
                {"azimuths_deg", fc.pcv.grid().azimuths()},
                {"values_mm", fc.pcv.values_mm()}};
    j["frequencies"].push_back(std::move(e));
  }
  write_text_file(path, j.dump(2) + "\n");
}

CalibrationProfile load_profile_json(const std::filesystem::path& path) {
  CalibrationProfile profile;
  try {
    const nlohmann::json j = nlohmann::json::parse(read_text_file(path));
    profile.antenna = j.at("antenna").get<std::string>();
    profile.scenario = j.at("scenario").get<std::string>();
    for (const auto& e : j.at("frequencies")) {
      const double f = e.at("frequency_mhz").get<double>();
      const auto pco = e.at("pco_mm").get<std::vector<double>>();
      if (pco.size() != 3) raise(Errc::bad_config, "pco_mm must have 3 components");
      const auto& pv = e.at("pcv");
      SphericalGrid grid(pv.at("elevations_deg").get<std::vector<double>>(),
                         pv.at("azimuths_deg").get<std::vector<double>>());
      profile.frequencies.push_back(
          {f, Pco(pco[0], pco[1], pco[2]),
           PcvMap(grid, f, pv.at("values_mm").get<std::vector<double>>())});
    }
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::bad_config, path.string() + ": " + e.what());
  }
  return profile;
}

std::filesystem::path cmd_export_atx(const RunConfig& config) {
  if (config.calibration_json.empty())
    raise(Errc::bad_config, "export-atx needs a calibration JSON input");
  const CalibrationProfile profile = load_profile_json(config.calibration_json);
  std::filesystem::path out = config.atx_out;
  if (out.empty()) out = config.out_dir / "calibration.atx";
  write_text_file(out, write_antex(profile, config.antex));
  return out;
}

namespace {

struct ScenarioSat {
  std::string id;
  double elevation_deg = 45.0;
  double azimuth_deg = 0.0;
  double clock_s = 0.0;
  double range_m = 0.0;  // 0: derived from the base range
};

struct Scenario {
  std::uint64_t seed = 0;
  int epochs = 1;
  double freq_mhz = kGpsL5Mhz;
  double range_m = 100.0;
  double iono_l1_m = 0.0;
  double tropo_m = 0.0;
  double rover_clock_s = 0.0, rover_clock_drift_s = 0.0;
  double base_clock_s = 0.0, base_clock_drift_s = 0.0;
  double noise_code_m = 0.0, noise_phase_cycles = 0.0;
  Pco truth_pco;
  double truth_ripple_mm = 0.0;
  std::vector<ScenarioSat> sats;
};

Scenario parse_scenario(const std::string& text) {
  Scenario s;
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      raise(Errc::bad_config, "scenario line " + std::to_string(line_no) + ": expected key=value");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    const std::string ctx = "scenario line " + std::to_string(line_no);

    if (key == "seed") s.seed = static_cast<std::uint64_t>(to_number(value, ctx));
    else if (key == "epochs") s.epochs = static_cast<int>(to_number(value, ctx));
    else if (key == "freq_mhz") s.freq_mhz = to_number(value, ctx);
    else if (key == "range_m") s.range_m = to_number(value, ctx);
    else if (key == "iono_l1_m") s.iono_l1_m = to_number(value, ctx);
    else if (key == "tropo_m") s.tropo_m = to_number(value, ctx);
    else if (key == "rover_clock_s") s.rover_clock_s = to_number(value, ctx);
    else if (key == "rover_clock_drift_s") s.rover_clock_drift_s = to_number(value, ctx);
    else if (key == "base_clock_s") s.base_clock_s = to_number(value, ctx);
    else if (key == "base_clock_drift_s") s.base_clock_drift_s = to_number(value, ctx);
    else if (key == "noise_code_m") s.noise_code_m = to_number(value, ctx);
    else if (key == "noise_phase_cycles") s.noise_phase_cycles = to_number(value, ctx);
    else if (key == "truth_ripple_mm") s.truth_ripple_mm = to_number(value, ctx);
    else if (key == "truth_pco_mm") {
      const auto parts = split(value, ',');
      if (parts.size() != 3) raise(Errc::bad_config, ctx + ": truth_pco_mm needs x,y,z");
      s.truth_pco = Pco(to_number(parts[0], ctx), to_number(parts[1], ctx), to_number(parts[2], ctx));
    } else if (key == "sat") {
      const auto parts = split(value, ',');
      if (parts.size() < 3) raise(Errc::bad_config, ctx + ": sat needs id,elev,azim[,clock_s[,range_m]]");
      ScenarioSat sat;
      sat.id = std::string(trim(parts[0]));
      sat.elevation_deg = to_number(parts[1], ctx);
      sat.azimuth_deg = to_number(parts[2], ctx);
      if (parts.size() > 3) sat.clock_s = to_number(parts[3], ctx);
      if (parts.size() > 4) sat.range_m = to_number(parts[4], ctx);
      s.sats.push_back(std::move(sat));
    } else {
      raise(Errc::bad_config, ctx + ": unknown key '" + key + "'");
    }
  }
  if (s.sats.size() < 2)
    raise(Errc::bad_config, "scenario needs at least 2 satellites for double differencing");
  for (std::size_t i = 0; i < s.sats.size(); ++i)
    for (std::size_t j = i + 1; j < s.sats.size(); ++j)
      if (s.sats[i].id == s.sats[j].id)
        raise(Errc::bad_config, "duplicate satellite id '" + s.sats[i].id + "'");
  if (s.epochs < 1) raise(Errc::bad_config, "scenario needs at least 1 epoch");
  return s;
}

CalibrationProfile truth_antenna_profile(const Scenario& s) {
  const SphericalGrid grid = SphericalGrid::default_grid();
  std::vector<double> pcv(grid.size());
  for (std::size_t ie = 0; ie < grid.n_elevation(); ++ie) {
    const double th = (90.0 - grid.elevations()[ie]) * kDegToRad;
    const double r = s.truth_ripple_mm * std::sin(th) * std::sin(th);
    for (std::size_t ia = 0; ia < grid.n_azimuth(); ++ia) pcv[grid.node_index(ie, ia)] = r;
  }
  CalibrationProfile profile;
  profile.antenna = "TRUTH";
  profile.scenario = "EVB";
  profile.frequencies.push_back({s.freq_mhz, s.truth_pco, PcvMap(grid, s.freq_mhz, std::move(pcv))});
  return profile;
}

}  // namespace

SimulateRtkResult cmd_simulate_rtk(const RunConfig& config) {
  if (config.scenario_file.empty()) raise(Errc::bad_config, "simulate-rtk needs a scenario file");
  if (config.atx_in.empty())
    raise(Errc::bad_config, "simulate-rtk needs an ANTEX calibration to apply (--atx)");
  const Scenario scn = parse_scenario(read_text_file(config.scenario_file));
  const CalibrationProfile applied = parse_antex(read_text_file(config.atx_in));
  const CalibrationProfile truth = truth_antenna_profile(scn);
  const FrequencyCalibration& truth_fc = truth.frequencies.front();
  const double lambda_m = wavelength_mm(scn.freq_mhz) * 1e-3;
  const double iono_m =
      scn.iono_l1_m * (kGpsL1Mhz / scn.freq_mhz) * (kGpsL1Mhz / scn.freq_mhz);

  GaussianRng rng(scn.seed);
  const std::size_t ns = scn.sats.size();

  // constant per (receiver, satellite); rover first, base second
  std::vector<double> amb(2 * ns);
  for (double& n : amb) n = static_cast<double>(static_cast<long long>(rng.raw() % 2001) - 1000);

  std::string obs_csv = "receiver,satellite,epoch,code_m,phase_cycles\n";
  std::string res_csv = "epoch,sat_i,sat_j,uncorrected_cycles,corrected_cycles,expected_uncorrected_cycles\n";

  double sum_sq_unc = 0.0, sum_sq_cor = 0.0, max_err_unc = 0.0, max_cor = 0.0;
  std::size_t n_rows = 0;

  for (int t = 0; t < scn.epochs; ++t) {
    std::vector<Measurement> rover_unc(ns), rover_cor(ns), base(ns);
    for (std::size_t k = 0; k < ns; ++k) {
      const ScenarioSat& sat = scn.sats[k];
      const Direction aoa = Direction::from_elevation(sat.elevation_deg, sat.azimuth_deg);
      const double range =
          sat.range_m > 0.0 ? sat.range_m : scn.range_m + 7.0 * static_cast<double>(k);

      ObservableEpoch e;
      e.satellite_id = sat.id;
      e.epoch = t;
      e.frequency_mhz = scn.freq_mhz;
      e.true_range_m = range;
      e.iono_code_m = iono_m;
      e.tropo_m = scn.tropo_m;
      e.sat_clock_s = sat.clock_s;

      // shared noise draws so the corrected run differs only by the correction
      const double code_noise = scn.noise_code_m > 0.0 ? scn.noise_code_m * rng.normal() : 0.0;
      const double phase_noise =
          scn.noise_phase_cycles > 0.0 ? scn.noise_phase_cycles * rng.normal() : 0.0;

      e.receiver_id = "rover";
      e.recv_clock_s = scn.rover_clock_s + scn.rover_clock_drift_s * t;
      e.ambiguity_cycles = amb[k];
      e.phase_center_m = antenna_phase_error_m(truth_fc, aoa);
      e.code_noise_m = code_noise;
      e.phase_noise_cycles = phase_noise;
      rover_unc[k] = synth_measurement(e, aoa, nullptr);
      rover_cor[k] = synth_measurement(e, aoa, &applied);

      e.receiver_id = "base";
      e.recv_clock_s = scn.base_clock_s + scn.base_clock_drift_s * t;
      e.ambiguity_cycles = amb[ns + k];
      e.phase_center_m = 0.0;  // reference antenna is ideal
      e.code_noise_m = 0.0;
      e.phase_noise_cycles = 0.0;
      base[k] = synth_measurement(e, aoa, nullptr);

      obs_csv += "rover," + sat.id + ',' + std::to_string(t) + ',' +
                 shortest(rover_unc[k].code_m) + ',' + shortest(rover_unc[k].phase_cycles) + '\n';
      obs_csv += "base," + sat.id + ',' + std::to_string(t) + ',' + shortest(base[k].code_m) +
                 ',' + shortest(base[k].phase_cycles) + '\n';
    }

    for (std::size_t i = 0; i < ns; ++i) {
      for (std::size_t j = i + 1; j < ns; ++j) {
        const DoubleDifference dd_unc = double_difference(
            single_difference(rover_unc[i], base[i]), single_difference(rover_unc[j], base[j]));
        const DoubleDifference dd_cor = double_difference(
            single_difference(rover_cor[i], base[i]), single_difference(rover_cor[j], base[j]));

        const double dd_amb = (amb[i] - amb[ns + i]) - (amb[j] - amb[ns + j]);
        const double dd_range =
            (rover_unc[i].meta.true_range_m - base[i].meta.true_range_m) -
            (rover_unc[j].meta.true_range_m - base[j].meta.true_range_m);
        const double unc = dd_unc.phase_cycles - dd_amb - dd_range / lambda_m;
        const double cor = dd_cor.phase_cycles - dd_amb - dd_range / lambda_m;
        const double expected =
            (rover_unc[i].meta.phase_center_m - rover_unc[j].meta.phase_center_m) / lambda_m;

        sum_sq_unc += unc * unc;
        sum_sq_cor += cor * cor;
        max_err_unc = std::max(max_err_unc, std::abs(unc - expected));
        max_cor = std::max(max_cor, std::abs(cor));
        ++n_rows;

        res_csv += std::to_string(t) + ',' + scn.sats[i].id + ',' + scn.sats[j].id + ',' +
                   shortest(unc) + ',' + shortest(cor) + ',' + shortest(expected) + '\n';
      }
    }
  }

  SimulateRtkResult result;
  result.n_satellites = ns;
  result.n_epochs = static_cast<std::size_t>(scn.epochs);
  result.rms_uncorrected_cycles = std::sqrt(sum_sq_unc / static_cast<double>(n_rows));
  result.rms_corrected_cycles = std::sqrt(sum_sq_cor / static_cast<double>(n_rows));
  result.max_uncorrected_error_cycles = max_err_unc;
  result.max_corrected_cycles = max_cor;

  char buf[512];
  std::snprintf(buf, sizeof(buf),
                "simulate-rtk: %zu satellites x %d epochs at %s MHz\n"
                "rms DD residual uncorrected [cycles]: %.12e\n"
                "rms DD residual corrected   [cycles]: %.12e\n"
                "max |uncorrected - injected antenna DD| [cycles]: %.3e\n"
                "max |corrected| [cycles]: %.3e\n",
                ns, scn.epochs, freq_tag(scn.freq_mhz).c_str(), result.rms_uncorrected_cycles,
                result.rms_corrected_cycles, result.max_uncorrected_error_cycles,
                result.max_corrected_cycles);
  result.report_text = buf;

  std::filesystem::create_directories(config.out_dir);
  result.observables_csv = config.out_dir / "observables.csv";
  result.residuals_csv = config.out_dir / "residuals.csv";
  write_text_file(result.observables_csv, obs_csv);
  write_text_file(result.residuals_csv, res_csv);
  write_text_file(config.out_dir / "simulate_rtk.txt", result.report_text);
  return result;
}

}  // namespace antcal
