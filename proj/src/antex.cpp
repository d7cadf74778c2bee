// SPDX-License-Identifier: Apache-2.0
#include "antcal/antex.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "antcal/errors.hpp"

namespace antcal {

namespace {

constexpr std::size_t kLabelColumn = 60;  // 0-based; labels occupy 61-80

std::string fixed(double value, int width, int decimals) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%*.*f", width, decimals, value);
  std::string s(buf);
  if (s.size() > static_cast<std::size_t>(width))
    raise(Errc::unit_error, "value does not fit fixed column: " + s);
  return s;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() > width) raise(Errc::unit_error, "field overflows fixed column: " + s);
  s.resize(width, ' ');
  return s;
}

void labeled(std::string& out, std::string body, std::string_view label) {
  out += pad(std::move(body), kLabelColumn);
  out += label;
  out += '\n';
}

std::string_view rstrip(std::string_view s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::string_view lstrip(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  return s;
}

double field_number(std::string_view line, std::size_t col, std::size_t width,
                    std::string_view what) {
  if (col >= line.size())
    raise(Errc::truncated_section, "missing " + std::string(what) + " field");
  std::string_view f = line.substr(col, width);
  f = lstrip(rstrip(f));
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
  if (ec != std::errc() || ptr != f.data() + f.size())
    raise(Errc::bad_label, "bad " + std::string(what) + " field: '" + std::string(f) + "'");
  return v;
}

/// Sequential line reader. Labeled records split into a 60-column body plus
/// the label; pattern records are consumed whole (their data runs past
/// column 60, so they must not be split).
class Reader {
public:
  explicit Reader(std::string_view text) : text_(text) {}

  bool next_raw(std::string_view& line) {
    if (pos_ >= text_.size()) return false;
    const std::size_t eol = text_.find('\n', pos_);
    line = text_.substr(pos_, eol == std::string_view::npos ? text_.size() - pos_ : eol - pos_);
    pos_ = (eol == std::string_view::npos) ? text_.size() + 1 : eol + 1;
    line = rstrip(line);
    return true;
  }

  bool next_labeled(std::string_view& body, std::string_view& label) {
    std::string_view line;
    if (!next_raw(line)) return false;
    if (line.size() > kLabelColumn) {
      body = line.substr(0, kLabelColumn);
      label = rstrip(line.substr(kLabelColumn));
    } else {
      body = line;
      label = {};
    }
    return true;
  }

  /// Next line, which must carry the given label.
  std::string_view expect(std::string_view label) {
    std::string_view body, got;
    if (!next_labeled(body, got))
      raise(Errc::truncated_section, "file ended while expecting '" + std::string(label) + "'");
    if (got != label)
      raise(Errc::bad_label,
            "expected label '" + std::string(label) + "', got '" + std::string(got) + "'");
    return body;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string antex_frequency_code(double frequency_mhz) {
  if (frequency_mhz >= 1559.0 && frequency_mhz <= 1610.0) return "G01";
  if (frequency_mhz >= 1215.0 && frequency_mhz <= 1237.0) return "G02";
  if (frequency_mhz >= 1164.0 && frequency_mhz <= 1189.0) return "G05";
  raise(Errc::bad_config,
        "no ANTEX band code for " + std::to_string(frequency_mhz) + " MHz (L1/L2/L5 supported)");
}

double antex_code_frequency(std::string_view code) {
  if (code == "G01") return kGpsL1Mhz;
  if (code == "G02") return kGpsL2Mhz;
  if (code == "G05") return kGpsL5Mhz;
  raise(Errc::bad_label, "unsupported ANTEX frequency code '" + std::string(code) + "'");
}

std::string write_antex(const CalibrationProfile& profile, const AntexOptions& options) {
  if (profile.frequencies.empty())
    raise(Errc::empty_input, "calibration profile has no frequency entries");
  const double dzen = options.dzen_deg;
  const double dazi = options.dazi_deg;
  if (!(dzen > 0.0) || std::abs(90.0 / dzen - std::round(90.0 / dzen)) > 1e-9)
    raise(Errc::invalid_step, "zenith step must divide 90 deg");
  if (!(dazi > 0.0) || std::abs(360.0 / dazi - std::round(360.0 / dazi)) > 1e-9)
    raise(Errc::invalid_step, "azimuth step must divide 360 deg");
  const int nzen = static_cast<int>(std::round(90.0 / dzen)) + 1;
  const int nazi = static_cast<int>(std::round(360.0 / dazi)) + 1;  // 360 repeats 0
  if (8 + nzen * 8 > 80)
    raise(Errc::invalid_step, "zenith step too fine for 80-character pattern records");

  std::string out;
  labeled(out, fixed(1.4, 8, 1) + pad("", 12) + "G", "ANTEX VERSION / SYST");
  labeled(out, "A", "PCV TYPE / REFANT");
  labeled(out, "PCV: carrier phase correction in mm, add at the observed", "COMMENT");
  labeled(out, "direction; zenith-referenced (0 at boresight)", "COMMENT");
  if (!profile.scenario.empty()) labeled(out, "SCENARIO: " + profile.scenario, "COMMENT");
  labeled(out, "", "END OF HEADER");

  labeled(out, "", "START OF ANTENNA");
  labeled(out, pad(profile.antenna, 20) + pad("", 20), "TYPE / SERIAL NO");
  labeled(out, pad("CHAMBER", 20) + pad("ANTCAL", 20) + pad("", 6) + pad("", 4) + pad("", 10),
          "METH / BY / # / DATE");
  labeled(out, "  " + fixed(dazi, 6, 1), "DAZI");
  labeled(out, "  " + fixed(0.0, 6, 1) + fixed(90.0, 6, 1) + fixed(dzen, 6, 1),
          "ZEN1 / ZEN2 / DZEN");
  {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%6zu", profile.frequencies.size());
    labeled(out, buf, "# OF FREQUENCIES");
  }

  for (const auto& fc : profile.frequencies) {
    const std::string code = antex_frequency_code(fc.frequency_mhz);
    labeled(out, "   " + code, "START OF FREQUENCY");
    labeled(out,
            fixed(fc.pco.x_mm, 10, 2) + fixed(fc.pco.y_mm, 10, 2) + fixed(fc.pco.z_mm, 10, 2),
            "NORTH / EAST / UP");

    // Resample the source grid onto the ANTEX lattice. Rows keyed by azimuth
    // (0..360 inclusive), columns by zenith angle 0..90.
    std::vector<std::vector<double>> pattern(nazi, std::vector<double>(nzen));
    for (int r = 0; r < nazi; ++r) {
      double az = r * dazi;
      if (az >= 360.0) az -= 360.0;
      for (int c = 0; c < nzen; ++c) {
        const double elev = 90.0 - c * dzen;
        pattern[r][c] = fc.pcv.sample(elev, az);
      }
    }

    std::string noazi = "   NOAZI";
    for (int c = 0; c < nzen; ++c) {
      double mean = 0.0;
      for (int r = 0; r + 1 < nazi; ++r) mean += pattern[r][c];  // skip the 360 repeat
      mean /= (nazi - 1);
      noazi += fixed(mean, 8, 2);
    }
    out += noazi + '\n';

    for (int r = 0; r < nazi; ++r) {
      std::string row = fixed(r * dazi, 8, 1);
      for (int c = 0; c < nzen; ++c) row += fixed(pattern[r][c], 8, 2);
      out += row + '\n';
    }
    labeled(out, "   " + code, "END OF FREQUENCY");
  }
  labeled(out, "", "END OF ANTENNA");
  return out;
}

CalibrationProfile parse_antex(std::string_view text) {
  Reader reader(text);
  CalibrationProfile profile;

  std::string_view body = reader.expect("ANTEX VERSION / SYST");
  (void)field_number(body, 0, 8, "version");

  // header: PCV TYPE then comments until END OF HEADER
  std::string_view label;
  if (!reader.next_labeled(body, label)) raise(Errc::truncated_section, "missing header");
  if (label != "PCV TYPE / REFANT")
    raise(Errc::bad_label, "expected 'PCV TYPE / REFANT', got '" + std::string(label) + "'");
  while (true) {
    if (!reader.next_labeled(body, label)) raise(Errc::truncated_section, "header never ends");
    if (label == "END OF HEADER") break;
    if (label != "COMMENT")
      raise(Errc::bad_label, "unexpected header label '" + std::string(label) + "'");
    constexpr std::string_view kScenarioTag = "SCENARIO: ";
    const auto b = rstrip(body);
    if (b.substr(0, kScenarioTag.size()) == kScenarioTag)
      profile.scenario = std::string(b.substr(kScenarioTag.size()));
  }

  reader.expect("START OF ANTENNA");
  body = reader.expect("TYPE / SERIAL NO");
  profile.antenna = std::string(rstrip(body.substr(0, std::min<std::size_t>(20, body.size()))));
  reader.expect("METH / BY / # / DATE");
  const double dazi = field_number(reader.expect("DAZI"), 2, 6, "DAZI");
  body = reader.expect("ZEN1 / ZEN2 / DZEN");
  const double zen1 = field_number(body, 2, 6, "ZEN1");
  const double zen2 = field_number(body, 8, 6, "ZEN2");
  const double dzen = field_number(body, 14, 6, "DZEN");
  if (!(dzen > 0.0) || !(zen2 > zen1))
    raise(Errc::bad_label, "bad zenith lattice definition");
  const int nzen = static_cast<int>(std::round((zen2 - zen1) / dzen)) + 1;
  const int nazi_rows = static_cast<int>(std::round(360.0 / dazi)) + 1;
  body = reader.expect("# OF FREQUENCIES");
  const int nfreq = static_cast<int>(field_number(body, 0, 6, "frequency count"));

  // grid axes: elevation ascending = reversed zenith columns
  std::vector<double> elevations(nzen), azimuths(nazi_rows - 1);
  for (int c = 0; c < nzen; ++c) elevations[c] = 90.0 - (zen1 + (nzen - 1 - c) * dzen);
  for (int r = 0; r + 1 < nazi_rows; ++r) azimuths[r] = r * dazi;
  SphericalGrid grid(elevations, azimuths);

  for (int f = 0; f < nfreq; ++f) {
    body = reader.expect("START OF FREQUENCY");
    const std::string code(lstrip(rstrip(body)));
    const double freq = antex_code_frequency(code);

    body = reader.expect("NORTH / EAST / UP");
    Pco pco(field_number(body, 0, 10, "NORTH"), field_number(body, 10, 10, "EAST"),
            field_number(body, 20, 10, "UP"));

    std::string_view row;
    if (!reader.next_raw(row)) raise(Errc::truncated_section, "missing NOAZI row");
    if (lstrip(rstrip(row.substr(0, 8))) != "NOAZI")
      raise(Errc::bad_label, "expected NOAZI pattern row");

    std::vector<double> values(grid.size());
    for (int r = 0; r < nazi_rows; ++r) {
      if (!reader.next_raw(row))
        raise(Errc::truncated_section, "pattern rows truncated");
      const double az = field_number(row, 0, 8, "azimuth key");
      if (std::abs(az - r * dazi) > 1e-6)
        raise(Errc::bad_label, "pattern rows out of order at azimuth " + std::to_string(az));
      if (r + 1 == nazi_rows) continue;  // 360 repeats 0
      for (int c = 0; c < nzen; ++c) {
        const double v = field_number(row, 8 + 8 * static_cast<std::size_t>(c), 8, "PCV value");
        const std::size_t ie = static_cast<std::size_t>(nzen - 1 - c);
        values[grid.node_index(ie, static_cast<std::size_t>(r))] = v;
      }
    }
    body = reader.expect("END OF FREQUENCY");
    profile.frequencies.push_back({freq, pco, PcvMap(grid, freq, std::move(values))});
  }
  reader.expect("END OF ANTENNA");
  return profile;
}

}  // namespace antcal
