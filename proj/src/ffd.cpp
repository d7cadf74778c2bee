// SPDX-License-Identifier: Apache-2.0
#include "antcal/ffd.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <string>

#include "antcal/errors.hpp"

namespace antcal {

namespace {

constexpr double kValueLimit = 1e6;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view field, std::size_t line_no) {
  field = trim(field);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size())
    raise(Errc::bad_header,
          "line " + std::to_string(line_no) + ": not a number: '" + std::string(field) + "'");
  return v;
}

void check_value(double v, std::size_t line_no) {
  if (!std::isfinite(v) || std::abs(v) > kValueLimit)
    raise(Errc::unit_error,
          "line " + std::to_string(line_no) + ": value outside numeric range: " + std::to_string(v));
}

std::string format_number(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

struct RawRow {
  double elev, azim;
  double vals[4];
  int nvals;
  std::size_t line_no;
};

}  // namespace

bool is_known_scenario(std::string_view name) {
  for (const char* s : kScenarioNames)
    if (name == s) return true;
  return false;
}

const PhaseMap* MeasurementSet::find_phase(double frequency_mhz) const {
  for (const auto& m : phase_maps)
    if (std::abs(m.frequency_mhz() - frequency_mhz) < 1e-6) return &m;
  return nullptr;
}

const GainMap* MeasurementSet::find_gain(double frequency_mhz) const {
  for (const auto& m : gain_maps)
    if (std::abs(m.frequency_mhz() - frequency_mhz) < 1e-6) return &m;
  return nullptr;
}

void MeasurementSet::merge(MeasurementSet other) {
  if (antenna != other.antenna || scenario != other.scenario)
    raise(Errc::mismatched_structure, "cannot merge measurement sets of different antennas");
  for (auto& m : other.phase_maps) phase_maps.push_back(std::move(m));
  for (auto& m : other.gain_maps) gain_maps.push_back(std::move(m));
  for (auto& m : other.vh_maps) vh_maps.push_back(std::move(m));
}

MeasurementSet parse_ffd(std::string_view text) {
  MeasurementSet set;
  std::string quantity;
  bool saw_antenna = false, saw_scenario = false;

  // rows grouped by frequency, in first-seen order
  std::vector<double> freq_order;
  std::map<double, std::vector<RawRow>> rows;
  int expected_vals = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    const auto eq = line.find('=');
    const auto comma = line.find(',');
    if (eq != std::string_view::npos && (comma == std::string_view::npos || eq < comma)) {
      const std::string_view key = trim(line.substr(0, eq));
      const std::string_view value = trim(line.substr(eq + 1));
      if (key == "antenna") {
        set.antenna = std::string(value);
        saw_antenna = true;
      } else if (key == "scenario") {
        if (!is_known_scenario(value))
          raise(Errc::bad_header, "line " + std::to_string(line_no) + ": unknown scenario '" +
                                      std::string(value) + "' (EVB|sharkfin|vehicle)");
        set.scenario = std::string(value);
        saw_scenario = true;
      } else if (key == "quantity") {
        if (value == "phase_deg") expected_vals = 1;
        else if (value == "gain_dbic") expected_vals = 2;
        else if (value == "vh_complex") expected_vals = 4;
        else
          raise(Errc::bad_header, "line " + std::to_string(line_no) + ": unknown quantity '" +
                                      std::string(value) + "'");
        quantity = std::string(value);
      } else {
        raise(Errc::bad_header,
              "line " + std::to_string(line_no) + ": unknown header key '" + std::string(key) + "'");
      }
      continue;
    }

    // data row
    if (!saw_antenna || !saw_scenario || quantity.empty())
      raise(Errc::bad_header, "line " + std::to_string(line_no) +
                                  ": data before antenna/scenario/quantity headers");
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t c = line.find(',', start);
      fields.push_back(line.substr(start, c == std::string_view::npos ? line.size() - start : c - start));
      if (c == std::string_view::npos) break;
      start = c + 1;
    }
    if (static_cast<int>(fields.size()) != 3 + expected_vals)
      raise(Errc::bad_header, "line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(3 + expected_vals) + " columns, got " +
                                  std::to_string(fields.size()));
    RawRow row{};
    const double freq = parse_number(fields[0], line_no);
    row.elev = parse_number(fields[1], line_no);
    row.azim = parse_number(fields[2], line_no);
    row.nvals = expected_vals;
    row.line_no = line_no;
    for (int i = 0; i < expected_vals; ++i) {
      row.vals[i] = parse_number(fields[3 + i], line_no);
      check_value(row.vals[i], line_no);
    }
    auto it = rows.find(freq);
    if (it == rows.end()) {
      freq_order.push_back(freq);
      it = rows.emplace(freq, std::vector<RawRow>{}).first;
    }
    it->second.push_back(row);
  }

  if (rows.empty()) raise(Errc::bad_header, "no data rows");

  std::sort(freq_order.begin(), freq_order.end());
  for (double freq : freq_order) {
    const auto& rr = rows[freq];
    std::vector<double> elevs, azims;
    for (const auto& r : rr) {
      elevs.push_back(r.elev);
      azims.push_back(r.azim);
    }
    std::sort(elevs.begin(), elevs.end());
    elevs.erase(std::unique(elevs.begin(), elevs.end()), elevs.end());
    std::sort(azims.begin(), azims.end());
    azims.erase(std::unique(azims.begin(), azims.end()), azims.end());
    SphericalGrid grid(elevs, azims);

    const std::size_t n = grid.size();
    std::vector<int> seen(n, 0);
    std::vector<std::array<double, 4>> vals(n);
    for (const auto& r : rr) {
      const auto ie = grid.find_elevation(r.elev);
      const auto ia = grid.find_azimuth(r.azim);
      const std::size_t node = grid.node_index(*ie, *ia);
      if (seen[node]++)
        raise(Errc::duplicate_node, "duplicate node (freq " + format_number(freq) + ", elev " +
                                        format_number(r.elev) + ", azim " + format_number(r.azim) +
                                        ") at line " + std::to_string(r.line_no));
      for (int i = 0; i < r.nvals; ++i) vals[node][i] = r.vals[i];
    }
    for (std::size_t ie = 0; ie < grid.n_elevation(); ++ie)
      for (std::size_t ia = 0; ia < grid.n_azimuth(); ++ia)
        if (!seen[grid.node_index(ie, ia)])
          raise(Errc::missing_node,
                "missing node (freq " + format_number(freq) + ", elev " +
                    format_number(grid.elevations()[ie]) + ", azim " +
                    format_number(grid.azimuths()[ia]) + ")");

    if (quantity == "phase_deg") {
      std::vector<double> v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = vals[i][0];
      set.phase_maps.emplace_back(grid, freq, std::move(v));
    } else if (quantity == "gain_dbic") {
      std::vector<double> r(n), l(n);
      for (std::size_t i = 0; i < n; ++i) {
        r[i] = vals[i][0];
        l[i] = vals[i][1];
      }
      set.gain_maps.emplace_back(grid, freq, std::move(r), std::move(l));
    } else {
      std::vector<ComplexFieldSample> v(n), h(n);
      for (std::size_t i = 0; i < n; ++i) {
        v[i] = ComplexFieldSample(vals[i][0], vals[i][1]);
        h[i] = ComplexFieldSample(vals[i][2], vals[i][3]);
      }
      set.vh_maps.emplace_back(grid, freq, std::move(v), std::move(h));
    }
  }
  return set;
}

std::string write_ffd(const MeasurementSet& set) {
  const int kinds = (!set.phase_maps.empty()) + (!set.gain_maps.empty()) + (!set.vh_maps.empty());
  if (kinds != 1)
    raise(Errc::mismatched_structure, "an FFD file holds exactly one quantity kind");
  if (!is_known_scenario(set.scenario))
    raise(Errc::bad_header, "unknown scenario '" + set.scenario + "'");

  std::string out;
  out += "# FFD v1 far-field measurement set\n";
  out += "antenna=" + set.antenna + "\n";
  out += "scenario=" + set.scenario + "\n";

  auto emit_rows = [&out](const SphericalGrid& g, double freq, auto&& value_cols) {
    for (std::size_t ie = 0; ie < g.n_elevation(); ++ie)
      for (std::size_t ia = 0; ia < g.n_azimuth(); ++ia) {
        out += format_number(freq);
        out += ',';
        out += format_number(g.elevations()[ie]);
        out += ',';
        out += format_number(g.azimuths()[ia]);
        value_cols(ie, ia);
        out += '\n';
      }
  };

  if (!set.phase_maps.empty()) {
    out += "quantity=phase_deg\n";
    auto maps = set.phase_maps;
    std::sort(maps.begin(), maps.end(),
              [](const auto& a, const auto& b) { return a.frequency_mhz() < b.frequency_mhz(); });
    for (const auto& m : maps)
      emit_rows(m.grid(), m.frequency_mhz(), [&](std::size_t ie, std::size_t ia) {
        out += ',';
        out += format_number(m.at(ie, ia));
      });
  } else if (!set.gain_maps.empty()) {
    out += "quantity=gain_dbic\n";
    auto maps = set.gain_maps;
    std::sort(maps.begin(), maps.end(),
              [](const auto& a, const auto& b) { return a.frequency_mhz() < b.frequency_mhz(); });
    for (const auto& m : maps)
      emit_rows(m.grid(), m.frequency_mhz(), [&](std::size_t ie, std::size_t ia) {
        out += ',';
        out += format_number(m.rhcp_at(ie, ia));
        out += ',';
        out += format_number(m.lhcp_at(ie, ia));
      });
  } else {
    out += "quantity=vh_complex\n";
    for (const auto& m : set.vh_maps)
      emit_rows(m.grid(), m.frequency_mhz(), [&](std::size_t ie, std::size_t ia) {
        const auto& v = m.v_at(ie, ia);
        const auto& h = m.h_at(ie, ia);
        out += ',' + format_number(v.amplitude) + ',' + format_number(v.phase_deg) + ',' +
               format_number(h.amplitude) + ',' + format_number(h.phase_deg);
      });
  }
  return out;
}

}  // namespace antcal
