// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>

#include "antcal/errors.hpp"
#include "antcal/ffd.hpp"

using namespace antcal;

namespace {

Errc code_of(const std::string& text) {
  try {
    parse_ffd(text);
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::io_error;  // sentinel: no throw
}

const char* kMinimal =
    "# comment\n"
    "antenna=UNIT\n"
    "scenario=EVB\n"
    "quantity=phase_deg\n"
    "1176.45,0,0,10\n"
    "1176.45,0,180,11\n"
    "1176.45,90,0,12\n"
    "1176.45,90,180,13\n";

}  // namespace

TEST_CASE("minimal file parses to a 2x2 phase map") {
  const MeasurementSet set = parse_ffd(kMinimal);
  CHECK(set.antenna == "UNIT");
  CHECK(set.scenario == "EVB");
  REQUIRE(set.phase_maps.size() == 1);
  const PhaseMap& m = set.phase_maps[0];
  CHECK(m.frequency_mhz() == 1176.45);
  CHECK(m.grid().size() == 4);
  CHECK(m.at(0, 0) == 10.0);
  CHECK(m.at(0, 1) == 11.0);
  CHECK(m.at(1, 0) == 12.0);
  CHECK(m.at(1, 1) == 13.0);
}

TEST_CASE("a hole in the grid is a MissingNode naming the node") {
  const std::string text =
      "antenna=U\nscenario=EVB\nquantity=phase_deg\n"
      "1176.45,0,0,1\n1176.45,0,180,2\n1176.45,90,0,3\n";
  try {
    parse_ffd(text);
    FAIL("expected MissingNode");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::missing_node);
    CHECK(std::string(e.what()).find("1176.45") != std::string::npos);
    CHECK(std::string(e.what()).find("90") != std::string::npos);
    CHECK(std::string(e.what()).find("180") != std::string::npos);
  }
}

TEST_CASE("repeated nodes, bad headers, bad values") {
  CHECK(code_of("antenna=U\nscenario=EVB\nquantity=phase_deg\n"
                "1,0,0,1\n1,0,0,2\n1,0,180,3\n") == Errc::duplicate_node);
  CHECK(code_of("antenna=U\nscenario=EVB\n1176.45,0,0,1\n") == Errc::bad_header);
  CHECK(code_of("antenna=U\nscenario=LAB\nquantity=phase_deg\n1,0,0,1\n") == Errc::bad_header);
  CHECK(code_of("antenna=U\nscenario=EVB\nquantity=volts\n1,0,0,1\n") == Errc::bad_header);
  CHECK(code_of("antenna=U\nscenario=EVB\nquantity=phase_deg\n1,0,0\n") == Errc::bad_header);
  CHECK(code_of("antenna=U\nscenario=EVB\nquantity=phase_deg\n1,0,0,abc\n") == Errc::bad_header);
  CHECK(code_of("antenna=U\nscenario=EVB\nquantity=phase_deg\n1,0,0,2e7\n") == Errc::unit_error);
  CHECK(code_of("") == Errc::bad_header);
}

TEST_CASE("carriage returns and blank lines are tolerated") {
  std::string text(kMinimal);
  std::string crlf;
  for (char c : text) {
    if (c == '\n') crlf += "\r\n";
    else crlf += c;
  }
  crlf += "\r\n\r\n";
  const MeasurementSet set = parse_ffd(crlf);
  CHECK(set.phase_maps.size() == 1);
}

TEST_CASE("write/parse round trip is bit exact for phase data") {
  const SphericalGrid g = SphericalGrid::with_steps(10.0, 30.0);
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(-179.0, 180.0);

  MeasurementSet set;
  set.antenna = "ROUND TRIP";
  set.scenario = "sharkfin";
  for (double f : {1176.45, 1575.42}) {
    std::vector<double> v(g.size());
    for (double& x : v) x = u(rng);
    set.phase_maps.emplace_back(g, f, std::move(v));
  }

  const std::string text = write_ffd(set);
  const MeasurementSet back = parse_ffd(text);
  CHECK(back.antenna == set.antenna);
  CHECK(back.scenario == set.scenario);
  REQUIRE(back.phase_maps.size() == 2);
  for (std::size_t m = 0; m < 2; ++m) {
    REQUIRE(back.phase_maps[m].grid() == set.phase_maps[m].grid());
    REQUIRE(back.phase_maps[m].frequency_mhz() == set.phase_maps[m].frequency_mhz());
    for (std::size_t i = 0; i < g.size(); ++i)
      REQUIRE(back.phase_maps[m].values()[i] == set.phase_maps[m].values()[i]);
  }
  // writing again reproduces the same bytes
  CHECK(write_ffd(back) == text);
}

TEST_CASE("gain and dual-linear data round trip") {
  const SphericalGrid g = SphericalGrid::with_steps(30.0, 90.0);
  std::mt19937_64 rng(78);
  std::uniform_real_distribution<double> u(-20.0, 8.0);

  MeasurementSet gains;
  gains.antenna = "G";
  gains.scenario = "vehicle";
  {
    std::vector<double> r(g.size()), l(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      r[i] = u(rng);
      l[i] = u(rng);
    }
    gains.gain_maps.emplace_back(g, 1575.42, std::move(r), std::move(l));
  }
  const MeasurementSet gains_back = parse_ffd(write_ffd(gains));
  REQUIRE(gains_back.gain_maps.size() == 1);
  for (std::size_t i = 0; i < g.size(); ++i) {
    REQUIRE(gains_back.gain_maps[0].rhcp_dbic()[i] == gains.gain_maps[0].rhcp_dbic()[i]);
    REQUIRE(gains_back.gain_maps[0].lhcp_dbic()[i] == gains.gain_maps[0].lhcp_dbic()[i]);
  }

  MeasurementSet vh;
  vh.antenna = "G";
  vh.scenario = "vehicle";
  {
    std::vector<ComplexFieldSample> v(g.size()), h(g.size());
    std::uniform_real_distribution<double> amp(0.0, 2.0);
    for (std::size_t i = 0; i < g.size(); ++i) {
      v[i] = ComplexFieldSample(amp(rng), u(rng));
      h[i] = ComplexFieldSample(amp(rng), u(rng));
    }
    vh.vh_maps.emplace_back(g, 1176.45, std::move(v), std::move(h));
  }
  const MeasurementSet vh_back = parse_ffd(write_ffd(vh));
  REQUIRE(vh_back.vh_maps.size() == 1);
  for (std::size_t i = 0; i < g.size(); ++i) {
    REQUIRE(vh_back.vh_maps[0].v()[i].amplitude == vh.vh_maps[0].v()[i].amplitude);
    REQUIRE(vh_back.vh_maps[0].h()[i].phase_deg == vh.vh_maps[0].h()[i].phase_deg);
  }
}

TEST_CASE("merging requires matching antenna and scenario") {
  MeasurementSet a = parse_ffd(kMinimal);
  MeasurementSet b = parse_ffd(kMinimal);
  b.antenna = "OTHER";
  CHECK_THROWS_AS(a.merge(std::move(b)), Error);

  MeasurementSet c = parse_ffd(kMinimal);
  MeasurementSet d;
  d.antenna = "UNIT";
  d.scenario = "EVB";
  CHECK_NOTHROW(c.merge(std::move(d)));
}

TEST_CASE("a set with two quantity kinds cannot be written as one file") {
  MeasurementSet set = parse_ffd(kMinimal);
  const SphericalGrid g = SphericalGrid::with_steps(90.0, 180.0);
  set.gain_maps.emplace_back(g, 1575.42, std::vector<double>(g.size(), 0.0),
                             std::vector<double>(g.size(), 0.0));
  CHECK_THROWS_AS(write_ffd(set), Error);
}
