// Copyright 2026 The djnmr Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "djnmr/pulse.hpp"

#include <cmath>
#include <numbers>

#include "doctest.h"

using namespace djnmr;
using nmr::Axis;
using nmr::Delay;
using nmr::HardPulse;
using nmr::PulseSequence;
using nmr::SpinSystem;
using nmr::ZPulse;

namespace {

SpinSystem three_spin() {
  return SpinSystem(3, {300.0, 150.0, 0.0}, {{{1, 2}, 10.0}, {{1, 3}, 4.0}, {{2, 3}, 7.0}});
}

}  // namespace

TEST_CASE("PULSE line parses spins, axis and angle") {
  PulseSequence seq = nmr::parse_sequence("PULSE 2,3 x 180\n", three_spin());
  REQUIRE(seq.elements.size() == 1);
  const auto& pulse = std::get<HardPulse>(seq.elements[0]);
  CHECK(pulse.spins == std::vector<int>{2, 3});
  CHECK(pulse.axis == Axis::X);
  CHECK(pulse.angle_rad == doctest::Approx(std::numbers::pi).epsilon(1e-15));
}

TEST_CASE("symbolic delay resolves against the coupling") {
  PulseSequence seq = nmr::parse_sequence("DELAY 1/2J(2,3)", three_spin());
  REQUIRE(seq.elements.size() == 1);
  const auto& delay = std::get<Delay>(seq.elements[0]);
  REQUIRE(delay.symbolic.has_value());
  CHECK(nmr::resolve_delay(three_spin(), delay) == doctest::Approx(0.0714285714).epsilon(1e-9));
}

TEST_CASE("unknown spin is rejected with its line number") {
  try {
    nmr::parse_sequence("# header\nPULSE 4 x 90\n", three_spin());
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("unknown spin") != std::string::npos);
  }
}

TEST_CASE("comments, blank lines, and lowercase keywords") {
  PulseSequence seq = nmr::parse_sequence(
      "# a comment\n"
      "\n"
      "zpulse 1 90   # trailing comment\n"
      "delay 0.25\n",
      three_spin());
  REQUIRE(seq.elements.size() == 2);
  CHECK(std::get<ZPulse>(seq.elements[0]).spin == 1);
  CHECK(*std::get<Delay>(seq.elements[1]).seconds == 0.25);
}

TEST_CASE("parser rejections") {
  SpinSystem sys = three_spin();
  CHECK_THROWS_AS(nmr::parse_sequence("WAIT 1\n", sys), ParseError);
  CHECK_THROWS_AS(nmr::parse_sequence("PULSE 1 q 90\n", sys), ParseError);
  CHECK_THROWS_AS(nmr::parse_sequence("PULSE 1 x\n", sys), ParseError);
  CHECK_THROWS_AS(nmr::parse_sequence("PULSE 1,1 x 90\n", sys), ParseError);
  CHECK_THROWS_AS(nmr::parse_sequence("PULSE 1 x 721\n", sys), ParseError);
  CHECK_THROWS_AS(nmr::parse_sequence("PULSE 1 x -360\n", sys), ParseError);
  CHECK_THROWS_AS(nmr::parse_sequence("DELAY -1\n", sys), ParseError);
  CHECK_THROWS_AS(nmr::parse_sequence("DELAY 1/0J(2,3)\n", sys), ParseError);
  CHECK_THROWS_AS(nmr::parse_sequence("DELAY 1/2J(2,2)\n", sys), ParseError);
  CHECK_THROWS_AS(nmr::parse_sequence("ZPULSE 5 90\n", sys), ParseError);
  CHECK_THROWS_AS(nmr::parse_sequence("DELAY abc\n", sys), ParseError);
}

TEST_CASE("a delay referencing an absent coupling is rejected at parse time") {
  SpinSystem no13(3, {300.0, 150.0, 0.0}, {{{1, 2}, 10.0}, {{2, 3}, 7.0}});
  CHECK_THROWS_AS(nmr::parse_sequence("DELAY 1/2J(1,3)\n", no13), ParseError);
  // and at resolution time when constructed directly
  Delay delay{.seconds = std::nullopt, .symbolic = nmr::SymbolicDelay{1, 2, 1, 3}};
  CHECK_THROWS_AS(nmr::resolve_delay(no13, delay), ValidationError);
}

TEST_CASE("format/parse round trip is the identity on text") {
  SpinSystem sys = three_spin();
  std::string text =
      "ZPULSE 2 -90\n"
      "ZPULSE 3 -90\n"
      "DELAY 1/4J(2,3)\n"
      "PULSE 2,3 x 180\n"
      "DELAY 1/4J(2,3)\n"
      "PULSE 2,3 x 180\n"
      "ZPULSE 1 180\n"
      "PULSE 1 -y 45\n"
      "DELAY 0.001\n";
  PulseSequence seq = nmr::parse_sequence(text, sys);
  CHECK(nmr::format_sequence(seq) == text);
  PulseSequence reparsed = nmr::parse_sequence(nmr::format_sequence(seq), sys);
  CHECK(nmr::format_sequence(reparsed) == text);
}

TEST_CASE("the empty program formats as an explicit do-nothing") {
  PulseSequence empty;
  CHECK(nmr::format_sequence(empty) == "# do-nothing\n");
  PulseSequence parsed = nmr::parse_sequence(nmr::format_sequence(empty), three_spin());
  CHECK(parsed.elements.empty());
}
