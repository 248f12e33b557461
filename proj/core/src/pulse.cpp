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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

namespace djnmr::nmr {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double deg_to_rad(double deg) { return deg / 180.0 * kPi; }
double rad_to_deg(double rad) { return rad / kPi * 180.0; }

void check_angle(double angle_rad) {
  if (!std::isfinite(angle_rad) || angle_rad <= -kTwoPi || angle_rad > kTwoPi + 1e-12) {
    throw ValidationError("pulse angle must lie in (-2pi, 2pi]");
  }
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

int parse_int(const std::string& tok, int line, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
  }
  return value;
}

double parse_double(const std::string& tok, int line, const char* what) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
  }
  return value;
}

// "k/mJ(i,j)"
SymbolicDelay parse_symbolic_delay(const std::string& tok, int line) {
  std::size_t slash = tok.find('/');
  std::size_t jpos = tok.find_first_of("Jj");
  std::size_t open = tok.find('(');
  std::size_t comma = tok.find(',', open == std::string::npos ? 0 : open);
  std::size_t close = tok.find(')');
  if (slash == std::string::npos || jpos == std::string::npos || open == std::string::npos ||
      comma == std::string::npos || close == std::string::npos || slash == 0 ||
      jpos < slash || open != jpos + 1 || comma < open || close < comma ||
      close + 1 != tok.size()) {
    throw ParseError(line, "malformed delay '" + tok + "'; expected seconds or k/mJ(i,j)");
  }
  SymbolicDelay d;
  d.numerator = parse_int(tok.substr(0, slash), line, "delay numerator");
  d.denominator = parse_int(tok.substr(slash + 1, jpos - slash - 1), line, "delay denominator");
  d.spin_i = parse_int(tok.substr(open + 1, comma - open - 1), line, "spin index");
  d.spin_j = parse_int(tok.substr(comma + 1, close - comma - 1), line, "spin index");
  if (d.spin_i > d.spin_j) std::swap(d.spin_i, d.spin_j);
  if (d.numerator < 1 || d.denominator < 1) {
    throw ParseError(line, "delay fraction must be positive");
  }
  return d;
}

std::string format_angle_deg(double angle_rad) {
  std::ostringstream out;
  out.precision(12);
  out << rad_to_deg(angle_rad);
  return out.str();
}

}  // namespace

const char* axis_token(Axis axis) {
  switch (axis) {
    case Axis::X: return "x";
    case Axis::MinusX: return "-x";
    case Axis::Y: return "y";
    case Axis::MinusY: return "-y";
    case Axis::Z: return "z";
    case Axis::MinusZ: return "-z";
  }
  return "?";
}

Axis axis_from_token(const std::string& token) {
  if (token == "x") return Axis::X;
  if (token == "-x") return Axis::MinusX;
  if (token == "y") return Axis::Y;
  if (token == "-y") return Axis::MinusY;
  if (token == "z") return Axis::Z;
  if (token == "-z") return Axis::MinusZ;
  throw ValidationError("unknown axis '" + token + "'");
}

int axis_sign(Axis axis) {
  switch (axis) {
    case Axis::MinusX:
    case Axis::MinusY:
    case Axis::MinusZ:
      return -1;
    default:
      return 1;
  }
}

namespace detail {

void validate_element(const PulseElement& element, const SpinSystem& sys) {
  if (const auto* pulse = std::get_if<HardPulse>(&element)) {
    if (pulse->spins.empty()) throw ValidationError("pulse needs at least one spin");
    int prev = 0;
    for (int s : pulse->spins) {
      if (s < 1 || s > sys.n_spins()) {
        throw ValidationError("unknown spin " + std::to_string(s));
      }
      if (s <= prev) throw ValidationError("pulse spin list must be ascending without duplicates");
      prev = s;
    }
    check_angle(pulse->angle_rad);
  } else if (const auto* z = std::get_if<ZPulse>(&element)) {
    if (z->spin < 1 || z->spin > sys.n_spins()) {
      throw ValidationError("unknown spin " + std::to_string(z->spin));
    }
    check_angle(z->angle_rad);
  } else {
    const auto& delay = std::get<Delay>(element);
    if (delay.seconds.has_value() == delay.symbolic.has_value()) {
      throw ValidationError("delay must be either literal seconds or symbolic");
    }
    if (delay.seconds) {
      if (!std::isfinite(*delay.seconds) || *delay.seconds < 0) {
        throw ValidationError("delay duration must be finite and >= 0");
      }
    } else {
      const SymbolicDelay& d = *delay.symbolic;
      if (d.spin_i < 1 || d.spin_j > sys.n_spins() || d.spin_i >= d.spin_j) {
        throw ValidationError("delay coupling J(" + std::to_string(d.spin_i) + "," +
                              std::to_string(d.spin_j) + ") refers to invalid spins");
      }
      if (sys.coupling_hz(d.spin_i, d.spin_j) == 0.0) {
        throw ValidationError("delay references absent coupling J(" +
                              std::to_string(d.spin_i) + "," + std::to_string(d.spin_j) + ")");
      }
    }
  }
}

}  // namespace detail

PulseSequence parse_sequence(const std::string& text, const SpinSystem& sys, std::string name) {
  PulseSequence seq;
  seq.name = std::move(name);

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::size_t hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    std::vector<std::string> tok = split_ws(line);
    if (tok.empty()) continue;

    std::string keyword = upper(tok[0]);
    try {
      if (keyword == "PULSE") {
        if (tok.size() != 4) throw ParseError(line_no, "PULSE expects <spin-list> <axis> <angle-deg>");
        HardPulse pulse;
        std::istringstream spins(tok[1]);
        std::string item;
        while (std::getline(spins, item, ',')) {
          pulse.spins.push_back(parse_int(item, line_no, "spin index"));
        }
        std::sort(pulse.spins.begin(), pulse.spins.end());
        pulse.axis = axis_from_token(tok[2]);
        pulse.angle_rad = deg_to_rad(parse_double(tok[3], line_no, "angle in degrees"));
        seq.elements.emplace_back(std::move(pulse));
      } else if (keyword == "DELAY") {
        if (tok.size() != 2) throw ParseError(line_no, "DELAY expects one argument");
        Delay delay;
        if (tok[1].find_first_of("Jj") != std::string::npos) {
          delay.symbolic = parse_symbolic_delay(tok[1], line_no);
        } else {
          delay.seconds = parse_double(tok[1], line_no, "delay in seconds");
        }
        seq.elements.emplace_back(std::move(delay));
      } else if (keyword == "ZPULSE") {
        if (tok.size() != 3) throw ParseError(line_no, "ZPULSE expects <spin> <angle-deg>");
        ZPulse z;
        z.spin = parse_int(tok[1], line_no, "spin index");
        z.angle_rad = deg_to_rad(parse_double(tok[2], line_no, "angle in degrees"));
        seq.elements.emplace_back(z);
      } else {
        throw ParseError(line_no, "unknown directive '" + tok[0] + "'");
      }
      detail::validate_element(seq.elements.back(), sys);
    } catch (const ParseError&) {
      throw;
    } catch (const ValidationError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return seq;
}

std::string format_sequence(const PulseSequence& seq) {
  std::ostringstream out;
  if (seq.elements.empty()) {
    out << "# do-nothing\n";
    return out.str();
  }
  for (const PulseElement& element : seq.elements) {
    if (const auto* pulse = std::get_if<HardPulse>(&element)) {
      out << "PULSE ";
      for (std::size_t k = 0; k < pulse->spins.size(); ++k) {
        if (k) out << ',';
        out << pulse->spins[k];
      }
      out << ' ' << axis_token(pulse->axis) << ' ' << format_angle_deg(pulse->angle_rad) << '\n';
    } else if (const auto* z = std::get_if<ZPulse>(&element)) {
      out << "ZPULSE " << z->spin << ' ' << format_angle_deg(z->angle_rad) << '\n';
    } else {
      const auto& delay = std::get<Delay>(element);
      if (delay.seconds) {
        std::ostringstream sec;
        sec.precision(12);
        sec << *delay.seconds;
        out << "DELAY " << sec.str() << '\n';
      } else {
        const SymbolicDelay& d = *delay.symbolic;
        out << "DELAY " << d.numerator << '/' << d.denominator << "J(" << d.spin_i << ','
            << d.spin_j << ")\n";
      }
    }
  }
  return out.str();
}

double resolve_delay(const SpinSystem& sys, const Delay& delay) {
  if (delay.seconds) {
    if (!std::isfinite(*delay.seconds) || *delay.seconds < 0) {
      throw ValidationError("delay duration must be finite and >= 0");
    }
    return *delay.seconds;
  }
  if (!delay.symbolic) throw ValidationError("empty delay");
  const SymbolicDelay& d = *delay.symbolic;
  double j = sys.coupling_hz(d.spin_i, d.spin_j);
  if (j == 0.0) {
    throw ValidationError("delay references absent coupling J(" + std::to_string(d.spin_i) +
                          "," + std::to_string(d.spin_j) + ")");
  }
  double seconds = static_cast<double>(d.numerator) / d.denominator / j;
  if (!std::isfinite(seconds) || seconds < 0) {
    throw ValidationError("symbolic delay resolves to an invalid duration");
  }
  return seconds;
}

}  // namespace djnmr::nmr
