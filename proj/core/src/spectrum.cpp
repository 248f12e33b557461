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

#include "djnmr/spectrum.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace djnmr::nmr {

namespace {

constexpr const char* kCsvHeader = "spin,frequency_hz,amp_real,amp_imag,partner_config";

double parse_field_double(const std::string& tok) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ValidationError("spectrum CSV: bad numeric field '" + tok + "'");
  }
  return v;
}

}  // namespace

std::string SpectralLine::partner_config_string(int n_spins) const {
  if (n_spins <= 1) return "-";
  std::string s;
  for (int k = n_spins - 2; k >= 0; --k) {
    s.push_back((partner_config >> k) & 1 ? '1' : '0');
  }
  return s;
}

StickSpectrum render_spectrum(const DensityOperator& rho, const SpinSystem& sys) {
  if (rho.n_spins() != sys.n_spins()) {
    throw ValidationError("render_spectrum: spin-count mismatch");
  }
  int n = sys.n_spins();
  StickSpectrum spectrum;
  spectrum.n_spins = n;

  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (sys.shift_hz(i) == sys.shift_hz(j)) {
        spectrum.warnings.push_back("spins " + std::to_string(i) + " and " + std::to_string(j) +
                                    " have identical shifts; multiplets overlap");
      }
    }
  }

  for (int i = 1; i <= n; ++i) {
    std::vector<SpectralLine> multiplet;
    for (unsigned config = 0; config < (1u << (n - 1)); ++config) {
      // Assemble the basis pair: partners per config, observed spin 0 -> q,
      // 1 -> p.
      int q = 0;
      int slot = n - 2;
      for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        int bit = (config >> slot) & 1;
        q |= bit << (n - j);
        --slot;
      }
      int p = q | (1 << (n - i));

      double frequency = sys.shift_hz(i);
      slot = n - 2;
      for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        double mj = (config >> slot) & 1 ? -0.5 : 0.5;
        frequency += sys.coupling_hz(i, j) * mj;
        --slot;
      }
      multiplet.push_back(SpectralLine{i, frequency, rho.matrix()(p, q), config});
    }
    std::sort(multiplet.begin(), multiplet.end(), [](const SpectralLine& a, const SpectralLine& b) {
      if (a.frequency_hz != b.frequency_hz) return a.frequency_hz < b.frequency_hz;
      return a.partner_config < b.partner_config;
    });
    for (std::size_t k = 1; k < multiplet.size(); ++k) {
      if (std::abs(multiplet[k].frequency_hz - multiplet[k - 1].frequency_hz) < 1e-9) {
        spectrum.warnings.push_back("degenerate lines for spin " + std::to_string(i) + " at " +
                                    std::to_string(multiplet[k].frequency_hz) + " Hz");
      }
    }
    spectrum.lines.insert(spectrum.lines.end(), multiplet.begin(), multiplet.end());
  }
  return spectrum;
}

std::string spectrum_to_csv(const StickSpectrum& spectrum) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  char buf[128];
  // Values below the printed precision collapse to exact zero so that
  // fixtures never contain "-0.000000".
  auto clamp = [](double v) { return std::abs(v) < 5e-7 ? 0.0 : v; };
  for (const SpectralLine& line : spectrum.lines) {
    std::snprintf(buf, sizeof(buf), "%d,%.6f,%.6f,%.6f,%s", line.spin,
                  clamp(line.frequency_hz), clamp(line.amplitude.real()),
                  clamp(line.amplitude.imag()),
                  line.partner_config_string(spectrum.n_spins).c_str());
    out << buf << '\n';
  }
  return out.str();
}

StickSpectrum spectrum_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw ValidationError(std::string("spectrum CSV: expected header '") + kCsvHeader + "'");
  }
  StickSpectrum spectrum;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string tok;
    while (std::getline(ls, tok, ',')) fields.push_back(tok);
    if (fields.size() != 5) {
      throw ValidationError("spectrum CSV: expected 5 fields, got '" + line + "'");
    }
    SpectralLine sl;
    sl.spin = static_cast<int>(parse_field_double(fields[0]));
    sl.frequency_hz = parse_field_double(fields[1]);
    sl.amplitude = qcore::Complex(parse_field_double(fields[2]), parse_field_double(fields[3]));
    sl.partner_config = 0;
    if (fields[4] != "-") {
      for (char c : fields[4]) {
        if (c != '0' && c != '1') {
          throw ValidationError("spectrum CSV: bad partner_config '" + fields[4] + "'");
        }
        sl.partner_config = (sl.partner_config << 1) | (c == '1' ? 1u : 0u);
      }
      spectrum.n_spins = std::max(spectrum.n_spins, static_cast<int>(fields[4].size()) + 1);
    } else {
      spectrum.n_spins = std::max(spectrum.n_spins, 1);
    }
    spectrum.lines.push_back(sl);
  }
  if (spectrum.lines.empty()) {
    throw ValidationError("spectrum CSV: no data rows");
  }
  return spectrum;
}

SpectralVerdict spectral_verdict(const StickSpectrum& spectrum) {
  if (spectrum.lines.empty()) {
    throw ValidationError("spectral_verdict: empty spectrum");
  }
  double min_in_phase = spectrum.lines.front().amplitude.real();
  for (const SpectralLine& line : spectrum.lines) {
    min_in_phase = std::min(min_in_phase, line.amplitude.real());
  }
  auto kind = min_in_phase > 0 ? oracles::Classification::Constant
                               : oracles::Classification::Balanced;
  return SpectralVerdict{kind, min_in_phase};
}

}  // namespace djnmr::nmr
