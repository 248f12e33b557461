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

#include "djnmr/spin_system.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace djnmr::nmr {

namespace {

void require_finite(double v, const std::string& what) {
  if (!std::isfinite(v)) throw ValidationError(what + " must be finite");
}

std::pair<int, int> parse_coupling_key(const std::string& key) {
  std::size_t comma = key.find(',');
  if (comma == std::string::npos || comma == 0 || comma + 1 == key.size()) {
    throw ValidationError("coupling key '" + key + "' must have the form \"i,j\"");
  }
  try {
    int i = std::stoi(key.substr(0, comma));
    int j = std::stoi(key.substr(comma + 1));
    return {i, j};
  } catch (const std::exception&) {
    throw ValidationError("coupling key '" + key + "' must have the form \"i,j\"");
  }
}

}  // namespace

SpinSystem::SpinSystem(int n_spins, std::vector<double> shifts_hz,
                       std::map<std::pair<int, int>, double> couplings_hz,
                       std::vector<double> weights)
    : n_spins_(n_spins),
      shifts_hz_(std::move(shifts_hz)),
      couplings_(std::move(couplings_hz)),
      weights_(std::move(weights)) {
  if (n_spins_ < 1 || n_spins_ > 3) {
    throw ValidationError("SpinSystem: n_spins must be in 1..3");
  }
  if (shifts_hz_.size() != static_cast<std::size_t>(n_spins_)) {
    throw ValidationError("SpinSystem: shifts_hz must have one entry per spin");
  }
  for (double s : shifts_hz_) require_finite(s, "SpinSystem: shift");
  for (const auto& [pair, j] : couplings_) {
    if (pair.first < 1 || pair.second > n_spins_ || pair.first >= pair.second) {
      throw ValidationError("SpinSystem: coupling pair (" + std::to_string(pair.first) +
                            "," + std::to_string(pair.second) + ") invalid; need 1 <= i < j <= n");
    }
    require_finite(j, "SpinSystem: coupling");
  }
  if (weights_.empty()) {
    weights_.assign(static_cast<std::size_t>(n_spins_), 1.0);
  }
  if (weights_.size() != static_cast<std::size_t>(n_spins_)) {
    throw ValidationError("SpinSystem: weights must have one entry per spin");
  }
  for (double w : weights_) require_finite(w, "SpinSystem: weight");
}

void SpinSystem::check_spin(int spin) const {
  if (spin < 1 || spin > n_spins_) {
    throw ValidationError("unknown spin " + std::to_string(spin));
  }
}

double SpinSystem::shift_hz(int spin) const {
  check_spin(spin);
  return shifts_hz_[static_cast<std::size_t>(spin - 1)];
}

double SpinSystem::coupling_hz(int i, int j) const {
  check_spin(i);
  check_spin(j);
  if (i == j) throw ValidationError("coupling requires two distinct spins");
  if (i > j) std::swap(i, j);
  auto it = couplings_.find({i, j});
  return it == couplings_.end() ? 0.0 : it->second;
}

double SpinSystem::weight(int spin) const {
  check_spin(spin);
  return weights_[static_cast<std::size_t>(spin - 1)];
}

SpinSystem spin_system_from_json(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("spin-system config: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ValidationError("spin-system config must be a JSON object");
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "n_spins" && key != "shifts_hz" && key != "couplings_hz" && key != "weights") {
      throw ValidationError("spin-system config: unknown key '" + key + "'");
    }
  }
  if (!doc.contains("n_spins") || !doc.contains("shifts_hz")) {
    throw ValidationError("spin-system config: n_spins and shifts_hz are required");
  }

  try {
    int n = doc.at("n_spins").get<int>();
    std::vector<double> shifts = doc.at("shifts_hz").get<std::vector<double>>();
    std::map<std::pair<int, int>, double> couplings;
    if (doc.contains("couplings_hz")) {
      for (const auto& [key, value] : doc.at("couplings_hz").items()) {
        couplings[parse_coupling_key(key)] = value.get<double>();
      }
    }
    std::vector<double> weights;
    if (doc.contains("weights")) {
      weights = doc.at("weights").get<std::vector<double>>();
    }
    return SpinSystem(n, std::move(shifts), std::move(couplings), std::move(weights));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("spin-system config: ") + e.what());
  }
}

SpinSystem load_spin_system(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open spin-system config '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return spin_system_from_json(buf.str());
}

}  // namespace djnmr::nmr
