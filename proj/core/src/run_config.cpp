// Copyright 2026 The srenhance Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sre/run_config.hpp"

#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace sre {
namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    throw InvalidParameterError("config key '" + key + "': not a number: " + value);
  }
}

std::uint64_t parse_uint(const std::string& key, const std::string& value) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw InvalidParameterError("config key '" + key + "': not a non-negative integer: " + value);
  }
  return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw InvalidParameterError("config key '" + key + "': not a boolean: " + value);
}

}  // namespace

RunConfig RunConfig::load(const std::string& path) {
  if (!std::filesystem::exists(path)) {
    throw NotFoundError("no such config file: " + path);
  }
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return from_string(buf.str());
}

RunConfig RunConfig::from_string(const std::string& text) {
  RunConfig cfg;

  const std::map<std::string, std::function<void(const std::string&, const std::string&)>>
      setters = {
          // stft
          {"frame_len", [&](const std::string& k, const std::string& v) {
             cfg.enhance.stft.frame_len = static_cast<std::size_t>(parse_uint(k, v)); }},
          {"hop", [&](const std::string& k, const std::string& v) {
             cfg.enhance.stft.hop = static_cast<std::size_t>(parse_uint(k, v)); }},
          {"window_coeff", [&](const std::string& k, const std::string& v) {
             cfg.enhance.stft.window_coeff = parse_double(k, v); }},
          {"fft_size", [&](const std::string& k, const std::string& v) {
             cfg.enhance.stft.fft_size = static_cast<std::size_t>(parse_uint(k, v)); }},
          // classifier thresholds
          {"theta_low", [&](const std::string& k, const std::string& v) {
             cfg.enhance.thresholds.theta_low = parse_double(k, v); }},
          {"theta_high", [&](const std::string& k, const std::string& v) {
             cfg.enhance.thresholds.theta_high = parse_double(k, v); }},
          // tracker
          {"alpha", [&](const std::string& k, const std::string& v) {
             cfg.enhance.tracker.alpha = parse_double(k, v); }},
          {"alpha_s", [&](const std::string& k, const std::string& v) {
             cfg.enhance.tracker.alpha_s = parse_double(k, v); }},
          {"alpha_b", [&](const std::string& k, const std::string& v) {
             cfg.enhance.tracker.alpha_b = parse_double(k, v); }},
          {"beta", [&](const std::string& k, const std::string& v) {
             cfg.enhance.tracker.beta = parse_double(k, v); }},
          {"gamma", [&](const std::string& k, const std::string& v) {
             cfg.enhance.tracker.gamma = parse_double(k, v); }},
          {"xi", [&](const std::string& k, const std::string& v) {
             cfg.enhance.tracker.xi = parse_double(k, v); }},
          {"delta", [&](const std::string& k, const std::string& v) {
             cfg.enhance.tracker.delta = parse_double(k, v); }},
          {"soft_presence", [&](const std::string& k, const std::string& v) {
             cfg.enhance.tracker.soft_presence = parse_bool(k, v); }},
          {"logistic_slope", [&](const std::string& k, const std::string& v) {
             cfg.enhance.tracker.logistic_slope = parse_double(k, v); }},
          {"use_raw_presence", [&](const std::string& k, const std::string& v) {
             cfg.enhance.tracker.use_raw_presence = parse_bool(k, v); }},
          {"denom_floor", [&](const std::string& k, const std::string& v) {
             cfg.enhance.tracker.denom_floor = parse_double(k, v); }},
          // enhancer
          {"dd_alpha", [&](const std::string& k, const std::string& v) {
             cfg.enhance.dd_alpha = parse_double(k, v); }},
          {"gain_floor", [&](const std::string& k, const std::string& v) {
             cfg.enhance.gain_floor = parse_double(k, v); }},
          {"init_frames", [&](const std::string& k, const std::string& v) {
             cfg.enhance.init_frames = static_cast<std::size_t>(parse_uint(k, v)); }},
          // metrics
          {"seg_frame_ms", [&](const std::string& k, const std::string& v) {
             cfg.metrics.seg_frame_ms = parse_double(k, v); }},
          {"seg_overlap", [&](const std::string& k, const std::string& v) {
             cfg.metrics.seg_overlap = parse_double(k, v); }},
          {"seg_min_db", [&](const std::string& k, const std::string& v) {
             cfg.metrics.seg_min_db = parse_double(k, v); }},
          {"seg_max_db", [&](const std::string& k, const std::string& v) {
             cfg.metrics.seg_max_db = parse_double(k, v); }},
          {"lpc_order", [&](const std::string& k, const std::string& v) {
             cfg.metrics.lpc_order = static_cast<int>(parse_uint(k, v)); }},
          {"llr_trim", [&](const std::string& k, const std::string& v) {
             cfg.metrics.llr_trim = parse_double(k, v); }},
          // misc
          {"seed", [&](const std::string& k, const std::string& v) {
             cfg.seed = parse_uint(k, v); }},
      };

  std::map<std::string, bool> seen;
  std::stringstream ss(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(ss, raw)) {
    ++line_no;
    const std::size_t hash = raw.find('#');
    std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw InvalidParameterError("config line " + std::to_string(line_no) +
                                  ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto it = setters.find(key);
    if (it == setters.end()) {
      throw InvalidParameterError("unknown config key: " + key);
    }
    if (seen[key]) throw InvalidParameterError("duplicate config key: " + key);
    seen[key] = true;
    it->second(key, value);
  }

  cfg.validate();
  return cfg;
}

void RunConfig::validate() const {
  enhance.validate();
  metrics.validate();
}

std::string RunConfig::to_string() const {
  std::ostringstream out;
  out.precision(17);
  out << "frame_len=" << enhance.stft.frame_len << '\n'
      << "hop=" << enhance.stft.hop << '\n'
      << "window_coeff=" << enhance.stft.window_coeff << '\n'
      << "fft_size=" << enhance.stft.fft_size << '\n'
      << "theta_low=" << enhance.thresholds.theta_low << '\n'
      << "theta_high=" << enhance.thresholds.theta_high << '\n'
      << "alpha=" << enhance.tracker.alpha << '\n'
      << "alpha_s=" << enhance.tracker.alpha_s << '\n'
      << "alpha_b=" << enhance.tracker.alpha_b << '\n'
      << "beta=" << enhance.tracker.beta << '\n'
      << "gamma=" << enhance.tracker.gamma << '\n'
      << "xi=" << enhance.tracker.xi << '\n'
      << "delta=" << enhance.tracker.delta << '\n'
      << "soft_presence=" << (enhance.tracker.soft_presence ? "true" : "false") << '\n'
      << "logistic_slope=" << enhance.tracker.logistic_slope << '\n'
      << "use_raw_presence=" << (enhance.tracker.use_raw_presence ? "true" : "false") << '\n'
      << "denom_floor=" << enhance.tracker.denom_floor << '\n'
      << "dd_alpha=" << enhance.dd_alpha << '\n'
      << "gain_floor=" << enhance.gain_floor << '\n'
      << "init_frames=" << enhance.init_frames << '\n'
      << "seg_frame_ms=" << metrics.seg_frame_ms << '\n'
      << "seg_overlap=" << metrics.seg_overlap << '\n'
      << "seg_min_db=" << metrics.seg_min_db << '\n'
      << "seg_max_db=" << metrics.seg_max_db << '\n'
      << "lpc_order=" << metrics.lpc_order << '\n'
      << "llr_trim=" << metrics.llr_trim << '\n'
      << "seed=" << seed << '\n';
  return out.str();
}

}  // namespace sre
