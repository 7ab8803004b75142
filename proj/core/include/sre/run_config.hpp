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

#pragma once

#include <cstdint>
#include <string>

#include "sre/enhancer.hpp"
#include "sre/metrics.hpp"

namespace sre {

/// Flat key=value run configuration ('#' starts a comment). Unknown or
/// duplicate keys and invariant violations are load-time errors; an invalid
/// config never reaches the pipeline.
struct RunConfig {
  EnhanceConfig enhance;  // stft, tracker and threshold params included
  MetricParams metrics;
  std::uint64_t seed = 0;

  static RunConfig load(const std::string& path);
  static RunConfig from_string(const std::string& text);

  void validate() const;

  /// The flat serialization, one key per line, parseable by from_string.
  std::string to_string() const;
};

}  // namespace sre
