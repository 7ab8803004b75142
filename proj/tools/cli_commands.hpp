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

#include <string>

#include "sre/enhancer.hpp"

// Command implementations behind the srenhance binary. Each returns a
// process exit code: 0 ok, 2 missing input, 3 invalid parameter, 4 signal
// contract violation, 1 anything else.
namespace sre::cli {

int run_mix(const std::string& clean_path, const std::string& noise_path,
            double snr_db, const std::string& out_path);

int run_enhance(const std::string& in_path, const std::string& out_path,
                Method method, const std::string& config_path,
                const std::string& trace_path);

int run_eval(const std::string& manifest_path, const std::string& out_csv,
             const std::string& out_json, const std::string& config_path);

int run_spectrogram(const std::string& in_path, const std::string& out_pgm,
                    double dyn_range_db, const std::string& config_path);

}  // namespace sre::cli
