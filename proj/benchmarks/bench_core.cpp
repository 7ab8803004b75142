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

#include <benchmark/benchmark.h>

#include <random>

#include "sre/enhancer.hpp"
#include "sre/metrics.hpp"
#include "sre/stft.hpp"

namespace {

sre::Waveform noise_seconds(double seconds, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> dist(0.0, 0.1);
  sre::Waveform w;
  w.samples.resize(static_cast<std::size_t>(seconds * 8000));
  for (double& s : w.samples) s = dist(gen);
  return w;
}

void BM_StftRoundTrip(benchmark::State& state) {
  const sre::Waveform w = noise_seconds(1.0, 1);
  const sre::StftParams params;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sre::istft_overlap_add(sre::stft(w, params)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(w.samples.size()));
}
BENCHMARK(BM_StftRoundTrip);

void BM_TrackerStep(benchmark::State& state) {
  const sre::TrackerParams params;
  const std::vector<std::vector<double>> init = {std::vector<double>(129, 0.01)};
  sre::TrackerState tracker = sre::init_tracker(params, init);
  std::mt19937_64 gen(2);
  std::exponential_distribution<double> dist(100.0);
  std::vector<double> power(129);
  for (double& v : power) v = dist(gen);
  for (auto _ : state) {
    sre::step_sr(tracker, power, sre::FrameClass::non_speech, params);
    benchmark::DoNotOptimize(tracker.noise_psd.data());
  }
}
BENCHMARK(BM_TrackerStep);

void BM_EnhanceSecond(benchmark::State& state) {
  const sre::Waveform w = noise_seconds(1.0, 3);
  const sre::EnhanceConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sre::enhance(w, cfg));
  }
}
BENCHMARK(BM_EnhanceSecond);

void BM_LlrSecond(benchmark::State& state) {
  const sre::Waveform a = noise_seconds(1.0, 4);
  const sre::Waveform b = noise_seconds(1.0, 5);
  const sre::MetricParams mp;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sre::llr(a, b, mp));
  }
}
BENCHMARK(BM_LlrSecond);

}  // namespace

BENCHMARK_MAIN();
