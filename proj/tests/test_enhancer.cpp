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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "sre/enhancer.hpp"
#include "testing_helpers.hpp"

using namespace sre;
using namespace sre::testing;

TEST_CASE("prior_snr_dd arithmetic") {
  const std::vector<double> zeros(3, 0.0);

  SUBCASE("first frame uses only the posterior excess") {
    const std::vector<double> post = {5.0, 1.0, 0.5};
    const auto prior = prior_snr_dd(zeros, zeros, post, 0.98);
    CHECK(std::abs(prior[0] - 0.02 * 4.0) < 1e-12);
    CHECK(prior[1] == 0.0);  // post - 1 clamps at zero
    CHECK(prior[2] == 0.0);
  }

  SUBCASE("history term") {
    const std::vector<double> gain = {0.5, 0.2, 1.0};
    const std::vector<double> prev_post = {4.0, 2.0, 1.0};
    const std::vector<double> post = {1.0, 1.0, 1.0};
    const auto prior = prior_snr_dd(gain, prev_post, post, 0.98);
    CHECK(std::abs(prior[0] - 0.98 * 0.25 * 4.0) < 1e-12);
    CHECK(std::abs(prior[1] - 0.98 * 0.04 * 2.0) < 1e-12);
    CHECK(std::abs(prior[2] - 0.98 * 1.0) < 1e-12);
  }

  SUBCASE("size mismatch") {
    CHECK_THROWS_AS(prior_snr_dd(zeros, zeros, std::vector<double>{1.0}, 0.98),
                    BinCountMismatchError);
  }
}

TEST_CASE("decision-directed iteration settles on the analytic fixed point") {
  // Iterate prior -> gain -> prior with a constant posterior. The limit
  // solves x = dd*g(x)^2*G + (1-dd)*(G-1) with g(x) = max(x/(1+x), floor);
  // bisection provides the independent value. dd = 0.9 keeps the map a
  // contraction with a single equilibrium (dd closer to 1 makes it bistable).
  const double dd = 0.9, floor = 0.1, G = 4.0;

  auto iterate_f = [&](double x) {
    const double g = std::max(x / (1.0 + x), floor);
    return dd * g * g * G + (1.0 - dd) * (G - 1.0);
  };
  double lo = 0.0, hi = 100.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (iterate_f(mid) - mid > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double fixed_point = 0.5 * (lo + hi);

  std::vector<double> gain(1, 0.0), prev_post(1, 0.0);
  const std::vector<double> post(1, G);
  std::vector<double> prior;
  for (int frame = 0; frame < 500; ++frame) {
    prior = prior_snr_dd(gain, prev_post, post, dd);
    gain = wiener_gain(prior, floor);
    prev_post = post;
  }
  CHECK(std::abs(prior[0] - fixed_point) < 1e-9);
}

TEST_CASE("wiener_gain curve") {
  const auto g = wiener_gain(std::vector<double>{1.0, 0.0, 1e9}, 0.1);
  CHECK(g[0] == 0.5);
  CHECK(g[1] == 0.1);  // floor engaged
  CHECK(g[2] == doctest::Approx(1.0).epsilon(1e-9));
  for (double v : g) {
    CHECK(v >= 0.1);
    CHECK(v <= 1.0);
  }
}

TEST_CASE("enhance attenuates stationary noise") {
  EnhanceConfig cfg;
  const Waveform noisy = white_noise(3 * 8000, 0.1, 83);
  const EnhanceResult res = enhance(noisy, cfg);

  const std::size_t n = res.enhanced.samples.size();
  const double out_rms = rms(res.enhanced.samples, n - 8000, n);
  const double in_rms = rms(noisy.samples, n - 8000, n);
  CHECK(out_rms < in_rms);

  for (const auto& t : res.trace) {
    // the mean of per-bin gains can round an ulp below the floor
    CHECK(t.mean_gain >= cfg.gain_floor - 1e-12);
    CHECK(t.mean_gain <= 1.0);
  }
}

TEST_CASE("enhance passes near-clean speech through") {
  EnhanceConfig cfg;
  const Waveform clean = am_speech(2.0);
  Waveform noisy = mix_at_snr(clean, white_noise(clean.samples.size(), 1.0, 89), 40.0);
  const EnhanceResult res = enhance(noisy, cfg);

  // normalized cross-correlation against the clean signal
  const std::size_t n = res.enhanced.samples.size();
  double dot = 0.0, ee = 0.0, cc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    dot += res.enhanced.samples[i] * clean.samples[i];
    ee += res.enhanced.samples[i] * res.enhanced.samples[i];
    cc += clean.samples[i] * clean.samples[i];
  }
  CHECK(dot / std::sqrt(ee * cc) >= 0.95);
}

TEST_CASE("enhance output length follows the overlap-add geometry") {
  EnhanceConfig cfg;
  const Waveform noisy = white_noise(10000, 0.1, 97);
  const EnhanceResult res = enhance(noisy, cfg);
  const std::size_t frames = (10000 - 256) / 128 + 1;
  CHECK(res.trace.size() == frames);
  CHECK(res.enhanced.samples.size() == (frames - 1) * 128 + 256);
}

TEST_CASE("enhance is deterministic") {
  EnhanceConfig cfg;
  const Waveform noisy = mix_at_snr(am_speech(1.5),
                                    white_noise(12000, 0.5, 101), 5.0);
  const EnhanceResult a = enhance(noisy, cfg);
  const EnhanceResult b = enhance(noisy, cfg);
  REQUIRE(a.enhanced.samples == b.enhanced.samples);
}

TEST_CASE("sr and wat share the gain and synthesis path") {
  // With the whole signal inside the init window the tracker never steps,
  // so both methods see identical noise estimates and must produce
  // identical samples.
  EnhanceConfig cfg;
  cfg.init_frames = 10000;
  const Waveform noisy = white_noise(8000, 0.2, 103);

  cfg.method = Method::sr;
  const EnhanceResult sr = enhance(noisy, cfg);
  cfg.method = Method::wat;
  const EnhanceResult wat = enhance(noisy, cfg);
  REQUIRE(sr.enhanced.samples == wat.enhanced.samples);
}

TEST_CASE("enhancement preserves the noisy phase") {
  // real per-bin gains plus overlap-add synthesis must not shift a tone;
  // the cross-correlation against the input peaks at lag zero
  EnhanceConfig cfg;
  Waveform noisy = tone(2 * 8000, 440.0, 0.5);
  const Waveform dither = white_noise(noisy.samples.size(), 1e-3, 105);
  for (std::size_t i = 0; i < noisy.samples.size(); ++i) {
    noisy.samples[i] += dither.samples[i];
  }
  const EnhanceResult res = enhance(noisy, cfg);

  const std::size_t n = res.enhanced.samples.size();
  int best_lag = -99;
  double best = -1.0;
  for (int lag = -5; lag <= 5; ++lag) {
    double acc = 0.0;
    for (std::size_t i = 256; i + 256 < n; ++i) {
      acc += res.enhanced.samples[i] *
             noisy.samples[static_cast<std::size_t>(static_cast<long>(i) + lag)];
    }
    if (acc > best) {
      best = acc;
      best_lag = lag;
    }
  }
  CHECK(best_lag == 0);
}

TEST_CASE("trace carries classes only for the sr method") {
  EnhanceConfig cfg;
  const Waveform noisy = mix_at_snr(am_speech(1.0), white_noise(8000, 0.5, 107), 5.0);

  cfg.method = Method::sr;
  const EnhanceResult sr = enhance(noisy, cfg);
  for (const auto& t : sr.trace) CHECK(t.cls.has_value());

  cfg.method = Method::wat;
  const EnhanceResult wat = enhance(noisy, cfg);
  for (const auto& t : wat.trace) CHECK_FALSE(t.cls.has_value());
}

TEST_CASE("enhance rejects too-short input") {
  EnhanceConfig cfg;
  Waveform w = white_noise(300, 0.1, 109);  // one frame only
  CHECK_THROWS_AS(enhance(w, cfg), SignalTooShortError);
}

TEST_CASE("enhance handles signals shorter than the init window") {
  EnhanceConfig cfg;  // init_frames = 6, but only 2 frames available
  const Waveform w = white_noise(384, 0.1, 211);
  const EnhanceResult res = enhance(w, cfg);
  CHECK(res.trace.size() == 2);
  CHECK(res.enhanced.samples.size() == 384);
}

TEST_CASE("enhance config validation") {
  EnhanceConfig cfg;
  cfg.dd_alpha = 1.0;
  CHECK_THROWS_AS(cfg.validate(), InvalidParameterError);
  cfg = EnhanceConfig{};
  cfg.gain_floor = 0.0;
  CHECK_THROWS_AS(cfg.validate(), InvalidParameterError);
  cfg = EnhanceConfig{};
  cfg.init_frames = 0;
  CHECK_THROWS_AS(cfg.validate(), InvalidParameterError);
}
