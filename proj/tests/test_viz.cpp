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

#include <algorithm>
#include <cmath>
#include <fstream>

#include "sre/viz.hpp"
#include "testing_helpers.hpp"

using namespace sre;
using namespace sre::testing;

namespace {

StftMatrix tiny_matrix(std::vector<double> magnitudes, std::size_t frames,
                       std::size_t bins) {
  StftMatrix mat;
  mat.num_frames = frames;
  mat.num_bins = bins;
  mat.params.frame_len = 2 * (bins - 1);
  mat.params.hop = bins - 1;
  mat.params.fft_size = 2 * (bins - 1);
  mat.coeffs.resize(frames * bins);
  for (std::size_t i = 0; i < mat.coeffs.size(); ++i) {
    mat.coeffs[i] = magnitudes[i];
  }
  return mat;
}

std::string read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

// Minimal P5 parser used only to invert write_pgm in tests.
Raster parse_pgm(const std::string& bytes) {
  Raster r;
  std::size_t pos = 3;
  REQUIRE(bytes.substr(0, 3) == "P5\n");
  const std::size_t sp = bytes.find(' ', pos);
  const std::size_t nl = bytes.find('\n', sp);
  r.width = std::stoul(bytes.substr(pos, sp - pos));
  r.height = std::stoul(bytes.substr(sp + 1, nl - sp - 1));
  REQUIRE(bytes.substr(nl + 1, 4) == "255\n");
  const std::size_t data = nl + 5;
  r.pixels.assign(bytes.begin() + static_cast<std::ptrdiff_t>(data), bytes.end());
  return r;
}

}  // namespace

TEST_CASE("raster extremes and midpoint rounding") {
  // one frame, three bins: peak, 30 dB down, 60 dB down (range = 60)
  const double peak = 1.0;
  auto mat = tiny_matrix({peak, peak * std::pow(10.0, -30.0 / 20.0),
                          peak * std::pow(10.0, -60.0 / 20.0)},
                         1, 3);
  const Raster r = spectrogram_raster(mat, 60.0);
  REQUIRE(r.width == 1);
  REQUIRE(r.height == 3);
  // top row is the highest bin: 60 dB down -> 0
  CHECK(r.pixels[0] == 0);
  // midpoint 127.5 rounds away from zero -> 128
  CHECK(r.pixels[1] == 128);
  CHECK(r.pixels[2] == 255);  // the global peak
}

TEST_CASE("bins below the dynamic range clamp to black") {
  auto mat = tiny_matrix({1.0, 1e-9, 1e-12, 0.0}, 1, 4);
  const Raster r = spectrogram_raster(mat, 60.0);
  CHECK(r.pixels[3] == 255);
  CHECK(r.pixels[2] == 0);
  CHECK(r.pixels[1] == 0);
  CHECK(r.pixels[0] == 0);
}

TEST_CASE("brightness is monotone in magnitude") {
  std::mt19937_64 gen(163);
  std::uniform_real_distribution<double> dist(0.0, 2.0);
  std::vector<double> mags(64);
  for (double& m : mags) m = dist(gen);
  auto mat = tiny_matrix(mags, 8, 8);
  const Raster r = spectrogram_raster(mat, 60.0);
  for (std::size_t i = 0; i < mags.size(); ++i) {
    for (std::size_t j = 0; j < mags.size(); ++j) {
      const std::size_t fi = i / 8, ki = i % 8;
      const std::size_t fj = j / 8, kj = j % 8;
      const auto pi = r.pixels[(7 - ki) * 8 + fi];
      const auto pj = r.pixels[(7 - kj) * 8 + fj];
      if (mags[i] > mags[j]) CHECK(pi >= pj);
    }
  }
}

TEST_CASE("an identically silent matrix renders black") {
  auto mat = tiny_matrix({0.0, 0.0, 0.0, 0.0}, 2, 2);
  const Raster r = spectrogram_raster(mat, 60.0);
  for (auto p : r.pixels) CHECK(p == 0);
}

TEST_CASE("empty matrix and bad range are rejected") {
  StftMatrix empty;
  CHECK_THROWS_AS(spectrogram_raster(empty, 60.0), EmptyMatrixError);
  auto mat = tiny_matrix({1.0}, 1, 1);
  CHECK_THROWS_AS(spectrogram_raster(mat, 0.0), InvalidParameterError);
  CHECK_THROWS_AS(spectrogram_raster(mat, -5.0), InvalidParameterError);
}

TEST_CASE("write_pgm emits the golden byte sequence") {
  TempDir dir("pgm");
  Raster r;
  r.width = 2;
  r.height = 2;
  r.pixels = {0, 255, 128, 64};
  write_pgm(r, dir.file("g.pgm"));
  const std::string bytes = read_bytes(dir.file("g.pgm"));
  const std::string expected = std::string("P5\n2 2\n255\n") +
                               '\x00' + '\xFF' + '\x80' + '\x40';
  CHECK(bytes.size() == 15);
  CHECK(bytes == expected);
}

TEST_CASE("write_pgm single pixel header") {
  TempDir dir("pgm1");
  Raster r;
  r.width = 1;
  r.height = 1;
  r.pixels = {0};
  write_pgm(r, dir.file("one.pgm"));
  const std::string bytes = read_bytes(dir.file("one.pgm"));
  CHECK(bytes == std::string("P5\n1 1\n255\n") + '\x00');
}

TEST_CASE("pgm round-trips through an independent parser") {
  TempDir dir("pgm_rt");
  std::mt19937_64 gen(167);
  Raster r;
  r.width = 17;
  r.height = 9;
  r.pixels.resize(17 * 9);
  for (auto& p : r.pixels) p = static_cast<std::uint8_t>(gen() % 256);
  write_pgm(r, dir.file("rt.pgm"));
  const Raster back = parse_pgm(read_bytes(dir.file("rt.pgm")));
  CHECK(back.width == r.width);
  CHECK(back.height == r.height);
  REQUIRE(back.pixels == r.pixels);
}

TEST_CASE("rasterization is deterministic byte for byte") {
  TempDir dir("pgm_det");
  const Waveform w = white_noise(4096, 0.4, 173);
  const StftMatrix mat = stft(w, StftParams{});
  write_pgm(spectrogram_raster(mat), dir.file("a.pgm"));
  write_pgm(spectrogram_raster(mat), dir.file("b.pgm"));
  CHECK(read_bytes(dir.file("a.pgm")) == read_bytes(dir.file("b.pgm")));
}
