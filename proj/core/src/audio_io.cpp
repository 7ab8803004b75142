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

#include "sre/audio_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <limits>

namespace sre {
namespace {

constexpr double kPcmScale = 32768.0;

std::uint16_t read_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t read_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

void put_u16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xFF));
  out.push_back(static_cast<char>((v >> 8) & 0xFF));
}

void put_u32(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>(v & 0xFF));
  out.push_back(static_cast<char>((v >> 8) & 0xFF));
  out.push_back(static_cast<char>((v >> 16) & 0xFF));
  out.push_back(static_cast<char>((v >> 24) & 0xFF));
}

double sum_squares(const std::vector<double>& v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return acc;
}

}  // namespace

Waveform read_wav(const std::string& path) {
  if (!std::filesystem::exists(path)) {
    throw NotFoundError("no such file: " + path);
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  const auto* data = reinterpret_cast<const unsigned char*>(bytes.data());
  const std::size_t size = bytes.size();

  if (size < 12 || std::memcmp(data, "RIFF", 4) != 0 ||
      std::memcmp(data + 8, "WAVE", 4) != 0) {
    throw CorruptHeaderError("not a RIFF/WAVE file: " + path);
  }

  bool have_fmt = false;
  std::uint16_t format_tag = 0, channels = 0, bits_per_sample = 0;
  std::uint32_t sample_rate = 0;
  std::size_t data_pos = 0, data_len = 0;

  std::size_t pos = 12;
  while (pos + 8 <= size) {
    const char* id = bytes.data() + pos;
    const std::uint32_t chunk_len = read_u32(data + pos + 4);
    pos += 8;
    if (pos + chunk_len > size) {
      throw CorruptHeaderError("truncated chunk in " + path);
    }
    if (std::memcmp(id, "fmt ", 4) == 0) {
      if (chunk_len < 16) throw CorruptHeaderError("fmt chunk too small in " + path);
      format_tag = read_u16(data + pos);
      channels = read_u16(data + pos + 2);
      sample_rate = read_u32(data + pos + 4);
      bits_per_sample = read_u16(data + pos + 14);
      have_fmt = true;
    } else if (std::memcmp(id, "data", 4) == 0) {
      data_pos = pos;
      data_len = chunk_len;
      break;
    }
    pos += chunk_len + (chunk_len & 1u);  // chunks are word-aligned
  }

  if (!have_fmt || data_pos == 0) {
    throw CorruptHeaderError("missing fmt/data chunk in " + path);
  }
  if (format_tag != 1 || bits_per_sample != 16) {
    throw UnsupportedFormatError("only 16-bit PCM is supported: " + path);
  }
  if (channels == 0 || sample_rate == 0) {
    throw CorruptHeaderError("bad fmt fields in " + path);
  }

  const std::size_t frame_bytes = 2u * channels;
  const std::size_t num_frames = data_len / frame_bytes;
  Waveform wave;
  wave.sample_rate_hz = static_cast<int>(sample_rate);
  wave.samples.resize(num_frames);
  for (std::size_t f = 0; f < num_frames; ++f) {
    double acc = 0.0;
    for (std::uint16_t c = 0; c < channels; ++c) {
      const auto raw = static_cast<std::int16_t>(
          read_u16(data + data_pos + f * frame_bytes + 2u * c));
      acc += raw / kPcmScale;
    }
    wave.samples[f] = acc / channels;
  }
  return wave;
}

void write_wav(const Waveform& wave, const std::string& path) {
  if (wave.sample_rate_hz <= 0) {
    throw InvalidParameterError("sample rate must be positive");
  }
  for (double s : wave.samples) {
    if (!std::isfinite(s)) throw IoError("non-finite sample, refusing to write " + path);
  }
  const std::uint32_t data_len = static_cast<std::uint32_t>(2 * wave.samples.size());
  const std::uint32_t rate = static_cast<std::uint32_t>(wave.sample_rate_hz);

  std::string out;
  out.reserve(44 + data_len);
  out += "RIFF";
  put_u32(out, 36 + data_len);
  out += "WAVE";
  out += "fmt ";
  put_u32(out, 16);
  put_u16(out, 1);  // PCM
  put_u16(out, 1);  // mono
  put_u32(out, rate);
  put_u32(out, rate * 2);
  put_u16(out, 2);   // block align
  put_u16(out, 16);  // bits per sample
  out += "data";
  put_u32(out, data_len);
  for (double s : wave.samples) {
    long q = std::lround(s * kPcmScale);
    q = std::clamp<long>(q, -32768, 32767);
    put_u16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(q)));
  }

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open for writing: " + path);
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!f) throw IoError("short write: " + path);
}

Waveform mix_at_snr(const Waveform& clean, const Waveform& noise,
                    double target_snr_db, std::size_t noise_offset) {
  if (clean.sample_rate_hz != noise.sample_rate_hz) {
    throw SampleRateMismatchError("clean/noise sample rates differ");
  }
  if (noise.samples.size() < noise_offset ||
      noise.samples.size() - noise_offset < clean.samples.size()) {
    throw NoiseTooShortError("noise shorter than clean signal");
  }
  const std::size_t n = clean.samples.size();
  double clean_energy = 0.0, noise_energy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    clean_energy += clean.samples[i] * clean.samples[i];
    const double q = noise.samples[noise_offset + i];
    noise_energy += q * q;
  }
  if (clean_energy <= 0.0) throw SilentInputError("clean signal has zero energy");
  if (noise_energy <= 0.0) throw SilentInputError("noise signal has zero energy");

  const double gain =
      std::sqrt(clean_energy / (noise_energy * std::pow(10.0, target_snr_db / 10.0)));
  Waveform mix;
  mix.sample_rate_hz = clean.sample_rate_hz;
  mix.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    mix.samples[i] = clean.samples[i] + gain * noise.samples[noise_offset + i];
  }
  return mix;
}

double measure_global_snr(const Waveform& clean, const Waveform& residual_or_noise) {
  if (clean.sample_rate_hz != residual_or_noise.sample_rate_hz) {
    throw SampleRateMismatchError("sample rates differ");
  }
  if (clean.samples.size() != residual_or_noise.samples.size()) {
    throw LengthMismatchError("signal lengths differ");
  }
  const double p = sum_squares(clean.samples);
  const double q = sum_squares(residual_or_noise.samples);
  if (p <= 0.0 || q <= 0.0) throw SilentInputError("zero-energy input");
  return 10.0 * std::log10(p / q);
}

}  // namespace sre
