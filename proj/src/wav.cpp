// Copyright 2026 The voicefeat authors
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

#include "voicefeat/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

namespace vf {

namespace {

uint32_t rd_u32(const uint8_t* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) |
         (static_cast<uint32_t>(p[3]) << 24);
}
uint16_t rd_u16(const uint8_t* p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

void wr_u32(std::ofstream& os, uint32_t v) {
  uint8_t b[4] = {static_cast<uint8_t>(v), static_cast<uint8_t>(v >> 8),
                  static_cast<uint8_t>(v >> 16), static_cast<uint8_t>(v >> 24)};
  os.write(reinterpret_cast<const char*>(b), 4);
}
void wr_u16(std::ofstream& os, uint16_t v) {
  uint8_t b[2] = {static_cast<uint8_t>(v), static_cast<uint8_t>(v >> 8)};
  os.write(reinterpret_cast<const char*>(b), 2);
}

}  // namespace

AudioBuffer load_audio_raw(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw FormatError("cannot open file: " + path);
  std::vector<uint8_t> data((std::istreambuf_iterator<char>(is)),
                            std::istreambuf_iterator<char>());
  if (data.size() < 44 || std::memcmp(data.data(), "RIFF", 4) != 0 ||
      std::memcmp(data.data() + 8, "WAVE", 4) != 0) {
    throw FormatError("not a RIFF/WAVE file: " + path);
  }

  uint16_t format = 0, channels = 0, bits = 0;
  uint32_t rate = 0;
  const uint8_t* pcm = nullptr;
  std::size_t pcm_bytes = 0;

  std::size_t pos = 12;
  while (pos + 8 <= data.size()) {
    const uint8_t* hdr = data.data() + pos;
    const uint32_t chunk_size = rd_u32(hdr + 4);
    const uint8_t* body = hdr + 8;
    if (pos + 8 + chunk_size > data.size()) break;
    if (std::memcmp(hdr, "fmt ", 4) == 0 && chunk_size >= 16) {
      format = rd_u16(body);
      channels = rd_u16(body + 2);
      rate = rd_u32(body + 4);
      bits = rd_u16(body + 14);
      if (format == 0xFFFE && chunk_size >= 40) {
        format = rd_u16(body + 24);  // WAVE_FORMAT_EXTENSIBLE sub-format
      }
    } else if (std::memcmp(hdr, "data", 4) == 0) {
      pcm = body;
      pcm_bytes = chunk_size;
    }
    pos += 8 + chunk_size + (chunk_size & 1);
  }

  if (pcm == nullptr || channels == 0 || rate == 0) {
    throw FormatError("malformed WAV (missing fmt/data): " + path);
  }

  AudioBuffer buf;
  buf.sample_rate = static_cast<int>(rate);
  if (format == 1 && bits == 16) {
    const std::size_t n_frames = pcm_bytes / (2 * channels);
    buf.samples.resize(n_frames);
    for (std::size_t i = 0; i < n_frames; ++i) {
      const auto v = static_cast<int16_t>(rd_u16(pcm + 2 * channels * i));
      buf.samples[i] = v / 32768.0;
    }
  } else if (format == 3 && bits == 32) {
    const std::size_t n_frames = pcm_bytes / (4 * channels);
    buf.samples.resize(n_frames);
    for (std::size_t i = 0; i < n_frames; ++i) {
      uint32_t u = rd_u32(pcm + 4 * channels * i);
      float f;
      std::memcpy(&f, &u, 4);
      buf.samples[i] = f;
    }
  } else {
    throw FormatError("unsupported WAV encoding (need PCM16 or float32): " +
                      path);
  }
  return buf;
}

AudioBuffer load_audio(const std::string& path) {
  AudioBuffer buf = load_audio_raw(path);
  double peak = 0.0;
  for (double v : buf.samples) peak = std::max(peak, std::abs(v));
  if (peak > 0.0) {
    for (double& v : buf.samples) v /= peak;
  }
  return buf;
}

void save_wav(const std::string& path, const AudioBuffer& buf) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw FormatError("cannot write file: " + path);
  const uint32_t data_bytes = static_cast<uint32_t>(buf.samples.size() * 2);
  os.write("RIFF", 4);
  wr_u32(os, 36 + data_bytes);
  os.write("WAVE", 4);
  os.write("fmt ", 4);
  wr_u32(os, 16);
  wr_u16(os, 1);  // PCM
  wr_u16(os, 1);  // mono
  wr_u32(os, static_cast<uint32_t>(buf.sample_rate));
  wr_u32(os, static_cast<uint32_t>(buf.sample_rate) * 2);
  wr_u16(os, 2);
  wr_u16(os, 16);
  os.write("data", 4);
  wr_u32(os, data_bytes);
  for (double v : buf.samples) {
    const double c = std::clamp(v, -1.0, 1.0);
    const auto q = static_cast<int16_t>(std::lround(c * 32767.0));
    wr_u16(os, static_cast<uint16_t>(q));
  }
  if (!os) throw FormatError("write failed: " + path);
}

}  // namespace vf
