// src/wav.cpp

// Copyright 2026  ttsprep authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "ttsprep/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "ttsprep/types.hpp"

namespace ttsprep::dsp {

namespace {

constexpr uint16_t kFormatPcm = 0x0001;
constexpr uint16_t kFormatIeeeFloat = 0x0003;
constexpr uint16_t kFormatExtensible = 0xFFFE;

uint32_t read_u32(const unsigned char* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) |
         (static_cast<uint32_t>(p[3]) << 24);
}

uint16_t read_u16(const unsigned char* p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

struct WavFormat {
  uint16_t codec = 0;
  uint16_t channels = 0;
  uint32_t sample_rate = 0;
  uint16_t bits_per_sample = 0;
};

double decode_sample(const unsigned char* p, const WavFormat& fmt) {
  switch (fmt.codec) {
    case kFormatPcm:
      switch (fmt.bits_per_sample) {
        case 8:  // unsigned, midpoint 128
          return (static_cast<int>(*p) - 128) / 128.0;
        case 16: {
          int16_t v;
          std::memcpy(&v, p, 2);
          return v / 32768.0;
        }
        case 24: {
          int32_t v = (static_cast<int32_t>(p[0]) << 8) |
                      (static_cast<int32_t>(p[1]) << 16) |
                      (static_cast<int32_t>(p[2]) << 24);
          return (v >> 8) / 8388608.0;
        }
        case 32: {
          int32_t v;
          std::memcpy(&v, p, 4);
          return v / 2147483648.0;
        }
        default:
          throw Error("unsupported PCM bit depth: " +
                      std::to_string(fmt.bits_per_sample));
      }
    case kFormatIeeeFloat:
      if (fmt.bits_per_sample == 32) {
        float v;
        std::memcpy(&v, p, 4);
        return std::clamp(static_cast<double>(v), -1.0, 1.0);
      }
      if (fmt.bits_per_sample == 64) {
        double v;
        std::memcpy(&v, p, 8);
        return std::clamp(v, -1.0, 1.0);
      }
      throw Error("unsupported float bit depth: " +
                  std::to_string(fmt.bits_per_sample));
    default:
      throw Error("unsupported WAV codec: " + std::to_string(fmt.codec));
  }
}

}  // namespace

AudioClip load_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open wav: " + path.string());
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw Error("not a RIFF/WAVE file: " + path.string());
  }

  WavFormat fmt;
  const unsigned char* data = nullptr;
  std::size_t data_len = 0;
  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const unsigned char* hdr = bytes.data() + pos;
    uint32_t chunk_size = read_u32(hdr + 4);
    const unsigned char* body = hdr + 8;
    std::size_t avail = std::min<std::size_t>(chunk_size, bytes.size() - pos - 8);
    if (std::memcmp(hdr, "fmt ", 4) == 0) {
      if (avail < 16) throw Error("truncated fmt chunk: " + path.string());
      fmt.codec = read_u16(body);
      fmt.channels = read_u16(body + 2);
      fmt.sample_rate = read_u32(body + 4);
      fmt.bits_per_sample = read_u16(body + 14);
      if (fmt.codec == kFormatExtensible) {
        if (avail < 26) throw Error("truncated extensible fmt chunk");
        fmt.codec = read_u16(body + 24);  // first two GUID bytes
      }
    } else if (std::memcmp(hdr, "data", 4) == 0) {
      data = body;
      data_len = avail;
    }
    pos += 8 + chunk_size + (chunk_size & 1);  // chunks are word-aligned
  }

  if (fmt.sample_rate == 0) throw Error("missing fmt chunk: " + path.string());
  if (data == nullptr) throw Error("missing data chunk: " + path.string());
  if (fmt.channels == 0 || fmt.channels > 2) {
    throw Error("unsupported channel count: " + std::to_string(fmt.channels));
  }

  const std::size_t bytes_per_sample = fmt.bits_per_sample / 8;
  if (bytes_per_sample == 0) throw Error("bad bits per sample");
  const std::size_t frame_bytes = bytes_per_sample * fmt.channels;
  const std::size_t n_frames = data_len / frame_bytes;

  AudioClip clip;
  clip.sample_rate_hz = static_cast<int>(fmt.sample_rate);
  clip.samples.resize(n_frames);
  for (std::size_t i = 0; i < n_frames; ++i) {
    double acc = 0.0;
    for (unsigned c = 0; c < fmt.channels; ++c) {
      acc += decode_sample(data + i * frame_bytes + c * bytes_per_sample, fmt);
    }
    clip.samples[i] = acc / fmt.channels;
  }
  return clip;
}

void save_wav(const AudioClip& clip, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write wav: " + path.string());

  const uint32_t n = static_cast<uint32_t>(clip.samples.size());
  const uint32_t data_bytes = n * 2;
  const uint32_t riff_size = 36 + data_bytes;
  const uint32_t rate = static_cast<uint32_t>(clip.sample_rate_hz);
  const uint32_t byte_rate = rate * 2;

  auto put_u32 = [&](uint32_t v) {
    char b[4] = {static_cast<char>(v), static_cast<char>(v >> 8),
                 static_cast<char>(v >> 16), static_cast<char>(v >> 24)};
    out.write(b, 4);
  };
  auto put_u16 = [&](uint16_t v) {
    char b[2] = {static_cast<char>(v), static_cast<char>(v >> 8)};
    out.write(b, 2);
  };

  out.write("RIFF", 4);
  put_u32(riff_size);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  put_u32(16);
  put_u16(kFormatPcm);
  put_u16(1);  // mono
  put_u32(rate);
  put_u32(byte_rate);
  put_u16(2);   // block align
  put_u16(16);  // bits per sample
  out.write("data", 4);
  put_u32(data_bytes);
  for (double s : clip.samples) {
    double clamped = std::clamp(s, -1.0, 1.0);
    auto v = static_cast<int16_t>(
        std::clamp(std::lround(clamped * 32768.0), -32768L, 32767L));
    put_u16(static_cast<uint16_t>(v));
  }
  if (!out) throw Error("write failed: " + path.string());
}

AudioClip quantize_16bit(const AudioClip& clip) {
  AudioClip out;
  out.sample_rate_hz = clip.sample_rate_hz;
  out.samples.resize(clip.samples.size());
  for (std::size_t i = 0; i < clip.samples.size(); ++i) {
    const double clamped = std::clamp(clip.samples[i], -1.0, 1.0);
    const auto v = static_cast<int16_t>(
        std::clamp(std::lround(clamped * 32768.0), -32768L, 32767L));
    out.samples[i] = v / 32768.0;
  }
  return out;
}

}  // namespace ttsprep::dsp
