// src/wav.cpp

// Copyright 2026  The mixlang authors
//
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

#include "mixlang/wav.hpp"

#include <cstring>
#include <fstream>
#include <vector>

namespace mixlang {

namespace {

constexpr uint16_t kPcmFormatTag = 1;

uint32_t read_u32(const uint8_t *p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) |
         (static_cast<uint32_t>(p[3]) << 24);
}

uint16_t read_u16(const uint8_t *p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

void put_u32(std::string &out, uint32_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 24) & 0xff));
}

void put_u16(std::string &out, uint16_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
}

}  // namespace

AudioBuffer load_wav(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw MalformedRiff(path + ": not a RIFF/WAVE file");
  }

  bool have_fmt = false;
  uint16_t format_tag = 0, channels = 0, bits = 0;
  uint32_t sample_rate = 0;
  const uint8_t *data = nullptr;
  size_t data_size = 0;

  size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const char *id = reinterpret_cast<const char *>(bytes.data() + pos);
    const uint32_t chunk_size = read_u32(bytes.data() + pos + 4);
    pos += 8;
    if (pos + chunk_size > bytes.size()) {
      throw MalformedRiff(path + ": truncated chunk");
    }
    if (std::memcmp(id, "fmt ", 4) == 0) {
      if (chunk_size < 16) throw MalformedRiff(path + ": short fmt chunk");
      const uint8_t *f = bytes.data() + pos;
      format_tag = read_u16(f);
      channels = read_u16(f + 2);
      sample_rate = read_u32(f + 4);
      bits = read_u16(f + 14);
      have_fmt = true;
    } else if (std::memcmp(id, "data", 4) == 0) {
      data = bytes.data() + pos;
      data_size = chunk_size;
    }
    pos += chunk_size + (chunk_size & 1);  // chunks are word-aligned
  }

  if (!have_fmt || data == nullptr) {
    throw MalformedRiff(path + ": missing fmt or data chunk");
  }
  if (format_tag != kPcmFormatTag || bits != 16) {
    throw UnsupportedFormat(path + ": expected 16-bit integer PCM, got tag " +
                            std::to_string(format_tag) + " with " +
                            std::to_string(bits) + " bits");
  }
  if (sample_rate != static_cast<uint32_t>(kSampleRate)) {
    throw UnsupportedSampleRate(path + ": expected 16000 Hz, got " +
                                std::to_string(sample_rate));
  }
  if (channels != 1) {
    throw UnsupportedChannels(path + ": expected mono, got " +
                              std::to_string(channels) + " channels");
  }
  if (data_size % 2 != 0) {
    throw MalformedRiff(path + ": odd data chunk size");
  }

  AudioBuffer out;
  out.sample_rate = kSampleRate;
  out.channel_count = 1;
  out.samples.resize(data_size / 2);
  for (size_t i = 0; i < out.samples.size(); ++i) {
    out.samples[i] = static_cast<int16_t>(read_u16(data + 2 * i));
  }
  return out;
}

void save_wav(const std::string &path, const AudioBuffer &audio) {
  if (audio.channel_count != 1) {
    throw UnsupportedChannels("save_wav writes mono only");
  }
  const uint32_t data_size = static_cast<uint32_t>(audio.samples.size() * 2);
  const uint32_t byte_rate = static_cast<uint32_t>(audio.sample_rate) * 2;

  std::string out;
  out.reserve(44 + data_size);
  out.append("RIFF");
  put_u32(out, 36 + data_size);
  out.append("WAVE");
  out.append("fmt ");
  put_u32(out, 16);
  put_u16(out, kPcmFormatTag);
  put_u16(out, 1);  // channels
  put_u32(out, static_cast<uint32_t>(audio.sample_rate));
  put_u32(out, byte_rate);
  put_u16(out, 2);   // block align
  put_u16(out, 16);  // bits per sample
  out.append("data");
  put_u32(out, data_size);
  for (int16_t s : audio.samples) {
    put_u16(out, static_cast<uint16_t>(s));
  }

  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot write " + path);
  file.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!file) throw IoError("write failed: " + path);
}

}  // namespace mixlang
