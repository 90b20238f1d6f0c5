// tests/test_corpus.cpp

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

#include <doctest.h>

#include <random>
#include <string>

#include "mixlang/audio.hpp"
#include "mixlang/text.hpp"
#include "mixlang/wav.hpp"
#include "test_util.hpp"

using namespace mixlang;
using testing::TempDir;

namespace {

// Arbitrary RIFF bytes for reader error paths.
std::string make_wav_bytes(uint16_t format_tag, uint16_t channels,
                           uint32_t sample_rate, uint16_t bits,
                           const std::string &payload) {
  auto u16 = [](std::string &s, uint16_t v) {
    s.push_back(static_cast<char>(v & 0xff));
    s.push_back(static_cast<char>(v >> 8));
  };
  auto u32 = [](std::string &s, uint32_t v) {
    for (int i = 0; i < 4; ++i) {
      s.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    }
  };
  std::string out = "RIFF";
  u32(out, 36 + static_cast<uint32_t>(payload.size()));
  out += "WAVEfmt ";
  u32(out, 16);
  u16(out, format_tag);
  u16(out, channels);
  u32(out, sample_rate);
  u32(out, sample_rate * channels * bits / 8);
  u16(out, static_cast<uint16_t>(channels * bits / 8));
  u16(out, bits);
  out += "data";
  u32(out, static_cast<uint32_t>(payload.size()));
  out += payload;
  return out;
}

}  // namespace

TEST_CASE("normalize_transcript applies the 27-character vocabulary") {
  CHECK(normalize_transcript("we we don't say").str() == "WE WE DON'T SAY");
  CHECK(normalize_transcript("").str() == "");
  CHECK(normalize_transcript("B U, at the end!").str() == "B U AT THE END");
  CHECK(normalize_transcript("  double   spaces\tand\ntabs ").str() ==
        "DOUBLE SPACES AND TABS");
  CHECK(normalize_transcript("42 items, 7% off").str() == "ITEMS OFF");
}

TEST_CASE("normalize_transcript is idempotent") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<int> len(0, 40);
  std::uniform_int_distribution<int> byte(1, 127);
  for (int i = 0; i < 500; ++i) {
    std::string raw;
    const int n = len(rng);
    for (int j = 0; j < n; ++j) raw.push_back(static_cast<char>(byte(rng)));
    const NormText once = normalize_transcript(raw);
    CHECK(normalize_transcript(once.str()) == once);
    CHECK(is_normalized(once.str()));
  }
}

TEST_CASE("NormText validates and tokenizes") {
  CHECK_THROWS_AS(NormText::from_normalized("lower"), ValidationError);
  CHECK_THROWS_AS(NormText::from_normalized(" LEAD"), ValidationError);
  CHECK_THROWS_AS(NormText::from_normalized("TRAIL "), ValidationError);
  CHECK_THROWS_AS(NormText::from_normalized("A  B"), ValidationError);
  const NormText t = NormText::from_normalized("THE CAT SAT");
  CHECK(t.words() == std::vector<std::string>{"THE", "CAT", "SAT"});
  CHECK(NormText().words().empty());
}

TEST_CASE("load_wav reads what save_wav writes") {
  TempDir dir;
  SUBCASE("one second of digital silence") {
    AudioBuffer silence;
    silence.samples.assign(16000, 0);
    save_wav(dir.file("silence.wav"), silence);
    const AudioBuffer loaded = load_wav(dir.file("silence.wav"));
    CHECK(loaded.samples.size() == 16000);
    CHECK(loaded.sample_rate == 16000);
    CHECK(loaded.channel_count == 1);
    CHECK(loaded.duration_seconds() == doctest::Approx(1.0));
    for (int16_t s : loaded.samples) REQUIRE(s == 0);
  }
  SUBCASE("random payload round-trips sample-identically") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> value(-32768, 32767);
    AudioBuffer original;
    for (int i = 0; i < 12345; ++i) {
      original.samples.push_back(static_cast<int16_t>(value(rng)));
    }
    save_wav(dir.file("noise.wav"), original);
    const AudioBuffer loaded = load_wav(dir.file("noise.wav"));
    REQUIRE(loaded.samples == original.samples);
  }
}

TEST_CASE("load_wav rejects unsupported files") {
  TempDir dir;
  SUBCASE("44.1 kHz stereo") {
    testing::write_file(dir.file("cd.wav"),
                        make_wav_bytes(1, 2, 44100, 16, std::string(8, '\0')));
    CHECK_THROWS_AS(load_wav(dir.file("cd.wav")), UnsupportedSampleRate);
  }
  SUBCASE("16 kHz stereo") {
    testing::write_file(dir.file("st.wav"),
                        make_wav_bytes(1, 2, 16000, 16, std::string(8, '\0')));
    CHECK_THROWS_AS(load_wav(dir.file("st.wav")), UnsupportedChannels);
  }
  SUBCASE("ieee float format") {
    testing::write_file(dir.file("f32.wav"),
                        make_wav_bytes(3, 1, 16000, 32, std::string(8, '\0')));
    CHECK_THROWS_AS(load_wav(dir.file("f32.wav")), UnsupportedFormat);
  }
  SUBCASE("8-bit pcm") {
    testing::write_file(dir.file("u8.wav"),
                        make_wav_bytes(1, 1, 16000, 8, std::string(8, '\0')));
    CHECK_THROWS_AS(load_wav(dir.file("u8.wav")), UnsupportedFormat);
  }
  SUBCASE("not riff at all") {
    testing::write_file(dir.file("junk.wav"), "certainly not audio");
    CHECK_THROWS_AS(load_wav(dir.file("junk.wav")), MalformedRiff);
  }
  SUBCASE("truncated chunk") {
    std::string bytes = make_wav_bytes(1, 1, 16000, 16, std::string(64, '\0'));
    bytes.resize(bytes.size() - 10);
    testing::write_file(dir.file("trunc.wav"), bytes);
    CHECK_THROWS_AS(load_wav(dir.file("trunc.wav")), MalformedRiff);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(load_wav(dir.file("nope.wav")), IoError);
  }
}

TEST_CASE("slice_segment extracts sample ranges") {
  AudioBuffer audio;
  audio.samples.resize(32000);  // 2 s
  for (size_t i = 0; i < audio.samples.size(); ++i) {
    audio.samples[i] = static_cast<int16_t>(i % 1000);
  }

  SUBCASE("full-duration slice is the identity") {
    const AudioBuffer out = slice_segment(audio, {0.0, 2.0, {}, {}});
    CHECK(out.samples == audio.samples);
  }
  SUBCASE("half-second to 1.5 s") {
    const AudioBuffer out = slice_segment(audio, {0.5, 1.5, {}, {}});
    REQUIRE(out.samples.size() == 16000);
    CHECK(out.samples.front() == audio.samples[8000]);
    CHECK(out.samples.back() == audio.samples[23999]);
  }
  SUBCASE("segment past the end") {
    CHECK_THROWS_AS(slice_segment(audio, {1.9, 2.5, {}, {}}), OutOfRange);
  }
  SUBCASE("adjacent slices cover the same samples as one big slice") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> at(0.0, 2.0);
    for (int i = 0; i < 200; ++i) {
      double a = at(rng), b = at(rng), c = at(rng);
      if (a > b) std::swap(a, b);
      if (b > c) std::swap(b, c);
      if (a > b) std::swap(a, b);
      if (b - a < 1e-3 || c - b < 1e-3) continue;
      const auto left = slice_segment(audio, {a, b, {}, {}}).samples.size();
      const auto right = slice_segment(audio, {b, c, {}, {}}).samples.size();
      const auto whole = slice_segment(audio, {a, c, {}, {}}).samples.size();
      CHECK(left + right == whole);
    }
  }
}

TEST_CASE("seconds_to_samples rounds half up") {
  CHECK(seconds_to_samples(0.5) == 8000);
  CHECK(seconds_to_samples(1.0) == 16000);
  CHECK(seconds_to_samples(0.000031249) == 0);   // just under half a sample
  CHECK(seconds_to_samples(0.00003125) == 1);    // exactly half a sample
}
