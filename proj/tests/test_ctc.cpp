// tests/test_ctc.cpp

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

#include "mixlang/bigram.hpp"
#include "mixlang/ctc.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace mixlang;
using namespace mixlang::ctc;
using testing::TempDir;

namespace {

/// One-hot-ish logits from a symbol index sequence.
LogitMatrix from_indices(const std::vector<int> &frames, int inventory_size) {
  LogitMatrix out;
  out.frames = MatF::Zero(static_cast<Eigen::Index>(frames.size()),
                          inventory_size);
  for (size_t t = 0; t < frames.size(); ++t) {
    out.frames(static_cast<Eigen::Index>(t), frames[t]) = 10.0f;
  }
  return out;
}

LogitMatrix random_logits(std::mt19937_64 &rng, int num_frames,
                          int inventory_size, double scale = 3.0) {
  std::normal_distribution<double> noise(0.0, scale);
  LogitMatrix out;
  out.frames = MatF::Zero(num_frames, inventory_size);
  for (int t = 0; t < num_frames; ++t) {
    for (int s = 0; s < inventory_size; ++s) {
      out.frames(t, s) = static_cast<float>(noise(rng));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("the standard inventory is blank, space, A-Z, apostrophe") {
  const SymbolInventory &inv = SymbolInventory::standard();
  CHECK(inv.size() == 29);
  CHECK(inv.symbol(1) == ' ');
  CHECK(inv.symbol(2) == 'A');
  CHECK(inv.symbol(27) == 'Z');
  CHECK(inv.symbol(28) == '\'');
  CHECK(inv.index_of('A') == 2);
  CHECK(inv.index_of('a') == -1);
  CHECK(inv.index_of('0') == -1);
}

TEST_CASE("greedy_decode collapses repeats then removes blanks") {
  const SymbolInventory toy("ABC");  // blank, A=1, B=2, C=3

  SUBCASE("all-blank frames decode to the empty text") {
    CHECK(greedy_decode(from_indices({0, 0, 0, 0}, 4), toy).str() == "");
  }
  SUBCASE("B,A,A,blank,B,B,C decodes to BABC") {
    CHECK(greedy_decode(from_indices({2, 1, 1, 0, 2, 2, 3}, 4), toy).str() ==
          "BABC");
  }
  SUBCASE("frames spelling THE CAT with the standard inventory") {
    const NormText text = NormText::from_normalized("THE CAT");
    const LogitMatrix logits = mock_acoustic(text, 3, -INFINITY, 0);
    CHECK(greedy_decode(logits).str() == "THE CAT");
  }
  SUBCASE("ties break toward the lowest index") {
    // All-equal frames: blank (index 0) wins every argmax.
    LogitMatrix flat;
    flat.frames = MatF::Zero(5, 4);
    CHECK(greedy_decode(flat, toy).str() == "");
  }
  SUBCASE("output satisfies the NormText invariants on random logits") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
      const LogitMatrix logits = random_logits(rng, 20, 29);
      CHECK(is_normalized(greedy_decode(logits).str()));
      CHECK(is_normalized(beam_decode(logits, 4).str()));
    }
  }
}

TEST_CASE("beam_decode specializes and generalizes greedy") {
  const SymbolInventory toy("AB");

  SUBCASE("width-1 beam equals greedy on one-hot inputs") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<int> frames;
      for (int t = 0; t < 8; ++t) frames.push_back(pick(rng));
      const LogitMatrix logits = from_indices(frames, 3);
      CHECK(beam_decode(logits, 1, nullptr, 0.5, 1.0, toy) ==
            greedy_decode(logits, toy));
    }
  }
  SUBCASE("wide beams are exact: they match exhaustive path enumeration") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
      const LogitMatrix logits = random_logits(rng, 4, 3);
      const std::string expected = testing::ctc_bruteforce_best(logits, toy);
      CHECK(beam_decode(logits, 128, nullptr, 0.5, 1.0, toy).str() ==
            expected);
    }
  }
  SUBCASE("the returned score is non-decreasing in beam width") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
      const LogitMatrix logits = random_logits(rng, 6, 3);
      double previous = -1e300;
      for (int width = 1; width <= 8; ++width) {
        const auto hyps =
            beam_decode_full(logits, width, nullptr, 0.5, 1.0, toy);
        const double best = hyps.front().total_logp();
        CHECK(best >= previous - 1e-12);
        previous = best;
      }
    }
  }
  SUBCASE("invalid beam width") {
    const LogitMatrix logits = from_indices({0}, 3);
    CHECK_THROWS_AS(beam_decode(logits, 0, nullptr, 0.5, 1.0, toy),
                    InvalidBeamWidth);
  }
}

TEST_CASE("shallow fusion steers confusable words") {
  // Acoustics mildly favour the misspelling SPEIR; the in-domain bigram
  // model knows only SPEAR and pulls the word back.
  const std::vector<NormText> corpus = {
      NormText::from_normalized("THE SPEAR"),
      NormText::from_normalized("THE SPEAR FLEW"),
      NormText::from_normalized("A SPEAR")};
  const lm::BigramLm model = lm::train_bigram(corpus, 0.75);

  const SymbolInventory &inv = SymbolInventory::standard();
  const std::string target = "THE SPEAR";
  LogitMatrix logits = mock_acoustic(NormText::from_normalized(target), 3,
                                     -INFINITY, 0);
  // Blur every frame that scores the A of SPEAR toward I.
  const int a_index = inv.index_of('A');
  const int i_index = inv.index_of('I');
  for (Eigen::Index t = 0; t < logits.frames.rows(); ++t) {
    if (t / 3 == 7 && logits.frames(t, a_index) > 0.0f) {  // symbol 7: 'A'
      logits.frames(t, i_index) = logits.frames(t, a_index) + 0.4f;
    }
  }

  CHECK(greedy_decode(logits).str() == "THE SPEIR");
  CHECK(beam_decode(logits, 25, &model, 1.0, 1.0).str() == "THE SPEAR");
  CHECK(beam_decode(logits, 25, nullptr, 1.0, 1.0).str() == "THE SPEIR");
}

TEST_CASE("mock_acoustic renders decodable logits") {
  SUBCASE("noiseless logits decode to the input text") {
    const NormText text = NormText::from_normalized("HI");
    const LogitMatrix logits = mock_acoustic(text, 3, -INFINITY, 1);
    CHECK(logits.frames.rows() == 6);
    CHECK(greedy_decode(logits).str() == "HI");
  }
  SUBCASE("repeated letters survive the collapse") {
    const NormText text = NormText::from_normalized("HELLO WORLD");
    CHECK(greedy_decode(mock_acoustic(text, 2, -INFINITY, 1)).str() ==
          "HELLO WORLD");
  }
  SUBCASE("identical seeds give identical matrices") {
    const NormText text = NormText::from_normalized("SAME");
    const LogitMatrix a = mock_acoustic(text, 4, 0.0, 99);
    const LogitMatrix b = mock_acoustic(text, 4, 0.0, 99);
    CHECK(a.frames == b.frames);
    const LogitMatrix c = mock_acoustic(text, 4, 0.0, 100);
    CHECK(a.frames != c.frames);
  }
  SUBCASE("frames_per_symbol below 2 is rejected") {
    CHECK_THROWS_AS(mock_acoustic(NormText::from_normalized("A"), 1,
                                  -INFINITY, 0),
                    ValidationError);
  }
  SUBCASE("empty text yields a valid all-blank matrix") {
    const LogitMatrix logits = mock_acoustic(NormText(), 3, -INFINITY, 0);
    CHECK(logits.frames.rows() == 1);
    CHECK(greedy_decode(logits).str() == "");
  }
}

TEST_CASE("logit files round-trip and reject malformed input") {
  TempDir dir;
  const NormText text = NormText::from_normalized("ROUND TRIP");
  const LogitMatrix original = mock_acoustic(text, 3, 2.0, 123);

  save_logits(dir.file("utt.ctcl"), original);
  const LogitMatrix loaded = load_logits(dir.file("utt.ctcl"));
  CHECK(loaded.frames == original.frames);
  CHECK(loaded.frame_duration_ms ==
        doctest::Approx(original.frame_duration_ms));

  SUBCASE("wrong magic") {
    testing::write_file(dir.file("bad.ctcl"), "LCTCnope");
    CHECK_THROWS_AS(load_logits(dir.file("bad.ctcl")), FormatError);
  }
  SUBCASE("truncated payload") {
    std::string bytes = testing::read_file(dir.file("utt.ctcl"));
    bytes.resize(bytes.size() - 7);
    testing::write_file(dir.file("short.ctcl"), bytes);
    CHECK_THROWS_AS(load_logits(dir.file("short.ctcl")), FormatError);
  }
  SUBCASE("wrong symbol count") {
    std::string bytes = testing::read_file(dir.file("utt.ctcl"));
    bytes[8] = 28;  // little-endian symbol count field
    testing::write_file(dir.file("narrow.ctcl"), bytes);
    CHECK_THROWS_AS(load_logits(dir.file("narrow.ctcl")), FormatError);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(load_logits(dir.file("absent.ctcl")), IoError);
  }
}
