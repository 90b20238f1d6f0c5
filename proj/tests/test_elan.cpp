// tests/test_elan.cpp

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

#include <cmath>
#include <random>

#include "mixlang/eaf.hpp"
#include "mixlang/segment_io.hpp"
#include "mixlang/xml.hpp"

using namespace mixlang;
using namespace mixlang::elan;

namespace {

const LanguagePair kLangs;

Segment seg(double start, double end, bool meta, const std::string &text) {
  Segment s;
  s.start = start;
  s.end = end;
  s.language = meta ? kLangs.metalanguage() : kLangs.target();
  if (meta) s.text = text;
  return s;
}

/// Random millisecond-aligned, non-overlapping, language-alternating-ish
/// segment list.
std::vector<Segment> random_segments(std::mt19937_64 &rng, int count) {
  std::uniform_int_distribution<int> gap_ms(1, 2000);
  std::uniform_int_distribution<int> len_ms(1, 5000);
  std::uniform_int_distribution<int> flip(0, 1);
  std::uniform_int_distribution<int> word(0, 4);
  const std::vector<std::string> words = {"SPEAR", "TREE", "SOFT", "WATER",
                                          "DON'T"};
  std::vector<Segment> out;
  int64_t cursor = 0;
  for (int i = 0; i < count; ++i) {
    cursor += gap_ms(rng);
    const int64_t start = cursor;
    cursor += len_ms(rng);
    const bool meta = flip(rng) == 1;
    std::string text;
    if (meta) {
      text = words[word(rng)];
      if (flip(rng)) text += " " + words[word(rng)];
    }
    out.push_back(
        seg(static_cast<double>(start) / 1000.0,
            static_cast<double>(cursor) / 1000.0, meta, text));
  }
  return out;
}

}  // namespace

TEST_CASE("segments_to_eaf builds the expected document") {
  SUBCASE("empty input still yields both tiers") {
    const EafDocument doc = segments_to_eaf({}, "media.wav");
    REQUIRE(doc.tiers.size() == 2);
    CHECK(doc.tiers[0].id == "eng");
    CHECK(doc.tiers[1].id == "zmu");
    CHECK(doc.time_slots.empty());
    const std::string xml_text = write_eaf(doc);
    CHECK(read_eaf(xml_text).tiers.size() == 2);
  }
  SUBCASE("one annotation per segment, times in milliseconds") {
    const std::vector<Segment> segments = {
        seg(0.25, 1.75, true, "HELLO WORLD"), seg(2.0, 3.5, false, "")};
    const EafDocument doc = segments_to_eaf(segments, "tape.wav");
    REQUIRE(doc.tiers[0].annotations.size() == 1);
    REQUIRE(doc.tiers[1].annotations.size() == 1);
    const EafAnnotation &eng = doc.tiers[0].annotations[0];
    CHECK(doc.slot_ms(eng.start_slot) == 250);
    CHECK(doc.slot_ms(eng.end_slot) == 1750);
    CHECK(eng.value == "HELLO WORLD");
    CHECK(doc.tiers[1].annotations[0].value == "");
    CHECK(doc.media_path == "tape.wav");
  }
  SUBCASE("same-tier overlap is rejected, cross-tier overlap is fine") {
    CHECK_THROWS_AS(
        segments_to_eaf({seg(0.0, 2.0, true, "A"), seg(1.0, 3.0, true, "B")},
                        "m.wav"),
        OverlapWithinTier);
    CHECK_NOTHROW(
        segments_to_eaf({seg(0.0, 2.0, true, "A"), seg(1.0, 3.0, false, "")},
                        "m.wav"));
  }
  SUBCASE("unsorted or unlabelled segments are rejected") {
    CHECK_THROWS_AS(
        segments_to_eaf({seg(2.0, 3.0, true, "A"), seg(0.0, 1.0, false, "")},
                        "m.wav"),
        ValidationError);
    Segment unlabelled;
    unlabelled.start = 0.0;
    unlabelled.end = 1.0;
    CHECK_THROWS_AS(segments_to_eaf({unlabelled}, "m.wav"), ValidationError);
  }
}

TEST_CASE("the generated XML is well-formed and structurally right") {
  const std::vector<Segment> segments = {
      seg(0.5, 1.5, true, "X <&> 'QUOTED'"), seg(2.0, 3.0, false, "")};
  const std::string xml_text = write_eaf(segments_to_eaf(segments, "m.wav"));

  const auto root = xml::parse(xml_text);
  CHECK(root->name == "ANNOTATION_DOCUMENT");
  CHECK(root->find_children("TIME_ORDER").size() == 1);
  CHECK(root->find_children("TIER").size() == 2);
  // The escaped annotation value survives a parse.
  const EafDocument parsed = read_eaf(xml_text);
  CHECK(parsed.tiers[0].annotations[0].value == "X <&> 'QUOTED'");
}

TEST_CASE("eaf round-trip preserves segments") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 100; ++trial) {
    const auto segments = random_segments(rng, 1 + static_cast<int>(rng() % 8));
    const EafDocument doc = segments_to_eaf(segments, "m.wav");
    const auto back = eaf_to_segments(read_eaf(write_eaf(doc)));
    REQUIRE(back.size() == segments.size());
    for (size_t i = 0; i < back.size(); ++i) {
      CHECK(std::abs(back[i].start - segments[i].start) <= 0.001);
      CHECK(std::abs(back[i].end - segments[i].end) <= 0.001);
      CHECK(*back[i].language == *segments[i].language);
      if (segments[i].language->is_metalanguage()) {
        CHECK(back[i].text.value_or("") == segments[i].text.value_or(""));
      }
    }
  }
}

TEST_CASE("eaf reading rejects broken documents") {
  SUBCASE("not XML") {
    CHECK_THROWS_AS(read_eaf("this is not xml"), xml::MalformedXml);
  }
  SUBCASE("mismatched tags") {
    CHECK_THROWS_AS(read_eaf("<ANNOTATION_DOCUMENT><TIER></WRONG>"
                             "</ANNOTATION_DOCUMENT>"),
                    xml::MalformedXml);
  }
  SUBCASE("annotation referencing a missing slot") {
    const std::string bad =
        "<ANNOTATION_DOCUMENT>"
        "<TIME_ORDER><TIME_SLOT TIME_SLOT_ID=\"ts1\" TIME_VALUE=\"0\"/>"
        "</TIME_ORDER>"
        "<TIER TIER_ID=\"eng\"><ANNOTATION>"
        "<ALIGNABLE_ANNOTATION ANNOTATION_ID=\"a1\" TIME_SLOT_REF1=\"ts1\" "
        "TIME_SLOT_REF2=\"ts9\"><ANNOTATION_VALUE>X</ANNOTATION_VALUE>"
        "</ALIGNABLE_ANNOTATION></ANNOTATION></TIER>"
        "</ANNOTATION_DOCUMENT>";
    CHECK_THROWS_AS(read_eaf(bad), DanglingTimeSlot);
  }
  SUBCASE("missing TIME_ORDER") {
    CHECK_THROWS_AS(read_eaf("<ANNOTATION_DOCUMENT></ANNOTATION_DOCUMENT>"),
                    xml::MalformedXml);
  }
  SUBCASE("unrelated tiers are skipped rather than rejected") {
    const std::string with_extra =
        "<ANNOTATION_DOCUMENT>"
        "<TIME_ORDER><TIME_SLOT TIME_SLOT_ID=\"ts1\" TIME_VALUE=\"0\"/>"
        "<TIME_SLOT TIME_SLOT_ID=\"ts2\" TIME_VALUE=\"500\"/></TIME_ORDER>"
        "<TIER TIER_ID=\"commentary\"><ANNOTATION>"
        "<ALIGNABLE_ANNOTATION ANNOTATION_ID=\"a1\" TIME_SLOT_REF1=\"ts1\" "
        "TIME_SLOT_REF2=\"ts2\"><ANNOTATION_VALUE>note</ANNOTATION_VALUE>"
        "</ALIGNABLE_ANNOTATION></ANNOTATION></TIER>"
        "</ANNOTATION_DOCUMENT>";
    CHECK(eaf_to_segments(read_eaf(with_extra)).empty());
  }
}

TEST_CASE("human-corrected text passes through eaf_to_segments verbatim") {
  const std::string xml_text =
      "<ANNOTATION_DOCUMENT>"
      "<TIME_ORDER><TIME_SLOT TIME_SLOT_ID=\"ts1\" TIME_VALUE=\"0\"/>"
      "<TIME_SLOT TIME_SLOT_ID=\"ts2\" TIME_VALUE=\"1200\"/></TIME_ORDER>"
      "<TIER TIER_ID=\"eng\"><ANNOTATION>"
      "<ALIGNABLE_ANNOTATION ANNOTATION_ID=\"a1\" TIME_SLOT_REF1=\"ts1\" "
      "TIME_SLOT_REF2=\"ts2\">"
      "<ANNOTATION_VALUE>uh the Ngiyaamba has it uh</ANNOTATION_VALUE>"
      "</ALIGNABLE_ANNOTATION></ANNOTATION></TIER>"
      "</ANNOTATION_DOCUMENT>";
  const auto segments = eaf_to_segments(read_eaf(xml_text));
  REQUIRE(segments.size() == 1);
  CHECK(segments[0].text.value() == "uh the Ngiyaamba has it uh");
  // Normalization happens only when the text enters evaluation.
  CHECK(normalize_transcript(*segments[0].text).str() ==
        "UH THE NGIYAAMBA HAS IT UH");
}

TEST_CASE("segment TSV export and import") {
  SUBCASE("one metalanguage segment becomes one 5-column row") {
    const std::vector<SegmentRow> rows = {
        {"rec1", seg(0.5, 1.25, true, "HELLO")}};
    CHECK(export_tsv(rows) == "rec1\t0.500\t1.250\teng\tHELLO\n");
    CHECK(export_tsv(rows, true).starts_with("recording_id\t"));
  }
  SUBCASE("round-trip is the identity on millisecond-aligned rows") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<SegmentRow> rows;
      for (auto &s : random_segments(rng, 5)) {
        rows.push_back({"tape42", s});
      }
      const auto back = import_tsv(export_tsv(rows));
      REQUIRE(back.size() == rows.size());
      for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(back[i].recording_id == rows[i].recording_id);
        CHECK(back[i].segment.start ==
              doctest::Approx(rows[i].segment.start).epsilon(1e-9));
        CHECK(back[i].segment.end ==
              doctest::Approx(rows[i].segment.end).epsilon(1e-9));
        CHECK(*back[i].segment.language == *rows[i].segment.language);
        CHECK(back[i].segment.text.value_or("") ==
              rows[i].segment.text.value_or(""));
      }
      // Re-export reproduces the exact bytes.
      CHECK(export_tsv(back) == export_tsv(rows));
    }
  }
  SUBCASE("wrong column counts and bad fields name their line") {
    CHECK_THROWS_AS(import_tsv("rec\t0.0\t1.0\teng\n"), FormatError);
    CHECK_THROWS_AS(import_tsv("rec\t0.0\t1.0\teng\thi\textra\n"),
                    FormatError);
    CHECK_THROWS_AS(import_tsv("rec\tzero\t1.0\teng\thi\n"), FormatError);
    CHECK_THROWS_AS(import_tsv("rec\t1.0\t0.5\teng\thi\n"), FormatError);
    CHECK_THROWS_AS(import_tsv("rec\t0.0\t1.0\tfra\thi\n"), FormatError);
    try {
      import_tsv("rec\t0.0\t1.0\teng\tok\nrec\t0.0\t1.0\teng\n");
      FAIL("expected FormatError");
    } catch (const FormatError &e) {
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
  }
  SUBCASE("tabs in transcripts are refused at export") {
    std::vector<SegmentRow> rows = {{"r", seg(0.0, 1.0, true, "A\tB")}};
    CHECK_THROWS_AS(export_tsv(rows), ValidationError);
  }
}
