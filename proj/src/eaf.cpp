// src/eaf.cpp

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

#include "mixlang/eaf.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "mixlang/xml.hpp"

namespace mixlang {
namespace elan {

namespace {

int64_t to_milliseconds(double seconds) {
  return static_cast<int64_t>(std::floor(seconds * 1000.0 + 0.5));
}

}  // namespace

int64_t EafDocument::slot_ms(const std::string &slot_id) const {
  const auto it = time_slots.find(slot_id);
  if (it == time_slots.end()) {
    throw DanglingTimeSlot("annotation references missing time slot " +
                           slot_id);
  }
  return it->second;
}

EafDocument segments_to_eaf(const std::vector<Segment> &segments,
                            const std::string &media_path,
                            const LanguagePair &languages) {
  EafDocument doc;
  doc.media_path = media_path;
  doc.tiers.push_back({languages.metalanguage_code(), {}});
  doc.tiers.push_back({languages.target_code(), {}});

  double last_end[2] = {-1.0, -1.0};
  double last_start = -1.0;
  int slot = 0, annotation = 0;
  for (const Segment &seg : segments) {
    if (seg.end <= seg.start) {
      throw ValidationError("segment has end <= start");
    }
    if (!seg.language) {
      throw ValidationError("segment without a language label");
    }
    if (seg.start < last_start) {
      throw ValidationError("segments must be sorted by start time");
    }
    last_start = seg.start;
    const bool meta = seg.language->is_metalanguage();
    const int tier = meta ? 0 : 1;
    if (seg.start < last_end[tier]) {
      throw OverlapWithinTier("overlapping segments on tier " +
                              doc.tiers[tier].id);
    }
    last_end[tier] = seg.end;

    const std::string ts1 = "ts" + std::to_string(++slot);
    doc.time_slots[ts1] = to_milliseconds(seg.start);
    const std::string ts2 = "ts" + std::to_string(++slot);
    doc.time_slots[ts2] = to_milliseconds(seg.end);

    EafAnnotation ann;
    ann.id = "a" + std::to_string(++annotation);
    ann.start_slot = ts1;
    ann.end_slot = ts2;
    // Target-language regions stay blank while the orthography is in
    // development; only the metalanguage carries a transcript.
    ann.value = meta && seg.text ? *seg.text : "";
    doc.tiers[tier].annotations.push_back(std::move(ann));
  }
  return doc;
}

std::vector<Segment> eaf_to_segments(const EafDocument &doc,
                                     const LanguagePair &languages) {
  std::vector<Segment> out;
  for (const EafTier &tier : doc.tiers) {
    const auto label = languages.from_code(tier.id);
    if (!label) continue;  // unrelated annotation layer
    for (const EafAnnotation &ann : tier.annotations) {
      Segment seg;
      seg.start = static_cast<double>(doc.slot_ms(ann.start_slot)) / 1000.0;
      seg.end = static_cast<double>(doc.slot_ms(ann.end_slot)) / 1000.0;
      if (seg.end <= seg.start) {
        throw ValidationError("annotation " + ann.id + " has end <= start");
      }
      seg.language = label;
      if (label->is_metalanguage()) seg.text = ann.value;
      out.push_back(std::move(seg));
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Segment &a, const Segment &b) {
                     return a.start != b.start ? a.start < b.start
                                               : a.end < b.end;
                   });
  return out;
}

std::string write_eaf(const EafDocument &doc) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<ANNOTATION_DOCUMENT AUTHOR=\"\" "
         "DATE=\"1970-01-01T00:00:00+00:00\" FORMAT=\"3.0\" "
         "VERSION=\"3.0\">\n";
  out << "  <HEADER MEDIA_FILE=\"\" TIME_UNITS=\"milliseconds\">\n";
  out << "    <MEDIA_DESCRIPTOR MEDIA_URL=\""
      << xml::escape_attribute(doc.media_path) << "\" MIME_TYPE=\""
      << xml::escape_attribute(doc.media_mime) << "\"/>\n";
  out << "  </HEADER>\n";
  out << "  <TIME_ORDER>\n";
  // std::map keeps slot ids in lexicographic order; emit by time value,
  // then id, so the file reads chronologically.
  std::vector<std::pair<std::string, int64_t>> slots(doc.time_slots.begin(),
                                                     doc.time_slots.end());
  std::sort(slots.begin(), slots.end(), [](const auto &a, const auto &b) {
    return a.second != b.second ? a.second < b.second : a.first < b.first;
  });
  for (const auto &[id, ms] : slots) {
    out << "    <TIME_SLOT TIME_SLOT_ID=\"" << xml::escape_attribute(id)
        << "\" TIME_VALUE=\"" << ms << "\"/>\n";
  }
  out << "  </TIME_ORDER>\n";
  for (const EafTier &tier : doc.tiers) {
    out << "  <TIER LINGUISTIC_TYPE_REF=\"default-lt\" TIER_ID=\""
        << xml::escape_attribute(tier.id) << "\">\n";
    for (const EafAnnotation &ann : tier.annotations) {
      out << "    <ANNOTATION>\n";
      out << "      <ALIGNABLE_ANNOTATION ANNOTATION_ID=\""
          << xml::escape_attribute(ann.id) << "\" TIME_SLOT_REF1=\""
          << xml::escape_attribute(ann.start_slot) << "\" TIME_SLOT_REF2=\""
          << xml::escape_attribute(ann.end_slot) << "\">\n";
      out << "        <ANNOTATION_VALUE>" << xml::escape_text(ann.value)
          << "</ANNOTATION_VALUE>\n";
      out << "      </ALIGNABLE_ANNOTATION>\n";
      out << "    </ANNOTATION>\n";
    }
    out << "  </TIER>\n";
  }
  out << "  <LINGUISTIC_TYPE GRAPHIC_REFERENCES=\"false\" "
         "LINGUISTIC_TYPE_ID=\"default-lt\" TIME_ALIGNABLE=\"true\"/>\n";
  out << "</ANNOTATION_DOCUMENT>\n";
  return out.str();
}

EafDocument read_eaf(const std::string &xml_text) {
  std::unique_ptr<xml::Element> root;
  root = xml::parse(xml_text);
  if (root->name != "ANNOTATION_DOCUMENT") {
    throw xml::MalformedXml("expected ANNOTATION_DOCUMENT, got " + root->name);
  }

  EafDocument doc;
  if (const auto *header = root->find_child("HEADER")) {
    if (const auto *media = header->find_child("MEDIA_DESCRIPTOR")) {
      const auto url = media->attributes.find("MEDIA_URL");
      if (url != media->attributes.end()) doc.media_path = url->second;
      const auto mime = media->attributes.find("MIME_TYPE");
      if (mime != media->attributes.end()) doc.media_mime = mime->second;
    }
  }

  const auto *time_order = root->find_child("TIME_ORDER");
  if (time_order == nullptr) {
    throw xml::MalformedXml("document lacks a TIME_ORDER element");
  }
  for (const auto *slot : time_order->find_children("TIME_SLOT")) {
    const std::string &id = slot->attribute("TIME_SLOT_ID");
    const std::string &value = slot->attribute("TIME_VALUE");
    try {
      doc.time_slots[id] = std::stoll(value);
    } catch (const std::exception &) {
      throw xml::MalformedXml("bad TIME_VALUE \"" + value + "\" on " + id);
    }
  }

  for (const auto *tier : root->find_children("TIER")) {
    EafTier out_tier;
    out_tier.id = tier->attribute("TIER_ID");
    for (const auto *wrapper : tier->find_children("ANNOTATION")) {
      // Reference annotations and other subdivision kinds are ignored.
      const auto *ann = wrapper->find_child("ALIGNABLE_ANNOTATION");
      if (ann == nullptr) continue;
      EafAnnotation out_ann;
      out_ann.id = ann->attribute("ANNOTATION_ID");
      out_ann.start_slot = ann->attribute("TIME_SLOT_REF1");
      out_ann.end_slot = ann->attribute("TIME_SLOT_REF2");
      if (const auto *value = ann->find_child("ANNOTATION_VALUE")) {
        out_ann.value = value->text;
      }
      // Fail fast on dangling references.
      doc.slot_ms(out_ann.start_slot);
      doc.slot_ms(out_ann.end_slot);
      out_tier.annotations.push_back(std::move(out_ann));
    }
    doc.tiers.push_back(std::move(out_tier));
  }
  return doc;
}

void save_eaf(const std::string &path, const EafDocument &doc) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << write_eaf(doc);
  if (!out) throw IoError("write failed: " + path);
}

EafDocument load_eaf(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return read_eaf(ss.str());
}

}  // namespace elan
}  // namespace mixlang
