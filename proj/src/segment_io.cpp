// src/segment_io.cpp

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

#include "mixlang/segment_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace mixlang {
namespace elan {

namespace {

const char *kHeader = "recording_id\tstart_s\tend_s\tlanguage\ttext\n";

std::string format_seconds(double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", seconds);
  return buf;
}

std::vector<std::string> split_tabs(const std::string &line) {
  std::vector<std::string> out;
  size_t begin = 0;
  while (true) {
    const size_t tab = line.find('\t', begin);
    if (tab == std::string::npos) {
      out.push_back(line.substr(begin));
      return out;
    }
    out.push_back(line.substr(begin, tab - begin));
    begin = tab + 1;
  }
}

double parse_seconds(const std::string &tok, const std::string &at) {
  try {
    size_t used = 0;
    const double v = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception &) {
    throw FormatError(at + ": cannot parse time \"" + tok + "\"");
  }
}

}  // namespace

std::string export_tsv(const std::vector<SegmentRow> &rows, bool with_header) {
  std::ostringstream out;
  if (with_header) out << kHeader;
  for (const SegmentRow &row : rows) {
    const Segment &seg = row.segment;
    if (!seg.language) {
      throw ValidationError("segment without a language label in " +
                            row.recording_id);
    }
    const std::string text = seg.text.value_or("");
    if (text.find('\t') != std::string::npos ||
        text.find('\n') != std::string::npos) {
      throw ValidationError("transcript contains a tab or newline in " +
                            row.recording_id);
    }
    out << row.recording_id << '\t' << format_seconds(seg.start) << '\t'
        << format_seconds(seg.end) << '\t' << seg.language->code() << '\t'
        << text << '\n';
  }
  return out.str();
}

std::vector<SegmentRow> import_tsv(const std::string &text,
                                   const LanguagePair &languages,
                                   bool with_header) {
  std::istringstream in(text);
  std::vector<SegmentRow> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (with_header && lineno == 1) continue;
    if (line.empty()) continue;
    const std::string at = "line " + std::to_string(lineno);

    const auto cols = split_tabs(line);
    if (cols.size() != 5) {
      throw FormatError(at + ": expected 5 tab-separated columns, got " +
                        std::to_string(cols.size()));
    }
    SegmentRow row;
    row.recording_id = cols[0];
    row.segment.start = parse_seconds(cols[1], at);
    row.segment.end = parse_seconds(cols[2], at);
    if (row.segment.end <= row.segment.start || row.segment.start < 0.0) {
      throw FormatError(at + ": invalid segment times");
    }
    const auto label = languages.from_code(cols[3]);
    if (!label) {
      throw FormatError(at + ": unknown language code \"" + cols[3] + "\"");
    }
    row.segment.language = label;
    if (label->is_metalanguage()) row.segment.text = cols[4];
    out.push_back(std::move(row));
  }
  return out;
}

void save_tsv(const std::string &path, const std::vector<SegmentRow> &rows,
              bool with_header) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << export_tsv(rows, with_header);
  if (!out) throw IoError("write failed: " + path);
}

std::vector<SegmentRow> load_tsv(const std::string &path,
                                 const LanguagePair &languages,
                                 bool with_header) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return import_tsv(ss.str(), languages, with_header);
}

}  // namespace elan
}  // namespace mixlang
