// src/arpa.cpp

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

#include "mixlang/arpa.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace mixlang {
namespace lm {

// Assembles a BigramLm from parsed ARPA entries.
class ArpaBuilder {
 public:
  int add_word(const std::string &word, double logp, double backoff) {
    const int i = static_cast<int>(lm_.vocab_.size());
    lm_.vocab_.push_back(word);
    lm_.index_[word] = i;
    lm_.unigram_logp_.push_back(logp);
    lm_.backoff_logw_.push_back(backoff);
    return i;
  }
  int find(const std::string &word) const { return lm_.word_index(word); }
  void add_bigram(int h, int w, double logp) { lm_.bigrams_[{h, w}] = logp; }

  BigramLm take(int lineno_for_errors) {
    for (const std::string &required :
         {kSentenceStart, kSentenceEnd, kUnknown}) {
      if (lm_.word_index(required) < 0) {
        throw ArpaParseError("line " + std::to_string(lineno_for_errors) +
                             ": model lacks required token " + required);
      }
    }
    return std::move(lm_);
  }

 private:
  BigramLm lm_;
};

namespace {

std::string format_logp(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::vector<std::string> split_ws(const std::string &line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

double parse_logp(const std::string &tok, int lineno) {
  try {
    size_t used = 0;
    const double v = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception &) {
    throw ArpaParseError("line " + std::to_string(lineno) +
                         ": expected a log10 probability, got \"" + tok +
                         "\"");
  }
}

}  // namespace

std::string write_arpa(const BigramLm &lm) {
  std::ostringstream out;
  out << "\\data\\\n";
  out << "ngram 1=" << lm.vocabulary().size() << "\n";
  out << "ngram 2=" << lm.bigram_logp().size() << "\n";
  out << "\n\\1-grams:\n";
  for (const std::string &w : lm.vocabulary()) {
    // <s> carries the -99 never-predicted sentinel set at training time.
    out << format_logp(lm.unigram_logp(w)) << "\t" << w << "\t"
        << format_logp(lm.backoff_logw(w)) << "\n";
  }
  out << "\n\\2-grams:\n";
  for (const auto &[pair, logp] : lm.bigram_logp()) {
    out << format_logp(logp) << "\t" << lm.word(pair.first) << " "
        << lm.word(pair.second) << "\n";
  }
  out << "\n\\end\\\n";
  return out.str();
}

void save_arpa(const std::string &path, const BigramLm &lm) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << write_arpa(lm);
  if (!out) throw IoError("write failed: " + path);
}

BigramLm read_arpa(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto next_line = [&](std::string &out_line) {
    if (!std::getline(in, out_line)) return false;
    ++lineno;
    if (!out_line.empty() && out_line.back() == '\r') out_line.pop_back();
    return true;
  };
  auto fail = [&](const std::string &msg) -> ArpaParseError {
    return ArpaParseError("line " + std::to_string(lineno) + ": " + msg);
  };

  // Header.
  bool saw_data = false;
  while (next_line(line)) {
    if (line == "\\data\\") {
      saw_data = true;
      break;
    }
    if (!line.empty()) throw fail("expected \\data\\ header");
  }
  if (!saw_data) throw fail("missing \\data\\ header");

  int64_t expected[3] = {0, 0, 0};  // index by order, order<=2 used
  while (next_line(line)) {
    if (line.empty()) break;
    int order = 0;
    long long count = 0;
    if (std::sscanf(line.c_str(), "ngram %d=%lld", &order, &count) != 2) {
      throw fail("expected \"ngram N=count\", got \"" + line + "\"");
    }
    if (order > 2) {
      throw UnsupportedOrder("line " + std::to_string(lineno) +
                             ": only orders 1 and 2 are supported, got " +
                             std::to_string(order));
    }
    if (order < 1 || count < 0) throw fail("invalid ngram count line");
    expected[order] = count;
  }

  ArpaBuilder builder;
  int64_t seen_unigrams = 0, seen_bigrams = 0;
  bool in_unigrams = false, in_bigrams = false, saw_end = false;
  while (next_line(line)) {
    if (line.empty()) continue;
    if (line == "\\1-grams:") {
      in_unigrams = true;
      in_bigrams = false;
      continue;
    }
    if (line == "\\2-grams:") {
      in_unigrams = false;
      in_bigrams = true;
      continue;
    }
    if (line == "\\end\\") {
      saw_end = true;
      break;
    }
    if (line[0] == '\\') {
      if (line.find("-grams:") != std::string::npos) {
        throw UnsupportedOrder("line " + std::to_string(lineno) +
                               ": unsupported n-gram section " + line);
      }
      throw fail("unexpected section marker " + line);
    }
    const auto tokens = split_ws(line);
    if (in_unigrams) {
      if (tokens.size() != 2 && tokens.size() != 3) {
        throw fail("expected \"logp word [backoff]\"");
      }
      const double logp = parse_logp(tokens[0], lineno);
      const double backoff =
          tokens.size() == 3 ? parse_logp(tokens[2], lineno) : 0.0;
      if (builder.find(tokens[1]) >= 0) {
        throw fail("duplicate unigram " + tokens[1]);
      }
      builder.add_word(tokens[1], logp, backoff);
      ++seen_unigrams;
    } else if (in_bigrams) {
      if (tokens.size() != 3) throw fail("expected \"logp w1 w2\"");
      const double logp = parse_logp(tokens[0], lineno);
      const int h = builder.find(tokens[1]);
      const int w = builder.find(tokens[2]);
      if (h < 0 || w < 0) {
        throw fail("bigram over unknown word in \"" + line + "\"");
      }
      builder.add_bigram(h, w, logp);
      ++seen_bigrams;
    } else {
      throw fail("data outside any n-gram section: \"" + line + "\"");
    }
  }
  if (!saw_end) {
    throw ArpaParseError("line " + std::to_string(lineno) +
                         ": missing \\end\\ marker");
  }
  if (seen_unigrams != expected[1] || seen_bigrams != expected[2]) {
    throw ArpaParseError(
        "header/body mismatch: header declares " +
        std::to_string(expected[1]) + "/" + std::to_string(expected[2]) +
        " entries, body has " + std::to_string(seen_unigrams) + "/" +
        std::to_string(seen_bigrams));
  }
  return builder.take(lineno);
}

BigramLm load_arpa(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return read_arpa(ss.str());
}

}  // namespace lm
}  // namespace mixlang
