// Copyright 2026 The negkit Authors.
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

#ifndef NEGKIT_TESTS_ORACLES_H_
#define NEGKIT_TESTS_ORACLES_H_

// Independent reference implementations used only by tests. None of these
// call into the library code paths they check.

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

namespace negkit::oracle {

inline bool IsEdgePunct(char c) {
  return std::string_view(".,!?;:\"()'").find(c) != std::string_view::npos;
}

inline bool IsAsciiWhitespace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

// Regex word tokenizer: \S+ chunks, then edge punctuation peeled one
// character at a time. ASCII whitespace only.
inline std::vector<std::string> ReferenceTokenize(const std::string& text) {
  static const std::regex kChunk(R"([^\s]+)");
  static const std::regex kEdges(R"(^([.,!?;:"()']*)(.*?)([.,!?;:"()']*)$)");
  std::vector<std::string> out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), kChunk);
       it != std::sregex_iterator(); ++it) {
    std::string chunk = it->str();
    std::smatch m;
    std::regex_match(chunk, m, kEdges);
    for (char c : m[1].str()) out.emplace_back(1, c);
    if (m[2].length() > 0) out.push_back(m[2].str());
    for (char c : m[3].str()) out.emplace_back(1, c);
  }
  return out;
}

// Brute-force cue scan over the raw string: lowercase, fold U+2019, then look
// for "not" bounded on both sides and "n't" bounded on the right. A side is
// bounded when only edge punctuation separates it from whitespace or the end
// of the string.
inline bool HasNegationCue(const std::string& text) {
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.compare(i, 3, "\xE2\x80\x99") == 0) {
      s.push_back('\'');
      i += 2;
    } else {
      char c = text[i];
      s.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c + 32) : c);
    }
  }
  auto left_bounded = [&](std::size_t pos) {
    std::size_t j = pos;
    while (j > 0 && IsEdgePunct(s[j - 1])) --j;
    return j == 0 || IsAsciiWhitespace(s[j - 1]);
  };
  auto right_bounded = [&](std::size_t pos) {
    std::size_t k = pos;
    while (k < s.size() && IsEdgePunct(s[k])) ++k;
    return k == s.size() || IsAsciiWhitespace(s[k]);
  };
  for (std::size_t p = s.find("not"); p != std::string::npos;
       p = s.find("not", p + 1)) {
    if (left_bounded(p) && right_bounded(p + 3)) return true;
  }
  for (std::size_t p = s.find("n't"); p != std::string::npos;
       p = s.find("n't", p + 1)) {
    if (right_bounded(p + 3)) return true;
  }
  return false;
}

// Random strings over a lexicon mixing cues and near-misses, joined by ASCII
// whitespace, with edge punctuation sprinkled on.
class CueStringGenerator {
 public:
  explicit CueStringGenerator(std::uint32_t seed) : rng_(seed) {}

  std::string Next() {
    static const std::vector<std::string> kWords = {
        "not",    "Not",     "NOT",      "nothing", "Nothing", "knot",
        "knots",  "cannot",  "Cannot",   "isn't",   "ISN'T",   "isn\xE2\x80\x99t",
        "don't",  "Don't",   "can't",    "won't",   "n't",     "not's",
        "notable", "note",   "snot",     "nt",      "isnt",    "dont",
        "no",     "never",   "none",     "a",       "man",     "is",
        "playing", "the",    "park",     "dog",     "didn'",   "n'",
        "nott",   "tnot",    "aren\xE2\x80\x99T", "x-not", "not-so"};
    static const std::string kPunct = ".,!?;:\"()'";
    static const std::vector<std::string> kSpace = {" ", "  ", "\t", "\n"};

    std::uniform_int_distribution<int> length(0, 8);
    std::uniform_int_distribution<std::size_t> word(0, kWords.size() - 1);
    std::uniform_int_distribution<std::size_t> punct(0, kPunct.size() - 1);
    std::uniform_int_distribution<std::size_t> space(0, kSpace.size() - 1);
    std::uniform_int_distribution<int> coin(0, 3);

    std::string out;
    int n = length(rng_);
    for (int i = 0; i < n; ++i) {
      if (i > 0) out += kSpace[space(rng_)];
      if (coin(rng_) == 0) out.push_back(kPunct[punct(rng_)]);
      out += kWords[word(rng_)];
      while (coin(rng_) == 0) out.push_back(kPunct[punct(rng_)]);
    }
    return out;
  }

 private:
  std::mt19937 rng_;
};

// Accuracy bookkeeping recounted from scratch with plain loops.
struct BruteCounts {
  std::size_t total = 0;
  std::size_t correct = 0;
  std::array<std::size_t, 3> class_total{};
  std::array<std::size_t, 3> class_correct{};
};

inline BruteCounts Recount(const std::vector<int>& gold,
                           const std::vector<int>& predicted) {
  BruteCounts c;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    ++c.total;
    ++c.class_total[gold[i]];
    if (gold[i] == predicted[i]) {
      ++c.correct;
      ++c.class_correct[gold[i]];
    }
  }
  return c;
}

// One-decimal rendering of 100 * num / den by long division with half-up
// rounding on the next digit; num, den >= 0.
inline std::string PercentByLongDivision(std::int64_t num, std::int64_t den) {
  std::int64_t scaled = num * 100;
  std::int64_t whole = scaled / den;
  std::int64_t rem = scaled % den;
  std::int64_t tenth = (rem * 10) / den;
  rem = (rem * 10) % den;
  if (rem * 2 >= den) ++tenth;
  if (tenth == 10) {
    ++whole;
    tenth = 0;
  }
  return std::to_string(whole) + "." + std::to_string(tenth);
}

}  // namespace negkit::oracle

#endif  // NEGKIT_TESTS_ORACLES_H_
