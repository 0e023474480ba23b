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

#include "negkit/tokenizer.h"

#include <string_view>

namespace negkit {
namespace {

constexpr std::string_view kEdgePunctuation = ".,!?;:\"()'";

}  // namespace

bool IsEdgePunctuation(char c) {
  return kEdgePunctuation.find(c) != std::string_view::npos;
}

bool IsPunctuationToken(std::string_view token) {
  if (token.empty()) return false;
  for (char c : token) {
    if (!IsEdgePunctuation(c)) return false;
  }
  return true;
}

std::size_t WhitespaceLengthAt(std::string_view text, std::size_t pos) {
  auto byte = [&](std::size_t i) -> unsigned {
    return i < text.size() ? static_cast<unsigned char>(text[i]) : 0u;
  };
  unsigned b0 = byte(pos);
  if (b0 == ' ' || (b0 >= 0x09 && b0 <= 0x0D)) return 1;
  unsigned b1 = byte(pos + 1);
  unsigned b2 = byte(pos + 2);
  // U+0085, U+00A0
  if (b0 == 0xC2 && (b1 == 0x85 || b1 == 0xA0)) return 2;
  // U+1680
  if (b0 == 0xE1 && b1 == 0x9A && b2 == 0x80) return 3;
  if (b0 == 0xE2 && b1 == 0x80) {
    // U+2000..U+200A, U+2028, U+2029, U+202F
    if ((b2 >= 0x80 && b2 <= 0x8A) || b2 == 0xA8 || b2 == 0xA9 || b2 == 0xAF) {
      return 3;
    }
  }
  // U+205F
  if (b0 == 0xE2 && b1 == 0x81 && b2 == 0x9F) return 3;
  // U+3000
  if (b0 == 0xE3 && b1 == 0x80 && b2 == 0x80) return 3;
  return 0;
}

std::vector<std::string> TokenSeq::Texts() const {
  std::vector<std::string> texts;
  texts.reserve(tokens_.size());
  for (const Token& t : tokens_) texts.push_back(t.text);
  return texts;
}

TokenSeq Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  auto emit = [&](std::size_t begin, std::size_t end) {
    tokens.push_back({std::string(text.substr(begin, end - begin)), begin, end});
  };

  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::size_t ws = WhitespaceLengthAt(text, pos)) {
      pos += ws;
      continue;
    }
    std::size_t chunk_end = pos;
    while (chunk_end < text.size() && WhitespaceLengthAt(text, chunk_end) == 0) {
      ++chunk_end;
    }

    std::size_t lo = pos;
    std::size_t hi = chunk_end;
    while (lo < hi && IsEdgePunctuation(text[lo])) {
      emit(lo, lo + 1);
      ++lo;
    }
    std::size_t core_end = hi;
    while (core_end > lo && IsEdgePunctuation(text[core_end - 1])) --core_end;
    if (lo < core_end) emit(lo, core_end);
    for (std::size_t i = core_end; i < hi; ++i) emit(i, i + 1);

    pos = chunk_end;
  }
  return TokenSeq(std::string(text), std::move(tokens));
}

std::string FoldToken(std::string_view token) {
  std::string folded;
  folded.reserve(token.size());
  for (std::size_t i = 0; i < token.size(); ++i) {
    char c = token[i];
    if (c == '\xE2' && i + 2 < token.size() && token[i + 1] == '\x80' &&
        token[i + 2] == '\x99') {
      folded.push_back('\'');
      i += 2;
      continue;
    }
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    folded.push_back(c);
  }
  return folded;
}

}  // namespace negkit
