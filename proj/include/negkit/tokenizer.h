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

#ifndef NEGKIT_TOKENIZER_H_
#define NEGKIT_TOKENIZER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace negkit {

// A token and its byte span [begin, end) in the source text.
struct Token {
  std::string text;
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

// Tokens of one source string. Spans are strictly increasing and
// non-overlapping; everything between spans is whitespace.
class TokenSeq {
 public:
  TokenSeq() = default;
  TokenSeq(std::string source, std::vector<Token> tokens)
      : source_(std::move(source)), tokens_(std::move(tokens)) {}

  const std::string& source() const { return source_; }
  const std::vector<Token>& tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }
  const Token& operator[](std::size_t i) const { return tokens_[i]; }

  auto begin() const { return tokens_.cbegin(); }
  auto end() const { return tokens_.cend(); }

  // Surface forms only.
  std::vector<std::string> Texts() const;

 private:
  std::string source_;
  std::vector<Token> tokens_;
};

// Splits on Unicode whitespace, then peels the ASCII characters
// . , ! ? ; : " ( ) ' off both ends of each chunk as one-character tokens.
// Apostrophes inside a word stay put, so "isn't." gives [isn't, .].
TokenSeq Tokenize(std::string_view text);

// True for the characters Tokenize() peels off chunk edges.
bool IsEdgePunctuation(char c);

// True iff `token` is non-empty and made only of edge punctuation.
bool IsPunctuationToken(std::string_view token);

// ASCII lowercase with U+2019 (right single quotation mark) folded to an
// ASCII apostrophe. Used for every lexicon and cue comparison.
std::string FoldToken(std::string_view token);

// Byte length of the Unicode whitespace code point starting at text[pos], or
// 0 if there is none. Malformed UTF-8 is never whitespace.
std::size_t WhitespaceLengthAt(std::string_view text, std::size_t pos);

}  // namespace negkit

#endif  // NEGKIT_TOKENIZER_H_
