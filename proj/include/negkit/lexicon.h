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

#ifndef NEGKIT_LEXICON_H_
#define NEGKIT_LEXICON_H_

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>

namespace negkit {

// A set of folded surface forms. The file format is UTF-8, one entry per
// line; '#' starts a comment and blank lines are ignored.
class WordList {
 public:
  WordList() = default;
  WordList(std::initializer_list<std::string_view> words);

  static WordList Parse(std::istream& in);
  static WordList Parse(std::string_view text);
  // Throws Error(kIo) if the file cannot be opened.
  static WordList Load(const std::string& path);

  void Insert(std::string_view word);
  // `token` is folded before lookup.
  bool Contains(std::string_view token) const;

  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  const std::set<std::string, std::less<>>& words() const { return words_; }

 private:
  std::set<std::string, std::less<>> words_;
};

// Auxiliary verbs after which "not" is inserted. Always contains at least
// "is", "are" and "have".
class AuxLexicon {
 public:
  // Throws Error(kMalformedRecord) if a required form is missing.
  explicit AuxLexicon(WordList words);

  static AuxLexicon Default();
  static AuxLexicon Load(const std::string& path);

  bool Contains(std::string_view token) const { return words_.Contains(token); }
  const WordList& words() const { return words_; }

 private:
  WordList words_;
};

// Bundled lists, embedded at build time from data/.
std::string_view DefaultAuxLexiconText();
std::string_view DefaultVerbListText();
std::string_view ClosedClassStoplistText();

WordList DefaultVerbList();
WordList ClosedClassStoplist();

}  // namespace negkit

#endif  // NEGKIT_LEXICON_H_
