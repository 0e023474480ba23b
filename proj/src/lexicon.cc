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

#include "negkit/lexicon.h"

#include <fstream>
#include <istream>
#include <sstream>

#include "embedded_lists.h"
#include "negkit/error.h"
#include "negkit/tokenizer.h"

namespace negkit {
namespace {

bool IsAsciiSpace(char c) { return c == ' ' || (c >= '\t' && c <= '\r'); }

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsAsciiSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsAsciiSpace(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

WordList::WordList(std::initializer_list<std::string_view> words) {
  for (std::string_view w : words) Insert(w);
}

WordList WordList::Parse(std::istream& in) {
  WordList list;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view entry = line;
    if (auto hash = entry.find('#'); hash != entry.npos) {
      entry = entry.substr(0, hash);
    }
    entry = Trim(entry);
    if (!entry.empty()) list.Insert(entry);
  }
  return list;
}

WordList WordList::Parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  return Parse(in);
}

WordList WordList::Load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open word list " + path);
  return Parse(in);
}

void WordList::Insert(std::string_view word) { words_.insert(FoldToken(word)); }

bool WordList::Contains(std::string_view token) const {
  return words_.contains(FoldToken(token));
}

AuxLexicon::AuxLexicon(WordList words) : words_(std::move(words)) {
  for (std::string_view required : {"is", "are", "have"}) {
    if (!words_.Contains(required)) {
      throw Error(ErrorKind::kMalformedRecord,
                  "auxiliary lexicon must contain \"" + std::string(required) +
                      "\"");
    }
  }
}

AuxLexicon AuxLexicon::Default() {
  return AuxLexicon(WordList::Parse(DefaultAuxLexiconText()));
}

AuxLexicon AuxLexicon::Load(const std::string& path) {
  return AuxLexicon(WordList::Load(path));
}

std::string_view DefaultAuxLexiconText() { return embedded::kAuxLexicon; }
std::string_view DefaultVerbListText() { return embedded::kVerbList; }
std::string_view ClosedClassStoplistText() { return embedded::kClosedClass; }

WordList DefaultVerbList() { return WordList::Parse(DefaultVerbListText()); }
WordList ClosedClassStoplist() {
  return WordList::Parse(ClosedClassStoplistText());
}

}  // namespace negkit
