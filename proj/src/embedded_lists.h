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

#ifndef NEGKIT_SRC_EMBEDDED_LISTS_H_
#define NEGKIT_SRC_EMBEDDED_LISTS_H_

#include <string_view>

namespace negkit::embedded {

extern const std::string_view kAuxLexicon;
extern const std::string_view kVerbList;
extern const std::string_view kClosedClass;

}  // namespace negkit::embedded

#endif  // NEGKIT_SRC_EMBEDDED_LISTS_H_
