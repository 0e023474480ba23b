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

#include "negkit/error.h"

namespace negkit {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformedRecord:
      return "MalformedRecord";
    case ErrorKind::kUnknownLabel:
      return "UnknownLabel";
    case ErrorKind::kEmptyField:
      return "EmptyField";
    case ErrorKind::kUnlabeledExample:
      return "UnlabeledExample";
    case ErrorKind::kDuplicateId:
      return "DuplicateId";
    case ErrorKind::kDuplicatePrediction:
      return "DuplicatePrediction";
    case ErrorKind::kEmptyJoin:
      return "EmptyJoin";
    case ErrorKind::kNoPairs:
      return "NoPairs";
    case ErrorKind::kSubsetMismatch:
      return "SubsetMismatch";
    case ErrorKind::kIo:
      return "Io";
  }
  return "Unknown";
}

}  // namespace negkit
