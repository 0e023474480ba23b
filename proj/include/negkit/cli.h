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

#ifndef NEGKIT_CLI_H_
#define NEGKIT_CLI_H_

#include <iosfwd>

namespace negkit {

// Process exit statuses.
enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 1,
  kExitMalformed = 2,
  kExitJoinFailure = 3,
};

// Entry point behind the negkit binary. All output goes to `out`/`err`.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace negkit

#endif  // NEGKIT_CLI_H_
