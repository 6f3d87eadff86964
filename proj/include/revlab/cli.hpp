// Copyright 2026 The Revlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace revlab::cli {

// Exit codes: 0 on success, 1 when a check fails or an input file is bad,
// 2 on command-line usage errors.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

// Subcommands:
//   gates list | gates table NAME | gates check NAME
//   qc verify [NAME]
//   qc synth NAME [--max-cost N] [--atlas FILE]
//   qc synth --perm FILE [--max-cost N] [--atlas FILE]
//   qc atlas --width W --max-cost N [--out FILE]
//   analyze FILE
//   sim FILE --stimulus FILE
//   ff verify ID|all
//   report claims [--json] [--subject S] [--metric M] [--atlas FILE]
//   report improvements
//
// Commands that need the width-3 atlas resolve it in this order: --atlas
// flag, the REVLAB_ATLAS environment variable, then an in-process build
// (with a note on stderr).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace revlab::cli
