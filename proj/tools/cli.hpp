// Copyright 2026 The qql Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
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

namespace qql::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs `qql` with `args` (program name excluded). Reports go to `out`
/// unless --out names a file; diagnostics and usage go to `err`.
/// Returns 0 on success, 2 for invalid arguments, 1 when a report check
/// fails or an internal error occurs.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace qql::cli
