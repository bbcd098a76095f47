// Copyright 2026 The triprof Authors.
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

// Command-line front end. Run() is the whole program minus process exit, so
// tests can drive it in-process.
//
// Exit status: 0 success, 1 usage error, 2 data or integrity error.

#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "triprof/profile.hpp"

namespace triprof::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// args excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// exact[i] / estimate[i]; empty where the estimate is zero.
std::array<std::optional<double>, 4> AccuracyRatio(const ExactProfile& exact,
                                                   const Estimate& estimate);

}  // namespace triprof::cli
