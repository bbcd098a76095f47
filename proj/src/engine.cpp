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

#include "triprof/engine.hpp"

#include <cstdlib>

namespace triprof {

unsigned DefaultWorkers() {
  if (const char* env = std::getenv("TRIPROF_THREADS"); env != nullptr) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed > 0) return static_cast<unsigned>(parsed);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Engine::Engine(unsigned workers) : workers_(workers) {
  if (workers_ == 0) throw UsageError("engine needs at least one worker");
}

void Engine::AddPhase(PhaseStats stats) { phases_.push_back(std::move(stats)); }

}  // namespace triprof
