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

// Brute-force references. Each one rebuilds an adjacency bit matrix from the
// edge list and enumerates vertex subsets directly; nothing here touches the
// intersection kernels or the engine. All throw UsageError past their cap.

#pragma once

#include <cstdint>
#include <vector>

#include "triprof/graph.hpp"
#include "triprof/profile.hpp"

namespace triprof::oracle {

inline constexpr VertexId kProfileCap = 256;
inline constexpr VertexId kCliqueCap = 128;
inline constexpr std::uint64_t kEgoDegreeCap = 512;

ExactProfile BruteForceProfile(const UndirectedGraph& g, VertexId cap = kProfileCap);
std::vector<LocalProfile> BruteForceLocal(const UndirectedGraph& g, VertexId cap = kProfileCap);
EgoProfile BruteForceEgo(const UndirectedGraph& g, VertexId v,
                         std::uint64_t degree_cap = kEgoDegreeCap);
std::uint64_t BruteForceFourCliques(const UndirectedGraph& g, VertexId cap = kCliqueCap);

}  // namespace triprof::oracle
