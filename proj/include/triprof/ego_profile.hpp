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

// Ego 3-profiles: the 3-profile of the subgraph induced by Γ(v), center
// excluded, for each requested center v.
//
// EgoSerial extracts every ego graph and runs the local pipeline on it.
// EgoParallel never materializes ego graphs. For each incident edge (v,a) it
// pivots on the edge scalars to get three linear equations in f0..f3:
//
//   p1 = Σ C(wedge_at_v, 2)    = 3 f0 + f1
//   p2 = Σ C(tri, 2)           = f2 + 3 f3
//   p3 = Σ wedge_at_v · tri    = 2 f1 + 2 f2
//
// and closes the system by counting 4-cliques through v directly: each edge
// counts the adjacent pairs among its endpoints' common neighbors, and
// f3 = ⅓ Σ_a n4(v,a).

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "triprof/engine.hpp"
#include "triprof/graph.hpp"
#include "triprof/profile.hpp"

namespace triprof {

struct PivotSums {
  std::int64_t p1 = 0;
  std::int64_t p2 = 0;
  std::int64_t p3 = 0;
  friend bool operator==(const PivotSums&, const PivotSums&) = default;
};

// Edges of the subgraph induced by Γ(v), each as (a, b) with a < b, sorted.
using NeighborEdgeList = std::vector<std::pair<VertexId, VertexId>>;

struct EgoTable {
  std::vector<VertexId> centers;  // de-duplicated, first-occurrence order
  std::vector<EgoProfile> profiles;
};

// Drops repeats keeping first occurrence. Throws UsageError on an
// out-of-range id.
std::vector<VertexId> NormalizeCenters(const UndirectedGraph& g,
                                       std::span<const VertexId> centers);

EgoTable EgoSerial(const UndirectedGraph& g, std::span<const VertexId> centers,
                   Engine& engine);

// Throws IntegrityError when a recovered count is negative or a division is
// inexact.
EgoTable EgoParallel(const UndirectedGraph& g, std::span<const VertexId> centers,
                     Engine& engine);

// Unordered pairs {i, j} of common neighbors of e's endpoints with (i, j) in
// cn, i.e. 4-cliques through e when cn is the neighbor-edge list of either
// endpoint.
std::uint64_t PerEdgeCliqueCount(const UndirectedGraph& g, const EdgeRef& e,
                                 const NeighborEdgeList& cn);

// Same, given the common-neighbor list directly.
std::uint64_t CountAdjacentPairs(std::span<const VertexId> common,
                                 const NeighborEdgeList& cn);

}  // namespace triprof
