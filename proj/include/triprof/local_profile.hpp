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

// Exact local and global 3-profiles by edge pivoting.
//
// One scatter computes four scalars per edge from its endpoints' neighbor
// sets. One gather folds them at each vertex into the six local role counts.
// The global profile is a third of the vertex sums, since every triple is
// seen from each of its three vertices.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "triprof/engine.hpp"
#include "triprof/graph.hpp"
#include "triprof/profile.hpp"

namespace triprof {

// Per-edge scalars for e = (u, w), u < w.
struct EdgeScalars {
  std::uint32_t tri = 0;         // |Γ(u) ∩ Γ(w)|
  std::uint32_t wedge_at_u = 0;  // deg(u) − tri − 1: open wedges centered at u through e
  std::uint32_t wedge_at_w = 0;  // deg(w) − tri − 1
  std::uint32_t iso = 0;         // |V| − |Γ(u) ∪ Γ(w)|: vertices adjacent to neither

  // Wedge count centered at endpoint `v` of this edge, given the edge's u.
  std::uint32_t wedge_at(VertexId v, VertexId u) const { return v == u ? wedge_at_u : wedge_at_w; }
  friend bool operator==(const EdgeScalars&, const EdgeScalars&) = default;
};

std::vector<EdgeScalars> ScatterEdgeScalars(const UndirectedGraph& g, Engine& engine);

// Throws IntegrityError naming the vertex when a halved sum is odd or a
// derived count goes negative.
std::vector<LocalProfile> GatherLocalProfiles(const UndirectedGraph& g,
                                              std::span<const EdgeScalars> scalars,
                                              Engine& engine);

// n_i = ⅓ Σ_v n_{i,v}. Throws IntegrityError when a sum is not divisible by 3.
ExactProfile GlobalProfileFromLocal(std::span<const LocalProfile> locals);

struct ProfileResult {
  std::vector<LocalProfile> locals;
  ExactProfile global;
};

// Scatter, gather, and aggregation in one call.
ProfileResult ComputeProfiles(const UndirectedGraph& g, Engine& engine);

// Global profile only; same phases, locals dropped.
ExactProfile ComputeGlobalProfile(const UndirectedGraph& g, Engine& engine);

struct TriangleCounts {
  std::vector<std::uint64_t> per_vertex;
  Wide global = 0;
};

// Baseline that computes only triangle counts via the same intersection
// kernel and engine. Used for runtime-overhead comparisons.
TriangleCounts CountTrianglesOnly(const UndirectedGraph& g, Engine& engine);

}  // namespace triprof
