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

#include "triprof/local_profile.hpp"

#include <string>

#include "triprof/error.hpp"
#include "triprof/simd/intersect.hpp"

namespace triprof {
namespace {

struct ScalarSums {
  std::uint64_t tri = 0;
  std::uint64_t wedge_self = 0;   // wedges centered at the gathering vertex
  std::uint64_t wedge_other = 0;  // wedges centered at the far endpoint
  std::uint64_t iso = 0;

  ScalarSums& operator+=(const ScalarSums& o) {
    tri += o.tri;
    wedge_self += o.wedge_self;
    wedge_other += o.wedge_other;
    iso += o.iso;
    return *this;
  }
};

std::int64_t Halve(std::uint64_t sum, const UndirectedGraph& g, VertexId v, const char* what) {
  if (sum % 2 != 0) {
    throw IntegrityError(std::string("odd ") + what + " sum at vertex " + g.label(v));
  }
  return static_cast<std::int64_t>(sum / 2);
}

}  // namespace

std::vector<EdgeScalars> ScatterEdgeScalars(const UndirectedGraph& g, Engine& engine) {
  const std::uint64_t n = g.vertex_count();
  const simd::Kernels& k = simd::Active();
  return engine.EdgeMap<EdgeScalars>(g, "scatter_edge_scalars", [&](const EdgeRef& e) {
    const auto a = g.neighbors(e.u);
    const auto b = g.neighbors(e.w);
    const std::uint32_t tri = k.count(a.data(), a.size(), b.data(), b.size());
    EdgeScalars s;
    s.tri = tri;
    s.wedge_at_u = static_cast<std::uint32_t>(a.size() - tri - 1);
    s.wedge_at_w = static_cast<std::uint32_t>(b.size() - tri - 1);
    s.iso = static_cast<std::uint32_t>(n - (a.size() + b.size() - tri));
    return s;
  });
}

std::vector<LocalProfile> GatherLocalProfiles(const UndirectedGraph& g,
                                              std::span<const EdgeScalars> scalars,
                                              Engine& engine) {
  const auto sums = engine.VertexReduce<ScalarSums>(
      g, scalars, "gather_local", [](VertexId v, VertexId o, const EdgeScalars& s) {
        const bool v_is_u = v < o;
        return ScalarSums{s.tri, v_is_u ? s.wedge_at_u : s.wedge_at_w,
                          v_is_u ? s.wedge_at_w : s.wedge_at_u, s.iso};
      });

  const auto edges = static_cast<std::int64_t>(g.edge_count());
  const auto triples = static_cast<std::int64_t>(
      choose2(g.vertex_count() == 0 ? 0 : Wide{g.vertex_count()} - 1));
  return engine.VertexMap<LocalProfile>(g.vertex_count(), "apply_local", [&](VertexId v) {
    const ScalarSums& s = sums[v];
    LocalProfile p;
    p.n3 = Halve(s.tri, g, v, "triangle");
    p.n2_c = Halve(s.wedge_self, g, v, "wedge-center");
    p.n2_e = static_cast<std::int64_t>(s.wedge_other);
    p.n1_e = static_cast<std::int64_t>(s.iso);
    p.n1_d = edges - static_cast<std::int64_t>(g.degree(v)) - p.n3 - p.n2_e;
    p.n0 = triples - p.n1_e - p.n1_d - p.n2_e - p.n2_c - p.n3;
    if (p.n1_d < 0 || p.n0 < 0) {
      throw IntegrityError("negative local count at vertex " + g.label(v));
    }
    return p;
  });
}

ExactProfile GlobalProfileFromLocal(std::span<const LocalProfile> locals) {
  std::array<Wide, 4> sums{};
  for (const LocalProfile& p : locals) {
    sums[0] += p.n0;
    sums[1] += p.n1();
    sums[2] += p.n2();
    sums[3] += p.n3;
  }
  ExactProfile global;
  for (std::size_t i = 0; i < 4; ++i) {
    if (sums[i] % 3 != 0) {
      throw IntegrityError("vertex sum of n" + std::to_string(i) + " is not divisible by 3");
    }
    global[i] = sums[i] / 3;
  }
  return global;
}

ProfileResult ComputeProfiles(const UndirectedGraph& g, Engine& engine) {
  const auto scalars = ScatterEdgeScalars(g, engine);
  ProfileResult result;
  result.locals = GatherLocalProfiles(g, scalars, engine);
  result.global = GlobalProfileFromLocal(result.locals);
  return result;
}

ExactProfile ComputeGlobalProfile(const UndirectedGraph& g, Engine& engine) {
  return ComputeProfiles(g, engine).global;
}

TriangleCounts CountTrianglesOnly(const UndirectedGraph& g, Engine& engine) {
  const simd::Kernels& k = simd::Active();
  const auto tri = engine.EdgeMap<std::uint32_t>(g, "scatter_triangles", [&](const EdgeRef& e) {
    const auto a = g.neighbors(e.u);
    const auto b = g.neighbors(e.w);
    return k.count(a.data(), a.size(), b.data(), b.size());
  });
  const auto sums = engine.VertexReduce<std::uint64_t>(
      g, std::span<const std::uint32_t>(tri), "gather_triangles",
      [](VertexId, VertexId, std::uint32_t t) { return std::uint64_t{t}; });

  TriangleCounts out;
  out.per_vertex = engine.VertexMap<std::uint64_t>(
      g.vertex_count(), "apply_triangles",
      [&](VertexId v) { return static_cast<std::uint64_t>(Halve(sums[v], g, v, "triangle")); });
  Wide total = 0;
  for (std::uint64_t t : out.per_vertex) total += t;
  if (total % 3 != 0) throw IntegrityError("vertex triangle sum is not divisible by 3");
  out.global = total / 3;
  return out;
}

}  // namespace triprof
