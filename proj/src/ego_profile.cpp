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

#include "triprof/ego_profile.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <string>

#include "triprof/error.hpp"
#include "triprof/local_profile.hpp"
#include "triprof/simd/intersect.hpp"

namespace triprof {
namespace {

constexpr std::uint32_t kNotCenter = std::numeric_limits<std::uint32_t>::max();

struct PivotEdge {
  bool active = false;  // an endpoint is a requested center
  EdgeScalars scalars;
  std::vector<VertexId> common;  // N_va; empty unless an endpoint is a center
};

struct CenterState {
  PivotSums sums;
  NeighborEdgeList cn;
};

std::int64_t Choose2(std::int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

EgoProfile Solve(const UndirectedGraph& g, VertexId v, const PivotSums& s,
                 std::uint64_t clique_sum) {
  auto fail = [&](const char* what) {
    throw IntegrityError(std::string("ego system at vertex ") + g.label(v) + ": " + what);
  };
  if (clique_sum % 3 != 0) fail("4-clique sum not divisible by 3");
  if (s.p3 % 2 != 0) fail("odd wedge-triangle pivot sum");
  EgoProfile f;
  f.f3 = static_cast<std::int64_t>(clique_sum / 3);
  f.f2 = s.p2 - 3 * f.f3;
  f.f1 = s.p3 / 2 - f.f2;
  if ((s.p1 - f.f1) % 3 != 0) fail("wedge pivot sum inconsistent");
  f.f0 = (s.p1 - f.f1) / 3;
  if (f.f0 < 0 || f.f1 < 0 || f.f2 < 0 || f.f3 < 0) fail("negative count");
  return f;
}

}  // namespace

std::vector<VertexId> NormalizeCenters(const UndirectedGraph& g,
                                       std::span<const VertexId> centers) {
  std::vector<std::uint8_t> seen(g.vertex_count(), 0);
  std::vector<VertexId> out;
  out.reserve(centers.size());
  for (VertexId v : centers) {
    if (v >= g.vertex_count()) throw UsageError("center id out of range: " + std::to_string(v));
    if (!seen[v]) {
      seen[v] = 1;
      out.push_back(v);
    }
  }
  return out;
}

std::uint64_t CountAdjacentPairs(std::span<const VertexId> common, const NeighborEdgeList& cn) {
  const std::uint64_t k = common.size();
  if (k < 2) return 0;
  std::uint64_t count = 0;
  if (k * (k - 1) / 2 <= cn.size()) {
    for (std::size_t i = 0; i + 1 < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        count += std::binary_search(cn.begin(), cn.end(), std::pair{common[i], common[j]});
      }
    }
  } else {
    for (const auto& [a, b] : cn) {
      count += std::binary_search(common.begin(), common.end(), a) &&
               std::binary_search(common.begin(), common.end(), b);
    }
  }
  return count;
}

std::uint64_t PerEdgeCliqueCount(const UndirectedGraph& g, const EdgeRef& e,
                                 const NeighborEdgeList& cn) {
  const auto common = CommonNeighbors(g, e.u, e.w);
  return CountAdjacentPairs(common, cn);
}

EgoTable EgoSerial(const UndirectedGraph& g, std::span<const VertexId> centers,
                   Engine& engine) {
  const auto start = std::chrono::steady_clock::now();
  EgoTable table;
  table.centers = NormalizeCenters(g, centers);
  table.profiles.reserve(table.centers.size());

  Engine inner(engine.workers());
  for (VertexId v : table.centers) {
    const InducedSubgraph ego = InduceSubgraph(g, g.neighbors(v));
    const ExactProfile p = ComputeGlobalProfile(ego.graph, inner);
    table.profiles.push_back(EgoProfile{static_cast<std::int64_t>(p[0]),
                                        static_cast<std::int64_t>(p[1]),
                                        static_cast<std::int64_t>(p[2]),
                                        static_cast<std::int64_t>(p[3])});
  }

  PhaseStats stats{"ego_serial", 0.0, 0, 0, engine.workers()};
  for (const PhaseStats& s : inner.phases()) {
    stats.bytes_scattered += s.bytes_scattered;
    stats.bytes_gathered += s.bytes_gathered;
  }
  stats.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  engine.AddPhase(std::move(stats));
  return table;
}

EgoTable EgoParallel(const UndirectedGraph& g, std::span<const VertexId> centers,
                     Engine& engine) {
  EgoTable table;
  table.centers = NormalizeCenters(g, centers);
  std::vector<std::uint32_t> slot(g.vertex_count(), kNotCenter);
  for (std::size_t i = 0; i < table.centers.size(); ++i) {
    slot[table.centers[i]] = static_cast<std::uint32_t>(i);
  }

  const std::uint64_t n = g.vertex_count();
  const simd::Kernels& k = simd::Active();
  const auto pivots = engine.EdgeMap<PivotEdge>(
      g, "ego_scatter_pivots",
      [&](const EdgeRef& e) {
        PivotEdge rec;
        if (slot[e.u] == kNotCenter && slot[e.w] == kNotCenter) return rec;
        rec.active = true;
        const auto a = g.neighbors(e.u);
        const auto b = g.neighbors(e.w);
        rec.common.resize(std::min(a.size(), b.size()));
        rec.common.resize(k.intersect(a.data(), a.size(), b.data(), b.size(), rec.common.data()));
        const auto tri = static_cast<std::uint32_t>(rec.common.size());
        rec.scalars = EdgeScalars{tri, static_cast<std::uint32_t>(a.size() - tri - 1),
                                  static_cast<std::uint32_t>(b.size() - tri - 1),
                                  static_cast<std::uint32_t>(n - (a.size() + b.size() - tri))};
        return rec;
      },
      [&](const PivotEdge& rec) -> std::uint64_t {
        if (!rec.active) return 0;
        return sizeof(EdgeScalars) + rec.common.size() * sizeof(VertexId);
      });

  auto incident_bytes = [&](VertexId v) {
    std::uint64_t bytes = 0;
    for (EdgeIndex e : g.incident_edges(v)) {
      bytes += sizeof(EdgeScalars) + pivots[e].common.size() * sizeof(VertexId);
    }
    return bytes;
  };
  const auto states = engine.Gather<CenterState>(
      table.centers, "ego_gather_pivots",
      [&](VertexId v) {
        CenterState st;
        const auto nbrs = g.neighbors(v);
        const auto edges = g.incident_edges(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
          const PivotEdge& rec = pivots[edges[i]];
          const VertexId a = nbrs[i];
          const std::int64_t wedge = rec.scalars.wedge_at(v, std::min(v, a));
          const std::int64_t tri = rec.scalars.tri;
          st.sums.p1 += Choose2(wedge);
          st.sums.p2 += Choose2(tri);
          st.sums.p3 += wedge * tri;
          // Each neighbor edge (a, p) shows up from both (v,a) and (v,p);
          // keep the copy where a < p.
          for (VertexId p : rec.common) {
            if (a < p) st.cn.emplace_back(a, p);
          }
        }
        std::sort(st.cn.begin(), st.cn.end());
        return st;
      },
      incident_bytes);

  // The edge receives the neighbor-edge list of one center endpoint (either
  // works: both contain every edge among the shared neighbors).
  struct CliqueRec {
    std::uint64_t n4 = 0;
    std::uint64_t shipped_bytes = 0;
  };
  const auto cliques = engine.EdgeMap<CliqueRec>(
      g, "ego_scatter_cliques",
      [&](const EdgeRef& e) -> CliqueRec {
        const std::uint32_t s = slot[e.u] != kNotCenter ? slot[e.u] : slot[e.w];
        if (s == kNotCenter) return {};
        const NeighborEdgeList& cn = states[s].cn;
        return {CountAdjacentPairs(pivots[e.index].common, cn),
                sizeof(std::uint64_t) + cn.size() * 2 * sizeof(VertexId)};
      },
      [](const CliqueRec& r) { return r.shipped_bytes; });

  table.profiles = engine.Gather<EgoProfile>(
      table.centers, "ego_gather_cliques",
      [&](VertexId v) {
        std::uint64_t sum = 0;
        for (EdgeIndex e : g.incident_edges(v)) sum += cliques[e].n4;
        return Solve(g, v, states[slot[v]].sums, sum);
      },
      [&](VertexId v) { return g.degree(v) * sizeof(std::uint64_t); });
  return table;
}

}  // namespace triprof
