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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace triprof {

using VertexId = std::uint32_t;
using EdgeIndex = std::uint64_t;

// Canonically oriented edge (u < w) with its stable ordinal.
struct EdgeRef {
  VertexId u = 0;
  VertexId w = 0;
  EdgeIndex index = 0;
};

// Immutable simple undirected graph in CSR form.
//
// Adjacency lists are strictly increasing. Edges are numbered in
// lexicographic (u, w) order of their canonical orientation, and every
// adjacency slot carries the ordinal of the edge it belongs to, so per-edge
// arrays can be read from either endpoint without a lookup.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;

  // Builds from arbitrary pairs: self-loops are dropped and duplicates in
  // either orientation are merged. Every endpoint must be < vertex_count.
  // `labels`, when non-null, must hold vertex_count entries.
  static UndirectedGraph FromEdges(
      VertexId vertex_count, std::vector<std::pair<VertexId, VertexId>> edges,
      std::shared_ptr<const std::vector<std::string>> labels = nullptr);

  VertexId vertex_count() const noexcept { return vertex_count_; }
  EdgeIndex edge_count() const noexcept { return edge_u_.size(); }

  std::span<const VertexId> neighbors(VertexId v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  // Edge ordinals parallel to neighbors(v).
  std::span<const EdgeIndex> incident_edges(VertexId v) const noexcept {
    return {slot_edge_.data() + offsets_[v], slot_edge_.data() + offsets_[v + 1]};
  }
  std::uint64_t degree(VertexId v) const noexcept {
    return offsets_[v + 1] - offsets_[v];
  }
  std::uint64_t max_degree() const noexcept { return max_degree_; }

  EdgeRef edge(EdgeIndex i) const noexcept { return {edge_u_[i], edge_w_[i], i}; }
  std::optional<EdgeIndex> find_edge(VertexId a, VertexId b) const;
  bool has_edge(VertexId a, VertexId b) const { return find_edge(a, b).has_value(); }

  // Source-file label for v; the decimal id when the graph carries none.
  std::string label(VertexId v) const;
  const std::shared_ptr<const std::vector<std::string>>& labels() const noexcept {
    return labels_;
  }

  friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.offsets_ == b.offsets_ &&
           a.adjacency_ == b.adjacency_;
  }

 private:
  VertexId vertex_count_ = 0;
  std::uint64_t max_degree_ = 0;
  std::vector<std::uint64_t> offsets_{0};
  std::vector<VertexId> adjacency_;
  std::vector<EdgeIndex> slot_edge_;
  std::vector<VertexId> edge_u_;
  std::vector<VertexId> edge_w_;
  std::shared_ptr<const std::vector<std::string>> labels_;
};

struct LoadOptions {
  // Lets |V| exceed the number of labels seen (isolated vertices). Extra
  // vertices are labelled "_<id>".
  std::optional<VertexId> vertex_count;
};

// Whitespace edge list: '#' starts a comment line, blank lines are skipped,
// every other line must hold exactly two labels. Labels are remapped to dense
// ids in first-appearance order. Throws ParseError with the line number.
UndirectedGraph LoadEdgeList(std::istream& in, const LoadOptions& options = {});
UndirectedGraph LoadEdgeListFile(const std::filesystem::path& path,
                                 const LoadOptions& options = {});

// One "u w" line per edge in dense ids, u < w, sorted.
void WriteEdgeList(std::ostream& out, const UndirectedGraph& g);

// Γ(u) ∩ Γ(w) by merged scan. Throws UsageError when u == w.
std::vector<VertexId> CommonNeighbors(const UndirectedGraph& g, VertexId u, VertexId w);

struct InducedSubgraph {
  UndirectedGraph graph;
  std::vector<VertexId> to_parent;  // new id -> id in the source graph
};

// Subgraph on `vertices` (duplicates ignored) with ids re-densified in
// increasing parent-id order. Throws UsageError on an out-of-range id.
InducedSubgraph InduceSubgraph(const UndirectedGraph& g, std::span<const VertexId> vertices);

}  // namespace triprof
