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

#include "triprof/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <iterator>
#include <limits>
#include <ostream>
#include <sstream>
#include <string_view>
#include <unordered_map>

#include "triprof/error.hpp"
#include "triprof/simd/intersect.hpp"

namespace triprof {

UndirectedGraph UndirectedGraph::FromEdges(
    VertexId vertex_count, std::vector<std::pair<VertexId, VertexId>> edges,
    std::shared_ptr<const std::vector<std::string>> labels) {
  if (labels != nullptr && labels->size() != vertex_count) {
    throw UsageError("label table size does not match vertex count");
  }
  for (auto& [a, b] : edges) {
    if (a >= vertex_count || b >= vertex_count) {
      throw UsageError("edge endpoint out of range");
    }
    if (a > b) std::swap(a, b);
  }
  std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  UndirectedGraph g;
  g.vertex_count_ = vertex_count;
  g.labels_ = std::move(labels);
  g.offsets_.assign(static_cast<std::size_t>(vertex_count) + 1, 0);
  for (const auto& [u, w] : edges) {
    ++g.offsets_[u + 1];
    ++g.offsets_[w + 1];
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    g.max_degree_ = std::max(g.max_degree_, g.offsets_[v + 1]);
    g.offsets_[v + 1] += g.offsets_[v];
  }
  g.adjacency_.resize(2 * edges.size());
  g.slot_edge_.resize(2 * edges.size());
  g.edge_u_.resize(edges.size());
  g.edge_w_.resize(edges.size());

  // Edges arrive sorted by (u, w), so each vertex first receives its
  // smaller neighbors (as the w side) in increasing u, then its larger
  // neighbors in increasing w: every list comes out sorted.
  std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (EdgeIndex e = 0; e < edges.size(); ++e) {
    const auto [u, w] = edges[e];
    g.edge_u_[e] = u;
    g.edge_w_[e] = w;
    g.adjacency_[cursor[u]] = w;
    g.slot_edge_[cursor[u]++] = e;
    g.adjacency_[cursor[w]] = u;
    g.slot_edge_[cursor[w]++] = e;
  }
  return g;
}

std::optional<EdgeIndex> UndirectedGraph::find_edge(VertexId a, VertexId b) const {
  if (a >= vertex_count_ || b >= vertex_count_ || a == b) return std::nullopt;
  if (degree(a) > degree(b)) std::swap(a, b);
  const auto nbrs = neighbors(a);
  const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), b);
  if (it == nbrs.end() || *it != b) return std::nullopt;
  return slot_edge_[offsets_[a] + static_cast<std::size_t>(it - nbrs.begin())];
}

std::string UndirectedGraph::label(VertexId v) const {
  if (labels_ != nullptr) return (*labels_)[v];
  return std::to_string(v);
}

namespace {

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

}  // namespace

UndirectedGraph LoadEdgeList(std::istream& in, const LoadOptions& options) {
  const std::string text(std::istreambuf_iterator<char>(in), {});
  std::unordered_map<std::string, VertexId> ids;
  auto labels = std::make_shared<std::vector<std::string>>();
  std::vector<std::pair<VertexId, VertexId>> edges;

  auto intern = [&](std::string_view token, std::size_t line_no) -> VertexId {
    auto [it, inserted] = ids.try_emplace(std::string(token), 0);
    if (inserted) {
      if (labels->size() >= std::numeric_limits<VertexId>::max()) {
        throw ParseError("too many distinct vertex labels", line_no);
      }
      it->second = static_cast<VertexId>(labels->size());
      labels->emplace_back(token);
    }
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    ++line_no;
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    const std::string_view line(text.data() + pos, end - pos);
    pos = end + 1;

    std::string_view tokens[3];
    std::size_t count = 0;
    std::size_t i = 0;
    while (i < line.size() && IsSpace(line[i])) ++i;
    if (i == line.size() || line[i] == '#') continue;
    while (i < line.size() && count < 3) {
      const std::size_t start = i;
      while (i < line.size() && !IsSpace(line[i])) ++i;
      tokens[count++] = line.substr(start, i - start);
      while (i < line.size() && IsSpace(line[i])) ++i;
    }
    if (count != 2) {
      throw ParseError("line " + std::to_string(line_no) +
                           ": expected two vertex labels, found " +
                           (count > 2 ? std::string("more") : std::to_string(count)),
                       line_no);
    }
    const VertexId a = intern(tokens[0], line_no);
    const VertexId b = intern(tokens[1], line_no);
    edges.emplace_back(a, b);
  }

  auto vertex_count = static_cast<VertexId>(labels->size());
  if (options.vertex_count) {
    if (*options.vertex_count < vertex_count) {
      throw UsageError("vertex count override " + std::to_string(*options.vertex_count) +
                       " is smaller than the " + std::to_string(vertex_count) +
                       " labels in the input");
    }
    for (VertexId v = vertex_count; v < *options.vertex_count; ++v) {
      labels->push_back("_" + std::to_string(v));
    }
    vertex_count = *options.vertex_count;
  }
  return UndirectedGraph::FromEdges(vertex_count, std::move(edges), std::move(labels));
}

UndirectedGraph LoadEdgeListFile(const std::filesystem::path& path,
                                 const LoadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  try {
    return LoadEdgeList(in, options);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.line());
  }
}

void WriteEdgeList(std::ostream& out, const UndirectedGraph& g) {
  std::string buffer;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const EdgeRef ref = g.edge(e);
    buffer += std::to_string(ref.u);
    buffer += ' ';
    buffer += std::to_string(ref.w);
    buffer += '\n';
    if (buffer.size() > (1u << 16)) {
      out << buffer;
      buffer.clear();
    }
  }
  out << buffer;
}

std::vector<VertexId> CommonNeighbors(const UndirectedGraph& g, VertexId u, VertexId w) {
  if (u == w) throw UsageError("common neighbors of a vertex with itself");
  if (u >= g.vertex_count() || w >= g.vertex_count()) {
    throw UsageError("vertex id out of range");
  }
  const auto a = g.neighbors(u);
  const auto b = g.neighbors(w);
  std::vector<VertexId> out(std::min(a.size(), b.size()));
  out.resize(simd::Intersect(a, b, out.data()));
  return out;
}

InducedSubgraph InduceSubgraph(const UndirectedGraph& g, std::span<const VertexId> vertices) {
  std::vector<VertexId> keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (!keep.empty() && keep.back() >= g.vertex_count()) {
    throw UsageError("induced subgraph vertex out of range: " + std::to_string(keep.back()));
  }

  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<VertexId> shared(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const auto nbrs = g.neighbors(keep[i]);
    const std::size_t n = simd::Intersect(nbrs, keep, shared.data());
    for (std::size_t k = 0; k < n; ++k) {
      if (shared[k] <= keep[i]) continue;
      const auto j = static_cast<VertexId>(
          std::lower_bound(keep.begin(), keep.end(), shared[k]) - keep.begin());
      edges.emplace_back(static_cast<VertexId>(i), j);
    }
  }
  InducedSubgraph result;
  result.graph = UndirectedGraph::FromEdges(static_cast<VertexId>(keep.size()),
                                            std::move(edges));
  result.to_parent = std::move(keep);
  return result;
}

}  // namespace triprof
