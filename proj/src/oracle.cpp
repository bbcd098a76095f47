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

#include "triprof/oracle.hpp"

#include <string>

#include "triprof/error.hpp"

namespace triprof::oracle {
namespace {

class BitMatrix {
 public:
  explicit BitMatrix(const UndirectedGraph& g)
      : n_(g.vertex_count()), words_((n_ + 63) / 64), bits_(std::size_t{n_} * words_, 0) {
    for (EdgeIndex i = 0; i < g.edge_count(); ++i) {
      const EdgeRef e = g.edge(i);
      Set(e.u, e.w);
      Set(e.w, e.u);
    }
  }

  bool operator()(VertexId a, VertexId b) const {
    return (bits_[std::size_t{a} * words_ + b / 64] >> (b % 64)) & 1U;
  }

 private:
  void Set(VertexId a, VertexId b) { bits_[std::size_t{a} * words_ + b / 64] |= 1ULL << (b % 64); }

  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

void CheckCap(std::uint64_t size, std::uint64_t cap, const char* what) {
  if (size > cap) {
    throw UsageError(std::string(what) + " " + std::to_string(size) +
                     " exceeds brute-force cap " + std::to_string(cap));
  }
}

}  // namespace

ExactProfile BruteForceProfile(const UndirectedGraph& g, VertexId cap) {
  CheckCap(g.vertex_count(), cap, "vertex count");
  const BitMatrix adj(g);
  const VertexId n = g.vertex_count();
  ExactProfile out;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      for (VertexId c = b + 1; c < n; ++c) {
        ++out[adj(a, b) + adj(a, c) + adj(b, c)];
      }
    }
  }
  return out;
}

std::vector<LocalProfile> BruteForceLocal(const UndirectedGraph& g, VertexId cap) {
  CheckCap(g.vertex_count(), cap, "vertex count");
  const BitMatrix adj(g);
  const VertexId n = g.vertex_count();
  std::vector<LocalProfile> out(n);
  for (VertexId v = 0; v < n; ++v) {
    LocalProfile& lp = out[v];
    for (VertexId a = 0; a < n; ++a) {
      if (a == v) continue;
      for (VertexId b = a + 1; b < n; ++b) {
        if (b == v) continue;
        const int at_v = adj(v, a) + adj(v, b);
        const int far = adj(a, b);
        switch (at_v + far) {
          case 0: ++lp.n0; break;
          case 1: ++(at_v == 1 ? lp.n1_e : lp.n1_d); break;
          case 2: ++(at_v == 2 ? lp.n2_c : lp.n2_e); break;
          default: ++lp.n3; break;
        }
      }
    }
  }
  return out;
}

EgoProfile BruteForceEgo(const UndirectedGraph& g, VertexId v, std::uint64_t degree_cap) {
  if (v >= g.vertex_count()) throw UsageError("center id out of range: " + std::to_string(v));
  const BitMatrix adj(g);
  std::vector<VertexId> nbrs;
  for (VertexId a = 0; a < g.vertex_count(); ++a) {
    if (adj(v, a)) nbrs.push_back(a);
  }
  CheckCap(nbrs.size(), degree_cap, "center degree");
  EgoProfile f;
  std::int64_t* slot[] = {&f.f0, &f.f1, &f.f2, &f.f3};
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      for (std::size_t k = j + 1; k < nbrs.size(); ++k) {
        ++*slot[adj(nbrs[i], nbrs[j]) + adj(nbrs[i], nbrs[k]) + adj(nbrs[j], nbrs[k])];
      }
    }
  }
  return f;
}

std::uint64_t BruteForceFourCliques(const UndirectedGraph& g, VertexId cap) {
  CheckCap(g.vertex_count(), cap, "vertex count");
  const BitMatrix adj(g);
  const VertexId n = g.vertex_count();
  std::uint64_t count = 0;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (!adj(a, b)) continue;
      for (VertexId c = b + 1; c < n; ++c) {
        if (!adj(a, c) || !adj(b, c)) continue;
        for (VertexId d = c + 1; d < n; ++d) {
          count += adj(a, d) && adj(b, d) && adj(c, d);
        }
      }
    }
  }
  return count;
}

}  // namespace triprof::oracle
