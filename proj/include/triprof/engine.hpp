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

// Synchronous scatter/gather executor.
//
// A scatter phase maps every edge to a record stored at the edge's ordinal; a
// gather phase folds, for every vertex, the records of its incident edges in
// adjacency order. Work is split into index chunks handed to workers
// dynamically, but every output slot is written by exactly one task and every
// fold runs sequentially in a fixed order, so results never depend on the
// worker count or on scheduling.
//
// Communication is modelled arithmetically: a scatter "sends" each produced
// record once, a gather "receives" each record once per consuming endpoint.

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <concepts>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <type_traits>
#include <vector>

#include "triprof/error.hpp"
#include "triprof/graph.hpp"

namespace triprof {

struct PhaseStats {
  std::string name;
  double seconds = 0.0;
  std::uint64_t bytes_scattered = 0;
  std::uint64_t bytes_gathered = 0;
  unsigned workers = 1;
};

// Worker count from TRIPROF_THREADS when set and positive, else the hardware
// concurrency (at least 1).
unsigned DefaultWorkers();

class Engine {
 public:
  explicit Engine(unsigned workers = DefaultWorkers());

  unsigned workers() const noexcept { return workers_; }

  // Runs body(begin, end) over disjoint chunks covering [0, n). Returns the
  // sum of the values body returns when it returns an integer, which lets
  // callers account variable-size records without shared state.
  template <class Body>
  std::uint64_t ParallelFor(std::size_t n, Body&& body, std::size_t grain = 0) const;

  // output[e.index] = f(e) for every edge.
  template <class Record, class F>
  std::vector<Record> EdgeMap(const UndirectedGraph& g, std::string_view phase, F&& f);

  // Like EdgeMap, with per-record byte accounting for variable-size records.
  template <class Record, class F, class Bytes>
  std::vector<Record> EdgeMap(const UndirectedGraph& g, std::string_view phase, F&& f,
                              Bytes&& record_bytes);

  // acc[v] = Σ over incident edges e=(v,o), in adjacency order, of
  // project(v, o, per_edge[e]). Acc must be default-constructible with
  // operator+=. Throws UsageError when per_edge.size() != |E|.
  template <class Acc, class Record, class Project>
  std::vector<Acc> VertexReduce(const UndirectedGraph& g, std::span<const Record> per_edge,
                                std::string_view phase, Project&& project);

  // Generic gather over a vertex subset: out[i] = fold(vertices[i]). The
  // fold reads whatever edge data it needs; `bytes(v)` reports how many
  // record bytes it consumed for accounting.
  template <class Out, class Fold, class Bytes>
  std::vector<Out> Gather(std::span<const VertexId> vertices, std::string_view phase,
                          Fold&& fold, Bytes&& bytes);

  // Per-vertex computation with no edge traffic.
  template <class Out, class F>
  std::vector<Out> VertexMap(VertexId vertex_count, std::string_view phase, F&& f);

  void AddPhase(PhaseStats stats);
  const std::vector<PhaseStats>& phases() const noexcept { return phases_; }
  void ClearPhases() { phases_.clear(); }

 private:
  class Timer {
   public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
      return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
          .count();
    }

   private:
    std::chrono::steady_clock::time_point start_;
  };

  unsigned workers_;
  std::vector<PhaseStats> phases_;
};

// ---------------------------------------------------------------------------

template <class Body>
std::uint64_t Engine::ParallelFor(std::size_t n, Body&& body, std::size_t grain) const {
  using Result = std::invoke_result_t<Body&, std::size_t, std::size_t>;
  constexpr bool kSums = std::is_integral_v<Result>;
  if (n == 0) return 0;
  if (grain == 0) grain = std::max<std::size_t>(256, n / (std::size_t{workers_} * 16) + 1);
  const std::size_t chunks = (n + grain - 1) / grain;
  const std::size_t threads = std::min<std::size_t>(workers_, chunks);

  auto run_chunk = [&](std::size_t c) -> std::uint64_t {
    const std::size_t begin = c * grain;
    const std::size_t end = std::min(n, begin + grain);
    if constexpr (kSums) {
      return static_cast<std::uint64_t>(body(begin, end));
    } else {
      body(begin, end);
      return 0;
    }
  };

  if (threads <= 1) {
    std::uint64_t total = 0;
    for (std::size_t c = 0; c < chunks; ++c) total += run_chunk(c);
    return total;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> total{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    std::uint64_t local = 0;
    try {
      for (std::size_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) {
        local += run_chunk(c);
      }
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
      next.store(chunks);
    }
    total.fetch_add(local);
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads - 1);
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);
  return total.load();
}

template <class Record, class F>
std::vector<Record> Engine::EdgeMap(const UndirectedGraph& g, std::string_view phase,
                                    F&& f) {
  return EdgeMap<Record>(g, phase, std::forward<F>(f),
                         [](const Record&) { return sizeof(Record); });
}

template <class Record, class F, class Bytes>
std::vector<Record> Engine::EdgeMap(const UndirectedGraph& g, std::string_view phase, F&& f,
                                    Bytes&& record_bytes) {
  Timer timer;
  std::vector<Record> out(g.edge_count());
  const std::uint64_t bytes = ParallelFor(g.edge_count(), [&](std::size_t b, std::size_t e) {
    std::uint64_t sent = 0;
    for (std::size_t i = b; i < e; ++i) {
      out[i] = f(g.edge(i));
      sent += record_bytes(out[i]);
    }
    return sent;
  });
  AddPhase(PhaseStats{std::string(phase), timer.seconds(), bytes, 0, workers_});
  return out;
}

template <class Acc, class Rec, class Project>
std::vector<Acc> Engine::VertexReduce(const UndirectedGraph& g, std::span<const Rec> per_edge,
                                      std::string_view phase, Project&& project) {
  if (per_edge.size() != g.edge_count()) {
    throw UsageError("per-edge record array has " + std::to_string(per_edge.size()) +
                     " entries for a graph with " + std::to_string(g.edge_count()) +
                     " edges");
  }
  Timer timer;
  std::vector<Acc> out(g.vertex_count());
  ParallelFor(g.vertex_count(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      const auto v = static_cast<VertexId>(i);
      const auto nbrs = g.neighbors(v);
      const auto edges = g.incident_edges(v);
      Acc acc{};
      for (std::size_t k = 0; k < nbrs.size(); ++k) acc += project(v, nbrs[k], per_edge[edges[k]]);
      out[i] = acc;
    }
  });
  const std::uint64_t gathered = 2 * g.edge_count() * sizeof(Rec);
  AddPhase(PhaseStats{std::string(phase), timer.seconds(), 0, gathered, workers_});
  return out;
}

template <class Out, class Fold, class Bytes>
std::vector<Out> Engine::Gather(std::span<const VertexId> vertices, std::string_view phase,
                                Fold&& fold, Bytes&& bytes) {
  Timer timer;
  std::vector<Out> out(vertices.size());
  const std::uint64_t gathered = ParallelFor(
      vertices.size(),
      [&](std::size_t b, std::size_t e) {
        std::uint64_t received = 0;
        for (std::size_t i = b; i < e; ++i) {
          out[i] = fold(vertices[i]);
          received += bytes(vertices[i]);
        }
        return received;
      },
      16);
  AddPhase(PhaseStats{std::string(phase), timer.seconds(), 0, gathered, workers_});
  return out;
}

template <class Out, class F>
std::vector<Out> Engine::VertexMap(VertexId vertex_count, std::string_view phase, F&& f) {
  Timer timer;
  std::vector<Out> out(vertex_count);
  ParallelFor(vertex_count, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) out[i] = f(static_cast<VertexId>(i));
  });
  AddPhase(PhaseStats{std::string(phase), timer.seconds(), 0, 0, workers_});
  return out;
}

}  // namespace triprof
