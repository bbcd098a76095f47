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

#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "triprof/engine.hpp"
#include "triprof/error.hpp"

namespace triprof {
namespace {

TEST(Engine, ZeroWorkersRejected) { EXPECT_THROW(Engine(0), UsageError); }

TEST(EdgeMap, ConstantOverCycle) {
  Engine engine(3);
  const auto out = engine.EdgeMap<int>(testing::Cycle(5), "ones", [](const EdgeRef&) { return 1; });
  EXPECT_EQ(out, std::vector<int>(5, 1));
  ASSERT_EQ(engine.phases().size(), 1u);
  EXPECT_EQ(engine.phases()[0].name, "ones");
  EXPECT_EQ(engine.phases()[0].bytes_scattered, 5 * sizeof(int));
  EXPECT_EQ(engine.phases()[0].workers, 3u);
}

TEST(EdgeMap, TriangleCountOnK4) {
  const auto k4 = testing::Complete(4);
  Engine engine(2);
  const auto out = engine.EdgeMap<std::size_t>(
      k4, "tri", [&](const EdgeRef& e) { return CommonNeighbors(k4, e.u, e.w).size(); });
  EXPECT_EQ(out, std::vector<std::size_t>(6, 2));
}

TEST(EdgeMap, IdenticalAcrossWorkerCounts) {
  const auto g = testing::ErdosRenyi(400, 0.05, 1);
  auto run = [&](unsigned workers) {
    Engine engine(workers);
    auto out = engine.EdgeMap<std::uint64_t>(
        g, "mix", [](const EdgeRef& e) { return e.u * 1000003ULL + e.w; });
    return std::pair(out, engine.phases()[0].bytes_scattered);
  };
  const auto one = run(1);
  EXPECT_EQ(run(8), one);
  EXPECT_EQ(run(3), one);
}

TEST(EdgeMap, PropagatesExceptions) {
  Engine engine(4);
  const auto g = testing::ErdosRenyi(300, 0.1, 2);
  EXPECT_THROW(engine.EdgeMap<int>(g, "boom",
                                   [](const EdgeRef& e) -> int {
                                     if (e.index == 777) throw std::runtime_error("boom");
                                     return 0;
                                   }),
               std::runtime_error);
}

TEST(VertexReduce, OnesGiveDegrees) {
  Engine engine(2);
  const auto c5 = testing::Cycle(5);
  const std::vector<std::uint64_t> ones(c5.edge_count(), 1);
  auto count = [](VertexId, VertexId, std::uint64_t r) { return r; };
  EXPECT_EQ(engine.VertexReduce<std::uint64_t>(c5, std::span(ones), "deg", count),
            std::vector<std::uint64_t>(5, 2));

  const auto star = testing::Star(3);
  const std::vector<std::uint64_t> star_ones(star.edge_count(), 1);
  EXPECT_EQ(engine.VertexReduce<std::uint64_t>(star, std::span(star_ones), "deg", count),
            (std::vector<std::uint64_t>{3, 1, 1, 1}));
}

TEST(VertexReduce, LengthMismatchIsUsageError) {
  Engine engine(1);
  const std::vector<int> short_records(4, 1);
  EXPECT_THROW(engine.VertexReduce<int>(testing::Cycle(5), std::span(short_records), "bad",
                                        [](VertexId, VertexId, int r) { return r; }),
               UsageError);
}

TEST(VertexReduce, GatheredBytesCountBothEndpoints) {
  struct Rec {
    std::uint32_t a, b, c;
  };
  Engine engine(2);
  const auto g = testing::ErdosRenyi(100, 0.1, 4);
  const std::vector<Rec> recs(g.edge_count(), Rec{1, 2, 3});
  engine.VertexReduce<std::uint64_t>(g, std::span(recs), "gather",
                                     [](VertexId, VertexId, const Rec& r) { return r.a; });
  EXPECT_EQ(engine.phases().back().bytes_gathered, 2 * g.edge_count() * 3 * sizeof(std::uint32_t));
}

TEST(VertexReduce, OrderIndependentResult) {
  const auto g = testing::ErdosRenyi(200, 0.1, 8);
  std::vector<std::int64_t> recs(g.edge_count());
  std::mt19937_64 rng(3);
  for (auto& r : recs) r = static_cast<std::int64_t>(rng() % 1000) - 500;
  auto project = [](VertexId v, VertexId o, std::int64_t r) { return v < o ? r : -r; };
  Engine serial(1);
  const auto expect = serial.VertexReduce<std::int64_t>(g, std::span<const std::int64_t>(recs), "a", project);
  for (unsigned w : {2u, 5u, 8u}) {
    Engine engine(w);
    EXPECT_EQ(engine.VertexReduce<std::int64_t>(g, std::span<const std::int64_t>(recs), "a", project), expect);
  }
}

TEST(ParallelFor, SumsIntegralResultsAndCoversRange) {
  Engine engine(4);
  std::vector<int> hit(10007, 0);
  const auto total = engine.ParallelFor(hit.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) ++hit[i];
    return e - b;
  }, 7);
  EXPECT_EQ(total, hit.size());
  EXPECT_EQ(std::accumulate(hit.begin(), hit.end(), 0), 10007);
  EXPECT_EQ(*std::min_element(hit.begin(), hit.end()), 1);
}

TEST(Gather, SubsetWithByteCount) {
  Engine engine(2);
  const std::vector<VertexId> vs{4, 1, 3};
  const auto out = engine.Gather<VertexId>(
      vs, "g", [](VertexId v) { return v * 10; }, [](VertexId v) { return v; });
  EXPECT_EQ(out, (std::vector<VertexId>{40, 10, 30}));
  EXPECT_EQ(engine.phases().back().bytes_gathered, 8u);
}

}  // namespace
}  // namespace triprof
