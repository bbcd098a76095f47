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

#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "triprof/error.hpp"
#include "triprof/local_profile.hpp"
#include "triprof/oracle.hpp"
#include "triprof/theory.hpp"

namespace triprof {
namespace {

EdgeExtremes BruteExtremes(const UndirectedGraph& g) {
  const auto n = g.vertex_count();
  EdgeExtremes x;
  for (EdgeIndex i = 0; i < g.edge_count(); ++i) {
    const EdgeRef e = g.edge(i);
    std::uint64_t iso = 0, wedges = 0, tri = 0;
    for (VertexId z = 0; z < n; ++z) {
      if (z == e.u || z == e.w) continue;
      const int links = g.has_edge(e.u, z) + g.has_edge(e.w, z);
      iso += links == 0;
      wedges += links == 1;
      tri += links == 2;
    }
    x.alpha = std::max(x.alpha, iso);
    x.beta = std::max(x.beta, wedges);
    x.delta = std::max(x.delta, tri);
  }
  return x;
}

TEST(EdgeExtremes, Examples) {
  Engine engine(2);
  EXPECT_EQ(ComputeEdgeExtremes(testing::Complete(4), engine), (EdgeExtremes{0, 0, 2}));
  EXPECT_EQ(ComputeEdgeExtremes(testing::Cycle(5), engine), (EdgeExtremes{1, 2, 0}));
  EXPECT_EQ(ComputeEdgeExtremes(testing::Star(3), engine), (EdgeExtremes{0, 2, 0}));
  EXPECT_THROW(ComputeEdgeExtremes(testing::Empty(4), engine), UsageError);
}

TEST(EdgeExtremes, MatchesBruteForceAndBounds) {
  Engine engine(2);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = testing::ErdosRenyi(8 + seed, 0.1 + 0.02 * static_cast<double>(seed), seed);
    if (g.edge_count() == 0) continue;
    const auto x = ComputeEdgeExtremes(g, engine);
    EXPECT_EQ(x, BruteExtremes(g));
    EXPECT_LE(x.alpha, g.vertex_count());
    EXPECT_LE(x.beta, 2 * (g.max_degree() - 1));
    EXPECT_LE(x.delta, g.max_degree() - 1);
  }
}

TEST(KimVuConstant, Values) {
  EXPECT_DOUBLE_EQ(KimVuConstant(1), 8.0);
  EXPECT_DOUBLE_EQ(KimVuConstant(2), 64.0 * std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(KimVuConstant(3), 512.0 * std::sqrt(6.0));
}

TheoremReport CheckC5(TheoremInputs in) {
  Engine engine(1);
  const auto c5 = testing::Cycle(5);
  return CheckTheoremConditions(ComputeGlobalProfile(c5, engine), ComputeEdgeExtremes(c5, engine),
                                c5.edge_count(), in);
}

TEST(TheoremConditions, CycleIsInfeasibleWithDiagnostics) {
  const auto r = CheckC5({0.5, 0.1, 1.0});
  EXPECT_FALSE(r.feasible);
  EXPECT_EQ(r.conditions[0].name, "empty");
  // n0 = 0 gives a zero left side; n3 = 0 makes the triangle condition vacuous.
  ASSERT_TRUE(r.conditions[0].lhs.has_value());
  EXPECT_EQ(*r.conditions[0].lhs, 0.0);
  EXPECT_FALSE(r.conditions[1].lhs.has_value());
  EXPECT_FALSE(r.conditions[1].satisfied);
  EXPECT_NE(r.conditions[1].diagnostic.find("n3"), std::string::npos);
  ASSERT_TRUE(r.conditions[2].lhs.has_value());
  EXPECT_DOUBLE_EQ(*r.conditions[2].lhs, 0.5 / (1.0 / 5.0));
  ASSERT_TRUE(r.conditions[3].lhs.has_value());
  EXPECT_DOUBLE_EQ(*r.conditions[3].lhs, 0.5 / std::max(2.0 / 5.0, 1.0 / std::sqrt(5.0)));
  const double log_m = std::log(5.0);
  EXPECT_DOUBLE_EQ(r.conditions[2].rhs, 64.0 * std::pow(log_m, 2) / 0.01);
  EXPECT_DOUBLE_EQ(r.conditions[3].rhs, 8192.0 * std::pow(2 * log_m, 4) / 0.01);
  EXPECT_DOUBLE_EQ(r.conditions[0].rhs, 512.0 * 512.0 * 6.0 * std::pow(3 * log_m, 6) / 0.01);
  EXPECT_DOUBLE_EQ(r.error_bound, 12 * 0.1 * 10);
  EXPECT_DOUBLE_EQ(r.confidence, 1.0 - 1.0 / 5.0);
}

TEST(TheoremConditions, DoublingEpsilonQuartersEveryRightSide) {
  for (auto form : {ConditionForm::kFinal, ConditionForm::kPreFinal}) {
    const auto a = CheckC5({0.5, 0.1, 1.0, LogBase::kNatural, form});
    const auto b = CheckC5({0.5, 0.2, 1.0, LogBase::kNatural, form});
    for (int i = 0; i < 4; ++i) EXPECT_EQ(b.conditions[i].rhs, a.conditions[i].rhs / 4);
  }
}

TEST(TheoremConditions, FeasibleOnDenseGraphWithHugeEpsilon) {
  Engine engine(2);
  const auto g = testing::ErdosRenyi(200, 0.5, 3);
  const auto r = CheckTheoremConditions(ComputeGlobalProfile(g, engine), ComputeEdgeExtremes(g, engine),
                                        g.edge_count(), {1.0, 1e8, 1.0});
  EXPECT_TRUE(r.feasible);
  EXPECT_DOUBLE_EQ(r.error_bound, 12 * 1e8 * to_double(choose3(200)));
  EXPECT_DOUBLE_EQ(r.confidence, 1.0 - 1.0 / static_cast<double>(g.edge_count()));
  EXPECT_DOUBLE_EQ(r.a[0], 8.0);
}

TEST(TheoremConditions, BaseTwoShrinksLogTerms) {
  const auto e = CheckC5({0.5, 0.1, 1.0, LogBase::kNatural});
  const auto two = CheckC5({0.5, 0.1, 1.0, LogBase::kTwo});
  const double ratio = std::log2(5.0) / std::log(5.0);
  EXPECT_NEAR(two.conditions[2].rhs / e.conditions[2].rhs, ratio * ratio, 1e-12);
}

TEST(TheoremConditions, PreFinalFormVacuousWhenTrianglesAbsent) {
  const auto r = CheckC5({0.5, 0.1, 1.0, LogBase::kNatural, ConditionForm::kPreFinal});
  EXPECT_FALSE(r.conditions[2].lhs.has_value());
  EXPECT_FALSE(r.conditions[3].lhs.has_value());
}

TEST(TheoremConditions, PreFinalDenominatorsOnTriangleRichGraph) {
  Engine engine(1);
  const auto g = testing::ErdosRenyi(30, 0.4, 8);
  const auto prof = ComputeGlobalProfile(g, engine);
  const auto x = ComputeEdgeExtremes(g, engine);
  const auto r = CheckTheoremConditions(prof, x, g.edge_count(),
                                        {0.5, 0.1, 1.0, LogBase::kNatural, ConditionForm::kPreFinal});
  const double n1 = to_double(prof[1]), n2 = to_double(prof[2]), n3 = to_double(prof[3]);
  const double d3 = std::max({x.alpha / n1, x.beta / (2 * n2), x.delta / (3 * n3)});
  EXPECT_DOUBLE_EQ(*r.conditions[2].lhs, 0.5 / d3);
  const double d4 = std::max({x.beta / n2, 2 * x.delta / (3 * n3), 1 / std::sqrt(n2), 1 / std::sqrt(n3)});
  EXPECT_DOUBLE_EQ(*r.conditions[3].lhs, 0.5 / d4);
}

TEST(TheoremConditions, NoSharedSubgraphsMakesEmptyConditionUnbounded) {
  // A perfect matching on 2 vertices: α = β = Δ = 0.
  const auto r = CheckTheoremConditions(ExactProfile{{0, 0, 0, 0}}, EdgeExtremes{}, 1, {0.5, 0.1, 1.0});
  EXPECT_TRUE(r.conditions[0].satisfied);
  EXPECT_FALSE(r.conditions[0].lhs.has_value());
  EXPECT_FALSE(r.conditions[0].diagnostic.empty());
}

TEST(TheoremConditions, InvalidInputs) {
  const ExactProfile n{{1, 1, 1, 1}};
  EXPECT_THROW(CheckTheoremConditions(n, {}, 3, {0.0, 0.1, 1.0}), UsageError);
  EXPECT_THROW(CheckTheoremConditions(n, {}, 3, {1.1, 0.1, 1.0}), UsageError);
  EXPECT_THROW(CheckTheoremConditions(n, {}, 3, {0.5, 0.0, 1.0}), UsageError);
  EXPECT_THROW(CheckTheoremConditions(n, {}, 3, {0.5, 0.1, -1.0}), UsageError);
  EXPECT_THROW(CheckTheoremConditions(n, {}, 0, {0.5, 0.1, 1.0}), UsageError);
}

TEST(Polynomials, AllKeptAndNoneKept) {
  Engine engine(1);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = testing::ErdosRenyi(25, 0.3, seed);
    const auto n = ComputeGlobalProfile(g, engine);
    const auto all = EvaluatePolynomials(g, SampleMask(g.edge_count(), 1));
    EXPECT_EQ(all.sampled_profile(), n);
    EXPECT_EQ(all.s1, n[1]);
    EXPECT_EQ(all.d1, 2 * n[2]);
    EXPECT_EQ(all.d2, n[2]);
    EXPECT_EQ(all.t1, 3 * n[3]);
    EXPECT_EQ(all.t2, 3 * n[3]);
    const auto none = EvaluatePolynomials(g, SampleMask(g.edge_count(), 0));
    PolynomialValues expect;
    expect.y0 = choose3(g.vertex_count());
    EXPECT_EQ(none, expect);
  }
}

TEST(Polynomials, IdentitiesAndPipelineAgreement) {
  Engine engine(2);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<VertexId>(3 + trial % 40);
    const auto g = testing::ErdosRenyi(n, 0.05 + 0.9 * (trial % 10) / 10.0, rng());
    const SampleParams params{0.1 + 0.8 * ((trial * 7) % 10) / 10.0, rng()};
    const auto s = SampleEdges(g, params, engine);
    const auto pv = EvaluatePolynomials(g, s.mask);
    ASSERT_EQ(pv.y1_residual(), 0);
    ASSERT_EQ(pv.y2_residual(), 0);
    ASSERT_EQ(pv.sampled_profile(), ComputeGlobalProfile(s.graph, engine));
    ASSERT_EQ(pv.sampled_profile().total(), choose3(n));
  }
}

TEST(Polynomials, MaskLengthMismatch) {
  EXPECT_THROW(EvaluatePolynomials(testing::Cycle(5), SampleMask(3, 1)), UsageError);
}

TEST(Polynomials, PathTripleCount) {
  EXPECT_EQ(PathTripleCount(testing::Complete(4)), 12u);
  EXPECT_EQ(PathTripleCount(testing::Star(3)), 3u);
  EXPECT_EQ(PathTripleCount(testing::Empty(3)), 0u);
}

TEST(Polynomials, MonteCarloExpectationsOnCycle) {
  Engine engine(1);
  const auto c5 = testing::Cycle(5);
  const double p = 0.5, n1 = 5, n2 = 5, n3 = 0;
  std::array<std::vector<double>, 5> xs;
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    const auto pv = EvaluatePolynomials(c5, SampleEdges(c5, {p, seed}, engine).mask);
    const Wide vals[5] = {pv.s1, pv.d1, pv.d2, pv.t1, pv.t2};
    for (int i = 0; i < 5; ++i) xs[i].push_back(to_double(vals[i]));
  }
  const double expect[5] = {p * n1, 2 * p * n2, p * p * n2, 3 * p * n3, 3 * p * p * n3};
  for (int i = 0; i < 5; ++i) {
    const double mean = std::accumulate(xs[i].begin(), xs[i].end(), 0.0) / 2000;
    double ss = 0;
    for (double x : xs[i]) ss += (x - mean) * (x - mean);
    const double se = std::sqrt(ss / 1999) / std::sqrt(2000.0);
    EXPECT_LE(std::abs(mean - expect[i]), 4 * se + 1e-12) << "polynomial " << i;
  }
}

}  // namespace
}  // namespace triprof
