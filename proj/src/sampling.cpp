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

#include "triprof/sampling.hpp"

#include <cmath>
#include <string>

#include "triprof/error.hpp"

namespace triprof {
namespace {

// SplitMix64 finalizer.
constexpr std::uint64_t Mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void CheckProbability(double p) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw UsageError("sampling probability must lie in (0, 1], got " + std::to_string(p));
  }
}

}  // namespace

void Validate(const SampleParams& params) { CheckProbability(params.p); }

double EdgeUniform(std::uint64_t seed, EdgeIndex index) {
  const std::uint64_t bits = Mix(Mix(seed + 0x9e3779b97f4a7c15ULL) ^ (index * 0xd1b54a32d192ed03ULL));
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

UndirectedGraph ApplyMask(const UndirectedGraph& g, const SampleMask& mask) {
  if (mask.size() != g.edge_count()) {
    throw UsageError("sample mask length " + std::to_string(mask.size()) +
                     " does not match edge count " + std::to_string(g.edge_count()));
  }
  std::vector<std::pair<VertexId, VertexId>> kept;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (mask[e]) {
      const EdgeRef ref = g.edge(e);
      kept.emplace_back(ref.u, ref.w);
    }
  }
  return UndirectedGraph::FromEdges(g.vertex_count(), std::move(kept), g.labels());
}

SampledGraph SampleEdges(const UndirectedGraph& g, const SampleParams& params, Engine& engine) {
  Validate(params);
  SampledGraph out;
  out.mask = engine.EdgeMap<std::uint8_t>(
      g, "sample_edges",
      [&](const EdgeRef& e) { return static_cast<std::uint8_t>(KeepEdge(params, e.index)); },
      [](std::uint8_t) { return 0; });
  out.graph = ApplyMask(g, out.mask);
  return out;
}

TransitionMatrix MakeTransitionMatrix(double p) {
  CheckProbability(p);
  const double q = 1.0 - p;
  TransitionMatrix t;
  t.m[0] = {1.0, q, q * q, q * q * q};
  t.m[1] = {0.0, p, 2 * p * q, 3 * p * q * q};
  t.m[2] = {0.0, 0.0, p * p, 3 * p * p * q};
  t.m[3] = {0.0, 0.0, 0.0, p * p * p};
  return t;
}

namespace {

Estimate Invert(const std::array<long double, 4>& y, double p) {
  CheckProbability(p);
  const long double pl = p;
  const long double q = 1.0L - pl;
  const long double p2 = pl * pl;
  const long double p3 = p2 * pl;
  const long double y0 = y[0], y1 = y[1], y2 = y[2], y3 = y[3];

  const long double x3 = y3 / p3;
  const long double x2 = y2 / p2 - 3.0L * q * y3 / p3;
  const long double x1 = y1 / pl - 2.0L * q * y2 / p2 + 3.0L * q * q * y3 / p3;
  // Algebraically y0 − (q/p)y1 + (q/p)²y2 − (q/p)³y3; taking it as the
  // remainder keeps Σ X_i = Σ y_i up to a single rounding.
  const long double x0 = (y0 + y1 + y2 + y3) - x1 - x2 - x3;
  return Estimate{{static_cast<double>(x0), static_cast<double>(x1), static_cast<double>(x2),
                   static_cast<double>(x3)}};
}

}  // namespace

Estimate UnbiasedEstimate(const Estimate& y, double p) {
  return Invert({y[0], y[1], y[2], y[3]}, p);
}

Estimate UnbiasedEstimate(const ExactProfile& y, double p) {
  return Invert({static_cast<long double>(y[0]), static_cast<long double>(y[1]),
                 static_cast<long double>(y[2]), static_cast<long double>(y[3])},
                p);
}

Estimate ExpectedSampledProfile(const Estimate& n, double p) {
  const TransitionMatrix t = MakeTransitionMatrix(p);
  Estimate out;
  for (std::size_t row = 0; row < 4; ++row) {
    long double acc = 0;
    for (std::size_t col = 0; col < 4; ++col) acc += static_cast<long double>(t.m[row][col]) * n[col];
    out[row] = static_cast<double>(acc);
  }
  return out;
}

Estimate ExpectedSampledProfile(const ExactProfile& n, double p) {
  return ExpectedSampledProfile(to_estimate(n), p);
}

}  // namespace triprof
