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

// Bernoulli edge sparsification and the estimator that undoes it.
//
// Keeping each edge with probability p moves a triple of type H_j to type H_i
// (i <= j) with a binomial probability; M(p) collects these into an
// upper-triangular column-stochastic matrix with E[Y] = M(p) n. The estimator
// applies M(p)^-1 to the sampled profile.

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "triprof/engine.hpp"
#include "triprof/graph.hpp"
#include "triprof/profile.hpp"

namespace triprof {

struct SampleParams {
  double p = 1.0;
  std::uint64_t seed = 0;
};

// Throws UsageError unless 0 < p <= 1.
void Validate(const SampleParams& params);

// t_e per edge ordinal; 1 when kept.
using SampleMask = std::vector<std::uint8_t>;

// Uniform [0,1) value for (seed, edge ordinal), independent of scheduling.
double EdgeUniform(std::uint64_t seed, EdgeIndex index);
inline bool KeepEdge(const SampleParams& params, EdgeIndex index) {
  return EdgeUniform(params.seed, index) < params.p;
}

struct SampledGraph {
  UndirectedGraph graph;  // same vertex set and labels, kept edges only
  SampleMask mask;
};

SampledGraph SampleEdges(const UndirectedGraph& g, const SampleParams& params, Engine& engine);

// Materializes the subgraph selected by an explicit mask.
UndirectedGraph ApplyMask(const UndirectedGraph& g, const SampleMask& mask);

// m[row][col]: probability that a triple of type `col` becomes type `row`.
struct TransitionMatrix {
  std::array<std::array<double, 4>, 4> m{};
};

TransitionMatrix MakeTransitionMatrix(double p);

// X = M(p)^-1 y. Entries may be negative; Σ X_i = Σ y_i. Throws UsageError
// unless 0 < p <= 1.
Estimate UnbiasedEstimate(const Estimate& sampled, double p);
Estimate UnbiasedEstimate(const ExactProfile& sampled, double p);

// M(p) n.
Estimate ExpectedSampledProfile(const Estimate& n, double p);
Estimate ExpectedSampledProfile(const ExactProfile& n, double p);

}  // namespace triprof
