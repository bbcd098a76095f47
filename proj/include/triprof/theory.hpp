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

// Computable pieces of the sparsifier concentration analysis: per-edge
// extremes, the four sufficient conditions on (p, ε), and the sampled-profile
// polynomials in the edge indicators t_e with their decompositions into
// totally positive parts.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "triprof/engine.hpp"
#include "triprof/graph.hpp"
#include "triprof/profile.hpp"
#include "triprof/sampling.hpp"

namespace triprof {

// Largest number of H1s, wedges, and triangles sharing a single edge.
struct EdgeExtremes {
  std::uint64_t alpha = 0;
  std::uint64_t beta = 0;
  std::uint64_t delta = 0;
  friend bool operator==(const EdgeExtremes&, const EdgeExtremes&) = default;
};

// Throws UsageError on a graph without edges.
EdgeExtremes ComputeEdgeExtremes(const UndirectedGraph& g, Engine& engine);

enum class LogBase { kNatural, kTwo };

enum class ConditionForm {
  kFinal,     // the simplified four conditions stated with the theorem
  kPreFinal,  // the form before dropping the redundant max terms
};

struct TheoremInputs {
  double p = 1.0;
  double epsilon = 0.1;
  double gamma = 1.0;
  LogBase log_base = LogBase::kNatural;
  ConditionForm form = ConditionForm::kFinal;
};

struct ConditionCheck {
  std::string name;
  // Left side; empty when a zero count makes the condition vacuous.
  std::optional<double> lhs;
  double rhs = 0.0;
  bool satisfied = false;
  std::string diagnostic;
};

struct TheoremReport {
  std::array<ConditionCheck, 4> conditions;
  bool feasible = false;
  double p = 0.0;
  double epsilon = 0.0;
  double gamma = 0.0;
  LogBase log_base = LogBase::kNatural;
  ConditionForm form = ConditionForm::kFinal;
  double error_bound = 0.0;  // 12 ε C(|V|,3), on ‖X − n‖∞
  double confidence = 0.0;   // 1 − 1/m^γ
  std::array<double, 3> a{};  // a_k = 8^k √(k!)
};

double KimVuConstant(int k);

// Throws UsageError unless 0 < p <= 1, ε > 0, γ > 0.
TheoremReport CheckTheoremConditions(const ExactProfile& profile, const EdgeExtremes& extremes,
                                     std::uint64_t edge_count, const TheoremInputs& inputs);

struct PolynomialValues {
  Wide y0 = 0, y1 = 0, y2 = 0, y3 = 0;
  Wide s1 = 0, d1 = 0, d2 = 0, t1 = 0, t2 = 0;

  // Y1 − (S1 + D1 − 2D2 + T1 − 2T2 + 3Y3); zero for every mask.
  Wide y1_residual() const { return y1 - (s1 + d1 - 2 * d2 + t1 - 2 * t2 + 3 * y3); }
  // Y2 − (D2 + T2 − 3Y3); zero for every mask.
  Wide y2_residual() const { return y2 - (d2 + t2 - 3 * y3); }
  ExactProfile sampled_profile() const { return ExactProfile{{y0, y1, y2, y3}}; }
  friend bool operator==(const PolynomialValues&, const PolynomialValues&) = default;
};

// Σ_v C(deg v, 2): wedges plus three per triangle. Bounds the enumeration cost
// of EvaluatePolynomials.
std::uint64_t PathTripleCount(const UndirectedGraph& g);

// Evaluates every polynomial on `mask` by enumerating the H1s, wedges, and
// triangles of the original graph. Desk-scale only. Throws UsageError when
// the mask length differs from |E|.
PolynomialValues EvaluatePolynomials(const UndirectedGraph& g, const SampleMask& mask);

}  // namespace triprof
