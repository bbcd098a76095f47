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

#include "triprof/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "triprof/error.hpp"
#include "triprof/local_profile.hpp"

namespace triprof {

EdgeExtremes ComputeEdgeExtremes(const UndirectedGraph& g, Engine& engine) {
  if (g.edge_count() == 0) throw UsageError("edge extremes need at least one edge");
  EdgeExtremes x;
  for (const EdgeScalars& s : ScatterEdgeScalars(g, engine)) {
    x.alpha = std::max<std::uint64_t>(x.alpha, s.iso);
    x.beta = std::max<std::uint64_t>(x.beta, std::uint64_t{s.wedge_at_u} + s.wedge_at_w);
    x.delta = std::max<std::uint64_t>(x.delta, s.tri);
  }
  return x;
}

double KimVuConstant(int k) {
  double factorial = 1.0;
  for (int i = 2; i <= k; ++i) factorial *= i;
  return std::pow(8.0, k) * std::sqrt(factorial);
}

namespace {

ConditionCheck Vacuous(std::string name, double rhs, const char* zero_count) {
  ConditionCheck c;
  c.name = std::move(name);
  c.rhs = rhs;
  c.satisfied = false;
  c.diagnostic = std::string(zero_count) +
                 " = 0 puts a zero count in a denominator; the condition cannot hold";
  return c;
}

ConditionCheck Compare(std::string name, double numerator, double denominator, double rhs) {
  ConditionCheck c;
  c.name = std::move(name);
  c.rhs = rhs;
  if (denominator == 0.0) {
    c.satisfied = true;
    c.diagnostic = "denominator is zero; left side unbounded";
    return c;
  }
  c.lhs = numerator / denominator;
  c.satisfied = *c.lhs >= c.rhs;
  return c;
}

}  // namespace

TheoremReport CheckTheoremConditions(const ExactProfile& profile, const EdgeExtremes& extremes,
                                     std::uint64_t edge_count, const TheoremInputs& in) {
  if (!(in.p > 0.0 && in.p <= 1.0)) throw UsageError("p must lie in (0, 1]");
  if (!(in.epsilon > 0.0)) throw UsageError("epsilon must be positive");
  if (!(in.gamma > 0.0)) throw UsageError("gamma must be positive");
  if (edge_count == 0) throw UsageError("theorem conditions need at least one edge");

  TheoremReport r;
  r.p = in.p;
  r.epsilon = in.epsilon;
  r.gamma = in.gamma;
  r.log_base = in.log_base;
  r.form = in.form;
  r.a = {KimVuConstant(1), KimVuConstant(2), KimVuConstant(3)};

  const double m = static_cast<double>(edge_count);
  const double log_m = in.log_base == LogBase::kTwo ? std::log2(m) : std::log(m);
  const double eps2 = in.epsilon * in.epsilon;
  // log^k(m^e) read as (e · log m)^k.
  const double rhs_cubic = r.a[2] * r.a[2] * std::pow((2.0 + in.gamma) * log_m, 6) / eps2;
  const double rhs_linear = r.a[0] * r.a[0] * std::pow(in.gamma * log_m, 2) / eps2;
  const double rhs_quadratic = r.a[1] * r.a[1] * std::pow((1.0 + in.gamma) * log_m, 4) / eps2;

  const double n0 = to_double(profile[0]);
  const double n1 = to_double(profile[1]);
  const double n2 = to_double(profile[2]);
  const double n3 = to_double(profile[3]);
  const auto alpha = static_cast<double>(extremes.alpha);
  const auto beta = static_cast<double>(extremes.beta);
  const auto delta = static_cast<double>(extremes.delta);

  r.conditions[0] = Compare("empty", n0, 3.0 * std::max({alpha, beta, delta}), rhs_cubic);

  r.conditions[1] = n3 == 0.0 ? Vacuous("triangle", rhs_cubic, "n3")
                              : Compare("triangle", in.p,
                                        std::max(1.0 / std::cbrt(n3), delta / n3), rhs_cubic);

  if (in.form == ConditionForm::kFinal) {
    r.conditions[2] = n1 == 0.0 ? Vacuous("edge", rhs_linear, "n1")
                                : Compare("edge", in.p, alpha / n1, rhs_linear);
    r.conditions[3] =
        n2 == 0.0 ? Vacuous("wedge", rhs_quadratic, "n2")
                  : Compare("wedge", in.p, std::max(beta / n2, 1.0 / std::sqrt(n2)),
                            rhs_quadratic);
  } else {
    const char* zero_linear = n1 == 0.0 ? "n1" : n2 == 0.0 ? "n2" : n3 == 0.0 ? "n3" : nullptr;
    r.conditions[2] =
        zero_linear != nullptr
            ? Vacuous("edge", rhs_linear, zero_linear)
            : Compare("edge", in.p,
                      std::max({alpha / n1, beta / (2.0 * n2), delta / (3.0 * n3)}),
                      rhs_linear);
    const char* zero_quad = n2 == 0.0 ? "n2" : n3 == 0.0 ? "n3" : nullptr;
    r.conditions[3] =
        zero_quad != nullptr
            ? Vacuous("wedge", rhs_quadratic, zero_quad)
            : Compare("wedge", in.p,
                      std::max({beta / n2, 2.0 * delta / (3.0 * n3), 1.0 / std::sqrt(n2),
                                1.0 / std::sqrt(n3)}),
                      rhs_quadratic);
  }

  r.feasible = std::all_of(r.conditions.begin(), r.conditions.end(),
                           [](const ConditionCheck& c) { return c.satisfied; });
  r.error_bound = 12.0 * in.epsilon * to_double(profile.total());
  r.confidence = 1.0 - std::pow(m, -in.gamma);
  return r;
}

std::uint64_t PathTripleCount(const UndirectedGraph& g) {
  std::uint64_t total = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::uint64_t d = g.degree(v);
    total += d * (d - (d > 0 ? 1 : 0)) / 2;
  }
  return total;
}

PolynomialValues EvaluatePolynomials(const UndirectedGraph& g, const SampleMask& mask) {
  if (mask.size() != g.edge_count()) {
    throw UsageError("sample mask length " + std::to_string(mask.size()) +
                     " does not match edge count " + std::to_string(g.edge_count()));
  }
  PolynomialValues pv;
  Wide n1 = 0, n2 = 0, n3 = 0;
  auto t = [&](EdgeIndex e) -> Wide { return mask[e] ? 1 : 0; };

  // H1: edge e plus a vertex adjacent to neither endpoint.
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const EdgeRef ref = g.edge(e);
    const Wide shared = static_cast<Wide>(CommonNeighbors(g, ref.u, ref.w).size());
    const Wide iso = Wide{g.vertex_count()} -
                     (Wide(g.degree(ref.u)) + Wide(g.degree(ref.w)) - shared);
    n1 += iso;
    pv.s1 += iso * t(e);
    pv.y1 += iso * t(e);
    pv.y0 += iso * (1 - t(e));
  }

  // Wedges Λ(e, f): center c, open pair {a, b} of its neighbors.
  for (VertexId c = 0; c < g.vertex_count(); ++c) {
    const auto nbrs = g.neighbors(c);
    const auto edges = g.incident_edges(c);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        if (g.has_edge(nbrs[i], nbrs[j])) continue;
        const Wide te = t(edges[i]);
        const Wide tf = t(edges[j]);
        ++n2;
        pv.d1 += te + tf;
        pv.d2 += te * tf;
        pv.y0 += (1 - te) * (1 - tf);
        pv.y1 += te * (1 - tf) + (1 - te) * tf;
        pv.y2 += te * tf;
      }
    }
  }

  // Triangles Δ(e, f, g), each once via its lowest edge u < w < x.
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const EdgeRef ref = g.edge(e);
    for (VertexId x : CommonNeighbors(g, ref.u, ref.w)) {
      if (x <= ref.w) continue;
      const Wide te = t(e);
      const Wide tf = t(*g.find_edge(ref.u, x));
      const Wide tg = t(*g.find_edge(ref.w, x));
      ++n3;
      pv.t1 += te + tf + tg;
      pv.t2 += te * tf + tf * tg + tg * te;
      pv.y3 += te * tf * tg;
      pv.y0 += (1 - te) * (1 - tf) * (1 - tg);
      pv.y1 += te * (1 - tf) * (1 - tg) + tf * (1 - te) * (1 - tg) + tg * (1 - te) * (1 - tf);
      pv.y2 += te * tf * (1 - tg) + tf * tg * (1 - te) + te * (1 - tf) * tg;
    }
  }

  pv.y0 += choose3(g.vertex_count()) - n1 - n2 - n3;
  return pv;
}

}  // namespace triprof
