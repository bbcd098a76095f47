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

#include "triprof/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include <CLI11.hpp>
#include <json.hpp>

#include "triprof/ego_profile.hpp"
#include "triprof/engine.hpp"
#include "triprof/error.hpp"
#include "triprof/graph.hpp"
#include "triprof/local_profile.hpp"
#include "triprof/oracle.hpp"
#include "triprof/sampling.hpp"
#include "triprof/simd/intersect.hpp"
#include "triprof/theory.hpp"

namespace triprof::cli {

std::array<std::optional<double>, 4> AccuracyRatio(const ExactProfile& exact,
                                                   const Estimate& estimate) {
  std::array<std::optional<double>, 4> out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (estimate[i] != 0.0) out[i] = to_double(exact[i]) / estimate[i];
  }
  return out;
}

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr const char* kEntry[4] = {"n0", "n1", "n2", "n3"};

// Output file could not be written.
class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string graph_path;
  std::int64_t vertex_count = -1;
  unsigned threads = 0;
  std::string out_path;
  bool no_timing = false;
};

struct CenterOptions {
  std::string centers_file;
  std::int64_t random = -1;
  std::uint64_t seed = 0;
  bool all = false;
  std::string table_path;
};

struct ProfileOptions {
  double p = 1.0;
  std::uint64_t seed = 0;
  std::int64_t runs = 1;
  bool compare_exact = false;
  std::string local_out;
};

struct EgoOptions {
  CenterOptions centers;
  std::string mode = "parallel";
};

struct OracleOptions {
  CenterOptions centers;
  std::string local_out;
};

struct TheoryOptions {
  double p = 0.5;
  double epsilon = 0.1;
  double gamma = 1.0;
  std::string log_base = "e";
  bool prefinal = false;
};

struct PolyOptions {
  double p = 0.5;
  std::uint64_t seed = 0;
  std::int64_t runs = 1;
  std::uint64_t wedge_budget = 50'000'000;
};

struct BenchOptions {
  std::int64_t repeats = 5;
};

Json WideJson(Wide v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return to_string(v);
}

Json ProfileJson(const ExactProfile& p) {
  Json j = Json::object();
  for (std::size_t i = 0; i < 4; ++i) j[kEntry[i]] = WideJson(p[i]);
  return j;
}

Json EstimateJson(const Estimate& p) {
  Json j = Json::object();
  for (std::size_t i = 0; i < 4; ++i) j[kEntry[i]] = p[i];
  return j;
}

Json OptionalJson(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json RatioJson(const std::array<std::optional<double>, 4>& r) {
  Json j = Json::object();
  for (std::size_t i = 0; i < 4; ++i) j[kEntry[i]] = OptionalJson(r[i]);
  return j;
}

struct Moments {
  double mean = 0.0;
  double stddev = 0.0;
};

// Sample standard deviation; zero for a single value.
Moments Summarize(const std::vector<double>& xs) {
  Moments m;
  if (xs.empty()) return m;
  m.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - m.mean) * (x - m.mean);
    m.stddev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  return m;
}

double Median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 == 1 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

std::ofstream OpenOutput(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw OutputError("cannot write " + path);
  return f;
}

class Session {
 public:
  Session(const CommonOptions& common, std::vector<std::string> args, std::string command)
      : common_(common),
        engine_(common.threads > 0 ? common.threads : DefaultWorkers()),
        start_(Clock::now()) {
    report_["command"] = std::move(command);
    Json echo = Json::array();
    for (std::size_t i = 0; i < args.size(); ++i) {
      // Worker count never changes results; keep it out of timing-free reports.
      if (common.no_timing) {
        if (args[i] == "--threads") {
          ++i;
          continue;
        }
        if (args[i].rfind("--threads=", 0) == 0) continue;
      }
      echo.push_back(args[i]);
    }
    report_["argv"] = std::move(echo);
  }

  Engine& engine() { return engine_; }
  Json& report() { return report_; }
  bool timing() const { return !common_.no_timing; }

  UndirectedGraph LoadGraph() {
    LoadOptions opts;
    if (common_.vertex_count >= 0) {
      if (common_.vertex_count > std::numeric_limits<VertexId>::max()) {
        throw UsageError("--vertex-count exceeds the supported vertex range");
      }
      opts.vertex_count = static_cast<VertexId>(common_.vertex_count);
    }
    UndirectedGraph g = LoadEdgeListFile(common_.graph_path, opts);
    report_["graph"] = {{"path", common_.graph_path},
                        {"vertices", g.vertex_count()},
                        {"edges", g.edge_count()},
                        {"max_degree", g.max_degree()}};
    return g;
  }

  void Warn(std::string message) { warnings_.push_back(std::move(message)); }

  void Finish(std::ostream& out, bool with_phases = true) {
    report_["warnings"] = warnings_;
    if (with_phases) {
      Json phases = Json::array();
      for (const PhaseStats& s : engine_.phases()) {
        Json p = {{"name", s.name}};
        if (timing()) p["seconds"] = s.seconds;
        p["bytes_scattered"] = s.bytes_scattered;
        p["bytes_gathered"] = s.bytes_gathered;
        if (timing()) p["workers"] = s.workers;
        phases.push_back(std::move(p));
      }
      report_["phases"] = std::move(phases);
    }
    if (timing()) {
      report_["workers"] = engine_.workers();
      report_["simd"] = std::string(simd::IsaName(simd::ActiveIsa()));
      report_["wall_seconds"] = std::chrono::duration<double>(Clock::now() - start_).count();
    }
    const std::string text = report_.dump(2) + "\n";
    if (common_.out_path.empty()) {
      out << text;
    } else {
      auto f = OpenOutput(common_.out_path);
      f << text;
      if (!f) throw OutputError("cannot write " + common_.out_path);
    }
  }

 private:
  const CommonOptions& common_;
  Engine engine_;
  Clock::time_point start_;
  Json report_ = Json::object();
  Json warnings_ = Json::array();
};

void WriteLocalTsv(const std::string& path, const UndirectedGraph& g,
                   const std::vector<LocalProfile>& locals) {
  auto f = OpenOutput(path);
  f << "vertex\tn0\tn1_e\tn1_d\tn2_e\tn2_c\tn3\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const LocalProfile& p = locals[v];
    f << g.label(v) << '\t' << p.n0 << '\t' << p.n1_e << '\t' << p.n1_d << '\t' << p.n2_e
      << '\t' << p.n2_c << '\t' << p.n3 << '\n';
  }
  if (!f) throw OutputError("cannot write " + path);
}

std::vector<VertexId> SelectCenters(const UndirectedGraph& g, const CenterOptions& o) {
  const int chosen = !o.centers_file.empty() + (o.random >= 0) + o.all;
  if (chosen != 1) throw UsageError("choose exactly one of --centers, --random, --all");
  std::vector<VertexId> centers;
  if (o.all) {
    centers.resize(g.vertex_count());
    std::iota(centers.begin(), centers.end(), VertexId{0});
  } else if (o.random >= 0) {
    if (static_cast<std::uint64_t>(o.random) > g.vertex_count()) {
      throw UsageError("--random " + std::to_string(o.random) + " exceeds the vertex count " +
                       std::to_string(g.vertex_count()));
    }
    std::vector<VertexId> all(g.vertex_count());
    std::iota(all.begin(), all.end(), VertexId{0});
    std::mt19937_64 rng(o.seed);
    std::sample(all.begin(), all.end(), std::back_inserter(centers), o.random, rng);
  } else {
    std::unordered_map<std::string, VertexId> ids;
    for (VertexId v = 0; v < g.vertex_count(); ++v) ids.emplace(g.label(v), v);
    std::ifstream in(o.centers_file);
    if (!in) throw ParseError("cannot open " + o.centers_file, 0);
    std::string line;
    for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
      std::istringstream tokens(line);
      std::string label;
      if (!(tokens >> label) || label[0] == '#') continue;
      const auto it = ids.find(label);
      if (it == ids.end()) {
        throw UsageError(o.centers_file + ": line " + std::to_string(line_no) +
                         ": unknown center label '" + label + "'");
      }
      centers.push_back(it->second);
    }
  }
  return centers;
}

void EmitEgoTable(Session& s, const UndirectedGraph& g, const EgoTable& t, const CenterOptions& o) {
  if (!o.table_path.empty()) {
    auto f = OpenOutput(o.table_path);
    f << "center\tf0\tf1\tf2\tf3\n";
    for (std::size_t i = 0; i < t.centers.size(); ++i) {
      const EgoProfile& e = t.profiles[i];
      f << g.label(t.centers[i]) << '\t' << e.f0 << '\t' << e.f1 << '\t' << e.f2 << '\t' << e.f3
        << '\n';
    }
    if (!f) throw OutputError("cannot write " + o.table_path);
    s.report()["table_path"] = o.table_path;
    return;
  }
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.centers.size(); ++i) {
    const EgoProfile& e = t.profiles[i];
    rows.push_back({{"center", g.label(t.centers[i])},
                    {"f0", e.f0},
                    {"f1", e.f1},
                    {"f2", e.f2},
                    {"f3", e.f3}});
  }
  s.report()["table"] = std::move(rows);
}

void CheckEgoSums(const UndirectedGraph& g, const EgoTable& t) {
  for (std::size_t i = 0; i < t.centers.size(); ++i) {
    if (t.profiles[i].total() != choose3(g.degree(t.centers[i]))) {
      throw IntegrityError("ego counts at " + g.label(t.centers[i]) +
                           " do not sum to C(deg, 3)");
    }
  }
}

void RunProfile(Session& s, const ProfileOptions& o) {
  Validate(SampleParams{o.p, o.seed});
  if (o.runs < 1) throw UsageError("--runs must be at least 1");
  if (!o.local_out.empty() && o.p < 1.0) {
    throw UsageError("--local-out needs exact counts; drop --p or use --p 1");
  }
  const UndirectedGraph g = s.LoadGraph();
  Engine& engine = s.engine();
  const Wide triples = choose3(g.vertex_count());
  s.report()["sampling"] = {{"p", o.p}, {"seed", o.seed}, {"runs", o.runs}};

  if (o.p == 1.0) {
    if (o.runs > 1) s.Warn("--runs has no effect when p = 1");
    const ProfileResult r = ComputeProfiles(g, engine);
    if (r.global.total() != triples) throw IntegrityError("global profile does not sum to C(|V|,3)");
    s.report()["global"] = ProfileJson(r.global);
    if (!o.local_out.empty()) {
      WriteLocalTsv(o.local_out, g, r.locals);
      s.report()["local_path"] = o.local_out;
    }
    if (o.compare_exact) {
      s.report()["exact"] = ProfileJson(r.global);
      s.report()["accuracy_ratio"] = RatioJson(AccuracyRatio(r.global, to_estimate(r.global)));
    }
    return;
  }

  std::optional<ExactProfile> exact;
  if (o.compare_exact) exact = ComputeGlobalProfile(g, engine);

  Json runs = Json::array();
  std::array<std::vector<double>, 4> estimates, ratios;
  for (std::int64_t r = 0; r < o.runs; ++r) {
    const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(r);
    const SampledGraph sampled = SampleEdges(g, {o.p, seed}, engine);
    const ExactProfile y = ComputeGlobalProfile(sampled.graph, engine);
    const Estimate x = UnbiasedEstimate(y, o.p);
    Json run = {{"seed", seed},
                {"kept_edges", sampled.graph.edge_count()},
                {"sampled", ProfileJson(y)},
                {"estimate", EstimateJson(x)}};
    for (std::size_t i = 0; i < 4; ++i) {
      estimates[i].push_back(x[i]);
      if (x[i] < 0) {
        s.Warn("seed " + std::to_string(seed) + ": estimate " + kEntry[i] +
               " is negative (sampling noise)");
      }
    }
    if (exact) {
      const auto ratio = AccuracyRatio(*exact, x);
      for (std::size_t i = 0; i < 4; ++i) {
        if (ratio[i]) {
          ratios[i].push_back(*ratio[i]);
        } else {
          s.Warn("seed " + std::to_string(seed) + ": estimate " + kEntry[i] +
                 " is zero; accuracy ratio undefined");
        }
      }
      run["accuracy_ratio"] = RatioJson(ratio);
    }
    runs.push_back(std::move(run));
  }

  Json mean = Json::object(), stddev = Json::object();
  for (std::size_t i = 0; i < 4; ++i) {
    const Moments m = Summarize(estimates[i]);
    mean[kEntry[i]] = m.mean;
    stddev[kEntry[i]] = m.stddev;
  }
  s.report()["estimate"] = {{"mean", mean}, {"stddev", stddev}};
  if (exact) {
    s.report()["exact"] = ProfileJson(*exact);
    Json rmean = Json::object(), rstd = Json::object();
    for (std::size_t i = 0; i < 4; ++i) {
      if (ratios[i].empty()) {
        rmean[kEntry[i]] = nullptr;
        rstd[kEntry[i]] = nullptr;
      } else {
        const Moments m = Summarize(ratios[i]);
        rmean[kEntry[i]] = m.mean;
        rstd[kEntry[i]] = m.stddev;
      }
    }
    s.report()["accuracy_ratio"] = {{"mean", rmean}, {"stddev", rstd}};
  }
  s.report()["runs"] = std::move(runs);
}

void RunEgo(Session& s, const EgoOptions& o) {
  const UndirectedGraph g = s.LoadGraph();
  const std::vector<VertexId> centers = SelectCenters(g, o.centers);
  const EgoTable t = o.mode == "serial" ? EgoSerial(g, centers, s.engine())
                                        : EgoParallel(g, centers, s.engine());
  CheckEgoSums(g, t);
  s.report()["mode"] = o.mode;
  s.report()["centers"] = t.centers.size();
  EmitEgoTable(s, g, t, o.centers);
}

void RunOracle(Session& s, const OracleOptions& o) {
  const UndirectedGraph g = s.LoadGraph();
  s.report()["global"] = ProfileJson(oracle::BruteForceProfile(g));
  if (!o.local_out.empty()) {
    WriteLocalTsv(o.local_out, g, oracle::BruteForceLocal(g));
    s.report()["local_path"] = o.local_out;
  }
  const CenterOptions& c = o.centers;
  if (!c.centers_file.empty() || c.random >= 0 || c.all) {
    EgoTable t;
    t.centers = NormalizeCenters(g, SelectCenters(g, c));
    for (VertexId v : t.centers) t.profiles.push_back(oracle::BruteForceEgo(g, v));
    s.report()["centers"] = t.centers.size();
    EmitEgoTable(s, g, t, c);
  }
}

Json ConditionJson(const ConditionCheck& c) {
  Json j = {{"name", c.name}, {"lhs", OptionalJson(c.lhs)}, {"rhs", c.rhs}, {"satisfied", c.satisfied}};
  if (!c.diagnostic.empty()) j["diagnostic"] = c.diagnostic;
  return j;
}

void RunSparsifierCheck(Session& s, const TheoryOptions& o) {
  TheoremInputs in;
  in.p = o.p;
  in.epsilon = o.epsilon;
  in.gamma = o.gamma;
  in.log_base = o.log_base == "2" ? LogBase::kTwo : LogBase::kNatural;
  in.form = o.prefinal ? ConditionForm::kPreFinal : ConditionForm::kFinal;
  // Reject bad inputs before loading anything.
  CheckTheoremConditions(ExactProfile{}, EdgeExtremes{}, 1, in);

  const UndirectedGraph g = s.LoadGraph();
  const ExactProfile n = ComputeGlobalProfile(g, s.engine());
  const EdgeExtremes x = ComputeEdgeExtremes(g, s.engine());
  const TheoremReport r = CheckTheoremConditions(n, x, g.edge_count(), in);

  Json conditions = Json::array();
  for (const ConditionCheck& c : r.conditions) conditions.push_back(ConditionJson(c));
  s.report()["profile"] = ProfileJson(n);
  s.report()["extremes"] = {{"alpha", x.alpha}, {"beta", x.beta}, {"delta", x.delta}};
  s.report()["theorem"] = {
      {"p", r.p},
      {"epsilon", r.epsilon},
      {"gamma", r.gamma},
      {"log_base", r.log_base == LogBase::kTwo ? "2" : "e"},
      {"form", r.form == ConditionForm::kFinal ? "final" : "prefinal"},
      {"constants", {{"a1", r.a[0]}, {"a2", r.a[1]}, {"a3", r.a[2]}}},
      {"conditions", std::move(conditions)},
      {"feasible", r.feasible},
      {"error_bound", r.error_bound},
      {"confidence", r.confidence}};
  if (!r.feasible) s.Warn("sampling probability does not satisfy the sufficient conditions");
}

void RunPolys(Session& s, const PolyOptions& o) {
  Validate(SampleParams{o.p, o.seed});
  if (o.runs < 1) throw UsageError("--runs must be at least 1");
  const UndirectedGraph g = s.LoadGraph();
  const std::uint64_t paths = PathTripleCount(g);
  if (paths > o.wedge_budget) {
    throw UsageError("graph has " + std::to_string(paths) +
                     " vertex-centered path triples, above --wedge-budget " +
                     std::to_string(o.wedge_budget) +
                     "; polynomial evaluation enumerates every one of them");
  }
  const ExactProfile n = ComputeGlobalProfile(g, s.engine());

  constexpr const char* kPoly[5] = {"s1", "d1", "d2", "t1", "t2"};
  std::array<std::vector<double>, 5> samples;
  bool identities_hold = true;
  Json runs = Json::array();
  for (std::int64_t r = 0; r < o.runs; ++r) {
    const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(r);
    const SampledGraph sampled = SampleEdges(g, {o.p, seed}, s.engine());
    const PolynomialValues pv = EvaluatePolynomials(g, sampled.mask);
    const Wide vals[5] = {pv.s1, pv.d1, pv.d2, pv.t1, pv.t2};
    Json run = {{"seed", seed},
                {"y0", WideJson(pv.y0)},
                {"y1", WideJson(pv.y1)},
                {"y2", WideJson(pv.y2)},
                {"y3", WideJson(pv.y3)}};
    for (std::size_t i = 0; i < 5; ++i) {
      run[kPoly[i]] = WideJson(vals[i]);
      samples[i].push_back(to_double(vals[i]));
    }
    run["residuals"] = {{"y1", WideJson(pv.y1_residual())}, {"y2", WideJson(pv.y2_residual())}};
    identities_hold = identities_hold && pv.y1_residual() == 0 && pv.y2_residual() == 0 &&
                      pv.sampled_profile().total() == choose3(g.vertex_count());
    runs.push_back(std::move(run));
  }
  const double p = o.p;
  const double expected[5] = {p * to_double(n[1]), 2 * p * to_double(n[2]),
                              p * p * to_double(n[2]), 3 * p * to_double(n[3]),
                              3 * p * p * to_double(n[3])};
  Json mean = Json::object(), stderr_json = Json::object(), expect = Json::object();
  for (std::size_t i = 0; i < 5; ++i) {
    const Moments m = Summarize(samples[i]);
    mean[kPoly[i]] = m.mean;
    stderr_json[kPoly[i]] = m.stddev / std::sqrt(static_cast<double>(samples[i].size()));
    expect[kPoly[i]] = expected[i];
  }
  s.report()["sampling"] = {{"p", o.p}, {"seed", o.seed}, {"runs", o.runs}};
  s.report()["profile"] = ProfileJson(n);
  s.report()["identities_hold"] = identities_hold;
  s.report()["mean"] = std::move(mean);
  s.report()["standard_error"] = std::move(stderr_json);
  s.report()["expected"] = std::move(expect);
  s.report()["runs"] = std::move(runs);
  if (!identities_hold) throw IntegrityError("polynomial identities violated");
}

void RunBench(Session& s, const BenchOptions& o) {
  if (o.repeats < 1) throw UsageError("--repeats must be at least 1");
  const UndirectedGraph g = s.LoadGraph();
  std::vector<double> tri_seconds, full_seconds;
  for (std::int64_t r = 0; r < o.repeats; ++r) {
    Engine engine(s.engine().workers());
    // Alternate order so cache warm-up favors neither side.
    auto time_tri = [&] {
      const auto t0 = Clock::now();
      const TriangleCounts t = CountTrianglesOnly(g, engine);
      tri_seconds.push_back(std::chrono::duration<double>(Clock::now() - t0).count());
      return t.global;
    };
    auto time_full = [&] {
      const auto t0 = Clock::now();
      const ExactProfile p = ComputeProfiles(g, engine).global;
      full_seconds.push_back(std::chrono::duration<double>(Clock::now() - t0).count());
      return p[3];
    };
    Wide tri = 0, full = 0;
    if (r % 2 == 0) {
      tri = time_tri();
      full = time_full();
    } else {
      full = time_full();
      tri = time_tri();
    }
    if (tri != full) throw IntegrityError("triangle counts differ between pipelines");
  }
  const double tri_median = Median(tri_seconds);
  const double full_median = Median(full_seconds);
  s.report()["repeats"] = o.repeats;
  s.report()["triangles_only"] = {{"median_seconds", tri_median}, {"seconds", tri_seconds}};
  s.report()["full_profile"] = {{"median_seconds", full_median}, {"seconds", full_seconds}};
  s.report()["ratio"] = tri_median > 0 ? Json(full_median / tri_median) : Json(nullptr);
}

void AddCommon(CLI::App* sub, CommonOptions& c) {
  sub->add_option("graph", c.graph_path, "Edge-list file")->required();
  sub->add_option("--vertex-count", c.vertex_count,
                  "Total vertex count, for graphs with isolated vertices")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--threads", c.threads, "Engine workers (default: TRIPROF_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--out", c.out_path, "Write the JSON report here instead of stdout");
  sub->add_flag("--no-timing", c.no_timing, "Omit timings and worker counts from the report");
}

void AddCenters(CLI::App* sub, CenterOptions& c) {
  sub->add_option("--centers", c.centers_file, "File with one center label per line");
  sub->add_option("--random", c.random, "Pick this many distinct random centers")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--seed", c.seed, "Seed for --random");
  sub->add_flag("--all", c.all, "Use every vertex as a center");
  sub->add_option("--table", c.table_path, "Write the per-center TSV here");
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and edge-sampled 3-profiles of undirected graphs.", "triprof"};
  app.require_subcommand(1);

  CommonOptions common;
  ProfileOptions profile;
  EgoOptions ego;
  OracleOptions oracle_opts;
  TheoryOptions theory;
  PolyOptions polys;
  BenchOptions bench;

  auto* profile_cmd = app.add_subcommand("profile", "Global and local 3-profiles, exact or sampled");
  AddCommon(profile_cmd, common);
  profile_cmd->add_option("--p", profile.p, "Edge sampling probability in (0, 1]");
  profile_cmd->add_option("--seed", profile.seed, "Sampling seed of the first run");
  profile_cmd->add_option("--runs", profile.runs, "Sampled runs with seeds seed, seed+1, ...");
  profile_cmd->add_flag("--compare-exact", profile.compare_exact,
                        "Also compute the exact profile and report exact/estimate ratios");
  profile_cmd->add_option("--local-out", profile.local_out, "Write per-vertex TSV here");

  auto* ego_cmd = app.add_subcommand("ego", "Ego 3-profiles for a set of centers");
  AddCommon(ego_cmd, common);
  AddCenters(ego_cmd, ego.centers);
  ego_cmd->add_option("--mode", ego.mode, "serial or parallel")
      ->check(CLI::IsMember({"serial", "parallel"}));

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference counts (small graphs)");
  AddCommon(oracle_cmd, common);
  AddCenters(oracle_cmd, oracle_opts.centers);
  oracle_cmd->add_option("--local-out", oracle_opts.local_out, "Write per-vertex TSV here");

  auto* theory_cmd = app.add_subcommand("sparsifier-check", "Evaluate the sparsifier conditions");
  AddCommon(theory_cmd, common);
  theory_cmd->add_option("--p", theory.p, "Edge sampling probability in (0, 1]");
  theory_cmd->add_option("--epsilon", theory.epsilon, "Accuracy parameter");
  theory_cmd->add_option("--gamma", theory.gamma, "Confidence exponent");
  theory_cmd->add_option("--log-base", theory.log_base, "e or 2")->check(CLI::IsMember({"e", "2"}));
  theory_cmd->add_flag("--prefinal", theory.prefinal, "Use the unsimplified condition form");

  auto* polys_cmd = app.add_subcommand("polys", "Sampled-profile polynomials and identities");
  AddCommon(polys_cmd, common);
  polys_cmd->add_option("--p", polys.p, "Edge sampling probability in (0, 1]");
  polys_cmd->add_option("--seed", polys.seed, "Seed of the first mask");
  polys_cmd->add_option("--runs", polys.runs, "Masks with seeds seed, seed+1, ...");
  polys_cmd->add_option("--wedge-budget", polys.wedge_budget,
                        "Refuse graphs with more vertex-centered path triples than this");

  auto* bench_cmd = app.add_subcommand("bench", "Time triangles-only against the full profile");
  AddCommon(bench_cmd, common);
  bench_cmd->add_option("--repeats", bench.repeats, "Timed repetitions of each pipeline");

  std::vector<const char*> argv{"triprof"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    Session session(common, args, command);
    if (*profile_cmd) {
      RunProfile(session, profile);
    } else if (*ego_cmd) {
      RunEgo(session, ego);
    } else if (*oracle_cmd) {
      RunOracle(session, oracle_opts);
    } else if (*theory_cmd) {
      RunSparsifierCheck(session, theory);
    } else if (*polys_cmd) {
      RunPolys(session, polys);
    } else {
      RunBench(session, bench);
    }
    session.Finish(out, command != "bench");
    return kExitOk;
  } catch (const UsageError& e) {
    err << "triprof " << command << ": usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "triprof " << command << ": input error: " << e.what() << "\n";
    return kExitData;
  } catch (const IntegrityError& e) {
    err << "triprof " << command << ": integrity error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    err << "triprof " << command << ": error: " << e.what() << "\n";
    return kExitData;
  }
}

}  // namespace triprof::cli
