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

// Count types shared by every stage: the 4-entry 3-profile, the per-vertex
// six-role decomposition, and the ego-center census.

#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace triprof {

// Global counts reach C(|V|,3), which overflows 64 bits past ~3.8M vertices.
__extension__ using Wide = __int128;

std::string to_string(Wide value);
double to_double(Wide value);

constexpr Wide choose2(Wide n) { return n < 2 ? 0 : n * (n - 1) / 2; }
constexpr Wide choose3(Wide n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

// Counts of induced H0 (empty), H1 (single edge), H2 (wedge), H3 (triangle).
template <class T>
struct Profile {
  std::array<T, 4> n{};

  constexpr T& operator[](std::size_t i) { return n[i]; }
  constexpr const T& operator[](std::size_t i) const { return n[i]; }
  constexpr T total() const { return n[0] + n[1] + n[2] + n[3]; }
  friend constexpr bool operator==(const Profile&, const Profile&) = default;
};

using ExactProfile = Profile<Wide>;
using Estimate = Profile<double>;

Estimate to_estimate(const ExactProfile& p);

// Triples containing a vertex v, split by v's role (six cases).
struct LocalProfile {
  std::int64_t n0 = 0;    // no edges
  std::int64_t n1_e = 0;  // v is an endpoint of the lone edge
  std::int64_t n1_d = 0;  // v is disjoint from the lone edge
  std::int64_t n2_e = 0;  // v is a wedge endpoint
  std::int64_t n2_c = 0;  // v is the wedge center
  std::int64_t n3 = 0;    // triangle

  std::int64_t n1() const { return n1_e + n1_d; }
  std::int64_t n2() const { return n2_e + n2_c; }
  std::int64_t total() const { return n0 + n1_e + n1_d + n2_e + n2_c + n3; }
  friend bool operator==(const LocalProfile&, const LocalProfile&) = default;
};

// 3-profile of the subgraph induced by a center's neighbors (center excluded).
struct EgoProfile {
  std::int64_t f0 = 0;
  std::int64_t f1 = 0;
  std::int64_t f2 = 0;
  std::int64_t f3 = 0;

  std::int64_t total() const { return f0 + f1 + f2 + f3; }
  friend bool operator==(const EgoProfile&, const EgoProfile&) = default;
};

}  // namespace triprof
