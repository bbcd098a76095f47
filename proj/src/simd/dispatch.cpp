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

#include <cstdlib>
#include <string>

#include "triprof/error.hpp"
#include "triprof/simd/intersect.hpp"

namespace triprof::simd {
namespace {

Isa BestIsa() {
  if (IsaSupported(Isa::kAvx2)) return Isa::kAvx2;
  if (IsaSupported(Isa::kNeon)) return Isa::kNeon;
  return Isa::kScalar;
}

Isa InitialIsa() {
  if (const char* env = std::getenv("TRIPROF_SIMD"); env != nullptr && *env != '\0') {
    const std::string_view want(env);
    for (Isa isa : {Isa::kScalar, Isa::kAvx2, Isa::kNeon}) {
      if (want == IsaName(isa) && IsaSupported(isa)) return isa;
    }
  }
  return BestIsa();
}

struct State {
  Isa isa;
  Kernels kernels;
};

State& Current() {
  static State state = [] {
    const Isa isa = InitialIsa();
    return State{isa, KernelsFor(isa)};
  }();
  return state;
}

}  // namespace

std::string_view IsaName(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
    case Isa::kNeon:
      return "neon";
  }
  return "unknown";
}

bool IsaSupported(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
      return false;
#endif
    case Isa::kNeon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Kernels KernelsFor(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return {&scalar::IntersectCount, &scalar::Intersect};
    case Isa::kAvx2:
#if defined(__x86_64__) || defined(_M_X64)
      return {&avx2::IntersectCount, &avx2::Intersect};
#else
      break;
#endif
    case Isa::kNeon:
#if defined(__aarch64__)
      return {&neon::IntersectCount, &neon::Intersect};
#else
      break;
#endif
  }
  return {nullptr, nullptr};
}

Isa ActiveIsa() { return Current().isa; }

void ForceIsa(Isa isa) {
  if (!IsaSupported(isa)) {
    throw UsageError("instruction set not available on this host: " +
                     std::string(IsaName(isa)));
  }
  Current() = State{isa, KernelsFor(isa)};
}

const Kernels& Active() { return Current().kernels; }

}  // namespace triprof::simd
