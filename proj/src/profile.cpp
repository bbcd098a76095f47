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

#include "triprof/profile.hpp"

#include <algorithm>

namespace triprof {

std::string to_string(Wide value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  // Work in the negative range so the minimum value does not overflow.
  Wide rest = negative ? value : -value;
  std::string digits;
  while (rest != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(rest % 10)));
    rest /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

double to_double(Wide value) { return static_cast<double>(value); }

Estimate to_estimate(const ExactProfile& p) {
  Estimate e;
  for (std::size_t i = 0; i < 4; ++i) e[i] = to_double(p[i]);
  return e;
}

}  // namespace triprof
