// Copyright 2026 The dp2 Authors
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

#include "dp2/verdict.h"
#ifndef DP2_TESTS_TEST_UTIL_H_
#define DP2_TESTS_TEST_UTIL_H_

#include <random>
#include <string>
#include <vector>

#include "dp2/class_table.h"
#include "dp2/weyl_e7.h"

namespace dp2::testing {

// The cached table, shared by all tests in a binary.
inline const ClassTable& SharedTable() {
  static const ClassTable table = ClassTable::LoadOrBuild(DP2_TEST_CACHE, {});
  return table;
}

// A product of `length` simple reflections chosen by rng.
inline Isometry RandomElement(std::mt19937_64& rng, int length = 40) {
  static const std::vector<Isometry> gens = SimpleReflections();
  Isometry g = Isometry::Identity();
  std::uniform_int_distribution<int> pick(0, static_cast<int>(gens.size()) - 1);
  for (int i = 0; i < length; ++i) g = g * gens[pick(rng)];
  return g;
}

inline std::string DataPath(const std::string& name) { return std::string(DP2_TEST_DATA) + "/" + name; }

}  // namespace dp2::testing

#endif  // DP2_TESTS_TEST_UTIL_H_
