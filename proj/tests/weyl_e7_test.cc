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

#include "dp2/weyl_e7.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include <unistd.h>

#include "dp2/class_table.h"
#include "dp2/error.h"
#include "test_util.h"

namespace dp2 {
namespace {

using testing::RandomElement;

TEST(IsometryTest, RejectsNonIsometries) {
  IntMatrix8 m = IntMatrix8::Identity();
  m(0, 0) = 2;
  EXPECT_THROW(Isometry{m}, Error);
  EXPECT_FALSE(IsometryViolation(m).empty());
  // Swapping L and E1 does not preserve the form.
  IntMatrix8 swap = IntMatrix8::Identity();
  swap(0, 0) = swap(1, 1) = 0;
  swap(0, 1) = swap(1, 0) = 1;
  EXPECT_THROW(Isometry{swap}, Error);
  // -Id preserves the form but moves K.
  IntMatrix8 neg;
  for (int i = 0; i < 8; ++i) neg(i, i) = -1;
  EXPECT_THROW(Isometry{neg}, Error);
  EXPECT_TRUE(IsometryViolation(Isometry::Geiser().matrix()).empty());
}

TEST(IsometryTest, SimpleReflectionsAreInvolutionsWithE7Braid) {
  const auto s = SimpleReflections();
  ASSERT_EQ(s.size(), 7u);
  const auto& roots = SimpleRoots();
  for (size_t i = 0; i < 7; ++i) {
    EXPECT_EQ(s[i] * s[i], Isometry::Identity());
    EXPECT_EQ(s[i].Apply(roots[i]), -roots[i]);
    for (size_t j = i + 1; j < 7; ++j) {
      // Coxeter relations: order of s_i s_j is 3 when the roots meet, 2
      // otherwise.
      const int x = Intersect(roots[i], roots[j]);
      EXPECT_EQ((s[i] * s[j]).Order(), x == 0 ? 2 : 3);
    }
  }
  // The E7 diagram has 6 edges.
  int edges = 0;
  for (size_t i = 0; i < 7; ++i)
    for (size_t j = i + 1; j < 7; ++j) edges += Intersect(roots[i], roots[j]) != 0;
  EXPECT_EQ(edges, 6);
}

TEST(IsometryTest, GeiserIsCentral) {
  const Isometry g = Isometry::Geiser();
  EXPECT_EQ(g.Order(), 2);
  for (const auto& s : SimpleReflections()) EXPECT_EQ(g * s, s * g);
  for (const auto& e : ExceptionalClasses()) EXPECT_EQ(g.Apply(e), GeiserImage(e));
}

TEST(IsometryTest, PowersInversesAndPermutations) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const Isometry g = RandomElement(rng);
    EXPECT_EQ(g * g.Inverse(), Isometry::Identity());
    EXPECT_EQ(g.Power(static_cast<unsigned>(g.Order())), Isometry::Identity());
    const auto perm = ExceptionalPermutation(g);
    const auto& exc = ExceptionalClasses();
    for (size_t i = 0; i < exc.size(); ++i) EXPECT_EQ(exc[perm[i]], g.Apply(exc[i]));
    const auto rperm = RootPermutation(g);
    for (size_t i = 0; i < Roots().size(); ++i) EXPECT_EQ(Roots()[rperm[i]], g.Apply(Roots()[i]));
  }
}

TEST(IsometryTest, PackRoundTrip) {
  std::mt19937_64 rng(2);
  const auto s = SimpleReflections();
  for (int trial = 0; trial < 200; ++trial) {
    const Isometry g = RandomElement(rng, 1 + trial % 60);
    EXPECT_EQ(Unpack(Pack(g)), g);
    EXPECT_LT(Pack(g), uint64_t{1} << 42);
    const int k = trial % 7;
    EXPECT_EQ(Unpack(ConjugateBySimple(Pack(g), k)), s[k] * g * s[k]);
    EXPECT_EQ(Unpack(LeftMultiplyBySimple(Pack(g), k)), s[k] * g);
  }
}

TEST(IsometryTest, CycleTypes) {
  const std::vector<int> perm = {1, 2, 0, 4, 3, 5};
  EXPECT_EQ(CycleType(perm), (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(CycleType(ExceptionalPermutation(Isometry::Geiser())), std::vector<int>(28, 2));
  EXPECT_EQ(InvariantPicardRank(Isometry::Identity()), 8);
  EXPECT_EQ(InvariantPicardRank(Isometry::Geiser()), 1);
}

// Coefficients of prod_i (1 + t + ... + t^(d_i - 1)) over the degrees of
// W(E7).
std::vector<uint64_t> PoincareSeries() {
  std::vector<uint64_t> p = {1};
  for (int d : {2, 6, 8, 10, 12, 14, 18}) {
    std::vector<uint64_t> r(p.size() + d - 1, 0);
    for (size_t i = 0; i < p.size(); ++i)
      for (int k = 0; k < d; ++k) r[i + k] += p[i];
    p = r;
  }
  return p;
}

class GroupBuildTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = std::filesystem::temp_directory_path() / ("dp2_weyl_test_cache_" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
    // A corrupt cache must be rebuilt, not trusted.
    std::ofstream(dir_ / ("class_table_v" + std::to_string(kClassTableFormatVersion) + ".json")) << "{\"classes\": 7";
    bool loaded = true;
    table_ = new ClassTable(ClassTable::LoadOrBuild(dir_.string(), {}, &loaded));
    rebuilt_ = !loaded;
  }
  static void TearDownTestSuite() {
    delete table_;
    std::filesystem::remove_all(dir_);
  }
  static std::filesystem::path dir_;
  static ClassTable* table_;
  static bool rebuilt_;
};
std::filesystem::path GroupBuildTest::dir_;
ClassTable* GroupBuildTest::table_ = nullptr;
bool GroupBuildTest::rebuilt_ = false;

TEST_F(GroupBuildTest, CorruptCacheIsRebuilt) {
  EXPECT_TRUE(rebuilt_);
  ASSERT_TRUE(table_->has_store());
  bool loaded = false;
  const ClassTable again = ClassTable::LoadOrBuild(dir_.string(), {}, &loaded);
  EXPECT_TRUE(loaded);
  EXPECT_EQ(again.ToJson(), table_->ToJson());
}

TEST_F(GroupBuildTest, OrderAndLayersMatchPoincareSeries) {
  const WeylGroupStore store = WeylGroupStore::Build();
  EXPECT_EQ(store.size(), kWeylE7Order);
  const auto series = PoincareSeries();
  ASSERT_EQ(store.num_layers(), series.size());  // 64: the longest word has length 63
  for (size_t k = 0; k < series.size(); ++k) EXPECT_EQ(store.layer(k).size(), series[k]) << "layer " << k;
  EXPECT_LE(store.memory_bytes(), uint64_t{1} << 30);
  // The unique longest element is the Geiser involution.
  ASSERT_EQ(store.layer(63).size(), 1u);
  EXPECT_EQ(Unpack(store.layer(63)[0]), Isometry::Geiser());
  for (size_t k = 0; k < series.size(); ++k) {
    auto layer = store.layer(k);
    EXPECT_TRUE(std::is_sorted(layer.begin(), layer.end()));
  }
}

TEST_F(GroupBuildTest, BuildIsDeterministic) {
  GroupBuildOptions two;
  two.threads = 2;
  const WeylGroupStore a = WeylGroupStore::Build();
  const WeylGroupStore b = WeylGroupStore::Build(two);
  ASSERT_EQ(a.size(), b.size());
  EXPECT_TRUE(std::equal(a.elements().begin(), a.elements().end(), b.elements().begin()));
}

TEST_F(GroupBuildTest, BudgetIsEnforced) {
  GroupBuildOptions tiny;
  tiny.memory_budget_bytes = 8 << 20;
  try {
    WeylGroupStore::Build(tiny);
    FAIL() << "expected a budget error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
}

TEST_F(GroupBuildTest, ConjugacyClassesFromStore) {
  const WeylGroupStore store = WeylGroupStore::Build();
  const ConjugacyPartition part = store.ComputeConjugacyClasses();
  EXPECT_EQ(part.size.size(), 60u);
  uint64_t total = 0;
  for (uint64_t s : part.size) {
    total += s;
    EXPECT_EQ(kWeylE7Order % s, 0u);
  }
  EXPECT_EQ(total, kWeylE7Order);
}

TEST_F(GroupBuildTest, StoreAndFingerprintClassificationAgree) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const Isometry g = RandomElement(rng, 1 + trial % 70);
    EXPECT_EQ(table_->ClassifyViaStore(g), table_->Classify(g));
  }
  for (const auto& rec : table_->records()) EXPECT_EQ(table_->ClassifyViaStore(rec.representative), rec.id);
  EXPECT_TRUE(table_->fingerprints_unique());
}

}  // namespace
}  // namespace dp2
