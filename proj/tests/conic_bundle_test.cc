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
#include "dp2/conic_bundle.h"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "dp2/class_table.h"
#include "dp2/error.h"
#include "test_util.h"

namespace dp2 {
namespace {

using testing::SharedTable;

CBClass Basis(int k) {
  CBClass v{};
  v[k] = 1;
  return v;
}

// iota_S in closed form: E_i -> F - E_i for i in S,
// C -> C + (|S|/2) F - sum_{i in S} E_i, F fixed.
CBClass IotaClosedForm(unsigned s, const CBClass& v) {
  const int n = __builtin_popcount(s);
  CBClass out{};
  auto add = [&](const CBClass& w, int k) {
    for (int i = 0; i < 8; ++i) out[i] += k * w[i];
  };
  add(CBSection(), v[0]);
  add(CBFibre(), v[0] * n / 2 + v[1]);
  for (int i = 1; i <= 6; ++i) {
    if (s & (1u << (i - 1))) {
      add(CBExceptional(i), -v[0] - v[1 + i]);
      add(CBFibre(), v[1 + i]);
    } else {
      add(CBExceptional(i), v[1 + i]);
    }
  }
  return out;
}

std::vector<CBClass> SelfIntMinusOneSections() { return SectionsSelfInt(-1, {}); }

TEST(ConicBundleTest, Lattice) {
  const CBClass k = CanonicalClassCB();
  EXPECT_EQ(IntersectCB(k, k), 2);
  EXPECT_EQ(IntersectCB(CBSection(), CBSection()), 0);
  EXPECT_EQ(IntersectCB(CBSection(), CBFibre()), 1);
  EXPECT_EQ(IntersectCB(CBFibre(), CBFibre()), 0);
  EXPECT_EQ(IntersectCB(CBFibre(), k), -2);
  for (int i = 1; i <= 6; ++i) {
    EXPECT_EQ(IntersectCB(CBExceptional(i), CBExceptional(i)), -1);
    EXPECT_EQ(IntersectCB(CBExceptional(i), k), -1);
  }
  EXPECT_EQ(IntersectCB(TwoSectionD(), CBFibre()), 2);
  EXPECT_EQ(IntersectCB(TwoSectionD(), TwoSectionD()), -2);
  EXPECT_EQ(DivisorR(), CBCombination(2, 3, {-1, -1, -1, -1, -1, -1}));
  EXPECT_EQ(CBToString(TwoSectionD()), "2C + F - E1 - E2 - E3 - E4 - E5 - E6");
}

TEST(ConicBundleTest, EmbeddingIsAnIsometry) {
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) EXPECT_EQ(Intersect(EmbedIntoE7(Basis(a)), EmbedIntoE7(Basis(b))), IntersectCB(Basis(a), Basis(b)));
  EXPECT_EQ(EmbedIntoE7(CanonicalClassCB()), CanonicalClass());
  for (const auto& e : ExceptionalClasses()) EXPECT_EQ(EmbedIntoE7(EmbedInverse(e)), e);
  for (int a = 0; a < 8; ++a) EXPECT_EQ(EmbedInverse(EmbedIntoE7(Basis(a))), Basis(a));
  // The fibre class maps to a conic class: square 0, degree 2 against -K.
  const DivisorClass f = EmbedIntoE7(CBFibre());
  EXPECT_EQ(Intersect(f, f), 0);
  EXPECT_EQ(Intersect(f, CanonicalClass()), -2);
}

TEST(ConicBundleTest, GroupOrderAndStructure) {
  const auto all = EnumerateWD6();
  EXPECT_EQ(all.size(), 23040u);  // 2^5 * 6!
  std::set<WD6Element> distinct(all.begin(), all.end());
  EXPECT_EQ(distinct.size(), all.size());
  for (const auto& g : all) EXPECT_EQ(__builtin_popcount(g.flips()) % 2, 0);
}

TEST(ConicBundleTest, IotaClosedFormMatchesGeneratorComposition) {
  // iota_S as a product of iota_{ij} over a pairing of S.
  for (unsigned s = 0; s < 64; ++s) {
    if (__builtin_popcount(s) % 2) continue;
    WD6Element g;
    std::vector<int> members;
    for (int i = 0; i < 6; ++i)
      if (s & (1u << i)) members.push_back(i);
    for (size_t k = 0; k < members.size(); k += 2)
      g = WD6Element::Iota((1u << members[k]) | (1u << members[k + 1])) * g;
    EXPECT_EQ(g, WD6Element::Iota(s));
    for (int b = 0; b < 8; ++b) EXPECT_EQ(g.Apply(Basis(b)), IotaClosedForm(s, Basis(b))) << s;
  }
}

TEST(ConicBundleTest, ActionIsAHomomorphismPreservingTheForm) {
  std::mt19937_64 rng(6);
  const auto all = EnumerateWD6();
  std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
  for (int trial = 0; trial < 300; ++trial) {
    const auto& g = all[pick(rng)];
    const auto& h = all[pick(rng)];
    for (int b = 0; b < 8; ++b) {
      EXPECT_EQ((g * h).Apply(Basis(b)), g.Apply(h.Apply(Basis(b))));
      for (int c = 0; c < 8; ++c) EXPECT_EQ(IntersectCB(g.Apply(Basis(b)), g.Apply(Basis(c))), IntersectCB(Basis(b), Basis(c)));
    }
    EXPECT_EQ(g.Apply(CBFibre()), CBFibre());
    EXPECT_EQ(g.Apply(CanonicalClassCB()), CanonicalClassCB());
    EXPECT_EQ(WD6Element::Parse(g.ToString()), g);
    const IntMatrix8 m = g.Matrix();
    for (int b = 0; b < 8; ++b)
      for (int r = 0; r < 8; ++r) EXPECT_EQ(m(r, b), g.Apply(Basis(b))[r]);
  }
}

TEST(ConicBundleTest, TextForm) {
  const auto g = WD6Element::Parse("i{1,2,3,5}(34)(56)");
  EXPECT_EQ(g.flips(), 0b10111u);
  EXPECT_EQ(g.perm(), (std::array<int, 6>{1, 2, 4, 3, 6, 5}));
  EXPECT_EQ(g.ToString(), "i{1,2,3,5}(34)(56)");
  EXPECT_EQ(WD6Element::Parse(""), WD6Element());
  EXPECT_EQ(WD6Element::Parse("(123)").perm(), (std::array<int, 6>{2, 3, 1, 4, 5, 6}));
  EXPECT_THROW(WD6Element::Parse("i{1,2,3}"), Error);  // odd flip set
  EXPECT_THROW(WD6Element::Parse("(117)"), Error);
  EXPECT_THROW(WD6Element::Parse("i{1,2"), Error);
}

TEST(ConicBundleTest, SectionCounts) {
  const auto minus_one = SelfIntMinusOneSections();
  EXPECT_EQ(minus_one.size(), 32u);
  for (const auto& s : minus_one) {
    EXPECT_EQ(IntersectCB(s, s), -1);
    EXPECT_EQ(IntersectCB(s, CanonicalClassCB()), -1);
    EXPECT_EQ(IntersectCB(s, CBFibre()), 1);
  }
  // Sections meeting the fibre components C - E1 - E2, C - E3 - E4,
  // C - E5 - E6 and C + 2F - sum E_i nonnegatively.
  const std::vector<CBClass> four = {CBCombination(1, 0, {-1, -1, 0, 0, 0, 0}),
                                     CBCombination(1, 0, {0, 0, -1, -1, 0, 0}),
                                     CBCombination(1, 0, {0, 0, 0, 0, -1, -1}),
                                     CBCombination(1, 2, {-1, -1, -1, -1, -1, -1})};
  const std::vector<CBClass> two = {CBCombination(1, 0, {-1, -1, 0, 0, 0, 0}),
                                    CBCombination(1, 1, {0, 0, -1, -1, -1, -1})};
  EXPECT_EQ(SectionsSelfInt(-1, two).size(), 20u);
  EXPECT_EQ(SectionsSelfInt(-1, four).size(), 8u);
  // W(D6) permutes the 32 sections.
  std::set<CBClass> set(minus_one.begin(), minus_one.end());
  for (const auto& g : {WD6Element::Parse("i{1,2}"), WD6Element::Parse("(123456)"), WD6Element::Parse("i{1,2,3,5}(34)(56)")}) {
    std::set<CBClass> img;
    for (const auto& s : minus_one) img.insert(g.Apply(s));
    EXPECT_EQ(img, set);
  }
  EXPECT_THROW(SectionsSelfInt(1, {}), Error);
}

TEST(ConicBundleTest, OnlyNegativeTwoSectionIsD) {
  const auto h = NegativeTwoSections();
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h[0], TwoSectionD());
}

TEST(ConicBundleTest, GeneratorsMatchTheSixConicBundleTypes) {
  const auto& t = SharedTable();
  std::set<int> ids;
  for (const auto& c : ConicBundleCases()) {
    const auto g = WD6Element::Parse(c.generator);
    EXPECT_EQ(WD6ClassInE7(t, g), c.class_id) << c.generator;
    EXPECT_EQ(FibrePointDegrees(g), c.fibre_degrees) << c.generator;
    EXPECT_EQ(t.MinimalityKind(c.class_id), Minimality::kMinimalConicBundle);
    ids.insert(c.class_id);
  }
  EXPECT_EQ(ids, (std::set<int>{31, 35, 40, 43, 44, 45}));
}

TEST(ConicBundleTest, EmbeddedGroupFixesTheConicClass) {
  const auto& t = SharedTable();
  const DivisorClass f = EmbedIntoE7(CBFibre());
  std::set<int> classes;
  for (const auto& g : EnumerateWD6()) {
    const Isometry m(TransportToE7(g));  // validates form and K
    EXPECT_EQ(m.Apply(f), f);
    classes.insert(t.Classify(m));
  }
  EXPECT_EQ(classes.size(), 33u);
  // Transport commutes with the embedding.
  const auto g = WD6Element::Parse("i{1,3}(12)(3456)");
  const Isometry m(TransportToE7(g));
  for (int b = 0; b < 8; ++b) EXPECT_EQ(m.Apply(EmbedIntoE7(Basis(b))), EmbedIntoE7(g.Apply(Basis(b))));
}

}  // namespace
}  // namespace dp2
