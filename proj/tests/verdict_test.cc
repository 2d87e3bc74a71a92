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
#include "dp2/verdict.h"

#include <gtest/gtest.h>

#include "dp2/error.h"
#include "dp2/zeta.h"
#include "test_util.h"

namespace dp2 {
namespace {

using testing::SharedTable;

// The isometry fixing L whose action on E1..E7 has the given cycle
// lengths: the Frobenius of a blowup of closed points of those degrees.
Isometry CyclePermutation(const std::vector<int>& degrees) {
  IntMatrix8 m;
  m(0, 0) = 1;
  int at = 0;
  for (int d : degrees) {
    for (int k = 0; k < d; ++k) m(1 + at + (k + 1) % d, 1 + at + k) = 1;
    at += d;
  }
  return Isometry(m);
}

TEST(VerdictTest, PublishedTable) {
  for (uint64_t q : {2, 3, 4, 5, 7, 8}) EXPECT_EQ(TheoremVerdict(49, q).verdict, Verdict::kNotExists) << q;
  for (uint64_t q : {9, 11, 13, 16}) EXPECT_EQ(TheoremVerdict(49, q).verdict, Verdict::kExists) << q;
  for (uint64_t q : {2, 3, 4}) EXPECT_EQ(TheoremVerdict(31, q).verdict, Verdict::kNotExists);
  EXPECT_EQ(TheoremVerdict(31, 5).verdict, Verdict::kExists);
  for (int t : {40, 50, 53, 55, 60}) {
    EXPECT_EQ(TheoremVerdict(t, 2).verdict, Verdict::kNotExists);
    EXPECT_EQ(TheoremVerdict(t, 3).verdict, Verdict::kExists);
  }
  for (int t : {43, 44, 45, 52, 54, 57, 59})
    for (uint64_t q : {2, 3, 4}) EXPECT_EQ(TheoremVerdict(t, q).verdict, Verdict::kExists);
  EXPECT_EQ(TheoremVerdict(35, 2).verdict, Verdict::kNotExists);
  EXPECT_EQ(TheoremVerdict(35, 3).verdict, Verdict::kOpenInPaper);
  EXPECT_EQ(TheoremVerdict(35, 4).verdict, Verdict::kExists);
  EXPECT_EQ(TheoremVerdict(51, 3).verdict, Verdict::kExists);
  EXPECT_EQ(TheoremVerdict(58, 4).verdict, Verdict::kOpenInPaper);
  EXPECT_EQ(TheoremVerdict(56, 7).verdict, Verdict::kExists);
  EXPECT_EQ(TheoremVerdict(56, 13).verdict, Verdict::kExists);
  EXPECT_EQ(TheoremVerdict(56, 5).verdict, Verdict::kOpenInPaper);
  EXPECT_THROW(TheoremVerdict(1, 3), Error);
  EXPECT_THROW(TheoremVerdict(49, 6), Error);
}

TEST(VerdictTest, OpenCellsAreExactlyTheUnresolvedRanges) {
  for (int t : MinimalTypes())
    for (uint64_t q = 2; q <= kMaxVerdictQ; ++q) {
      if (!AsPrimePower(q)) continue;
      const bool open = TheoremVerdict(t, q).verdict == Verdict::kOpenInPaper;
      const bool expected = (t == 35 && q == 3) || ((t == 51 || t == 58) && q % 2 == 0) || (t == 56 && q % 6 != 1);
      EXPECT_EQ(open, expected) << t << " q=" << q;
    }
}

TEST(VerdictTest, MinimalTypesMatchTheTable) {
  std::vector<int> minimal;
  for (const auto& r : SharedTable().records())
    if (r.minimality != Minimality::kNonMinimal) minimal.push_back(r.id);
  EXPECT_EQ(minimal, MinimalTypes());
}

TEST(VerdictTest, SearchPatternsDescribeTheGeiserPartners) {
  const auto& t = SharedTable();
  for (int type : MinimalTypes()) {
    const auto check = ComputedCheckFor(type);
    if (!check || check->partner_type == 0) continue;
    EXPECT_EQ(t.GeiserTwistClass(type), check->partner_type) << type;
    const auto pat = SearchPattern::Parse(check->pattern);
    if (pat.conic) {
      // Contracting a conic through five of the points turns the 5 + 3
      // configuration into a degree-2 blowup; only the class is checked.
      EXPECT_TRUE(check->witness_only);
      continue;
    }
    EXPECT_EQ(t.Classify(CyclePermutation(pat.degrees)), check->partner_type) << type;
  }
}

TEST(VerdictTest, NoDisagreementsForSmallFields) {
  const auto& t = SharedTable();
  for (uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    std::vector<VerdictRow> rows;
    ASSERT_NO_THROW(rows = ComputeVerdicts(t, q)) << q;
    ASSERT_EQ(rows.size(), 18u);
    for (const auto& r : rows) {
      EXPECT_EQ(r.q, q);
      const TheoremEntry th = TheoremVerdict(r.class_id, q);
      if (th.verdict != Verdict::kOpenInPaper) EXPECT_EQ(r.verdict, th.verdict);
      if (r.negative_point_count_at) {
        EXPECT_EQ(th.verdict, Verdict::kNotExists);
        const auto z = ComputeZeta(t, r.class_id, q, 6);
        EXPECT_EQ(z.negative_at, r.negative_point_count_at);
      }
      if (r.source == VerdictSource::kComputedWitness) {
        ASSERT_TRUE(r.witness.has_value());
        EXPECT_TRUE(VerifyWitness(*r.witness).ok);
        EXPECT_EQ(r.verdict, Verdict::kExists);
      }
      if (r.source != VerdictSource::kTheorem) EXPECT_FALSE(r.certificate.empty());
      if (r.source == VerdictSource::kComputedExhaustion) EXPECT_EQ(r.verdict, Verdict::kNotExists);
    }
  }
}

TEST(VerdictTest, SpecificCells) {
  const auto& t = SharedTable();
  auto row = [&](uint64_t q, int type) {
    for (auto& r : ComputeVerdicts(t, q))
      if (r.class_id == type) return r;
    throw std::logic_error("missing row");
  };
  const auto a = row(2, 49);
  EXPECT_EQ(a.verdict, Verdict::kNotExists);
  EXPECT_EQ(a.source, VerdictSource::kComputedExhaustion);
  EXPECT_EQ(a.negative_point_count_at, 1);
  const auto b = row(9, 49);
  EXPECT_EQ(b.verdict, Verdict::kExists);
  EXPECT_EQ(b.source, VerdictSource::kComputedWitness);
  const auto c = row(3, 35);
  EXPECT_EQ(c.verdict, Verdict::kOpenInPaper);
  EXPECT_EQ(c.source, VerdictSource::kTheorem);
  const auto d = row(4, 31);
  EXPECT_EQ(d.source, VerdictSource::kComputedExhaustion);  // five rational points on the base
  EXPECT_EQ(row(5, 31).source, VerdictSource::kTheorem);
}

TEST(VerdictTest, ReconcileRejectsDisagreement) {
  EXPECT_EQ(Reconcile(49, 9, Verdict::kExists, Verdict::kExists), Verdict::kExists);
  EXPECT_EQ(Reconcile(35, 3, Verdict::kOpenInPaper, Verdict::kExists), Verdict::kExists);
  try {
    Reconcile(49, 8, Verdict::kNotExists, Verdict::kExists);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConsistency);
  }
}

TEST(VerdictTest, OptionsAndErrors) {
  const auto& t = SharedTable();
  VerdictOptions off;
  off.run_searches = false;
  for (const auto& r : ComputeVerdicts(t, 8, off)) EXPECT_EQ(r.source, VerdictSource::kTheorem);
  VerdictOptions tiny;
  tiny.node_budget = 3;
  for (const auto& r : ComputeVerdicts(t, 8, tiny)) {
    if (r.class_id == 49) {
      EXPECT_EQ(r.source, VerdictSource::kTheorem);
      EXPECT_FALSE(r.notes.empty());
    }
  }
  EXPECT_THROW(ComputeVerdicts(t, 6), Error);
  try {
    ComputeVerdicts(t, 32);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupported);
  }
}

TEST(VerdictTest, Serialization) {
  const auto rows = ComputeVerdicts(SharedTable(), 3);
  const std::string csv = VerdictsToCsv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "class_id,q,verdict,source,negative_at,witness_path");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 19);
  const auto j = VerdictsToJson(rows);
  ASSERT_EQ(j.size(), 18u);
  EXPECT_EQ(j[0]["class_id"], 31);
  EXPECT_EQ(j[1]["verdict"], "OpenInPaper");
  EXPECT_EQ(VerdictsToJson(ComputeVerdicts(SharedTable(), 3)).dump(), j.dump());
}

}  // namespace
}  // namespace dp2
