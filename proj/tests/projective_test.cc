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
#include "dp2/projective.h"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "dp2/config_search.h"
#include "dp2/error.h"

namespace dp2 {
namespace {

uint64_t IntPow(uint64_t b, int e) {
  uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

int Mobius(int n) {
  int r = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    r = -r;
  }
  return n > 1 ? -r : r;
}

// Points of P^dim over F_Q.
uint64_t ProjectiveCount(uint64_t big_q, int dim) {
  uint64_t s = 0;
  for (int i = 0; i <= dim; ++i) s += IntPow(big_q, i);
  return s;
}

TEST(ProjectiveTest, PointEnumerationOrderAndCount) {
  for (auto [p, m] : std::vector<std::pair<uint64_t, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
    const auto f = FiniteField::Canonical(p, m);
    for (int dim = 1; dim <= 3; ++dim) {
      std::vector<ProjPoint> pts;
      ForEachPoint(dim, f->SubfieldElements(m), [&](const ProjPoint& x) {
        pts.push_back(x);
        return true;
      });
      EXPECT_EQ(pts.size(), ProjectiveCount(f->size(), dim));
      EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
      EXPECT_EQ(std::set<ProjPoint>(pts.begin(), pts.end()).size(), pts.size());
      for (const auto& x : pts) EXPECT_EQ(NormalizePoint(*f, x), x);
    }
  }
  // Early stop.
  const auto f = FiniteField::Canonical(5, 1);
  int seen = 0;
  ForEachPoint(2, f->SubfieldElements(1), [&](const ProjPoint&) { return ++seen < 3; });
  EXPECT_EQ(seen, 3);
}

TEST(ProjectiveTest, ClosedPointCountsMatchMobiusFormula) {
  for (auto [p, e, dim, d] : std::vector<std::tuple<uint64_t, int, int, int>>{
           {2, 1, 1, 2}, {2, 1, 1, 3}, {2, 1, 1, 6}, {3, 1, 1, 2}, {3, 1, 1, 4}, {2, 2, 1, 2}, {2, 1, 2, 2},
           {2, 1, 2, 3}, {3, 1, 2, 2}, {2, 2, 2, 2}, {5, 1, 2, 2}, {2, 1, 2, 5}}) {
    const uint64_t q = IntPow(p, e);
    int64_t sum = 0;
    for (int k = 1; k <= d; ++k)
      if (d % k == 0) sum += Mobius(d / k) * static_cast<int64_t>(ProjectiveCount(IntPow(q, k), dim));
    const auto f = FiniteField::Canonical(p, e * d);
    const auto pts = ClosedPointsOfDegree(*f, e, dim, d);
    EXPECT_EQ(static_cast<int64_t>(pts.size()), sum / d) << "q=" << q << " dim=" << dim << " d=" << d;
    for (const auto& cp : pts) {
      ASSERT_EQ(cp.degree, d);
      ASSERT_EQ(static_cast<int>(cp.orbit.size()), d);
      EXPECT_EQ(cp.orbit[0], *std::min_element(cp.orbit.begin(), cp.orbit.end()));
      for (int i = 0; i < d; ++i) EXPECT_EQ(FrobeniusPoint(*f, cp.orbit[i], e), cp.orbit[(i + 1) % d]);
      EXPECT_EQ(FrobeniusOrbit(*f, e, cp.orbit[0]), cp.orbit);
    }
  }
}

TEST(ProjectiveTest, RankNullity) {
  std::mt19937_64 rng(3);
  const auto f = FiniteField::Canonical(3, 2);
  std::uniform_int_distribution<uint64_t> pick(0, f->size() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    const int rows = 1 + trial % 6, cols = 1 + (trial / 6) % 7;
    std::vector<std::vector<FqElem>> m(rows, std::vector<FqElem>(cols));
    for (auto& r : m)
      for (auto& x : r) x = trial % 3 == 0 ? pick(rng) % 2 : pick(rng);
    const int rank = MatrixRank(*f, m);
    const auto ker = KernelBasis(*f, m);
    EXPECT_EQ(rank + static_cast<int>(ker.size()), cols);
    for (const auto& v : ker)
      for (const auto& r : m) {
        FqElem acc = 0;
        for (int c = 0; c < cols; ++c) acc = f->Add(acc, f->Mul(r[c], v[c]));
        EXPECT_EQ(acc, 0u);
      }
  }
}

TEST(ProjectiveTest, Det3DetectsCollinearity) {
  const auto f = FiniteField::Canonical(7, 1);
  EXPECT_EQ(Det3(*f, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}), 0u);
  EXPECT_NE(Det3(*f, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}), 0u);
}

TEST(ProjectiveTest, GeneralPositionViolations) {
  const auto f = FiniteField::Canonical(7, 1);
  auto r = CheckGeneralPosition(*f, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}});
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.violation, "collinear");
  EXPECT_EQ(r.indices.size(), 3u);
  // Six points (1 : t : t^2) on y^2 = xz, no three collinear.
  std::vector<ProjPoint> conic;
  for (FqElem t = 0; t < 6; ++t) conic.push_back({1, t, f->Mul(t, t)});
  r = CheckGeneralPosition(*f, conic);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.violation, "coconic");
  conic.back() = {0, 0, 1};  // t = infinity
  r = CheckGeneralPosition(*f, conic);
  EXPECT_EQ(r.violation, "coconic");
  conic.pop_back();
  EXPECT_TRUE(CheckGeneralPosition(*f, conic).ok);
  EXPECT_THROW(CheckGeneralPosition(*f, {{1, 0, 0}, {1, 0, 0}}), Error);
  EXPECT_THROW(CheckGeneralPosition(*f, std::vector<ProjPoint>(9, ProjPoint{1, 0, 0})), Error);
}

// ---- singular cubic condition against every cubic ------------------------

FqElem EvalCubic(const FiniteField& f, const std::vector<FqElem>& c, const ProjPoint& x) {
  const auto mons = CubicMonomials(f, x);
  FqElem acc = 0;
  for (size_t i = 0; i < 10; ++i) acc = f.Add(acc, f.Mul(c[i], mons[i]));
  return acc;
}

// Partial derivatives of the cubic with coefficients c, term by term.
std::vector<FqElem> GradCubic(const FiniteField& f, const std::vector<FqElem>& c, const ProjPoint& x) {
  // Monomial exponents in CubicMonomials order.
  static const int kExp[10][3] = {{3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},
                                  {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3}};
  std::vector<FqElem> g(3, 0);
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 10; ++i) {
      if (kExp[i][k] == 0 || c[i] == 0) continue;
      FqElem term = f.Mul(c[i], f.FromInt(kExp[i][k]));
      for (int v = 0; v < 3; ++v) term = f.Mul(term, f.Pow(x[v], kExp[i][v] - (v == k ? 1 : 0)));
      g[k] = f.Add(g[k], term);
    }
  return g;
}

bool BruteHasSingularCubic(const FiniteField& f, const std::vector<ProjPoint>& pts) {
  const uint64_t q = f.size();
  std::vector<FqElem> c(10, 0);
  const uint64_t total = IntPow(q, 10);
  for (uint64_t n = 1; n < total; ++n) {
    uint64_t k = n;
    for (int i = 0; i < 10; ++i) {
      c[i] = k % q;
      k /= q;
    }
    bool through = true;
    for (const auto& x : pts) through = through && EvalCubic(f, c, x) == 0;
    if (!through) continue;
    for (const auto& x : pts) {
      const auto g = GradCubic(f, c, x);
      if (g[0] == 0 && g[1] == 0 && g[2] == 0) return true;
    }
  }
  return false;
}

TEST(ProjectiveTest, SingularCubicTestAgainstAllCubics) {
  const auto f = FiniteField::Canonical(3, 1);
  std::vector<ProjPoint> plane;
  ForEachPoint(2, f->SubfieldElements(1), [&](const ProjPoint& x) {
    plane.push_back(x);
    return true;
  });
  std::mt19937_64 rng(8);
  int violations = 0;
  for (int trial = 0; trial < 6; ++trial) {
    std::shuffle(plane.begin(), plane.end(), rng);
    std::vector<ProjPoint> eight(plane.begin(), plane.begin() + 8);
    const auto r = CheckSingularCubics(*f, eight);
    EXPECT_EQ(!r.ok, BruteHasSingularCubic(*f, eight)) << trial;
    if (!r.ok) {
      ++violations;
      ASSERT_EQ(r.kernel.size(), 10u);
      for (const auto& x : eight) EXPECT_EQ(EvalCubic(*f, r.kernel, x), 0u);
      const auto g = GradCubic(*f, r.kernel, eight[r.indices[0]]);
      EXPECT_EQ(g, (std::vector<FqElem>{0, 0, 0}));
    }
  }
  EXPECT_GT(violations, 0);
}

TEST(ProjectiveTest, ConicWitnessPassesCubicCondition) {
  // Eight points, so the cubic condition applies.
  const auto res = SearchBlowupConfig(SearchPattern::Parse("5,3:conic"), 2);
  ASSERT_EQ(res.status, SearchStatus::kFound);
  const auto pts = res.witness->GeometricPoints();
  ASSERT_EQ(pts.size(), 8u);
  EXPECT_TRUE(CheckSingularCubics(*res.witness->field, pts).ok);
}

// ---- invariance under projective transformations ---------------------------

std::vector<ProjPoint> Transform(const FiniteField& f, const std::vector<std::vector<FqElem>>& g,
                                 const std::vector<ProjPoint>& pts) {
  std::vector<ProjPoint> out;
  for (const auto& x : pts) {
    ProjPoint y(3, 0);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) y[r] = f.Add(y[r], f.Mul(g[r][c], x[c]));
    out.push_back(NormalizePoint(f, y));
  }
  return out;
}

TEST(ProjectiveTest, GeneralPositionIsProjectivelyInvariant) {
  std::mt19937_64 rng(12);
  std::vector<std::pair<std::string, uint64_t>> cases = {{"1x7", 9}, {"7", 3}, {"5,3:conic", 3}, {"3,3,1", 3},
                                                         {"5,2", 2}};
  for (const auto& [pat, q] : cases) {
    const auto res = SearchBlowupConfig(SearchPattern::Parse(pat), q);
    ASSERT_EQ(res.status, SearchStatus::kFound) << pat;
    const FiniteField& f = *res.witness->field;
    auto pts = res.witness->GeometricPoints();
    ASSERT_TRUE(CheckGeneralPosition(f, pts).ok);
    std::uniform_int_distribution<uint64_t> pick(0, f.size() - 1);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<std::vector<FqElem>> g(3, std::vector<FqElem>(3));
      do {
        for (auto& r : g)
          for (auto& x : r) x = pick(rng);
      } while (MatrixRank(f, g) < 3);
      EXPECT_TRUE(CheckGeneralPosition(f, Transform(f, g, pts)).ok) << pat;
      // Moving one point onto the line through two others breaks it, and
      // stays broken after the transformation.
      auto bad = pts;
      ProjPoint on_line(3);
      for (int k = 0; k < 3; ++k) on_line[k] = f.Add(bad[0][k], bad[1][k]);
      bad.back() = NormalizePoint(f, on_line);
      if (std::count(bad.begin(), bad.end(), bad.back()) > 1) continue;
      EXPECT_FALSE(CheckGeneralPosition(f, bad).ok);
      EXPECT_FALSE(CheckGeneralPosition(f, Transform(f, g, bad)).ok);
    }
  }
}

}  // namespace
}  // namespace dp2
