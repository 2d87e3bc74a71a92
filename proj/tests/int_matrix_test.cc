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
#include "dp2/int_matrix.h"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

namespace dp2 {
namespace {

// Laplace expansion along the first row.
BigInt Cofactor(const std::vector<std::vector<BigInt>>& m) {
  const size_t n = m.size();
  if (n == 1) return m[0][0];
  BigInt det = 0;
  for (size_t j = 0; j < n; ++j) {
    std::vector<std::vector<BigInt>> minor;
    for (size_t r = 1; r < n; ++r) {
      std::vector<BigInt> row;
      for (size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(row);
    }
    const BigInt t = m[0][j] * Cofactor(minor);
    det += (j % 2 == 0) ? t : BigInt(-t);
  }
  return det;
}

IntMatrix8 RandomMatrix(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix8 m;
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) m(r, c) = d(rng);
  return m;
}

BigInt Eval(const IntPoly& p, const BigInt& x) {
  BigInt acc = 0;
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

TEST(IntMatrixTest, BareissAgreesWithCofactorExpansion) {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      std::uniform_int_distribution<int> d(-9, 9);
      std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
      for (auto& row : m)
        for (auto& x : row) x = d(rng);
      EXPECT_EQ(BareissDeterminant(m), Cofactor(m));
    }
}

TEST(IntMatrixTest, BareissHandlesZeroPivots) {
  std::vector<std::vector<BigInt>> m = {{0, 1, 2}, {1, 0, 3}, {4, -3, 8}};
  EXPECT_EQ(BareissDeterminant(m), Cofactor(m));
  std::vector<std::vector<BigInt>> singular = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  EXPECT_EQ(BareissDeterminant(singular), 0);
}

TEST(IntMatrixTest, CharacteristicPolynomialProperties) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const IntMatrix8 m = RandomMatrix(rng, 3);
    const IntPoly cp = CharacteristicPolynomial(m);
    ASSERT_EQ(cp.size(), 9u);
    EXPECT_EQ(cp[8], 1);
    EXPECT_EQ(cp[7], -BigInt(m.Trace()));
    // det(tI - M) at t = 2 computed directly.
    std::vector<std::vector<BigInt>> a(8, std::vector<BigInt>(8));
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c) a[r][c] = (r == c ? 2 : 0) - m(r, c);
    EXPECT_EQ(Eval(cp, 2), BareissDeterminant(a));
    // det(I - sM) is the reversed characteristic polynomial.
    const IntPoly rev = DetOneMinusScaled(m);
    ASSERT_EQ(rev.size(), 9u);
    for (int k = 0; k <= 8; ++k) EXPECT_EQ(rev[k], cp[8 - k]);
  }
}

TEST(IntMatrixTest, PowerAndTranspose) {
  std::mt19937_64 rng(3);
  const IntMatrix8 m = RandomMatrix(rng, 1);
  EXPECT_EQ(m.Power(0), IntMatrix8::Identity());
  EXPECT_EQ(m.Power(3), m * m * m);
  EXPECT_EQ((m * m.Transposed()).Transposed(), m * m.Transposed());
  EXPECT_EQ(IntMatrix8::FromFlat(m.Flatten()), m);
}

TEST(IntMatrixTest, EulerPhiByGcdCount) {
  for (int n = 1; n <= 60; ++n) {
    int count = 0;
    for (int k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
    EXPECT_EQ(EulerPhi(n), count) << n;
  }
}

TEST(IntMatrixTest, CyclotomicProductIsTMinusOne) {
  // prod_{d | n} Phi_d = t^n - 1.
  for (int n = 1; n <= 30; ++n) {
    IntPoly p = {1};
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) p = PolyMul(p, Cyclotomic(d));
    IntPoly want(n + 1, 0);
    want[0] = -1;
    want[n] = 1;
    EXPECT_EQ(p, want) << n;
    EXPECT_EQ(static_cast<int>(Cyclotomic(n).size()) - 1, EulerPhi(n));
  }
}

TEST(IntMatrixTest, CyclotomicFactorizationRoundTrip) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> pick(1, 18);
  for (int trial = 0; trial < 40; ++trial) {
    std::map<int, int> want;
    IntPoly p = {1};
    for (int k = 0; k < 4; ++k) {
      const int n = pick(rng);
      ++want[n];
      p = PolyMul(p, Cyclotomic(n));
    }
    auto got = CyclotomicFactorization(p);
    ASSERT_TRUE(got.has_value());
    EXPECT_EQ(*got, want);
  }
  EXPECT_FALSE(CyclotomicFactorization(IntPoly{-2, 0, 1}).has_value());  // t^2 - 2
  EXPECT_FALSE(CyclotomicFactorization(IntPoly{1, 3, 1}).has_value());
}

TEST(IntMatrixTest, ExactDivision) {
  const IntPoly a = PolyMul(Cyclotomic(6), IntPoly{3, 0, 1});
  auto q = PolyDivideExact(a, Cyclotomic(6));
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, (IntPoly{3, 0, 1}));
  EXPECT_FALSE(PolyDivideExact(a, Cyclotomic(4)).has_value());
  EXPECT_EQ(PolyToString(IntPoly{-1, 0, 1}), PolyToString(PolyMul(Cyclotomic(1), Cyclotomic(2))));
}

}  // namespace
}  // namespace dp2
