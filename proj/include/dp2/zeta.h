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

// Zeta functions of degree-2 del Pezzo surfaces over F_q determined by the
// Frobenius action M on Pic:
//   Z(t) = 1 / ((1 - t) P(t) (1 - q^2 t)),   P(t) = det(1 - q t M).

#ifndef DP2_ZETA_H_
#define DP2_ZETA_H_

#include <optional>
#include <vector>

#include "dp2/class_table.h"
#include "dp2/finite_field.h"
#include "dp2/int_matrix.h"
#include "json.hpp"

namespace dp2 {

inline constexpr int kMaxZetaDegree = 64;

struct ZetaData {
  int class_id = 0;
  uint64_t q = 0;
  IntPoly p_coeffs;                  // c_0..c_8
  std::vector<BigInt> point_counts;  // N_1..N_dmax
  std::optional<int> negative_at;    // first d with N_d < 0
};

struct RationalFunction {
  IntPoly numerator;
  IntPoly denominator;
};

// Throws kInvalidArgument unless q is a prime power.
PrimePower ValidateFieldSize(uint64_t q);

IntPoly FrobeniusCharPoly(const IntMatrix8& m, uint64_t q);
RationalFunction ZetaFunction(const IntMatrix8& m, uint64_t q);

// N_d = 1 + q^d Tr(M^d) + q^{2d}.
std::vector<BigInt> PointCountsFromTraces(const IntMatrix8& m, uint64_t q, int dmax);
// Coefficients of t^d/d in log Z, from the denominator by Newton's
// identities.  Requires numerator 1 and denominator constant term 1.
std::vector<BigInt> PointCountsFromZeta(const RationalFunction& z, int dmax);

ZetaData ComputeZeta(const ClassTable& table, int class_id, uint64_t q, int dmax);

// {class_id, q, P, N, negative_at}; integers that fit in int64 are JSON
// numbers, larger ones decimal strings.
nlohmann::json ZetaToJson(const ZetaData& z);

}  // namespace dp2

#endif  // DP2_ZETA_H_
