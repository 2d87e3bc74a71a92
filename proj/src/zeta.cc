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

#include "dp2/zeta.h"

#include <limits>

#include "dp2/error.h"

namespace dp2 {

namespace {

void CheckDegree(int dmax) {
  if (dmax < 1 || dmax > kMaxZetaDegree) {
    Fail(ErrorCode::kInvalidArgument, "dmax must be in 1.." + std::to_string(kMaxZetaDegree));
  }
}

nlohmann::json BigToJson(const BigInt& v) {
  if (v >= std::numeric_limits<int64_t>::min() && v <= std::numeric_limits<int64_t>::max()) {
    return static_cast<int64_t>(v);
  }
  return v.str();
}

}  // namespace

PrimePower ValidateFieldSize(uint64_t q) {
  const auto pp = AsPrimePower(q);
  if (!pp) Fail(ErrorCode::kInvalidArgument, "q = " + std::to_string(q) + " is not a prime power");
  return *pp;
}

IntPoly FrobeniusCharPoly(const IntMatrix8& m, uint64_t q) {
  ValidateFieldSize(q);
  IntPoly c = DetOneMinusScaled(m);
  BigInt qk = 1;
  for (auto& coeff : c) {
    coeff *= qk;
    qk *= q;
  }
  return c;
}

RationalFunction ZetaFunction(const IntMatrix8& m, uint64_t q) {
  const IntPoly p = FrobeniusCharPoly(m, q);
  const BigInt q2 = BigInt(q) * q;
  IntPoly den = PolyMul(PolyMul(IntPoly{1, -1}, p), IntPoly{1, -q2});
  PolyTrim(den);
  return {IntPoly{1}, den};
}

std::vector<BigInt> PointCountsFromTraces(const IntMatrix8& m, uint64_t q, int dmax) {
  ValidateFieldSize(q);
  CheckDegree(dmax);
  std::vector<BigInt> n;
  IntMatrix8 power = IntMatrix8::Identity();
  BigInt qd = 1;
  for (int d = 1; d <= dmax; ++d) {
    power = power * m;
    qd *= q;
    n.push_back(1 + qd * power.Trace() + qd * qd);
  }
  return n;
}

std::vector<BigInt> PointCountsFromZeta(const RationalFunction& z, int dmax) {
  CheckDegree(dmax);
  if (z.numerator != IntPoly{1} || z.denominator.empty() || z.denominator[0] != 1) {
    Fail(ErrorCode::kInvalidArgument, "zeta function must be 1/D(t) with D(0) = 1");
  }
  const IntPoly& c = z.denominator;
  auto coeff = [&](int i) { return i < static_cast<int>(c.size()) ? c[i] : BigInt(0); };
  // log(1/D) = sum_d p_d t^d / d with p_d = -d c_d - sum_{i<d} c_i p_{d-i}.
  std::vector<BigInt> p(dmax + 1, 0);
  for (int d = 1; d <= dmax; ++d) {
    BigInt s = -BigInt(d) * coeff(d);
    for (int i = 1; i < d; ++i) s -= coeff(i) * p[d - i];
    p[d] = s;
  }
  return {p.begin() + 1, p.end()};
}

ZetaData ComputeZeta(const ClassTable& table, int class_id, uint64_t q, int dmax) {
  const IntMatrix8& m = table.record(class_id).representative.matrix();
  ZetaData z;
  z.class_id = class_id;
  z.q = q;
  z.p_coeffs = FrobeniusCharPoly(m, q);
  z.point_counts = PointCountsFromTraces(m, q, dmax);
  for (int d = 1; d <= dmax; ++d) {
    if (z.point_counts[d - 1] < 0) {
      z.negative_at = d;
      break;
    }
  }
  return z;
}

nlohmann::json ZetaToJson(const ZetaData& z) {
  nlohmann::json p = nlohmann::json::array(), n = nlohmann::json::array();
  for (const auto& c : z.p_coeffs) p.push_back(BigToJson(c));
  for (const auto& c : z.point_counts) n.push_back(BigToJson(c));
  nlohmann::json out = {{"class_id", z.class_id}, {"q", z.q}, {"P", p}, {"N", n}};
  out["negative_at"] = z.negative_at ? nlohmann::json(*z.negative_at) : nlohmann::json(nullptr);
  return out;
}

}  // namespace dp2
