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

// Points of P^1, P^2, P^3 over a finite field, Frobenius orbits (closed
// points) and the general position test for up to eight plane points.

#ifndef DP2_PROJECTIVE_H_
#define DP2_PROJECTIVE_H_

#include <functional>
#include <string>
#include <vector>

#include "dp2/finite_field.h"

namespace dp2 {

// Homogeneous coordinates, first nonzero coordinate equal to 1.  The
// default vector order gives (0:0:1) < (0:1:z) < (1:y:z).
using ProjPoint = std::vector<FqElem>;

ProjPoint NormalizePoint(const FiniteField& f, ProjPoint v);
std::string PointToString(const FiniteField& f, const ProjPoint& pt);
// Coordinatewise x -> x^(p^k).
ProjPoint FrobeniusPoint(const FiniteField& f, const ProjPoint& pt, int k);

// The orbit pt, F(pt), F^2(pt), ... under F = (x -> x^q), q = p^e, until
// it closes up.
std::vector<ProjPoint> FrobeniusOrbit(const FiniteField& f, int e, const ProjPoint& pt);

struct ClosedPoint {
  int degree = 0;
  std::vector<ProjPoint> orbit;  // orbit[i + 1] = F(orbit[i]), orbit[0] minimal
};

// Calls visit on every normalized point of P^dim with coordinates in
// `coords` (sorted ascending, containing 0 and 1), in increasing order.
// Stops early when visit returns false.
void ForEachPoint(int dim, const std::vector<FqElem>& coords,
                  const std::function<bool(const ProjPoint&)>& visit);

// All closed points of exact degree d of P^dim over F_q, q = p^e, listed by
// their minimal geometric point.  The field f must contain F_{q^d}; the
// number of F_{q^d}-points enumerated is capped at 2^24.
std::vector<ClosedPoint> ClosedPointsOfDegree(const FiniteField& f, int e, int dim, int d);

// Exact linear algebra over f.
int MatrixRank(const FiniteField& f, std::vector<std::vector<FqElem>> m);
std::vector<std::vector<FqElem>> KernelBasis(const FiniteField& f, std::vector<std::vector<FqElem>> m);

FqElem Det3(const FiniteField& f, const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);
// x^2, xy, y^2, xz, yz, z^2 at pt.
std::vector<FqElem> ConicMonomials(const FiniteField& f, const ProjPoint& pt);
// x^3, x^2y, x^2z, xy^2, xyz, xz^2, y^3, y^2z, yz^2, z^3 at pt.
std::vector<FqElem> CubicMonomials(const FiniteField& f, const ProjPoint& pt);
// Rows of d/dx, d/dy, d/dz of the cubic monomials at pt.
std::vector<std::vector<FqElem>> CubicGradientRows(const FiniteField& f, const ProjPoint& pt);

bool SixOnConic(const FiniteField& f, const std::vector<const ProjPoint*>& six);

struct GeneralPositionReport {
  bool ok = true;
  std::string violation;     // "collinear", "coconic", "singular cubic"
  std::vector<int> indices;  // offending points
  // For "singular cubic": a nonzero cubic (monomial order of
  // CubicMonomials) through all eight points, singular at indices[0].
  std::vector<FqElem> kernel;

  std::string ToString() const;
};

// No three on a line, no six on a conic, and for eight points no cubic
// through all of them singular at one of them.  Throws kInvalidArgument on
// duplicate points or more than eight points.
GeneralPositionReport CheckGeneralPosition(const FiniteField& f, const std::vector<ProjPoint>& pts);

// Only the third condition, for exactly eight normalized distinct points.
GeneralPositionReport CheckSingularCubics(const FiniteField& f, const std::vector<ProjPoint>& pts);

}  // namespace dp2

#endif  // DP2_PROJECTIVE_H_
