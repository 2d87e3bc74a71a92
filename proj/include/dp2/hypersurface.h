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

// Plane curves and surfaces in P^3 given by explicit equations over a
// finite field: point counts, lines through a point of a cubic surface,
// and local analysis of plane curve singularities.

#ifndef DP2_HYPERSURFACE_H_
#define DP2_HYPERSURFACE_H_

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dp2/finite_field.h"
#include "dp2/projective.h"

namespace dp2 {

struct Term {
  FqElem coeff = 0;
  std::vector<int> exponents;
};

class HyperSurface {
 public:
  // Terms with equal exponents are summed; zero terms dropped.  Throws
  // kInvalidArgument unless homogeneous, nonzero, with 3 or 4 variables.
  HyperSurface(std::shared_ptr<const FiniteField> field, std::vector<Term> terms);

  // One term per line, "coeff,e0,e1,e2[,e3]"; '#' starts a comment.  The
  // coefficient is a polynomial in the field generator a ("a+1", "-1").
  static HyperSurface Parse(std::shared_ptr<const FiniteField> field, std::string_view text);

  const FiniteField& field() const { return *field_; }
  std::shared_ptr<const FiniteField> field_ptr() const { return field_; }
  int num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  const std::vector<Term>& terms() const { return terms_; }

  FqElem Evaluate(const ProjPoint& x) const;
  std::vector<FqElem> Gradient(const ProjPoint& x) const;
  // Coefficients mapped into ext, which must contain field().
  HyperSurface BaseChange(std::shared_ptr<const FiniteField> ext) const;
  std::string ToString() const;

 private:
  std::shared_ptr<const FiniteField> field_;
  std::vector<Term> terms_;
  int num_vars_ = 0;
  int degree_ = 0;
};

// Embeds a point of field() into ext.
ProjPoint EmbedPoint(const FiniteField& ext, const FiniteField& sub, const ProjPoint& pt);

// All points over the surface's own field, in increasing order.  Throws
// kSizeCapExceeded when P^n has more than 2^24 points.
std::vector<ProjPoint> RationalPoints(const HyperSurface& s);

struct LineThroughPoint {
  ProjPoint direction;  // second point R in the tangent plane; the line is PR
};

struct EckardtReport {
  int extension_degree = 0;
  std::shared_ptr<const FiniteField> extension;  // F_{q^extension_degree}
  ProjPoint point;                               // in the extension
  std::vector<LineThroughPoint> lines;           // defined over the extension
  int lines_over_closure = 0;                    // counted over F_{q^6}
  bool tangent_quadric_vanishes = false;
  bool is_eckardt = false;
};

// S a cubic surface, P on S with nonzero gradient.  The tangent plane T at
// P cuts S in a cubic singular at P; for R in T the line PR lies on S iff
// S(R) = 0 and grad S(R) . P = 0.  Directions are enumerated over
// P^1(F_{q^k}); all lines through P are defined over F_{q^6}.
EckardtReport EckardtAnalysis(const HyperSurface& s, const ProjPoint& p, int extension_degree = 6);

struct TangentDirection {
  ProjPoint direction;  // (x : y) in the local chart
  int multiplicity = 0;
};

struct SingularityReport {
  bool is_singular = false;
  int multiplicity = 0;
  // Lowest homogeneous part of the local equation, coefficients of
  // x^m, x^(m-1) y, ..., y^m, where (x, y) -> P + x u + y v.
  std::vector<FqElem> tangent_cone;
  std::vector<ProjPoint> chart;  // P, u, v
  int extension_degree = 0;
  std::shared_ptr<const FiniteField> extension;
  std::vector<TangentDirection> tangent_lines;  // roots of the cone over the extension
  bool is_node = false;
};

// C a plane curve, P on C.
SingularityReport CurveSingularityAnalysis(const HyperSurface& c, const ProjPoint& p, int extension_degree = 2);

}  // namespace dp2

#endif  // DP2_HYPERSURFACE_H_
