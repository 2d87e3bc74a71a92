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

// Picard lattice of a conic bundle with six degenerate fibres, in the basis
// (C, F, E1..E6) with C.F = 1 and E_i.E_i = -1, and the action of
// W(D6) = (Z/2)^5 x| S6 on it.

#ifndef DP2_CONIC_BUNDLE_H_
#define DP2_CONIC_BUNDLE_H_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "dp2/int_matrix.h"
#include "dp2/pic_lattice.h"

namespace dp2 {

class ClassTable;

using CBClass = std::array<int, 8>;  // coefficients of C, F, E1..E6

CBClass CBSection();                // C
CBClass CBFibre();                  // F
CBClass CBExceptional(int i);       // E_i, 1 <= i <= 6
CBClass CBCombination(int c, int f, const std::array<int, 6>& e);  // cC + fF + sum e_i E_i
std::string CBToString(const CBClass& v);

int IntersectCB(const CBClass& a, const CBClass& b);
// -2C - 2F + E1 + ... + E6.
CBClass CanonicalClassCB();

// The 2-section 2C + F - sum E_i and the divisor 2C + 3F - sum E_i.
CBClass TwoSectionD();
CBClass DivisorR();

// iota_S * sigma: first permute the E_i by sigma, then switch the fibre
// components over the points in S.
class WD6Element {
 public:
  WD6Element();  // identity
  // flips: bit i-1 set for i in S; perm[i-1] = sigma(i).
  WD6Element(unsigned flips, const std::array<int, 6>& perm);

  static WD6Element Iota(unsigned flips);
  static WD6Element Permutation(const std::array<int, 6>& perm);
  // "i{1,2,3,5}(34)(56)"; "i{}" or "" for identity.  Either part may be
  // omitted.
  static WD6Element Parse(std::string_view text);
  std::string ToString() const;

  unsigned flips() const { return flips_; }
  const std::array<int, 6>& perm() const { return perm_; }

  CBClass Apply(const CBClass& v) const;
  // (*this) after o.
  WD6Element operator*(const WD6Element& o) const;
  bool operator==(const WD6Element& o) const = default;
  auto operator<=>(const WD6Element& o) const = default;
  // Columns are the images of C, F, E1..E6.
  IntMatrix8 Matrix() const;

 private:
  unsigned flips_ = 0;
  std::array<int, 6> perm_;
};

// Closure of iota_12 and the transpositions (i i+1).
std::vector<WD6Element> EnumerateWD6();

// Cycle type of sigma, descending: degrees of the base points under the
// degenerate fibres.
std::vector<int> FibrePointDegrees(const WD6Element& g);

// Sections C + aF - sum b_i E_i (0 <= a <= 3, b_i in {0,1}) with the given
// self-intersection and nonnegative intersection with every constraint, in
// order of (a, b_1..b_6).  target in [-3, 0].
std::vector<CBClass> SectionsSelfInt(int target, const std::vector<CBClass>& constraints);

// 2-sections H = 2C + aF - sum b_i E_i (0 <= a <= 6, b_i in {0,1,2}) with
// H^2 < 0, H.S >= 0 for the 32 sections of self-intersection -1, and
// H.D >= 0 unless H = D.
std::vector<CBClass> NegativeTwoSections();

// C -> L-E1, F -> L-E2, E_i -> E_{i+2} (i <= 5), E6 -> L-E1-E2.
DivisorClass EmbedIntoE7(const CBClass& v);
CBClass EmbedInverse(const DivisorClass& v);
// Matrix of the embedding (columns: images of C, F, E1..E6 in L, E1..E7).
IntMatrix8 EmbeddingMatrix();
// The isometry of Pic induced by g.
IntMatrix8 TransportToE7(const WD6Element& g);
int WD6ClassInE7(const ClassTable& table, const WD6Element& g);

// The generators of the conic bundle cases, in the order of the class ids
// 31, 35, 40, 43, 44, 45.
struct ConicBundleCase {
  int class_id;
  const char* generator;
  std::vector<int> fibre_degrees;
};
const std::vector<ConicBundleCase>& ConicBundleCases();

}  // namespace dp2

#endif  // DP2_CONIC_BUNDLE_H_
