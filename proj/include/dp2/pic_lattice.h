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

// Integer model of the Picard lattice of a degree-2 del Pezzo surface,
// written as the blowup of the plane at seven points.  A class is stored by
// its coordinates (d; m1..m7) in the basis (L, E1, ..., E7), meaning
// d*L + m1*E1 + ... + m7*E7.  The intersection form is diag(1, -1, ..., -1).

#ifndef DP2_PIC_LATTICE_H_
#define DP2_PIC_LATTICE_H_

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "json.hpp"

namespace dp2 {

inline constexpr int kPicRank = 8;

class DivisorClass {
 public:
  using Coeffs = std::array<int, kPicRank>;

  constexpr DivisorClass() : c_{} {}
  constexpr explicit DivisorClass(const Coeffs& c) : c_(c) {}

  // The line class L and the exceptional divisors E1..E7 (index 1-based).
  static DivisorClass Line();
  static DivisorClass Exceptional(int i);

  int degree() const { return c_[0]; }
  int operator[](int k) const { return c_[k]; }
  int& operator[](int k) { return c_[k]; }
  const Coeffs& coeffs() const { return c_; }

  DivisorClass operator+(const DivisorClass& o) const;
  DivisorClass operator-(const DivisorClass& o) const;
  DivisorClass operator-() const;
  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  friend DivisorClass operator*(int k, const DivisorClass& v);

  auto operator<=>(const DivisorClass&) const = default;

  // "(d;m1,...,m7)".
  std::string ToString() const;

 private:
  Coeffs c_;
};

int Intersect(const DivisorClass& a, const DivisorClass& b);

// K = -3L + E1 + ... + E7.
DivisorClass CanonicalClass();

// All classes e with e.e = -1 and e.K = -1, in lexicographic order of their
// coordinates.  There are 56.
const std::vector<DivisorClass>& ExceptionalClasses();

// All classes a with a.a = -2 and a.K = 0, lexicographic order.  There are
// 126; they form the E7 root system inside the orthogonal complement of K.
const std::vector<DivisorClass>& Roots();

// p_a(c) = 1 + (c.c + c.K)/2.  Throws kInvalidArgument when c.c + c.K is odd.
int ArithmeticGenus(const DivisorClass& c);

// The Geiser involution on Pic: v -> (v.K) K - v.  Fixes K, acts as -1 on
// the orthogonal complement of K and sends an exceptional class e to -K - e.
DivisorClass GeiserImage(const DivisorClass& v);

// Serialized as a JSON array of eight integers in (L, E1..E7) order.
void to_json(nlohmann::json& j, const DivisorClass& v);
void from_json(const nlohmann::json& j, DivisorClass& v);

}  // namespace dp2

#endif  // DP2_PIC_LATTICE_H_
