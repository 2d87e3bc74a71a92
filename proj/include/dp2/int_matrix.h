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

// Exact integer linear algebra on small square matrices and integer
// polynomials.  Everything here is exact; nothing touches floating point.

#ifndef DP2_INT_MATRIX_H_
#define DP2_INT_MATRIX_H_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dp2 {

using BigInt = boost::multiprecision::cpp_int;

// Integer polynomial, coefficient of t^k at index k.
using IntPoly = std::vector<BigInt>;

class IntMatrix8 {
 public:
  static constexpr int kDim = 8;

  IntMatrix8() : a_{} {}
  static IntMatrix8 Identity();

  int operator()(int r, int c) const { return a_[r * kDim + c]; }
  int& operator()(int r, int c) { return a_[r * kDim + c]; }

  IntMatrix8 operator*(const IntMatrix8& o) const;
  IntMatrix8 Transposed() const;
  bool operator==(const IntMatrix8& o) const = default;
  bool operator<(const IntMatrix8& o) const { return a_ < o.a_; }

  long long Trace() const;
  int MaxAbsEntry() const;
  IntMatrix8 Power(unsigned e) const;

  // Row-major flat list of 64 entries.
  std::vector<int> Flatten() const;
  static IntMatrix8 FromFlat(const std::vector<int>& flat);

 private:
  std::array<int, kDim * kDim> a_;
};

// Fraction-free Gaussian elimination (Bareiss).  The matrix is square.
BigInt BareissDeterminant(std::vector<std::vector<BigInt>> m);

// Coefficients of det(I - s*M) as a polynomial in s, obtained by evaluating
// the determinant at s = 0..8 and interpolating in Newton form.
IntPoly DetOneMinusScaled(const IntMatrix8& m);

// det(t*I - M), monic, low-to-high coefficients.
IntPoly CharacteristicPolynomial(const IntMatrix8& m);

IntPoly PolyMul(const IntPoly& a, const IntPoly& b);
// Divides by a monic divisor; returns nullopt unless the remainder is zero.
std::optional<IntPoly> PolyDivideExact(const IntPoly& a, const IntPoly& monic);
void PolyTrim(IntPoly& a);
std::string PolyToString(const IntPoly& a, char var = 't');

// The n-th cyclotomic polynomial.
const IntPoly& Cyclotomic(int n);

// Euler phi.
int EulerPhi(int n);

// Writes a monic integer polynomial as a product of cyclotomic polynomials,
// returning index -> multiplicity.  nullopt when no such factorization
// exists.
std::optional<std::map<int, int>> CyclotomicFactorization(IntPoly poly);

}  // namespace dp2

#endif  // DP2_INT_MATRIX_H_
