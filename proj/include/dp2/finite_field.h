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

// Finite fields F_{p^m} = F_p[a] / (f(a)).
//
// An element is a uint64_t holding the residue polynomial c_0 + c_1 a + ...
// as the base-p number sum c_i p^i, so the numeric order of elements is the
// lexicographic order of (c_{m-1}, ..., c_0).  Fields with at most 2^20
// elements multiply through log/exp tables; larger fields (up to p^m < 2^63)
// use schoolbook polynomial arithmetic.

#ifndef DP2_FINITE_FIELD_H_
#define DP2_FINITE_FIELD_H_

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dp2 {

using FqElem = uint64_t;

bool IsPrime(uint64_t n);
// Prime factorization, primes ascending.
std::vector<std::pair<uint64_t, int>> Factorize(uint64_t n);

struct PrimePower {
  uint64_t p;
  int e;
};
std::optional<PrimePower> AsPrimePower(uint64_t q);

// Polynomials over F_p, coefficient of x^i at index i.
using FpPoly = std::vector<uint64_t>;
bool IsIrreducible(uint64_t p, const FpPoly& f);
// Lexicographically smallest monic irreducible of degree m, comparing
// coefficients from x^{m-1} down to x^0.
FpPoly CanonicalModulus(uint64_t p, int m);

class FiniteField {
 public:
  static constexpr uint64_t kEnumerableCap = uint64_t{1} << 20;

  // F_{p^m} with the canonical modulus.  Throws kInvalidArgument for a
  // non-prime p and kSizeCapExceeded when p^m >= 2^63.
  static std::shared_ptr<const FiniteField> Canonical(uint64_t p, int m);
  // Throws kInvalidArgument when the modulus is not monic irreducible.
  static std::shared_ptr<const FiniteField> WithModulus(uint64_t p, FpPoly modulus);

  uint64_t p() const { return p_; }
  int degree() const { return m_; }
  uint64_t size() const { return size_; }
  const FpPoly& modulus() const { return modulus_; }
  bool table_backed() const { return !exp_.empty(); }
  bool enumerable() const { return size_ <= kEnumerableCap; }

  FqElem Zero() const { return 0; }
  FqElem One() const { return 1; }
  FqElem FromInt(long long v) const;
  FqElem FromDigits(std::span<const uint64_t> digits) const;
  std::vector<uint64_t> Digits(FqElem x) const;
  // The residue class of a.
  FqElem Generator() const { return m_ == 1 ? 0 : p_; }

  FqElem Add(FqElem x, FqElem y) const;
  FqElem Sub(FqElem x, FqElem y) const;
  FqElem Neg(FqElem x) const;
  FqElem Mul(FqElem x, FqElem y) const;
  FqElem Inv(FqElem x) const;  // throws kInvalidArgument on 0
  FqElem Div(FqElem x, FqElem y) const { return Mul(x, Inv(y)); }
  FqElem Pow(FqElem x, uint64_t e) const;
  // x^(p^k).
  FqElem Frobenius(FqElem x, int k = 1) const;

  FqElem PrimitiveElement() const { return primitive_; }

  // Membership in the subfield with p^d elements (d | m).
  bool InSubfield(FqElem x, int d) const { return Frobenius(x, d) == x; }
  // Degree of x over F_{p^e}: least k with x^(p^(e k)) = x.  e | m.
  int DegreeOver(FqElem x, int e) const;
  // Sorted elements of the subfield with p^d elements.  Throws
  // kSizeCapExceeded when p^d > kEnumerableCap.
  std::vector<FqElem> SubfieldElements(int d) const;
  // Image of x in F_{p^m} under the embedding that sends the generator of
  // sub to the numerically smallest root of sub's modulus.
  FqElem Embed(const FiniteField& sub, FqElem x) const;

  // Polynomial in 'a', highest power first: "a^2+a+1", "2a", "0".
  std::string ToString(FqElem x) const;
  // Inverse of ToString; also accepts '-' and integer constants ("-1").
  FqElem Parse(std::string_view s) const;

  FiniteField(uint64_t p, FpPoly modulus);  // use the factories

 private:
  FqElem MulGeneric(FqElem x, FqElem y) const;
  FqElem PowGeneric(FqElem x, uint64_t e) const;
  FqElem FindPrimitive() const;

  uint64_t p_;
  int m_;
  uint64_t size_;
  FpPoly modulus_;
  std::vector<uint64_t> pow_p_;             // p^i, i < m
  std::vector<std::vector<uint64_t>> frob_;  // x^p on the basis a^i, as digits
  std::vector<uint32_t> exp_, log_;
  FqElem primitive_ = 0;
  mutable std::mutex embed_mu_;
  mutable std::map<FpPoly, FqElem> embed_roots_;
};

}  // namespace dp2

#endif  // DP2_FINITE_FIELD_H_
