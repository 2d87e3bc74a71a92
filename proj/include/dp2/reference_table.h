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

// The published table of the 60 conjugacy classes of W(E7) (numbering,
// Carter label, order, eigenvalues on K^perp, invariant Picard rank, Geiser
// partner), kept verbatim, together with the two known misprints and the
// corrected table used for matching.

#ifndef DP2_REFERENCE_TABLE_H_
#define DP2_REFERENCE_TABLE_H_

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace dp2 {

// exp(2 pi i k / n) with gcd(k, n) = 1 and 0 <= k < n; the eigenvalue 1 is
// (1, 0).  Printed as "n^k".
struct RootOfUnity {
  int n = 1;
  int k = 0;

  auto operator<=>(const RootOfUnity&) const = default;
  std::string ToString() const;
};

// Reduces k/n to lowest terms modulo 1.
RootOfUnity MakeRootOfUnity(long long k, long long n);
RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);

// Parses the table's notation: an optional leading '-', an optional 'i',
// then one of "1", "w" (a primitive cube root), "x<d>" (a primitive d-th
// root), each with an optional "^e".  Examples: "-w^2", "-iw", "x8^3", "-1".
RootOfUnity ParseEigenvalueToken(std::string_view token);

// Parses "n^k" tokens as emitted by RootOfUnity::ToString.
RootOfUnity ParseRootToken(std::string_view token);

struct ReferenceRow {
  int id = 0;
  std::string carter_label;
  int order = 0;
  std::vector<RootOfUnity> eigenvalues;  // 7 entries, sorted
  int rho = 0;
  int geiser = 0;
};

struct ReferenceErratum {
  int id;
  std::string field;
  std::string printed;
  std::string corrected;
};

// Rows exactly as printed.
const std::vector<ReferenceRow>& PrintedReferenceTable();
// Printed rows with the errata applied.
const std::vector<ReferenceRow>& ReferenceTable();
const std::vector<ReferenceErratum>& ReferenceErrata();

}  // namespace dp2

#endif  // DP2_REFERENCE_TABLE_H_
