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

#include "dp2/reference_table.h"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "dp2/error.h"

namespace dp2 {

namespace {

struct RawRow {
  const char* label;
  int order;
  const char* eigenvalues;
  int rho;
  int geiser;
};

// w is a primitive cube root of unity and x<d> a primitive d-th root.
constexpr RawRow kPrinted[60] = {
    {"empty", 1, "1,1,1,1,1,1,1", 8, 49},
    {"A1", 2, "1,1,1,1,1,1,-1", 7, 31},
    {"A1^2", 2, "1,1,1,1,1,-1,-1", 6, 18},
    {"A2", 3, "1,1,1,1,1,w,w^2", 6, 53},
    {"A1^3", 2, "1,1,1,1,-1,-1,-1", 5, 9},
    {"A1^3", 2, "1,1,1,1,-1,-1,-1", 5, 10},
    {"A2xA1", 6, "1,1,1,1,-1,w,w^2", 5, 40},
    {"A3", 4, "1,1,1,1,i,-1,-i", 5, 33},
    {"A1^4", 2, "1,1,1,-1,-1,-1,-1", 4, 5},
    {"A1^4", 2, "1,1,1,-1,-1,-1,-1", 4, 6},
    {"A2xA1^2", 6, "1,1,1,-1,-1,w,w^2", 4, 27},
    {"A2^2", 3, "1,1,1,w,w^2,w,w^2", 4, 55},
    {"A3xA1", 4, "1,1,1,i,-1,-i,-1", 4, 21},
    {"A3xA1", 4, "1,1,1,i,-1,-i,-1", 4, 22},
    {"A4", 5, "1,1,1,x5,x5^2,x5^3,x5^4", 4, 54},
    {"D4", 6, "1,1,1,-1,-w^2,-1,-w", 4, 19},
    {"D4(a1)", 4, "1,1,1,i,-i,i,-i", 4, 50},
    {"A1^5", 2, "1,1,-1,-1,-1,-1,-1", 3, 3},
    {"A2xA1^3", 6, "1,1,-1,-1,-1,w,w^2", 3, 16},
    {"A2^2xA1", 6, "1,1,-1,w,w^2,w,w^2", 3, 45},
    {"A3xA1^2", 4, "1,1,i,-1,-i,-1,-1", 3, 13},
    {"A3xA1^2", 4, "1,1,i,-1,-i,-1,-1", 3, 14},
    {"A3xA2", 12, "1,1,i,-1,-i,w,w^2", 3, 42},
    {"A4xA1", 10, "1,1,x5,x5^2,x5^3,x5^4,-1", 3, 43},
    {"A5", 6, "1,1,-w^2,w,-1,w^2,-w", 3, 37},
    {"A5", 6, "1,1,-w^2,w,-1,w^2,-w", 3, 38},
    {"D4xA1", 6, "1,1,-1,-w^2,-1,-w,-1", 3, 11},
    {"D4(a1)xA1", 4, "1,1,i,-i,i,-i,-1", 3, 35},
    {"D5", 8, "1,1,-1,x8,x8^3,x8^5,x8^7", 3, 41},
    {"D5(a1)", 12, "1,1,i,-i,-w^2,-1,-w", 3, 34},
    {"A1^6", 2, "1,-1,-1,-1,-1,-1,-1", 2, 2},
    {"A2^3", 3, "1,w,w^2,w,w^2,w,w^2", 2, 60},
    {"A3xA1^3", 4, "1,i,-1,-i,-1,-1,-1", 2, 8},
    {"A3xA2xA1", 12, "1,i,-1,-i,w,w^2,-1", 2, 30},
    {"A3^2", 4, "1,i,-1,-i,i,-1,-i", 2, 28},
    {"A4xA2", 15, "1,x5,x5^2,x5^3,x5^4,w,w^2", 2, 59},
    {"A5xA1", 6, "1,-w^2,w,-1,w^2,-w,-1", 2, 25},
    {"A5xA1", 6, "1,-w^2,w,-1,w^2,-w,-1", 2, 26},
    {"A6", 7, "1,x7,x7^2,x7^3,x7^4,x7^5,x7^6", 2, 57},
    {"D4xA1^2", 6, "1,-1,-w^2,-1,-w,-1,-1", 2, 7},
    {"D5xA1", 8, "1,-1,x8,x8^3,x8^5,x8^7,-1", 2, 29},
    {"D5(a1)xA1", 12, "1,i,-i,-w^2,-1,-w,-1", 2, 23},
    {"D6", 10, "1,-1,-x5^3,-x5^4,-1,-x5,-x5^2", 2, 24},
    {"D6(a1)", 8, "1,i,-i,x8,x8^3,x8^5,x8^7", 2, 52},
    {"D6(a2)", 6, "1,-w^2,-1,-w,-w^2,-1,-w", 2, 20},
    {"E6", 12, "1,w,w^2,-iw,-iw^2,iw,iw^2", 2, 58},
    {"E6(a1)", 9, "1,x9,x9^2,x9^4,x9^5,x9^7,x9^8", 2, 56},
    {"E6(a2)", 6, "1,w,w^2,-w^2,-w,-w^2,-w", 2, 51},
    {"A1^7", 2, "-1,-1,-1,-1,-1,-1,-1", 1, 1},
    {"A3^2xA1", 2, "-1,i,-1,-i,i,-1,-i", 1, 17},
    {"A5xA2", 6, "w,w^2,-w^2,w,-1,w^2,-w", 1, 48},
    {"A7", 8, "x8,i,x8^3,-1,x8^5,-i,x8^7", 1, 44},
    {"D4xA1^3", 6, "-1,-1,-1,-1,-w^2,-1,-w", 1, 4},
    {"D6xA1", 10, "-1,-1,-1,-x5^3,-x5^4,-x5,-x5^2", 1, 15},
    {"D6(a2)xA1", 6, "-1,-w^2,-1,-w,-w^2,-1,-w", 1, 12},
    {"E7", 18, "-1,-x9^5,-x9^7,-x9^8,-x9,-x8^2,-x9^4", 1, 47},
    {"E7(a1)", 14, "-x7^4,-x7^5,-x7^6,-1,-x7,-x7^2,-x7^3", 1, 39},
    {"E7(a2)", 12, "-w^2,-1,-w,-iw,-iw^2,iw,iw^2", 1, 46},
    {"E7(a3)", 30, "-w^2,-1,-w,-x5^3,-x5^4,-x5,-x5^2", 1, 36},
    {"E7(a4)", 6, "-w^2,-1,-w,-w^2,-w,-w^2,-w", 1, 32},
};

int ParseInt(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    Fail(ErrorCode::kParse, "bad eigenvalue token '" + std::string(whole) + "'");
  }
  return v;
}

std::vector<RootOfUnity> ParseEigenvalueList(std::string_view list) {
  std::vector<RootOfUnity> out;
  size_t start = 0;
  while (start <= list.size()) {
    size_t comma = list.find(',', start);
    if (comma == std::string_view::npos) comma = list.size();
    out.push_back(ParseEigenvalueToken(list.substr(start, comma - start)));
    start = comma + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ReferenceRow> BuildRows(bool corrected) {
  std::vector<ReferenceRow> rows;
  for (int i = 0; i < 60; ++i) {
    const RawRow& r = kPrinted[i];
    ReferenceRow row;
    row.id = i + 1;
    row.carter_label = r.label;
    row.order = r.order;
    row.eigenvalues = ParseEigenvalueList(r.eigenvalues);
    row.rho = r.rho;
    row.geiser = r.geiser;
    rows.push_back(std::move(row));
  }
  if (corrected) {
    // Row 50 has eigenvalues +-i, so its order is 4.
    rows[49].order = 4;
    // Row 56 is printed with -x8^2 among primitive 18th roots; the
    // characteristic polynomial forces -x9^2.
    rows[55].eigenvalues =
        ParseEigenvalueList("-1,-x9^5,-x9^7,-x9^8,-x9,-x9^2,-x9^4");
  }
  return rows;
}

}  // namespace

std::string RootOfUnity::ToString() const { return std::to_string(n) + "^" + std::to_string(k); }

RootOfUnity MakeRootOfUnity(long long k, long long n) {
  if (n <= 0) Fail(ErrorCode::kInvalidArgument, "root of unity needs n > 0");
  k %= n;
  if (k < 0) k += n;
  const long long g = std::gcd(k, n);
  if (k == 0) return {1, 0};
  return {static_cast<int>(n / g), static_cast<int>(k / g)};
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
  return MakeRootOfUnity(static_cast<long long>(a.k) * b.n + static_cast<long long>(b.k) * a.n,
                         static_cast<long long>(a.n) * b.n);
}

RootOfUnity ParseEigenvalueToken(std::string_view token) {
  std::string_view s = token;
  // Accumulate the exponent as a fraction of a full turn.
  RootOfUnity value{1, 0};
  if (!s.empty() && s.front() == '-') {
    value = value * RootOfUnity{2, 1};
    s.remove_prefix(1);
  }
  if (!s.empty() && s.front() == 'i') {
    value = value * RootOfUnity{4, 1};
    s.remove_prefix(1);
    if (s.empty()) return value;
  }
  int base_n = 0;
  if (s == "1") return value;
  if (!s.empty() && s.front() == 'w') {
    base_n = 3;
    s.remove_prefix(1);
  } else if (!s.empty() && s.front() == 'x') {
    s.remove_prefix(1);
    const size_t caret = s.find('^');
    base_n = ParseInt(s.substr(0, caret), token);
    s = caret == std::string_view::npos ? std::string_view{} : s.substr(caret);
  } else {
    Fail(ErrorCode::kParse, "bad eigenvalue token '" + std::string(token) + "'");
  }
  int e = 1;
  if (!s.empty()) {
    if (s.front() != '^') Fail(ErrorCode::kParse, "bad eigenvalue token '" + std::string(token) + "'");
    e = ParseInt(s.substr(1), token);
  }
  if (base_n <= 0) Fail(ErrorCode::kParse, "bad eigenvalue token '" + std::string(token) + "'");
  return value * MakeRootOfUnity(e, base_n);
}

RootOfUnity ParseRootToken(std::string_view token) {
  const size_t caret = token.find('^');
  if (caret == std::string_view::npos) Fail(ErrorCode::kParse, "bad root token '" + std::string(token) + "'");
  const int n = ParseInt(token.substr(0, caret), token);
  const int k = ParseInt(token.substr(caret + 1), token);
  const RootOfUnity r = MakeRootOfUnity(k, n);
  if (r.n != n || r.k != k) Fail(ErrorCode::kParse, "root token not reduced: '" + std::string(token) + "'");
  return r;
}

const std::vector<ReferenceRow>& PrintedReferenceTable() {
  static const std::vector<ReferenceRow> rows = BuildRows(false);
  return rows;
}

const std::vector<ReferenceRow>& ReferenceTable() {
  static const std::vector<ReferenceRow> rows = BuildRows(true);
  return rows;
}

const std::vector<ReferenceErratum>& ReferenceErrata() {
  static const std::vector<ReferenceErratum> errata = {
      {50, "order", "2", "4"},
      {56, "eigenvalues", "-x8^2", "-x9^2"},
  };
  return errata;
}

}  // namespace dp2
