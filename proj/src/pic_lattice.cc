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

#include "dp2/pic_lattice.h"

#include <sstream>

#include "dp2/error.h"

namespace dp2 {

DivisorClass DivisorClass::Line() {
  DivisorClass v;
  v.c_[0] = 1;
  return v;
}

DivisorClass DivisorClass::Exceptional(int i) {
  if (i < 1 || i > 7) Fail(ErrorCode::kInvalidArgument, "E_i needs 1 <= i <= 7");
  DivisorClass v;
  v.c_[i] = 1;
  return v;
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
  DivisorClass r = *this;
  r += o;
  return r;
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
  DivisorClass r = *this;
  r -= o;
  return r;
}

DivisorClass DivisorClass::operator-() const {
  DivisorClass r;
  for (int k = 0; k < kPicRank; ++k) r.c_[k] = -c_[k];
  return r;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  for (int k = 0; k < kPicRank; ++k) c_[k] += o.c_[k];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
  for (int k = 0; k < kPicRank; ++k) c_[k] -= o.c_[k];
  return *this;
}

DivisorClass operator*(int k, const DivisorClass& v) {
  DivisorClass r;
  for (int i = 0; i < kPicRank; ++i) r.c_[i] = k * v.c_[i];
  return r;
}

std::string DivisorClass::ToString() const {
  std::ostringstream os;
  os << '(' << c_[0] << ';';
  for (int k = 1; k < kPicRank; ++k) os << (k > 1 ? "," : "") << c_[k];
  os << ')';
  return os.str();
}

int Intersect(const DivisorClass& a, const DivisorClass& b) {
  int s = a[0] * b[0];
  for (int k = 1; k < kPicRank; ++k) s -= a[k] * b[k];
  return s;
}

DivisorClass CanonicalClass() {
  return DivisorClass({-3, 1, 1, 1, 1, 1, 1, 1});
}

namespace {

// Visits every class with |d| <= 3 and |m_i| <= 2 in lexicographic order.
template <typename Visit>
void ForEachBoundedClass(Visit&& visit) {
  DivisorClass v;
  v[0] = -3;
  for (int k = 1; k < kPicRank; ++k) v[k] = -2;
  while (true) {
    visit(v);
    int k = kPicRank - 1;
    while (k >= 0) {
      const int hi = (k == 0) ? 3 : 2;
      if (v[k] < hi) {
        ++v[k];
        break;
      }
      v[k] = (k == 0) ? -3 : -2;
      --k;
    }
    if (k < 0) return;
  }
}

std::vector<DivisorClass> Census(int square, int dot_k) {
  const DivisorClass k = CanonicalClass();
  std::vector<DivisorClass> out;
  ForEachBoundedClass([&](const DivisorClass& v) {
    if (Intersect(v, v) == square && Intersect(v, k) == dot_k) out.push_back(v);
  });
  return out;
}

}  // namespace

const std::vector<DivisorClass>& ExceptionalClasses() {
  static const std::vector<DivisorClass> classes = Census(-1, -1);
  return classes;
}

const std::vector<DivisorClass>& Roots() {
  static const std::vector<DivisorClass> roots = Census(-2, 0);
  return roots;
}

int ArithmeticGenus(const DivisorClass& c) {
  const int s = Intersect(c, c) + Intersect(c, CanonicalClass());
  if (s % 2 != 0) {
    Fail(ErrorCode::kInvalidArgument,
         "C.(C+K) is odd for " + c.ToString() + "; not a curve class");
  }
  return 1 + s / 2;
}

DivisorClass GeiserImage(const DivisorClass& v) {
  const DivisorClass k = CanonicalClass();
  return Intersect(v, k) * k - v;
}

void to_json(nlohmann::json& j, const DivisorClass& v) {
  j = nlohmann::json::array();
  for (int k = 0; k < kPicRank; ++k) j.push_back(v[k]);
}

void from_json(const nlohmann::json& j, DivisorClass& v) {
  if (!j.is_array() || j.size() != kPicRank) {
    Fail(ErrorCode::kParse, "divisor class must be an array of 8 integers");
  }
  for (int k = 0; k < kPicRank; ++k) v[k] = j.at(k).get<int>();
}

}  // namespace dp2
