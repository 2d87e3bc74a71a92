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

#include "dp2/conic_bundle.h"

#include <algorithm>
#include <deque>
#include <set>

#include "dp2/class_table.h"
#include "dp2/error.h"
#include "dp2/weyl_e7.h"

namespace dp2 {

CBClass CBSection() { return {1, 0, 0, 0, 0, 0, 0, 0}; }
CBClass CBFibre() { return {0, 1, 0, 0, 0, 0, 0, 0}; }

CBClass CBExceptional(int i) {
  if (i < 1 || i > 6) Fail(ErrorCode::kInvalidArgument, "E_i needs 1 <= i <= 6");
  CBClass v{};
  v[i + 1] = 1;
  return v;
}

CBClass CBCombination(int c, int f, const std::array<int, 6>& e) {
  return {c, f, e[0], e[1], e[2], e[3], e[4], e[5]};
}

std::string CBToString(const CBClass& v) {
  static const char* kNames[8] = {"C", "F", "E1", "E2", "E3", "E4", "E5", "E6"};
  std::string s;
  for (int i = 0; i < 8; ++i) {
    if (v[i] == 0) continue;
    const int a = std::abs(v[i]);
    if (s.empty()) {
      if (v[i] < 0) s += "-";
    } else {
      s += v[i] < 0 ? " - " : " + ";
    }
    if (a != 1) s += std::to_string(a);
    s += kNames[i];
  }
  return s.empty() ? "0" : s;
}

int IntersectCB(const CBClass& a, const CBClass& b) {
  int s = a[0] * b[1] + a[1] * b[0];
  for (int i = 2; i < 8; ++i) s -= a[i] * b[i];
  return s;
}

CBClass CanonicalClassCB() { return {-2, -2, 1, 1, 1, 1, 1, 1}; }
CBClass TwoSectionD() { return {2, 1, -1, -1, -1, -1, -1, -1}; }
CBClass DivisorR() { return {2, 3, -1, -1, -1, -1, -1, -1}; }

WD6Element::WD6Element() : perm_{1, 2, 3, 4, 5, 6} {}

WD6Element::WD6Element(unsigned flips, const std::array<int, 6>& perm) : flips_(flips), perm_(perm) {
  if (flips >= 64 || __builtin_popcount(flips) % 2 != 0) {
    Fail(ErrorCode::kInvalidArgument, "flip set must be an even subset of {1..6}");
  }
  std::array<int, 6> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 6>{1, 2, 3, 4, 5, 6}) Fail(ErrorCode::kInvalidArgument, "not a permutation of {1..6}");
}

WD6Element WD6Element::Iota(unsigned flips) { return WD6Element(flips, {1, 2, 3, 4, 5, 6}); }
WD6Element WD6Element::Permutation(const std::array<int, 6>& perm) { return WD6Element(0, perm); }

WD6Element WD6Element::Parse(std::string_view text) {
  unsigned flips = 0;
  std::array<int, 6> perm{1, 2, 3, 4, 5, 6};
  size_t pos = 0;
  auto bad = [&](const std::string& why) {
    Fail(ErrorCode::kParse, "bad W(D6) element '" + std::string(text) + "': " + why);
  };
  if (pos < text.size() && text[pos] == 'i') {
    ++pos;
    if (pos >= text.size() || text[pos] != '{') bad("expected '{' after 'i'");
    ++pos;
    while (pos < text.size() && text[pos] != '}') {
      const char c = text[pos];
      if (c >= '1' && c <= '6') {
        const unsigned bit = 1u << (c - '1');
        if (flips & bit) bad("repeated index in flip set");
        flips |= bit;
      } else if (c != ',' && c != ' ') {
        bad("unexpected character in flip set");
      }
      ++pos;
    }
    if (pos >= text.size()) bad("missing '}'");
    ++pos;
  }
  WD6Element result(0, perm);
  std::set<int> used;
  while (pos < text.size()) {
    if (text[pos] != '(') bad("expected '('");
    size_t close = text.find(')', pos);
    if (close == std::string_view::npos) bad("missing ')'");
    std::vector<int> cycle;
    for (size_t k = pos + 1; k < close; ++k) {
      const char c = text[k];
      if (c < '1' || c > '6') bad("cycle entries must be digits 1..6");
      if (!used.insert(c - '0').second) bad("cycles must be disjoint");
      cycle.push_back(c - '0');
    }
    for (size_t k = 0; k < cycle.size(); ++k) perm[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
    pos = close + 1;
  }
  if (__builtin_popcount(flips) % 2 != 0) bad("flip set must have even size");
  return WD6Element(flips, perm);
}

std::string WD6Element::ToString() const {
  std::string s = "i{";
  bool first = true;
  for (int i = 0; i < 6; ++i)
    if (flips_ >> i & 1) {
      if (!first) s += ',';
      s += std::to_string(i + 1);
      first = false;
    }
  s += '}';
  bool seen[7] = {};
  for (int i = 1; i <= 6; ++i) {
    if (seen[i] || perm_[i - 1] == i) continue;
    s += '(';
    for (int j = i; !seen[j]; j = perm_[j - 1]) {
      seen[j] = true;
      s += static_cast<char>('0' + j);
    }
    s += ')';
  }
  return s;
}

CBClass WD6Element::Apply(const CBClass& v) const {
  // sigma: E_i -> E_sigma(i).
  CBClass w = v;
  for (int i = 0; i < 6; ++i) w[2 + perm_[i] - 1] = v[2 + i];
  // iota_S: C -> C + |S|/2 F - sum_S E_i, E_i -> F - E_i for i in S.
  CBClass r = w;
  const int half = __builtin_popcount(flips_) / 2;
  r[1] += half * w[0];
  for (int i = 0; i < 6; ++i) {
    if (!(flips_ >> i & 1)) continue;
    r[2 + i] = -w[0] - w[2 + i];
    r[1] += w[2 + i];
  }
  return r;
}

WD6Element WD6Element::operator*(const WD6Element& o) const {
  // iota_S s iota_T t = iota_{S xor s(T)} s t.
  unsigned moved = 0;
  for (int i = 0; i < 6; ++i)
    if (o.flips_ >> i & 1) moved |= 1u << (perm_[i] - 1);
  std::array<int, 6> comp;
  for (int i = 0; i < 6; ++i) comp[i] = perm_[o.perm_[i] - 1];
  return WD6Element(flips_ ^ moved, comp);
}

IntMatrix8 WD6Element::Matrix() const {
  IntMatrix8 m;
  for (int c = 0; c < 8; ++c) {
    CBClass e{};
    e[c] = 1;
    const CBClass img = Apply(e);
    for (int r = 0; r < 8; ++r) m(r, c) = img[r];
  }
  return m;
}

std::vector<WD6Element> EnumerateWD6() {
  std::vector<WD6Element> gens = {WD6Element::Iota(0b11)};
  for (int i = 0; i < 5; ++i) {
    std::array<int, 6> p{1, 2, 3, 4, 5, 6};
    std::swap(p[i], p[i + 1]);
    gens.push_back(WD6Element::Permutation(p));
  }
  std::set<WD6Element> seen = {WD6Element()};
  std::deque<WD6Element> queue = {WD6Element()};
  while (!queue.empty()) {
    const WD6Element g = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      WD6Element h = s * g;
      if (seen.insert(h).second) queue.push_back(h);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<int> FibrePointDegrees(const WD6Element& g) {
  std::vector<int> out;
  bool seen[7] = {};
  for (int i = 1; i <= 6; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = g.perm()[j - 1]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<CBClass> SectionsSelfInt(int target, const std::vector<CBClass>& constraints) {
  if (target < -3 || target > 0) Fail(ErrorCode::kInvalidArgument, "target must lie in [-3, 0]");
  std::vector<CBClass> out;
  for (int a = 0; a <= 3; ++a)
    for (int mask = 0; mask < 64; ++mask) {
      std::array<int, 6> e;
      // b_1 is the most significant bit so that the order is (a, b_1..b_6).
      for (int i = 0; i < 6; ++i) e[i] = -((mask >> (5 - i)) & 1);
      const CBClass v = CBCombination(1, a, e);
      if (IntersectCB(v, v) != target) continue;
      if (std::all_of(constraints.begin(), constraints.end(), [&](const CBClass& c) { return IntersectCB(v, c) >= 0; })) {
        out.push_back(v);
      }
    }
  return out;
}

std::vector<CBClass> NegativeTwoSections() {
  const auto sections = SectionsSelfInt(-1, {});
  const CBClass d = TwoSectionD();
  std::vector<CBClass> out;
  for (int a = 0; a <= 6; ++a)
    for (int code = 0; code < 729; ++code) {
      std::array<int, 6> e;
      int c = code;
      for (int i = 5; i >= 0; --i) {
        e[i] = -(c % 3);
        c /= 3;
      }
      const CBClass h = CBCombination(2, a, e);
      if (IntersectCB(h, h) >= 0) continue;
      if (!std::all_of(sections.begin(), sections.end(), [&](const CBClass& s) { return IntersectCB(h, s) >= 0; })) continue;
      if (h != d && IntersectCB(h, d) < 0) continue;
      out.push_back(h);
    }
  return out;
}

DivisorClass EmbedIntoE7(const CBClass& v) {
  DivisorClass r;
  // C -> L - E1
  r[0] += v[0];
  r[1] -= v[0];
  // F -> L - E2
  r[0] += v[1];
  r[2] -= v[1];
  for (int i = 1; i <= 5; ++i) r[i + 2] += v[i + 1];
  // E6 -> L - E1 - E2
  r[0] += v[7];
  r[1] -= v[7];
  r[2] -= v[7];
  return r;
}

CBClass EmbedInverse(const DivisorClass& v) {
  // L = C + F - E6, E1 = F - E6, E2 = C - E6, E_k = E_{k-2} (k >= 3).
  CBClass r{};
  auto add = [&](const CBClass& b, int k) {
    for (int i = 0; i < 8; ++i) r[i] += k * b[i];
  };
  add({1, 1, 0, 0, 0, 0, 0, -1}, v[0]);
  add({0, 1, 0, 0, 0, 0, 0, -1}, v[1]);
  add({1, 0, 0, 0, 0, 0, 0, -1}, v[2]);
  for (int k = 3; k <= 7; ++k) add(CBExceptional(k - 2), v[k]);
  return r;
}

IntMatrix8 EmbeddingMatrix() {
  IntMatrix8 m;
  for (int c = 0; c < 8; ++c) {
    CBClass e{};
    e[c] = 1;
    const DivisorClass img = EmbedIntoE7(e);
    for (int r = 0; r < 8; ++r) m(r, c) = img[r];
  }
  return m;
}

IntMatrix8 TransportToE7(const WD6Element& g) {
  IntMatrix8 m;
  for (int c = 0; c < 8; ++c) {
    DivisorClass basis;
    basis[c] = 1;
    const DivisorClass img = EmbedIntoE7(g.Apply(EmbedInverse(basis)));
    for (int r = 0; r < 8; ++r) m(r, c) = img[r];
  }
  return m;
}

int WD6ClassInE7(const ClassTable& table, const WD6Element& g) { return table.Classify(Isometry(TransportToE7(g))); }

const std::vector<ConicBundleCase>& ConicBundleCases() {
  static const std::vector<ConicBundleCase> kCases = {
      {31, "i{1,2,3,4,5,6}", {1, 1, 1, 1, 1, 1}},
      {35, "i{1,2,3,5}(34)(56)", {2, 2, 1, 1}},
      {40, "i{1,2,3,4,5,6}(456)", {3, 1, 1, 1}},
      {43, "i{1,2,3,4,5,6}(23456)", {5, 1}},
      {44, "i{1,3}(12)(3456)", {4, 2}},
      {45, "i{1,2,3,4,5,6}(123)(456)", {3, 3}},
  };
  return kCases;
}

}  // namespace dp2
