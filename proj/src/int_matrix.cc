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

#include "dp2/int_matrix.h"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "dp2/error.h"

namespace dp2 {

IntMatrix8 IntMatrix8::Identity() {
  IntMatrix8 m;
  for (int i = 0; i < kDim; ++i) m(i, i) = 1;
  return m;
}

IntMatrix8 IntMatrix8::operator*(const IntMatrix8& o) const {
  IntMatrix8 r;
  for (int i = 0; i < kDim; ++i) {
    for (int k = 0; k < kDim; ++k) {
      const int x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < kDim; ++j) r(i, j) += x * o(k, j);
    }
  }
  return r;
}

IntMatrix8 IntMatrix8::Transposed() const {
  IntMatrix8 r;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) r(j, i) = (*this)(i, j);
  return r;
}

long long IntMatrix8::Trace() const {
  long long t = 0;
  for (int i = 0; i < kDim; ++i) t += (*this)(i, i);
  return t;
}

int IntMatrix8::MaxAbsEntry() const {
  int m = 0;
  for (int x : a_) m = std::max(m, std::abs(x));
  return m;
}

IntMatrix8 IntMatrix8::Power(unsigned e) const {
  IntMatrix8 result = Identity();
  IntMatrix8 base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::vector<int> IntMatrix8::Flatten() const {
  return std::vector<int>(a_.begin(), a_.end());
}

IntMatrix8 IntMatrix8::FromFlat(const std::vector<int>& flat) {
  if (flat.size() != static_cast<size_t>(kDim * kDim)) {
    Fail(ErrorCode::kParse, "matrix needs 64 entries");
  }
  IntMatrix8 m;
  for (int i = 0; i < kDim * kDim; ++i) m.a_[i] = flat[i];
  return m;
}

BigInt BareissDeterminant(std::vector<std::vector<BigInt>> m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        // Exact by Sylvester's identity.
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

IntPoly DetOneMinusScaled(const IntMatrix8& m) {
  constexpr int n = IntMatrix8::kDim;
  // Values f(s) = det(I - s M) at s = 0..n.
  std::vector<BigInt> values(n + 1);
  for (int s = 0; s <= n; ++s) {
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[i][j] = (i == j ? 1 : 0) - s * m(i, j);
    values[s] = BareissDeterminant(std::move(a));
  }
  // Forward differences give Newton coefficients Delta^k f(0) / k!, integers
  // because f has integer coefficients.
  std::vector<BigInt> diff = values;
  std::vector<BigInt> newton(n + 1);
  BigInt factorial = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) factorial *= k;
    if (diff[0] % factorial != 0) {
      Fail(ErrorCode::kInternal, "non-integral Newton coefficient");
    }
    newton[k] = diff[0] / factorial;
    for (int i = 0; i + 1 < static_cast<int>(diff.size()); ++i) {
      diff[i] = diff[i + 1] - diff[i];
    }
    diff.pop_back();
  }
  // sum_k newton[k] * s(s-1)...(s-k+1), expanded.
  IntPoly result(n + 1, 0);
  IntPoly falling = {1};
  for (int k = 0; k <= n; ++k) {
    for (size_t i = 0; i < falling.size(); ++i) result[i] += newton[k] * falling[i];
    falling = PolyMul(falling, IntPoly{-k, 1});
  }
  PolyTrim(result);
  return result;
}

IntPoly CharacteristicPolynomial(const IntMatrix8& m) {
  // det(tI - M) = t^8 det(I - M/t): reverse the coefficients of det(I - sM).
  IntPoly d = DetOneMinusScaled(m);
  d.resize(IntMatrix8::kDim + 1, 0);
  IntPoly out(d.rbegin(), d.rend());
  return out;
}

void PolyTrim(IntPoly& a) {
  while (a.size() > 1 && a.back() == 0) a.pop_back();
}

IntPoly PolyMul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

std::optional<IntPoly> PolyDivideExact(const IntPoly& a_in, const IntPoly& monic) {
  IntPoly a = a_in;
  PolyTrim(a);
  const size_t db = monic.size() - 1;
  if (monic.back() != 1) Fail(ErrorCode::kInternal, "divisor must be monic");
  if (a.size() - 1 < db) {
    if (a.size() == 1 && a[0] == 0) return IntPoly{0};
    return std::nullopt;
  }
  IntPoly q(a.size() - db, 0);
  for (size_t i = a.size(); i-- > db;) {
    const BigInt c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (size_t j = 0; j <= db; ++j) a[i - db + j] -= c * monic[j];
  }
  for (size_t i = 0; i < db; ++i)
    if (a[i] != 0) return std::nullopt;
  return q;
}

std::string PolyToString(const IntPoly& a, char var) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] == 0) continue;
    BigInt c = a[i];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    if (c < 0) c = -c;
    if (c != 1 || i == 0) os << c;
    if (i > 0) os << var;
    if (i > 1) os << '^' << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

int EulerPhi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

constexpr int kMaxCyclotomicIndex = 64;

std::vector<IntPoly> BuildCyclotomicTable() {
  std::vector<IntPoly> table(kMaxCyclotomicIndex + 1);
  for (int n = 1; n <= kMaxCyclotomicIndex; ++n) {
    // t^n - 1 = prod_{d | n} Phi_d.
    IntPoly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d) {
      if (n % d == 0) p = *PolyDivideExact(p, table[d]);
    }
    table[n] = std::move(p);
  }
  return table;
}

}  // namespace

const IntPoly& Cyclotomic(int n) {
  static const std::vector<IntPoly> table = BuildCyclotomicTable();
  if (n < 1 || n > kMaxCyclotomicIndex) {
    Fail(ErrorCode::kInvalidArgument, "cyclotomic index out of range");
  }
  return table[n];
}

std::optional<std::map<int, int>> CyclotomicFactorization(IntPoly poly) {
  PolyTrim(poly);
  if (poly.back() != 1) return std::nullopt;
  std::map<int, int> factors;
  int degree = static_cast<int>(poly.size()) - 1;
  // phi(n) <= 16 already forces n <= 60.
  const int max_n = std::min(kMaxCyclotomicIndex, 2 * degree * degree + 2);
  for (int n = 1; n <= max_n && degree > 0; ++n) {
    if (EulerPhi(n) > degree) continue;
    const IntPoly& phi = Cyclotomic(n);
    while (true) {
      auto q = PolyDivideExact(poly, phi);
      if (!q) break;
      poly = *q;
      degree = static_cast<int>(poly.size()) - 1;
      ++factors[n];
    }
  }
  if (degree != 0 || poly[0] != 1) return std::nullopt;
  return factors;
}

}  // namespace dp2
