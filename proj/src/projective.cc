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

#include "dp2/projective.h"

#include <algorithm>
#include <set>

#include "dp2/error.h"

namespace dp2 {

ProjPoint NormalizePoint(const FiniteField& f, ProjPoint v) {
  auto it = std::find_if(v.begin(), v.end(), [](FqElem x) { return x != 0; });
  if (it == v.end()) Fail(ErrorCode::kInvalidArgument, "all coordinates are zero");
  const FqElem inv = f.Inv(*it);
  for (auto& x : v) x = f.Mul(x, inv);
  return v;
}

std::string PointToString(const FiniteField& f, const ProjPoint& pt) {
  std::string s = "(";
  for (size_t i = 0; i < pt.size(); ++i) {
    if (i) s += ':';
    s += f.ToString(pt[i]);
  }
  return s + ")";
}

ProjPoint FrobeniusPoint(const FiniteField& f, const ProjPoint& pt, int k) {
  ProjPoint r(pt.size());
  for (size_t i = 0; i < pt.size(); ++i) r[i] = f.Frobenius(pt[i], k);
  return r;
}

std::vector<ProjPoint> FrobeniusOrbit(const FiniteField& f, int e, const ProjPoint& pt) {
  std::vector<ProjPoint> orbit = {pt};
  ProjPoint cur = FrobeniusPoint(f, pt, e);
  while (cur != pt) {
    orbit.push_back(cur);
    if (static_cast<int>(orbit.size()) > f.degree()) Fail(ErrorCode::kInternal, "Frobenius orbit does not close");
    cur = FrobeniusPoint(f, cur, e);
  }
  return orbit;
}

void ForEachPoint(int dim, const std::vector<FqElem>& coords,
                  const std::function<bool(const ProjPoint&)>& visit) {
  // Position of the leading 1, from the last coordinate to the first.
  for (int lead = dim; lead >= 0; --lead) {
    const int free = dim - lead;
    ProjPoint pt(dim + 1, 0);
    pt[lead] = 1;
    std::vector<size_t> idx(free, 0);
    while (true) {
      for (int i = 0; i < free; ++i) pt[lead + 1 + i] = coords[idx[i]];
      if (!visit(pt)) return;
      int pos = free - 1;
      while (pos >= 0 && ++idx[pos] == coords.size()) idx[pos--] = 0;
      if (pos < 0) break;
    }
  }
}

std::vector<ClosedPoint> ClosedPointsOfDegree(const FiniteField& f, int e, int dim, int d) {
  if (dim < 1 || dim > 3) Fail(ErrorCode::kInvalidArgument, "ambient dimension must be 1, 2 or 3");
  if (d < 1 || e < 1 || f.degree() % (e * d) != 0) {
    Fail(ErrorCode::kInvalidArgument, "field does not contain F_{q^d}");
  }
  const std::vector<FqElem> coords = f.SubfieldElements(e * d);
  double count = 1;
  for (int i = 0; i < dim; ++i) count *= static_cast<double>(coords.size());
  if (count > static_cast<double>(1 << 24)) Fail(ErrorCode::kSizeCapExceeded, "too many points to enumerate");
  std::vector<ClosedPoint> out;
  ForEachPoint(dim, coords, [&](const ProjPoint& pt) {
    ProjPoint cur = FrobeniusPoint(f, pt, e);
    ClosedPoint cp;
    cp.orbit.push_back(pt);
    while (cur != pt) {
      if (cur < pt) return true;  // not the orbit minimum
      cp.orbit.push_back(cur);
      cur = FrobeniusPoint(f, cur, e);
    }
    if (static_cast<int>(cp.orbit.size()) == d) {
      cp.degree = d;
      out.push_back(std::move(cp));
    }
    return true;
  });
  return out;
}

namespace {

// Row-echelon form in place; returns the pivot columns.
std::vector<int> Echelon(const FiniteField& f, std::vector<std::vector<FqElem>>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const size_t cols = m[0].size();
  size_t row = 0;
  for (size_t c = 0; c < cols && row < m.size(); ++c) {
    size_t piv = row;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    const FqElem inv = f.Inv(m[row][c]);
    for (auto& x : m[row]) x = f.Mul(x, inv);
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const FqElem factor = m[r][c];
      for (size_t k = c; k < cols; ++k) m[r][k] = f.Sub(m[r][k], f.Mul(factor, m[row][k]));
    }
    pivots.push_back(static_cast<int>(c));
    ++row;
  }
  return pivots;
}

}  // namespace

int MatrixRank(const FiniteField& f, std::vector<std::vector<FqElem>> m) {
  return static_cast<int>(Echelon(f, m).size());
}

std::vector<std::vector<FqElem>> KernelBasis(const FiniteField& f, std::vector<std::vector<FqElem>> m) {
  if (m.empty()) return {};
  const size_t cols = m[0].size();
  const std::vector<int> pivots = Echelon(f, m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<FqElem>> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FqElem> v(cols, 0);
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.Neg(m[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

FqElem Det3(const FiniteField& f, const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  auto minor = [&](int i, int j) { return f.Sub(f.Mul(b[i], c[j]), f.Mul(b[j], c[i])); };
  FqElem d = f.Mul(a[0], minor(1, 2));
  d = f.Sub(d, f.Mul(a[1], minor(0, 2)));
  return f.Add(d, f.Mul(a[2], minor(0, 1)));
}

std::vector<FqElem> ConicMonomials(const FiniteField& f, const ProjPoint& p) {
  const FqElem x = p[0], y = p[1], z = p[2];
  return {f.Mul(x, x), f.Mul(x, y), f.Mul(y, y), f.Mul(x, z), f.Mul(y, z), f.Mul(z, z)};
}

std::vector<FqElem> CubicMonomials(const FiniteField& f, const ProjPoint& p) {
  const FqElem x = p[0], y = p[1], z = p[2];
  const FqElem xx = f.Mul(x, x), yy = f.Mul(y, y), zz = f.Mul(z, z);
  return {f.Mul(xx, x), f.Mul(xx, y), f.Mul(xx, z), f.Mul(x, yy), f.Mul(f.Mul(x, y), z),
          f.Mul(x, zz), f.Mul(yy, y), f.Mul(yy, z), f.Mul(y, zz), f.Mul(zz, z)};
}

std::vector<std::vector<FqElem>> CubicGradientRows(const FiniteField& f, const ProjPoint& p) {
  const FqElem x = p[0], y = p[1], z = p[2];
  const FqElem xx = f.Mul(x, x), yy = f.Mul(y, y), zz = f.Mul(z, z);
  const FqElem xy = f.Mul(x, y), xz = f.Mul(x, z), yz = f.Mul(y, z);
  const FqElem two = f.FromInt(2), three = f.FromInt(3);
  // Monomials: x^3, x^2y, x^2z, xy^2, xyz, xz^2, y^3, y^2z, yz^2, z^3.
  std::vector<FqElem> dx = {f.Mul(three, xx), f.Mul(two, xy), f.Mul(two, xz), yy, yz, zz, 0, 0, 0, 0};
  std::vector<FqElem> dy = {0, xx, 0, f.Mul(two, xy), xz, 0, f.Mul(three, yy), f.Mul(two, yz), zz, 0};
  std::vector<FqElem> dz = {0, 0, xx, 0, xy, f.Mul(two, xz), 0, yy, f.Mul(two, yz), f.Mul(three, zz)};
  return {dx, dy, dz};
}

bool SixOnConic(const FiniteField& f, const std::vector<const ProjPoint*>& six) {
  std::vector<std::vector<FqElem>> m;
  for (const ProjPoint* p : six) m.push_back(ConicMonomials(f, *p));
  return MatrixRank(f, std::move(m)) < 6;
}

std::string GeneralPositionReport::ToString() const {
  if (ok) return "general position";
  std::string s = violation + " at points";
  for (int i : indices) s += " " + std::to_string(i);
  return s;
}

GeneralPositionReport CheckGeneralPosition(const FiniteField& f, const std::vector<ProjPoint>& in) {
  if (in.size() > 8) Fail(ErrorCode::kInvalidArgument, "at most eight points");
  std::vector<ProjPoint> pts;
  for (const auto& p : in) {
    if (p.size() != 3) Fail(ErrorCode::kInvalidArgument, "plane points need three coordinates");
    pts.push_back(NormalizePoint(f, p));
  }
  std::set<ProjPoint> seen(pts.begin(), pts.end());
  if (seen.size() != pts.size()) Fail(ErrorCode::kInvalidArgument, "duplicate points");

  GeneralPositionReport rep;
  const int n = static_cast<int>(pts.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (Det3(f, pts[a], pts[b], pts[c]) == 0) {
          rep.ok = false;
          rep.violation = "collinear";
          rep.indices = {a, b, c};
          return rep;
        }
  if (n >= 6) {
    std::vector<int> idx(6);
    // Enumerate 6-subsets in lexicographic order.
    for (int mask = 0; mask < (1 << n); ++mask) {
      if (__builtin_popcount(mask) != 6) continue;
      std::vector<const ProjPoint*> six;
      std::vector<int> ids;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) {
          six.push_back(&pts[i]);
          ids.push_back(i);
        }
      if (SixOnConic(f, six)) {
        rep.ok = false;
        rep.violation = "coconic";
        rep.indices = ids;
        return rep;
      }
    }
  }
  if (n == 8) return CheckSingularCubics(f, pts);
  return rep;
}

GeneralPositionReport CheckSingularCubics(const FiniteField& f, const std::vector<ProjPoint>& pts) {
  GeneralPositionReport rep;
  if (pts.size() != 8) Fail(ErrorCode::kInvalidArgument, "singular cubic test needs eight points");
  for (int i = 0; i < 8; ++i) {
    std::vector<std::vector<FqElem>> m;
    for (const auto& p : pts) m.push_back(CubicMonomials(f, p));
    for (auto& row : CubicGradientRows(f, pts[i])) m.push_back(std::move(row));
    auto kernel = KernelBasis(f, std::move(m));
    if (!kernel.empty()) {
      rep.ok = false;
      rep.violation = "singular cubic";
      rep.indices = {i};
      rep.kernel = kernel[0];
      return rep;
    }
  }
  return rep;
}

}  // namespace dp2
