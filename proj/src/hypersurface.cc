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

#include "dp2/hypersurface.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "dp2/error.h"

namespace dp2 {

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

constexpr uint64_t kMaxPoints = uint64_t{1} << 24;

// Polynomial in a few local variables: exponent vector -> coefficient.
using LocalPoly = std::map<std::vector<int>, FqElem>;

LocalPoly Multiply(const FiniteField& f, const LocalPoly& a, const LocalPoly& b) {
  LocalPoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      FqElem& slot = r[e];
      slot = f.Add(slot, f.Mul(ca, cb));
    }
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

// F(p + sum_j y_j dirs[j]) as a polynomial in y.
LocalPoly LocalExpansion(const HyperSurface& s, const ProjPoint& p, const std::vector<ProjPoint>& dirs) {
  const FiniteField& f = s.field();
  const size_t k = dirs.size();
  std::vector<LocalPoly> coord(s.num_vars());
  for (int i = 0; i < s.num_vars(); ++i) {
    if (p[i] != 0) coord[i][std::vector<int>(k, 0)] = p[i];
    for (size_t j = 0; j < k; ++j)
      if (dirs[j][i] != 0) {
        std::vector<int> e(k, 0);
        e[j] = 1;
        coord[i][e] = dirs[j][i];
      }
  }
  LocalPoly total;
  for (const Term& t : s.terms()) {
    LocalPoly m = {{std::vector<int>(k, 0), t.coeff}};
    for (int i = 0; i < s.num_vars(); ++i)
      for (int r = 0; r < t.exponents[i]; ++r) m = Multiply(f, m, coord[i]);
    for (const auto& [e, c] : m) {
      FqElem& slot = total[e];
      slot = f.Add(slot, c);
    }
  }
  std::erase_if(total, [](const auto& kv) { return kv.second == 0; });
  return total;
}

// Multiplicity of the root t of the univariate polynomial c (low to high).
int RootMultiplicity(const FiniteField& f, std::vector<FqElem> c, FqElem t) {
  int mult = 0;
  while (c.size() > 1) {
    // Synthetic division by (x - t).
    std::vector<FqElem> quot(c.size() - 1);
    FqElem acc = 0;
    for (size_t i = c.size(); i-- > 0;) {
      acc = f.Add(f.Mul(acc, t), c[i]);
      if (i > 0) quot[i - 1] = acc;
    }
    if (acc != 0) break;
    ++mult;
    c = std::move(quot);
  }
  return mult;
}

// Roots in P^1(ext) of the binary form sum_i c[i] x^(m-i) y^i.
std::vector<TangentDirection> BinaryFormRoots(const FiniteField& ext, const std::vector<FqElem>& c) {
  std::vector<TangentDirection> out;
  const int m = static_cast<int>(c.size()) - 1;
  // (x : y) = (1 : 0) is a root of multiplicity = number of leading zeros.
  int lead = 0;
  while (lead <= m && c[lead] == 0) ++lead;
  if (lead > m) Fail(ErrorCode::kInvalidArgument, "zero binary form");
  // h(t, 1) = sum_i c[i] t^(m-i), as a polynomial low to high.
  std::vector<FqElem> uni(m + 1);
  for (int i = 0; i <= m; ++i) uni[m - i] = c[i];
  std::vector<std::pair<ProjPoint, int>> roots;
  for (uint64_t t = 0; t < ext.size(); ++t) {
    int mult = RootMultiplicity(ext, uni, t);
    if (mult > 0) out.push_back({{t, 1}, mult});
  }
  if (lead > 0) out.push_back({{1, 0}, lead});
  return out;
}

}  // namespace

HyperSurface::HyperSurface(std::shared_ptr<const FiniteField> field, std::vector<Term> terms)
    : field_(std::move(field)) {
  if (terms.empty()) Fail(ErrorCode::kInvalidArgument, "equation has no terms");
  num_vars_ = static_cast<int>(terms[0].exponents.size());
  if (num_vars_ != 3 && num_vars_ != 4) Fail(ErrorCode::kInvalidArgument, "need 3 or 4 variables");
  std::map<std::vector<int>, FqElem> merged;
  for (const Term& t : terms) {
    if (static_cast<int>(t.exponents.size()) != num_vars_) {
      Fail(ErrorCode::kInvalidArgument, "terms have different numbers of variables");
    }
    for (int e : t.exponents)
      if (e < 0) Fail(ErrorCode::kInvalidArgument, "negative exponent");
    const int deg = std::accumulate(t.exponents.begin(), t.exponents.end(), 0);
    if (t.coeff == 0) continue;
    if (degree_ == 0) degree_ = deg;
    if (deg != degree_) Fail(ErrorCode::kInvalidArgument, "equation is not homogeneous");
    FqElem& slot = merged[t.exponents];
    slot = field_->Add(slot, t.coeff);
  }
  for (auto& [e, c] : merged)
    if (c != 0) terms_.push_back({c, e});
  if (terms_.empty()) Fail(ErrorCode::kInvalidArgument, "equation is zero");
  if (degree_ < 1) Fail(ErrorCode::kInvalidArgument, "equation has degree 0");
}

HyperSurface HyperSurface::Parse(std::shared_ptr<const FiniteField> field, std::string_view text) {
  std::vector<Term> terms;
  int lineno = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = Trim(line);
    if (line.empty()) continue;
    std::vector<std::string_view> parts;
    size_t pos = 0;
    while (true) {
      size_t comma = line.find(',', pos);
      parts.push_back(Trim(line.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos)));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    if (parts.size() != 4 && parts.size() != 5) {
      Fail(ErrorCode::kParse, "line " + std::to_string(lineno) + ": expected coeff,e0,e1,e2[,e3]");
    }
    Term t;
    try {
      t.coeff = field->Parse(parts[0]);
    } catch (const Error& e) {
      Fail(ErrorCode::kParse, "line " + std::to_string(lineno) + ": " + e.what());
    }
    for (size_t i = 1; i < parts.size(); ++i) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(parts[i].data(), parts[i].data() + parts[i].size(), v);
      if (ec != std::errc() || ptr != parts[i].data() + parts[i].size() || v < 0) {
        Fail(ErrorCode::kParse, "line " + std::to_string(lineno) + ": bad exponent");
      }
      t.exponents.push_back(v);
    }
    terms.push_back(std::move(t));
  }
  return HyperSurface(std::move(field), std::move(terms));
}

FqElem HyperSurface::Evaluate(const ProjPoint& x) const {
  if (static_cast<int>(x.size()) != num_vars_) Fail(ErrorCode::kInvalidArgument, "point has the wrong dimension");
  FqElem total = 0;
  for (const Term& t : terms_) {
    FqElem v = t.coeff;
    for (int i = 0; i < num_vars_; ++i) v = field_->Mul(v, field_->Pow(x[i], t.exponents[i]));
    total = field_->Add(total, v);
  }
  return total;
}

std::vector<FqElem> HyperSurface::Gradient(const ProjPoint& x) const {
  if (static_cast<int>(x.size()) != num_vars_) Fail(ErrorCode::kInvalidArgument, "point has the wrong dimension");
  std::vector<FqElem> g(num_vars_, 0);
  for (const Term& t : terms_) {
    for (int d = 0; d < num_vars_; ++d) {
      if (t.exponents[d] == 0) continue;
      FqElem v = field_->Mul(t.coeff, field_->FromInt(t.exponents[d]));
      for (int i = 0; i < num_vars_; ++i) v = field_->Mul(v, field_->Pow(x[i], t.exponents[i] - (i == d)));
      g[d] = field_->Add(g[d], v);
    }
  }
  return g;
}

HyperSurface HyperSurface::BaseChange(std::shared_ptr<const FiniteField> ext) const {
  std::vector<Term> terms;
  for (const Term& t : terms_) terms.push_back({ext->Embed(*field_, t.coeff), t.exponents});
  return HyperSurface(std::move(ext), std::move(terms));
}

std::string HyperSurface::ToString() const {
  static const char* kVars[4] = {"x", "y", "z", "t"};
  std::string s;
  for (const Term& t : terms_) {
    if (!s.empty()) s += " + ";
    std::string mono;
    for (int i = 0; i < num_vars_; ++i) {
      if (t.exponents[i] == 0) continue;
      mono += kVars[i];
      if (t.exponents[i] > 1) mono += "^" + std::to_string(t.exponents[i]);
    }
    if (t.coeff != 1 || mono.empty()) s += "(" + field_->ToString(t.coeff) + ")";
    s += mono;
  }
  return s;
}

ProjPoint EmbedPoint(const FiniteField& ext, const FiniteField& sub, const ProjPoint& pt) {
  ProjPoint r;
  for (FqElem x : pt) r.push_back(ext.Embed(sub, x));
  return r;
}

std::vector<ProjPoint> RationalPoints(const HyperSurface& s) {
  const FiniteField& f = s.field();
  const int dim = s.num_vars() - 1;
  double count = 1;
  for (int i = 0; i < dim; ++i) count *= static_cast<double>(f.size());
  if (count > static_cast<double>(kMaxPoints)) Fail(ErrorCode::kSizeCapExceeded, "too many points to enumerate");
  std::vector<FqElem> coords(f.size());
  std::iota(coords.begin(), coords.end(), FqElem{0});
  std::vector<ProjPoint> out;
  ForEachPoint(dim, coords, [&](const ProjPoint& pt) {
    if (s.Evaluate(pt) == 0) out.push_back(pt);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

EckardtReport EckardtAnalysis(const HyperSurface& s, const ProjPoint& p_in, int extension_degree) {
  if (s.num_vars() != 4 || s.degree() != 3) Fail(ErrorCode::kInvalidArgument, "need a cubic surface");
  if (extension_degree < 1) Fail(ErrorCode::kInvalidArgument, "extension degree must be positive");
  const FiniteField& base = s.field();
  const ProjPoint p = NormalizePoint(base, p_in);
  if (s.Evaluate(p) != 0) Fail(ErrorCode::kInvalidArgument, "point is not on the surface");
  const auto grad = s.Gradient(p);
  if (std::all_of(grad.begin(), grad.end(), [](FqElem x) { return x == 0; })) {
    Fail(ErrorCode::kInvalidArgument, "surface is singular at the point");
  }

  // Lines through P over F_{q^k}.
  auto lines_over = [&](int k, std::shared_ptr<const FiniteField>* ext_out, ProjPoint* pe_out) {
    double size = std::pow(static_cast<double>(base.size()), k);
    if (size > static_cast<double>(kMaxPoints)) Fail(ErrorCode::kSizeCapExceeded, "extension too large to enumerate");
    auto ext = FiniteField::Canonical(base.p(), base.degree() * k);
    const HyperSurface se = s.BaseChange(ext);
    const ProjPoint pe = EmbedPoint(*ext, base, p);
    // Tangent plane basis P, u, v.
    auto kernel = KernelBasis(*ext, {se.Gradient(pe)});
    ProjPoint u, v;
    bool done = false;
    for (size_t i = 0; i < kernel.size() && !done; ++i)
      for (size_t j = i + 1; j < kernel.size() && !done; ++j)
        if (MatrixRank(*ext, {pe, kernel[i], kernel[j]}) == 3) {
          u = kernel[i];
          v = kernel[j];
          done = true;
        }
    if (!done) Fail(ErrorCode::kInternal, "tangent plane basis not found");
    auto comb = [&](FqElem t, FqElem w) {
      ProjPoint r(4);
      for (int i = 0; i < 4; ++i) r[i] = ext->Add(ext->Mul(t, u[i]), ext->Mul(w, v[i]));
      return r;
    };
    auto on_line = [&](const ProjPoint& r) {
      if (se.Evaluate(r) != 0) return false;
      const auto g = se.Gradient(r);
      FqElem dot = 0;
      for (int i = 0; i < 4; ++i) dot = ext->Add(dot, ext->Mul(g[i], pe[i]));
      return dot == 0;
    };
    std::vector<LineThroughPoint> lines;
    if (on_line(comb(1, 0))) lines.push_back({NormalizePoint(*ext, comb(1, 0))});
    for (uint64_t t = 0; t < ext->size(); ++t) {
      ProjPoint r = comb(t, 1);
      if (on_line(r)) lines.push_back({NormalizePoint(*ext, r)});
    }
    if (ext_out) *ext_out = ext;
    if (pe_out) *pe_out = pe;
    // grad S(R) . P on three directions decides whether the quadric vanishes.
    bool quadric_zero = true;
    for (auto [t, w] : {std::pair<FqElem, FqElem>{1, 0}, {0, 1}, {1, 1}}) {
      const auto g = se.Gradient(comb(t, w));
      FqElem dot = 0;
      for (int i = 0; i < 4; ++i) dot = ext->Add(dot, ext->Mul(g[i], pe[i]));
      if (dot != 0) quadric_zero = false;
    }
    return std::make_pair(lines, quadric_zero);
  };

  EckardtReport rep;
  rep.extension_degree = extension_degree;
  auto [lines, quadric_zero] = lines_over(extension_degree, &rep.extension, &rep.point);
  rep.lines = std::move(lines);
  rep.tangent_quadric_vanishes = quadric_zero;
  rep.lines_over_closure =
      extension_degree % 6 == 0 ? static_cast<int>(rep.lines.size())
                                : static_cast<int>(lines_over(6, nullptr, nullptr).first.size());
  rep.is_eckardt = rep.lines_over_closure == 3;
  return rep;
}

SingularityReport CurveSingularityAnalysis(const HyperSurface& c, const ProjPoint& p_in, int extension_degree) {
  if (c.num_vars() != 3) Fail(ErrorCode::kInvalidArgument, "need a plane curve");
  if (extension_degree < 1) Fail(ErrorCode::kInvalidArgument, "extension degree must be positive");
  const FiniteField& f = c.field();
  const ProjPoint p = NormalizePoint(f, p_in);
  if (c.Evaluate(p) != 0) Fail(ErrorCode::kInvalidArgument, "point is not on the curve");
  // Chart (x, y) -> P + x u + y v with u, v the unit vectors away from the
  // leading coordinate of P.
  const int lead = static_cast<int>(std::find_if(p.begin(), p.end(), [](FqElem x) { return x != 0; }) - p.begin());
  std::vector<ProjPoint> dirs;
  for (int i = 0; i < 3; ++i)
    if (i != lead) {
      ProjPoint e(3, 0);
      e[i] = 1;
      dirs.push_back(e);
    }
  const LocalPoly g = LocalExpansion(c, p, dirs);
  SingularityReport rep;
  rep.chart = {p, dirs[0], dirs[1]};
  int m = -1;
  for (const auto& [e, coeff] : g) {
    const int deg = e[0] + e[1];
    if (m < 0 || deg < m) m = deg;
  }
  if (m <= 0) Fail(ErrorCode::kInternal, "local equation does not vanish at the point");
  rep.multiplicity = m;
  rep.is_singular = m >= 2;
  rep.tangent_cone.assign(m + 1, 0);
  for (const auto& [e, coeff] : g)
    if (e[0] + e[1] == m) rep.tangent_cone[e[1]] = coeff;

  double size = std::pow(static_cast<double>(f.size()), extension_degree);
  if (size > static_cast<double>(kMaxPoints)) Fail(ErrorCode::kSizeCapExceeded, "extension too large to enumerate");
  rep.extension_degree = extension_degree;
  rep.extension = FiniteField::Canonical(f.p(), f.degree() * extension_degree);
  std::vector<FqElem> cone;
  for (FqElem x : rep.tangent_cone) cone.push_back(rep.extension->Embed(f, x));
  rep.tangent_lines = BinaryFormRoots(*rep.extension, cone);
  if (m == 2) {
    // a x^2 + b x y + c y^2 has two distinct roots over the closure iff its
    // discriminant is nonzero (b != 0 in characteristic 2).
    const FqElem a = rep.tangent_cone[0], b = rep.tangent_cone[1], cc = rep.tangent_cone[2];
    const FqElem disc = f.p() == 2 ? b : f.Sub(f.Mul(b, b), f.Mul(f.FromInt(4), f.Mul(a, cc)));
    rep.is_node = disc != 0;
  }
  return rep;
}

}  // namespace dp2
