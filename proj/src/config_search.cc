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

#include "dp2/config_search.h"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>

#include "dp2/error.h"

namespace dp2 {

namespace {

int ParseInt(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    Fail(ErrorCode::kParse, "bad integer in pattern: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

SearchPattern SearchPattern::Parse(std::string_view text) {
  SearchPattern pat;
  std::string_view body = text;
  if (auto colon = text.find(':'); colon != std::string_view::npos) {
    if (text.substr(colon + 1) != "conic") Fail(ErrorCode::kParse, "unknown pattern modifier");
    pat.conic = true;
    body = text.substr(0, colon);
  }
  if (body.empty()) Fail(ErrorCode::kParse, "empty pattern");
  size_t pos = 0;
  while (pos <= body.size()) {
    size_t comma = body.find(',', pos);
    if (comma == std::string_view::npos) comma = body.size();
    std::string_view tok = body.substr(pos, comma - pos);
    int deg = 0, mult = 1;
    if (auto x = tok.find('x'); x != std::string_view::npos) {
      deg = ParseInt(tok.substr(0, x));
      mult = ParseInt(tok.substr(x + 1));
    } else {
      deg = ParseInt(tok);
    }
    if (deg < 1 || mult < 1) Fail(ErrorCode::kParse, "degrees and multiplicities must be positive");
    if (mult > 8) Fail(ErrorCode::kInvalidArgument, "total degree exceeds 8");
    for (int i = 0; i < mult; ++i) pat.degrees.push_back(deg);
    pos = comma + 1;
  }
  std::sort(pat.degrees.rbegin(), pat.degrees.rend());
  if (pat.TotalDegree() > 8) Fail(ErrorCode::kInvalidArgument, "total degree exceeds 8");
  return pat;
}

std::string SearchPattern::ToString() const {
  std::string s;
  for (size_t i = 0; i < degrees.size();) {
    size_t j = i;
    while (j < degrees.size() && degrees[j] == degrees[i]) ++j;
    if (!s.empty()) s += ',';
    s += std::to_string(degrees[i]);
    if (degrees[i] != 1) j = i + 1;
    if (j - i > 1) s += "x" + std::to_string(j - i);
    i = j;
  }
  if (conic) s += ":conic";
  return s;
}

int SearchPattern::TotalDegree() const { return std::accumulate(degrees.begin(), degrees.end(), 0); }

std::vector<ProjPoint> SearchWitness::GeometricPoints() const {
  std::vector<ProjPoint> out;
  for (const auto& cp : points) out.insert(out.end(), cp.orbit.begin(), cp.orbit.end());
  return out;
}

const char* SearchStatusName(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound: return "found";
    case SearchStatus::kExhausted: return "exhausted";
    case SearchStatus::kBudgetExceeded: return "budget_exceeded";
  }
  return "?";
}

namespace {

struct BudgetHit {};

// Elements of the subfield F_{p^d} in increasing order, without
// materializing it when it is the whole working field.
class CoordSource {
 public:
  CoordSource(const FiniteField& f, int d) {
    if (d == f.degree()) {
      count_ = f.size();
    } else {
      list_ = f.SubfieldElements(d);
      count_ = list_.size();
    }
  }
  uint64_t size() const { return count_; }
  FqElem operator[](uint64_t i) const { return list_.empty() ? i : list_[i]; }

 private:
  std::vector<FqElem> list_;
  uint64_t count_ = 0;
};

class Searcher {
 public:
  Searcher(const SearchPattern& pat, std::shared_ptr<const FiniteField> f, int e, uint64_t budget)
      : pat_(pat), f_(std::move(f)), e_(e), budget_(budget) {}

  bool RunGeneric() {
    // Rational slots first, then higher degrees ascending.
    for (int d : pat_.degrees)
      if (d == 1) slots_.push_back(1);
    std::vector<int> rest;
    for (int d : pat_.degrees)
      if (d > 1) rest.push_back(d);
    std::sort(rest.begin(), rest.end());
    slots_.insert(slots_.end(), rest.begin(), rest.end());
    for (int d : slots_)
      if (!sources_.count(d)) sources_.emplace(d, CoordSource(*f_, e_ * d));
    return Dfs(0);
  }

  bool RunConic() {
    const CoordSource five(*f_, 5 * e_), three(*f_, 3 * e_);
    for (uint64_t i = 0; i < five.size(); ++i) {
      const FqElem t = five[i];
      if (!MinimalOfDegree(t, 5)) continue;
      auto p_orbit = FrobeniusOrbit(*f_, e_, ProjPoint{1, t, f_->Mul(t, t)});
      Count();
      if (!TryAdd(p_orbit)) continue;
      chosen_.push_back({5, p_orbit});
      for (uint64_t j = 0; j < three.size(); ++j) {
        const FqElem s = three[j];
        if (!MinimalOfDegree(s, 3)) continue;
        if (f_->Pow(s, 3) == 1) continue;  // (s:1:s^2) on y^2 = xz
        auto q_orbit = FrobeniusOrbit(*f_, e_, NormalizePoint(*f_, {s, 1, f_->Mul(s, s)}));
        Count();
        if (TryAdd(q_orbit)) {
          chosen_.push_back({3, q_orbit});
          return true;
        }
      }
      chosen_.pop_back();
      pts_.resize(0);
    }
    return false;
  }

  uint64_t nodes() const { return nodes_; }
  const std::vector<ClosedPoint>& chosen() const { return chosen_; }
  int frame_fixed() const { return frame_fixed_; }

 private:
  void Count() {
    if (++nodes_ > budget_) throw BudgetHit{};
  }

  // x has degree d over F_q and is the smallest of its conjugates.
  bool MinimalOfDegree(FqElem x, int d) const {
    FqElem y = x;
    for (int k = 1; k < d; ++k) {
      y = f_->Frobenius(y, e_);
      if (y == x) return false;
      if (y < x) return false;
    }
    return f_->Frobenius(y, e_) == x;
  }

  // The Frobenius orbit of pt if it has exact degree d and pt is its
  // smallest member.
  std::optional<std::vector<ProjPoint>> CanonicalOrbit(const ProjPoint& pt, int d) const {
    std::vector<ProjPoint> orbit = {pt};
    ProjPoint cur = FrobeniusPoint(*f_, pt, e_);
    while (cur != pt) {
      if (cur < pt || static_cast<int>(orbit.size()) == d) return std::nullopt;
      orbit.push_back(cur);
      cur = FrobeniusPoint(*f_, cur, e_);
    }
    if (static_cast<int>(orbit.size()) != d) return std::nullopt;
    return orbit;
  }

  bool TryAdd(const std::vector<ProjPoint>& add) {
    const size_t n0 = pts_.size();
    for (const auto& p : add)
      if (std::find(pts_.begin(), pts_.end(), p) != pts_.end()) return false;
    pts_.insert(pts_.end(), add.begin(), add.end());
    const size_t n = pts_.size();
    bool ok = true;
    for (size_t k = n0; k < n && ok; ++k)
      for (size_t j = 0; j < k && ok; ++j)
        for (size_t i = 0; i < j && ok; ++i)
          if (Det3(*f_, pts_[i], pts_[j], pts_[k]) == 0) ok = false;
    if (ok && n >= 6) {
      for (unsigned mask = 0; mask < (1u << n) && ok; ++mask) {
        if (__builtin_popcount(mask) != 6 || (mask >> n0) == 0) continue;
        std::vector<const ProjPoint*> six;
        for (size_t i = 0; i < n; ++i)
          if (mask >> i & 1) six.push_back(&pts_[i]);
        if (SixOnConic(*f_, six)) ok = false;
      }
    }
    if (ok && n == 8) ok = CheckSingularCubics(*f_, pts_).ok;
    if (!ok) pts_.resize(n0);
    return ok;
  }

  bool Place(size_t slot, int d, std::vector<ProjPoint> orbit) {
    Count();
    if (!TryAdd(orbit)) return false;
    const size_t n0 = pts_.size() - orbit.size();
    chosen_.push_back({d, std::move(orbit)});
    if (Dfs(slot + 1)) return true;
    chosen_.pop_back();
    pts_.resize(n0);
    return false;
  }

  const ProjPoint* PreviousOfDegree(size_t slot) const {
    if (slot == 0 || slots_[slot - 1] != slots_[slot]) return nullptr;
    return &chosen_[slot - 1].orbit[0];
  }

  bool Dfs(size_t slot) {
    if (slot == slots_.size()) return true;
    const int d = slots_[slot];
    const CoordSource& src = sources_.at(d);
    static const ProjPoint kFrame[4] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
    if (d == 1) {
      if (slot < 4) {
        frame_fixed_ = std::max(frame_fixed_, static_cast<int>(slot) + 1);
        return Place(slot, 1, {kFrame[slot]});
      }
      const ProjPoint* prev = slot > 4 ? PreviousOfDegree(slot) : nullptr;
      bool found = false;
      VisitPoints(src, [&](const ProjPoint& pt) {
        if (prev && pt <= *prev) return true;
        if (std::find(std::begin(kFrame), std::end(kFrame), pt) != std::end(kFrame)) return true;
        found = Place(slot, 1, {pt});
        return !found;
      });
      return found;
    }
    if (pat_.degrees.size() == 1 && d == 7 && TryCubicFamily(slot, src)) return true;
    const ProjPoint* prev = PreviousOfDegree(slot);
    bool found = false;
    auto visit = [&](const ProjPoint& pt) {
      if (prev && pt <= *prev) return true;
      auto orbit = CanonicalOrbit(pt, d);
      if (!orbit) return true;
      found = Place(slot, d, std::move(*orbit));
      return !found;
    };
    if (d >= 3) {
      // Generators (1:y:z) with y, z outside F_q.
      for (uint64_t i = 0; i < src.size(); ++i) {
        if (f_->InSubfield(src[i], e_)) continue;
        for (uint64_t j = 0; j < src.size(); ++j) {
          if (f_->InSubfield(src[j], e_)) continue;
          if (!visit({1, src[i], src[j]})) return found;
        }
      }
      return found;
    }
    VisitPoints(src, visit);
    return found;
  }

  // Orbits of (a^3 : a : 1), a of degree 7, in increasing order of a.
  bool TryCubicFamily(size_t slot, const CoordSource& src) {
    for (uint64_t i = 0; i < src.size(); ++i) {
      const FqElem a = src[i];
      if (f_->DegreeOver(a, e_) != 7) continue;
      ProjPoint pt = NormalizePoint(*f_, {f_->Pow(a, 3), a, 1});
      if (Place(slot, 7, FrobeniusOrbit(*f_, e_, pt))) return true;
    }
    return false;
  }

  template <typename Visit>
  static void VisitPoints(const CoordSource& src, Visit&& visit) {
    if (!visit(ProjPoint{0, 0, 1})) return;
    for (uint64_t j = 0; j < src.size(); ++j)
      if (!visit(ProjPoint{0, 1, src[j]})) return;
    for (uint64_t i = 0; i < src.size(); ++i)
      for (uint64_t j = 0; j < src.size(); ++j)
        if (!visit(ProjPoint{1, src[i], src[j]})) return;
  }

  const SearchPattern& pat_;
  std::shared_ptr<const FiniteField> f_;
  int e_;
  uint64_t budget_;
  uint64_t nodes_ = 0;
  int frame_fixed_ = 0;
  std::vector<int> slots_;
  std::map<int, CoordSource> sources_;
  std::vector<ProjPoint> pts_;
  std::vector<ClosedPoint> chosen_;
};

}  // namespace

SearchResult SearchBlowupConfig(const SearchPattern& pattern, uint64_t q, const SearchOptions& options) {
  auto pp = AsPrimePower(q);
  if (!pp) Fail(ErrorCode::kInvalidArgument, "q must be a prime power");
  if (pattern.degrees.empty()) Fail(ErrorCode::kInvalidArgument, "empty pattern");
  if (pattern.TotalDegree() > 8) Fail(ErrorCode::kInvalidArgument, "total degree exceeds 8");
  if (pattern.conic && pattern.degrees != std::vector<int>{5, 3}) {
    Fail(ErrorCode::kUnsupported, "the conic constraint is defined for pattern 5,3 only");
  }
  int l = 1;
  for (int d : pattern.degrees) l = std::lcm(l, d);
  auto field = FiniteField::Canonical(pp->p, pp->e * l);

  Searcher s(pattern, field, pp->e, options.node_budget);
  SearchResult res;
  bool found = false;
  try {
    found = pattern.conic ? s.RunConic() : s.RunGeneric();
  } catch (const BudgetHit&) {
    res.status = SearchStatus::kBudgetExceeded;
    res.nodes = s.nodes() - 1;
    res.certificate = "node budget of " + std::to_string(options.node_budget) +
                      " exceeded for pattern " + pattern.ToString() + " over F_" + std::to_string(q);
    return res;
  }
  res.nodes = s.nodes();
  if (found) {
    res.status = SearchStatus::kFound;
    SearchWitness w;
    w.q = q;
    w.base_degree = pp->e;
    w.field = field;
    w.pattern = pattern;
    w.points = s.chosen();
    res.witness = std::move(w);
    return res;
  }
  res.status = SearchStatus::kExhausted;
  const std::string where = "pattern " + pattern.ToString() + " over F_" + std::to_string(q);
  if (pattern.conic) {
    res.certificate = "no configuration in the family (1:t:t^2), (s:1:s^2) for " + where + "; " +
                      std::to_string(res.nodes) + " candidate orbits (family search only, not a proof of nonexistence)";
  } else {
    res.certificate = "no configuration in general position for " + where + "; " + std::to_string(res.nodes) +
                      " candidate orbits over the normalized space (" + std::to_string(s.frame_fixed()) +
                      " rational points fixed to the standard frame, remaining rational points increasing, "
                      "equal-degree orbits by increasing minimal generator, orbits of degree >= 3 on a "
                      "rational line through a coordinate vertex skipped)";
  }
  return res;
}

nlohmann::json WitnessToJson(const SearchWitness& w) {
  nlohmann::json j;
  j["q"] = w.q;
  j["p"] = w.field->p();
  j["field_degree"] = w.field->degree();
  j["modulus"] = w.field->modulus();
  j["pattern"] = w.pattern.ToString();
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& cp : w.points) {
    nlohmann::json orbit = nlohmann::json::array();
    for (const auto& pt : cp.orbit) {
      nlohmann::json c = nlohmann::json::array();
      for (FqElem x : pt) c.push_back(w.field->ToString(x));
      orbit.push_back(std::move(c));
    }
    pts.push_back({{"degree", cp.degree}, {"orbit", std::move(orbit)}});
  }
  j["points"] = std::move(pts);
  return j;
}

SearchWitness WitnessFromJson(const nlohmann::json& j) {
  try {
    SearchWitness w;
    w.q = j.at("q").get<uint64_t>();
    const uint64_t p = j.at("p").get<uint64_t>();
    auto pp = AsPrimePower(w.q);
    if (!pp || pp->p != p) Fail(ErrorCode::kParse, "q is not a power of p");
    w.base_degree = pp->e;
    w.field = FiniteField::WithModulus(p, j.at("modulus").get<FpPoly>());
    if (w.field->degree() != j.at("field_degree").get<int>() || w.field->degree() % w.base_degree != 0) {
      Fail(ErrorCode::kParse, "field degree mismatch");
    }
    w.pattern = SearchPattern::Parse(j.at("pattern").get<std::string>());
    for (const auto& cp : j.at("points")) {
      ClosedPoint c;
      c.degree = cp.at("degree").get<int>();
      for (const auto& pt : cp.at("orbit")) {
        ProjPoint v;
        for (const auto& x : pt) v.push_back(w.field->Parse(x.get<std::string>()));
        c.orbit.push_back(std::move(v));
      }
      w.points.push_back(std::move(c));
    }
    return w;
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorCode::kParse, std::string("malformed witness: ") + e.what());
  }
}

WitnessCheck VerifyWitness(const SearchWitness& w) {
  const FiniteField& f = *w.field;
  auto fail = [](std::string why) { return WitnessCheck{false, std::move(why)}; };
  std::vector<int> degs;
  for (const auto& cp : w.points) {
    if (cp.degree < 1 || static_cast<int>(cp.orbit.size()) != cp.degree) return fail("orbit length differs from degree");
    for (const auto& pt : cp.orbit) {
      if (pt.size() != 3) return fail("points need three coordinates");
      for (FqElem x : pt) {
        if (x >= f.size()) return fail("coordinate outside the field");
      }
      if (pt == ProjPoint{0, 0, 0}) return fail("all coordinates are zero");
      if (NormalizePoint(f, pt) != pt) return fail("point not normalized");
    }
    for (int i = 0; i < cp.degree; ++i) {
      if (FrobeniusPoint(f, cp.orbit[i], w.base_degree) != cp.orbit[(i + 1) % cp.degree]) {
        return fail("orbit not cyclically permuted by x -> x^q");
      }
    }
    std::set<ProjPoint> distinct(cp.orbit.begin(), cp.orbit.end());
    if (static_cast<int>(distinct.size()) != cp.degree) return fail("orbit points not distinct");
    degs.push_back(cp.degree);
  }
  std::sort(degs.rbegin(), degs.rend());
  if (degs != w.pattern.degrees) return fail("degrees do not match the pattern");
  if (w.pattern.conic) {
    for (const auto& cp : w.points) {
      for (const auto& pt : cp.orbit) {
        const FqElem x = pt[0], y = pt[1], z = pt[2];
        const bool on_p = f.Mul(y, y) == f.Mul(x, z);
        const bool on_q = f.Mul(x, x) == f.Mul(y, z);
        if (cp.degree == 5 && !on_p) return fail("degree-5 point off y^2 = xz");
        if (cp.degree == 3 && (!on_q || on_p)) return fail("degree-3 point off x^2 = yz or on y^2 = xz");
      }
    }
  }
  GeneralPositionReport rep;
  try {
    rep = CheckGeneralPosition(f, w.GeometricPoints());
  } catch (const Error& e) {
    return fail(e.what());
  }
  if (!rep.ok) return fail(rep.ToString());
  return {true, "general position verified for " + std::to_string(w.GeometricPoints().size()) + " geometric points"};
}

}  // namespace dp2
