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

#include "dp2/verdict.h"

#include <algorithm>
#include <map>
#include <sstream>

#include "dp2/error.h"
#include "dp2/projective.h"
#include "dp2/zeta.h"

namespace dp2 {

const char* VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kExists: return "Exists";
    case Verdict::kNotExists: return "NotExists";
    case Verdict::kOpenInPaper: return "OpenInPaper";
  }
  return "?";
}

const char* VerdictSourceName(VerdictSource s) {
  switch (s) {
    case VerdictSource::kTheorem: return "Theorem";
    case VerdictSource::kComputedWitness: return "ComputedWitness";
    case VerdictSource::kComputedExhaustion: return "ComputedExhaustion";
  }
  return "?";
}

const std::vector<int>& MinimalTypes() {
  static const std::vector<int> kTypes = {31, 35, 40, 43, 44, 45, 49, 50, 51, 52, 53, 54, 55, 56, 57, 58, 59, 60};
  return kTypes;
}

TheoremEntry TheoremVerdict(int type, uint64_t q) {
  if (!AsPrimePower(q)) Fail(ErrorCode::kInvalidArgument, "q must be a prime power");
  auto in = [q](std::initializer_list<uint64_t> s) { return std::find(s.begin(), s.end(), q) != s.end(); };
  const Verdict yes = Verdict::kExists, no = Verdict::kNotExists, open = Verdict::kOpenInPaper;
  switch (type) {
    case 49:
      return {in({2, 3, 4, 5, 7, 8}) ? no : yes, "none over F_2, F_3, F_4, F_5, F_7, F_8; exists otherwise"};
    case 31:
      return {in({2, 3, 4}) ? no : yes, "none over F_2, F_3, F_4; exists otherwise"};
    case 40:
    case 50:
    case 53:
    case 55:
    case 60:
      return {q == 2 ? no : yes, "none over F_2; exists otherwise"};
    case 43:
    case 44:
    case 45:
    case 52:
    case 54:
    case 57:
    case 59:
      return {yes, "exists over every finite field"};
    case 35:
      // Nothing is known over F_3.
      return {q == 2 ? no : (q == 3 ? open : yes), "none over F_2; exists for q >= 4; F_3 open"};
    case 51:
    case 58:
      return {q % 2 == 1 ? yes : open, "exists for odd q; even q open"};
    case 56:
      return {q % 6 == 1 ? yes : open, "exists for q = 1 mod 6; other q open"};
    default:
      Fail(ErrorCode::kInvalidArgument, "type " + std::to_string(type) + " is not minimal");
  }
}

std::optional<ComputedCheck> ComputedCheckFor(int type) {
  switch (type) {
    case 49: return ComputedCheck{1, "1x7", false, "blowup of P^2 at seven rational points"};
    case 53: return ComputedCheck{4, "3,1x4", false, "blowup of P^2 at a point of degree 3 and four rational points"};
    case 55: return ComputedCheck{12, "3,3,1", false, "blowup of P^2 at two points of degree 3 and a rational point"};
    case 54: return ComputedCheck{15, "5,1x2", false, "blowup of P^2 at a point of degree 5 and two rational points"};
    case 57: return ComputedCheck{39, "7", false, "blowup of P^2 at a point of degree 7"};
    case 40: return ComputedCheck{7, "3,2,1,1", false, "blowup of P^2 at points of degrees 3, 2, 1, 1"};
    case 43: return ComputedCheck{24, "5,2", false, "blowup of P^2 at points of degrees 5 and 2"};
    case 59:
      return ComputedCheck{36, "5,3:conic", true,
                           "points of degree 5 and 3 on two rational conics; contracting the first conic"};
    case 31: return ComputedCheck{0, "", false, "six rational points on the base P^1"};
    case 35: return ComputedCheck{0, "", false, "two rational points and two points of degree 2 on the base P^1"};
    default: return std::nullopt;
  }
}

Verdict Reconcile(int type, uint64_t q, Verdict theorem, Verdict computed) {
  if (theorem == Verdict::kOpenInPaper || theorem == computed) return computed;
  Fail(ErrorCode::kConsistency, "type " + std::to_string(type) + " over F_" + std::to_string(q) + ": table says " +
                                    VerdictName(theorem) + ", computation says " + VerdictName(computed));
}

namespace {

// (t - 1) prod_i (t^{d_i} - 1): characteristic polynomial on Pic of a
// blowup of P^2 at closed points of degrees d_i.
IntPoly BlowupCharPoly(const std::vector<int>& degrees) {
  IntPoly p = {-1, 1};
  for (int d : degrees) {
    IntPoly f(d + 1, 0);
    f[0] = -1;
    f[d] = 1;
    p = PolyMul(p, f);
  }
  return p;
}

void CheckPartner(const ClassTable& table, int type, const ComputedCheck& check) {
  if (table.GeiserTwistClass(type) != check.partner_type) {
    Fail(ErrorCode::kConsistency, "Geiser partner of " + std::to_string(type) + " is not " +
                                      std::to_string(check.partner_type));
  }
  const SearchPattern pat = SearchPattern::Parse(check.pattern);
  if (pat.conic) return;
  if (pat.TotalDegree() != 7) {
    Fail(ErrorCode::kConsistency, "pattern " + check.pattern + " does not blow up P^2 to degree 2");
  }
  IntPoly cp = CharacteristicPolynomial(table.record(check.partner_type).representative.matrix());
  if (cp != BlowupCharPoly(pat.degrees)) {
    Fail(ErrorCode::kConsistency, "pattern " + check.pattern + " does not give type " +
                                      std::to_string(check.partner_type));
  }
}

uint64_t P1PointsOfDegree(uint64_t q, int d) {
  auto pp = AsPrimePower(q);
  auto f = FiniteField::Canonical(pp->p, pp->e * d);
  return ClosedPointsOfDegree(*f, pp->e, 1, d).size();
}

}  // namespace

std::vector<VerdictRow> ComputeVerdicts(const ClassTable& table, uint64_t q, const VerdictOptions& options) {
  if (!AsPrimePower(q)) Fail(ErrorCode::kInvalidArgument, "q must be a prime power");
  if (q > kMaxVerdictQ) Fail(ErrorCode::kUnsupported, "verdicts are computed for q <= " + std::to_string(kMaxVerdictQ));
  std::vector<VerdictRow> rows;
  for (int type : MinimalTypes()) {
    if (table.MinimalityKind(type) == Minimality::kNonMinimal) {
      Fail(ErrorCode::kConsistency, "type " + std::to_string(type) + " is not minimal in the class table");
    }
    const TheoremEntry th = TheoremVerdict(type, q);
    VerdictRow row;
    row.class_id = type;
    row.q = q;
    row.verdict = th.verdict;
    row.statement = th.statement;

    const ZetaData z = ComputeZeta(table, type, q, 6);
    if (z.negative_at) {
      if (th.verdict != Verdict::kNotExists) {
        Fail(ErrorCode::kConsistency, "type " + std::to_string(type) + " over F_" + std::to_string(q) +
                                          " has N_" + std::to_string(*z.negative_at) + " < 0 but is not excluded");
      }
      row.negative_point_count_at = z.negative_at;
    }

    auto check = ComputedCheckFor(type);
    if (check && options.run_searches) {
      if (check->partner_type == 0) {
        const uint64_t rational = P1PointsOfDegree(q, 1);
        const uint64_t quadratic = P1PointsOfDegree(q, 2);
        const bool ok = type == 31 ? rational >= 6 : (rational >= 2 && quadratic >= 2);
        if (!ok) {
          row.verdict = Reconcile(type, q, th.verdict, Verdict::kNotExists);
          row.source = VerdictSource::kComputedExhaustion;
          row.certificate = "P^1(F_" + std::to_string(q) + ") has " + std::to_string(rational) +
                            " rational points and " + std::to_string(quadratic) + " points of degree 2; needs " +
                            check->description;
        }
      } else {
        CheckPartner(table, type, *check);
        SearchOptions so;
        so.node_budget = options.node_budget;
        SearchResult res = SearchBlowupConfig(SearchPattern::Parse(check->pattern), q, so);
        const std::string via = "Geiser partner type " + std::to_string(check->partner_type) + " (" +
                                check->description + ")";
        if (res.status == SearchStatus::kFound) {
          WitnessCheck wc = VerifyWitness(*res.witness);
          if (!wc.ok) Fail(ErrorCode::kConsistency, "witness failed verification: " + wc.detail);
          row.verdict = Reconcile(type, q, th.verdict, Verdict::kExists);
          row.source = VerdictSource::kComputedWitness;
          row.certificate = via + ": witness for pattern " + check->pattern + ", " + wc.detail;
          row.witness = std::move(res.witness);
        } else if (res.status == SearchStatus::kExhausted && !check->witness_only) {
          row.verdict = Reconcile(type, q, th.verdict, Verdict::kNotExists);
          row.source = VerdictSource::kComputedExhaustion;
          row.certificate = via + ": " + res.certificate;
        } else if (res.status == SearchStatus::kBudgetExceeded) {
          row.notes.push_back(res.certificate + "; verdict left to the table");
        } else {
          row.notes.push_back(res.certificate);
        }
      }
    }
    if (th.verdict == Verdict::kOpenInPaper && row.source != VerdictSource::kTheorem) {
      row.notes.push_back("computation settles a case the table leaves open");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json VerdictsToJson(const std::vector<VerdictRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j;
    j["class_id"] = r.class_id;
    j["q"] = r.q;
    j["verdict"] = VerdictName(r.verdict);
    j["source"] = VerdictSourceName(r.source);
    j["statement"] = r.statement;
    j["certificate"] = r.certificate.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.certificate);
    j["negative_at"] = r.negative_point_count_at ? nlohmann::json(*r.negative_point_count_at) : nlohmann::json(nullptr);
    if (r.witness) j["witness"] = WitnessToJson(*r.witness);
    if (!r.witness_path.empty()) j["witness_path"] = r.witness_path;
    j["notes"] = r.notes;
    out.push_back(std::move(j));
  }
  return out;
}

std::string VerdictsToCsv(const std::vector<VerdictRow>& rows) {
  std::ostringstream s;
  s << "class_id,q,verdict,source,negative_at,witness_path\n";
  for (const auto& r : rows) {
    s << r.class_id << ',' << r.q << ',' << VerdictName(r.verdict) << ',' << VerdictSourceName(r.source) << ',';
    if (r.negative_point_count_at) s << *r.negative_point_count_at;
    s << ',' << r.witness_path << '\n';
  }
  return s.str();
}

}  // namespace dp2
