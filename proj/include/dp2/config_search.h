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

// Search for closed points of P^2 over F_q with prescribed degrees whose
// geometric points are in general position.
//
// Normalization: the first min(r, 4) rational points are fixed to
// (1:0:0), (0:1:0), (0:0:1), (1:1:1) (PGL3(F_q) is transitive on ordered
// r-tuples of rational points in general position for r <= 4); further
// rational points come in increasing order, orbits of equal degree come by
// increasing minimal generator, and orbits of degree >= 3 whose generator
// lies on a rational line through a coordinate vertex are skipped (such an
// orbit has three collinear points).

#ifndef DP2_CONFIG_SEARCH_H_
#define DP2_CONFIG_SEARCH_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dp2/finite_field.h"
#include "dp2/projective.h"
#include "json.hpp"

namespace dp2 {

struct SearchPattern {
  std::vector<int> degrees;  // descending
  // Degree-5 orbit on y^2 = xz, degree-3 orbit on x^2 = yz avoiding the
  // first conic.  Only with degrees {5, 3}.
  bool conic = false;

  // "1x7", "3,1x4", "3,3,1", "5,3:conic", "7".
  static SearchPattern Parse(std::string_view text);
  std::string ToString() const;
  int TotalDegree() const;
};

struct SearchOptions {
  // Candidate orbits examined before giving up.
  uint64_t node_budget = 50'000'000;
};

struct SearchWitness {
  uint64_t q = 0;
  int base_degree = 1;  // q = p^base_degree
  std::shared_ptr<const FiniteField> field;  // working field
  SearchPattern pattern;
  std::vector<ClosedPoint> points;

  std::vector<ProjPoint> GeometricPoints() const;
};

enum class SearchStatus { kFound, kExhausted, kBudgetExceeded };
const char* SearchStatusName(SearchStatus s);

struct SearchResult {
  SearchStatus status = SearchStatus::kExhausted;
  std::optional<SearchWitness> witness;
  uint64_t nodes = 0;
  std::string certificate;
};

// Working field: F_{p^(e lcm(degrees))}.  Throws kInvalidArgument for a
// bad q or a total degree above 8, kUnsupported for a conic constraint on
// other degrees, kSizeCapExceeded when a slot field F_{q^d} exceeds 2^20
// elements and is not the working field itself.
SearchResult SearchBlowupConfig(const SearchPattern& pattern, uint64_t q,
                                const SearchOptions& options = {});

// {q, p, field_degree, modulus (low to high), pattern,
//  points: [{degree, orbit: [[x, y, z], ...]}]}, coordinates as
// polynomials in a.
nlohmann::json WitnessToJson(const SearchWitness& w);
SearchWitness WitnessFromJson(const nlohmann::json& j);

struct WitnessCheck {
  bool ok = false;
  std::string detail;
};

// Re-derives everything from the witness alone: orbit structure under
// x -> x^q, degrees against the pattern, conic membership, and the full
// general position test on all geometric points.
WitnessCheck VerifyWitness(const SearchWitness& w);

}  // namespace dp2

#endif  // DP2_CONFIG_SEARCH_H_
