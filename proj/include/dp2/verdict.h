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

// Existence of minimal degree-2 del Pezzo surfaces of each of the 18
// minimal types over F_q.  The published answers are a constant table;
// where a finite computation applies (a configuration search for the
// Geiser partner, closed points on the conic bundle base, point counts)
// its certificate is attached and must agree with the table.

#ifndef DP2_VERDICT_H_
#define DP2_VERDICT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dp2/class_table.h"
#include "dp2/config_search.h"
#include "json.hpp"

namespace dp2 {

inline constexpr uint64_t kMaxVerdictQ = 16;

enum class Verdict { kExists, kNotExists, kOpenInPaper };
enum class VerdictSource { kTheorem, kComputedWitness, kComputedExhaustion };
const char* VerdictName(Verdict v);
const char* VerdictSourceName(VerdictSource s);

// The 18 minimal types, ascending.
const std::vector<int>& MinimalTypes();

struct TheoremEntry {
  Verdict verdict;
  std::string statement;  // the published condition on q for this type
};
// Throws kInvalidArgument for a non-minimal type or a bad q.
TheoremEntry TheoremVerdict(int type, uint64_t q);

// A finite computation attached to a type: a search for its Geiser
// partner's point configuration, or closed point counts on P^1.
struct ComputedCheck {
  int partner_type = 0;     // 0 when not a partner search
  std::string pattern;      // search pattern, empty for P^1 counts
  bool witness_only = false;  // exhaustion proves nothing
  std::string description;
};
std::optional<ComputedCheck> ComputedCheckFor(int type);

struct VerdictRow {
  int class_id = 0;
  uint64_t q = 0;
  Verdict verdict = Verdict::kOpenInPaper;
  VerdictSource source = VerdictSource::kTheorem;
  std::string statement;
  std::string certificate;  // empty when theorem-sourced only
  std::optional<SearchWitness> witness;
  std::string witness_path;  // filled by the caller when written to disk
  std::optional<int> negative_point_count_at;
  std::vector<std::string> notes;
};

struct VerdictOptions {
  uint64_t node_budget = 20'000'000;
  bool run_searches = true;
};

// Combines a theorem verdict with a computed one; throws kConsistency when
// they disagree.
Verdict Reconcile(int type, uint64_t q, Verdict theorem, Verdict computed);

// Rows for all 18 types.  Throws kConsistency on any disagreement between
// the table and a computed certificate, including a negative point count
// at a pair the table does not mark as nonexistent.
std::vector<VerdictRow> ComputeVerdicts(const ClassTable& table, uint64_t q, const VerdictOptions& options = {});

nlohmann::json VerdictsToJson(const std::vector<VerdictRow>& rows);
std::string VerdictsToCsv(const std::vector<VerdictRow>& rows);

}  // namespace dp2

#endif  // DP2_VERDICT_H_
