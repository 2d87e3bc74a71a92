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

// The class table: the 60 conjugacy classes of W(E7) with their computed
// invariants, numbered to agree with the published table.

#ifndef DP2_CLASS_TABLE_H_
#define DP2_CLASS_TABLE_H_

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dp2/reference_table.h"
#include "dp2/weyl_e7.h"
#include "json.hpp"

namespace dp2 {

inline constexpr int kNumClasses = 60;
inline constexpr int kClassTableFormatVersion = 1;

// Conjugacy invariant key.
struct ClassFingerprint {
  std::map<int, int> charpoly_cyclotomic;  // n -> multiplicity of Phi_n
  std::vector<int> exc_cycle_type;         // partition of 56
  std::vector<int> root_cycle_type;        // partition of 126

  auto operator<=>(const ClassFingerprint&) const = default;
  std::string ToString() const;
};

ClassFingerprint Fingerprint(const Isometry& m);

// Eigenvalues on K^perp (7 of them, sorted), read off the cyclotomic
// factorization of the characteristic polynomial on Pic with one factor
// t - 1 removed for K.
std::vector<RootOfUnity> EigenvaluesOnKPerp(const Isometry& m);

enum class Minimality { kNonMinimal, kMinimalConicBundle, kMinimalPicardOne };
std::string MinimalityName(Minimality m);
Minimality ParseMinimality(const std::string& s);

// Lattice criterion: non-minimal iff some <m>-orbit of exceptional classes
// consists of pairwise orthogonal classes.  Throws kConsistency if a minimal
// action has invariant Picard rank 3 or more.
Minimality ComputeMinimality(const Isometry& m);

struct ConjugacyClassRecord {
  int id = 0;
  std::string carter_label;
  int order = 0;
  std::vector<RootOfUnity> eigenvalues;
  int rho_invariant = 0;
  int geiser_partner = 0;
  Minimality minimality = Minimality::kNonMinimal;
  uint64_t class_size = 0;
  Isometry representative = Isometry::Identity();
  ClassFingerprint fingerprint;
};

// Differences between the computed table and the published one.
struct TableComparison {
  // Against the corrected rows: must be empty.
  std::vector<std::string> corrected_mismatches;
  // Against the printed rows, as (id, field) pairs: expected to be exactly
  // the errata.
  std::vector<std::pair<int, std::string>> printed_mismatches;
};

class ClassTable {
 public:
  // Enumerates the group, computes the conjugacy classes and matches them
  // to the published rows.  Throws kBudgetExceeded from the enumeration and
  // kConsistency if a row cannot be matched.
  static ClassTable Build(const GroupBuildOptions& options = {});

  // Loads a table previously written by ToJson.  Every representative is
  // re-validated and its invariants recomputed; any discrepancy throws
  // kParse or kConsistency.
  static ClassTable FromJson(const nlohmann::json& j);

  // Reads <cache_dir>/class_table_v<version>.json, or builds and writes it.
  // A cache that fails to load is rebuilt.  *loaded reports which happened.
  static ClassTable LoadOrBuild(const std::string& cache_dir, const GroupBuildOptions& options,
                                bool* loaded = nullptr);

  nlohmann::json ToJson() const;
  std::string ToCsv() const;

  const std::vector<ConjugacyClassRecord>& records() const { return records_; }
  // id in 1..60; throws kInvalidArgument otherwise.
  const ConjugacyClassRecord& record(int id) const;

  // Fingerprint lookup, or the group store when fingerprints collide.
  int Classify(const Isometry& m) const;
  // Explicit store lookup.  Only available on a freshly built table.
  bool has_store() const { return store_ != nullptr; }
  int ClassifyViaStore(const Isometry& m) const;

  int GeiserTwistClass(int id) const { return record(id).geiser_partner; }
  Minimality MinimalityKind(int id) const { return record(id).minimality; }

  bool fingerprints_unique() const { return fingerprints_unique_; }
  int cyclic_subgroup_classes() const { return cyclic_subgroup_classes_; }
  uint64_t group_order() const { return group_order_; }
  const std::vector<std::string>& notes() const { return notes_; }
  TableComparison Compare() const;

 private:
  ClassTable() = default;
  void IndexFingerprints();

  std::vector<ConjugacyClassRecord> records_;
  std::map<ClassFingerprint, int> by_fingerprint_;
  bool fingerprints_unique_ = false;
  int cyclic_subgroup_classes_ = 0;
  uint64_t group_order_ = 0;
  std::vector<std::string> notes_;

  std::shared_ptr<const WeylGroupStore> store_;
  std::vector<uint8_t> raw_class_of_;
  std::vector<int> raw_to_id_;
};

}  // namespace dp2

#endif  // DP2_CLASS_TABLE_H_
