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

#include "dp2/class_table.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "dp2/error.h"

namespace dp2 {

namespace {

using nlohmann::json;

std::string JoinInts(const std::vector<int>& v, char sep) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string EigenvalueString(const std::vector<RootOfUnity>& ev) {
  std::string s;
  for (size_t i = 0; i < ev.size(); ++i) {
    if (i) s += ' ';
    s += ev[i].ToString();
  }
  return s;
}

struct RawClass {
  Isometry rep = Isometry::Identity();
  uint64_t size = 0;
  int order = 0;
  int rho = 0;
  std::vector<RootOfUnity> eigenvalues;
  ClassFingerprint fingerprint;
  int geiser_raw = -1;
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int Root(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void Join(int a, int b) { parent[Root(a)] = Root(b); }
};

int RawClassOf(const WeylGroupStore& store, const std::vector<uint8_t>& class_of, const Isometry& m) {
  const auto idx = store.Find(Pack(m));
  if (!idx) Fail(ErrorCode::kInternal, "element missing from the group store");
  return class_of[*idx];
}

}  // namespace

std::string ClassFingerprint::ToString() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, m] : charpoly_cyclotomic) {
    if (!first) os << ' ';
    first = false;
    os << "P" << n << "^" << m;
  }
  os << " | " << JoinInts(exc_cycle_type, ',') << " | " << JoinInts(root_cycle_type, ',');
  return os.str();
}

ClassFingerprint Fingerprint(const Isometry& m) {
  ClassFingerprint fp;
  const auto factors = CyclotomicFactorization(CharacteristicPolynomial(m.matrix()));
  if (!factors) Fail(ErrorCode::kInternal, "characteristic polynomial is not cyclotomic");
  fp.charpoly_cyclotomic = *factors;
  const auto ep = ExceptionalPermutation(m);
  const auto rp = RootPermutation(m);
  fp.exc_cycle_type = CycleType(ep);
  fp.root_cycle_type = CycleType(rp);
  return fp;
}

std::vector<RootOfUnity> EigenvaluesOnKPerp(const Isometry& m) {
  const auto factors = CyclotomicFactorization(CharacteristicPolynomial(m.matrix()));
  if (!factors) Fail(ErrorCode::kInternal, "characteristic polynomial is not cyclotomic");
  std::vector<RootOfUnity> ev;
  bool dropped_k = false;
  for (const auto& [n, mult] : *factors) {
    for (int rep = 0; rep < mult; ++rep) {
      if (n == 1 && !dropped_k) {
        dropped_k = true;
        continue;
      }
      for (int k = 0; k < n; ++k) {
        if (std::gcd(k, n) == 1) ev.push_back(MakeRootOfUnity(k, n));
      }
    }
  }
  if (!dropped_k || ev.size() != 7) Fail(ErrorCode::kInternal, "K is not an eigenvector");
  std::sort(ev.begin(), ev.end());
  return ev;
}

std::string MinimalityName(Minimality m) {
  switch (m) {
    case Minimality::kNonMinimal:
      return "NonMinimal";
    case Minimality::kMinimalConicBundle:
      return "MinimalConicBundle";
    case Minimality::kMinimalPicardOne:
      return "MinimalPicardOne";
  }
  return "?";
}

Minimality ParseMinimality(const std::string& s) {
  for (Minimality m : {Minimality::kNonMinimal, Minimality::kMinimalConicBundle,
                       Minimality::kMinimalPicardOne}) {
    if (MinimalityName(m) == s) return m;
  }
  Fail(ErrorCode::kParse, "unknown minimality '" + s + "'");
}

Minimality ComputeMinimality(const Isometry& m) {
  for (const auto& orbit : ExceptionalOrbits(m)) {
    bool orthogonal = true;
    for (size_t a = 0; a < orbit.size() && orthogonal; ++a) {
      for (size_t b = a + 1; b < orbit.size(); ++b) {
        if (Intersect(orbit[a], orbit[b]) != 0) {
          orthogonal = false;
          break;
        }
      }
    }
    if (orthogonal) return Minimality::kNonMinimal;
  }
  const int rho = InvariantPicardRank(m);
  if (rho == 2) return Minimality::kMinimalConicBundle;
  if (rho == 1) return Minimality::kMinimalPicardOne;
  Fail(ErrorCode::kConsistency,
       "minimal action with invariant Picard rank " + std::to_string(rho));
}

ClassTable ClassTable::Build(const GroupBuildOptions& options) {
  auto store = std::make_shared<WeylGroupStore>(WeylGroupStore::Build(options));
  const ConjugacyPartition part = store->ComputeConjugacyClasses();
  const int num_raw = static_cast<int>(part.representative.size());
  if (num_raw != kNumClasses) {
    Fail(ErrorCode::kConsistency, "found " + std::to_string(num_raw) + " conjugacy classes");
  }

  ClassTable table;
  table.group_order_ = store->size();
  const Isometry geiser = Isometry::Geiser();

  std::vector<RawClass> raw(num_raw);
  for (int c = 0; c < num_raw; ++c) {
    RawClass& r = raw[c];
    r.rep = Unpack(store->elements()[part.representative[c]]);
    r.size = part.size[c];
    r.order = r.rep.Order();
    r.rho = InvariantPicardRank(r.rep);
    r.eigenvalues = EigenvaluesOnKPerp(r.rep);
    r.fingerprint = Fingerprint(r.rep);
    r.geiser_raw = RawClassOf(*store, part.class_of, geiser * r.rep);
  }

  // Classes of cyclic subgroups: merge g with its generating powers.
  UnionFind uf(num_raw);
  for (int c = 0; c < num_raw; ++c) {
    for (int k = 2; k < raw[c].order; ++k) {
      if (std::gcd(k, raw[c].order) != 1) continue;
      uf.Join(c, RawClassOf(*store, part.class_of, raw[c].rep.Power(k)));
    }
  }
  int components = 0;
  for (int c = 0; c < num_raw; ++c) components += (uf.Root(c) == c);
  table.cyclic_subgroup_classes_ = components;

  // Match rows on (order, eigenvalues, rho).
  const auto& rows = ReferenceTable();
  using Key = std::tuple<int, std::vector<RootOfUnity>, int>;
  std::map<Key, std::vector<int>> rows_by_key, raw_by_key;
  for (const auto& row : rows) rows_by_key[{row.order, row.eigenvalues, row.rho}].push_back(row.id);
  for (int c = 0; c < num_raw; ++c) raw_by_key[{raw[c].order, raw[c].eigenvalues, raw[c].rho}].push_back(c);

  std::vector<int> id_to_raw(kNumClasses + 1, -1);
  std::vector<std::vector<int>> ambiguous_rows;
  std::map<std::vector<int>, std::vector<int>> ambiguous_raw;
  for (const auto& [key, ids] : rows_by_key) {
    auto it = raw_by_key.find(key);
    if (it == raw_by_key.end() || it->second.size() != ids.size()) {
      Fail(ErrorCode::kConsistency, "no computed class matches table row " + std::to_string(ids[0]));
    }
    if (ids.size() == 1) {
      id_to_raw[ids[0]] = it->second[0];
    } else {
      ambiguous_rows.push_back(ids);
      ambiguous_raw[ids] = it->second;
    }
  }
  if (raw_by_key.size() != rows_by_key.size()) {
    Fail(ErrorCode::kConsistency, "computed classes do not match the table row keys");
  }

  // Ambiguous rows: a group whose Geiser targets are already placed follows
  // them; otherwise the lexicographic tie-break on (exceptional cycle type,
  // root cycle type, class size) orders the classes.
  std::sort(ambiguous_rows.begin(), ambiguous_rows.end());
  auto tie_key = [&](int c) {
    return std::make_tuple(raw[c].fingerprint.exc_cycle_type, raw[c].fingerprint.root_cycle_type,
                           raw[c].size);
  };
  for (const auto& ids : ambiguous_rows) {
    std::vector<int> classes = ambiguous_raw[ids];
    std::sort(classes.begin(), classes.end(),
              [&](int a, int b) { return tie_key(a) < tie_key(b); });
    bool placed_targets = true;
    for (int id : ids) placed_targets &= id_to_raw[rows[id - 1].geiser] >= 0;

    std::ostringstream note;
    note << "rows";
    for (int id : ids) note << ' ' << id;
    if (placed_targets) {
      std::vector<int> derived;
      for (int id : ids) derived.push_back(raw[id_to_raw[rows[id - 1].geiser]].geiser_raw);
      std::vector<int> sorted_derived = derived, sorted_classes = classes;
      std::sort(sorted_derived.begin(), sorted_derived.end());
      std::sort(sorted_classes.begin(), sorted_classes.end());
      if (sorted_derived == sorted_classes) {
        note << ": assigned through the Geiser column";
        note << (derived == classes ? " (agrees with the cycle-type order)"
                                    : " (reverses the cycle-type order)");
        classes = derived;
      } else {
        note << ": Geiser targets outside the group, cycle-type order used";
      }
    } else {
      note << ": cycle-type order";
      if (raw[classes[0]].fingerprint.exc_cycle_type == raw[classes[1]].fingerprint.exc_cycle_type) {
        note << " (exceptional cycle types equal, root cycle types decide)";
      }
    }
    for (size_t i = 0; i < ids.size(); ++i) id_to_raw[ids[i]] = classes[i];
    table.notes_.push_back(note.str());
  }

  table.raw_class_of_ = part.class_of;
  table.raw_to_id_.assign(num_raw, 0);
  for (int id = 1; id <= kNumClasses; ++id) table.raw_to_id_[id_to_raw[id]] = id;

  for (int id = 1; id <= kNumClasses; ++id) {
    const RawClass& r = raw[id_to_raw[id]];
    ConjugacyClassRecord rec;
    rec.id = id;
    rec.carter_label = rows[id - 1].carter_label;
    rec.order = r.order;
    rec.eigenvalues = r.eigenvalues;
    rec.rho_invariant = r.rho;
    rec.geiser_partner = table.raw_to_id_[r.geiser_raw];
    rec.minimality = ComputeMinimality(r.rep);
    rec.class_size = r.size;
    rec.representative = r.rep;
    rec.fingerprint = r.fingerprint;
    table.records_.push_back(std::move(rec));
  }
  table.store_ = std::move(store);
  table.IndexFingerprints();
  return table;
}

void ClassTable::IndexFingerprints() {
  by_fingerprint_.clear();
  fingerprints_unique_ = true;
  for (const auto& rec : records_) {
    if (!by_fingerprint_.emplace(rec.fingerprint, rec.id).second) fingerprints_unique_ = false;
  }
  notes_.push_back(fingerprints_unique_ ? "fingerprints distinguish all classes"
                                        : "fingerprint collision, classification uses the group store");
}

const ConjugacyClassRecord& ClassTable::record(int id) const {
  if (id < 1 || id > static_cast<int>(records_.size())) {
    Fail(ErrorCode::kInvalidArgument, "class id must be in 1..60, got " + std::to_string(id));
  }
  return records_[id - 1];
}

int ClassTable::Classify(const Isometry& m) const {
  if (fingerprints_unique_) {
    auto it = by_fingerprint_.find(Fingerprint(m));
    if (it == by_fingerprint_.end()) Fail(ErrorCode::kInternal, "fingerprint not in the table");
    return it->second;
  }
  return ClassifyViaStore(m);
}

int ClassTable::ClassifyViaStore(const Isometry& m) const {
  if (!store_) Fail(ErrorCode::kUnsupported, "group store not available for this table");
  return raw_to_id_[RawClassOf(*store_, raw_class_of_, m)];
}

TableComparison ClassTable::Compare() const {
  TableComparison cmp;
  const auto& corrected = ReferenceTable();
  const auto& printed = PrintedReferenceTable();
  for (const auto& rec : records_) {
    const ReferenceRow& c = corrected[rec.id - 1];
    const ReferenceRow& p = printed[rec.id - 1];
    auto check = [&](bool ok, const std::string& field) {
      if (!ok) cmp.corrected_mismatches.push_back("row " + std::to_string(rec.id) + " " + field);
    };
    check(rec.order == c.order, "order");
    check(rec.eigenvalues == c.eigenvalues, "eigenvalues");
    check(rec.rho_invariant == c.rho, "rho");
    check(rec.geiser_partner == c.geiser, "geiser");
    if (rec.order != p.order) cmp.printed_mismatches.emplace_back(rec.id, "order");
    if (rec.eigenvalues != p.eigenvalues) cmp.printed_mismatches.emplace_back(rec.id, "eigenvalues");
    if (rec.rho_invariant != p.rho) cmp.printed_mismatches.emplace_back(rec.id, "rho");
    if (rec.geiser_partner != p.geiser) cmp.printed_mismatches.emplace_back(rec.id, "geiser");
  }
  return cmp;
}

json ClassTable::ToJson() const {
  json classes = json::array();
  for (const auto& rec : records_) {
    json ev = json::array();
    for (const auto& e : rec.eigenvalues) ev.push_back(e.ToString());
    std::ostringstream packed;
    packed << std::hex << Pack(rec.representative);
    classes.push_back({{"id", rec.id},
                       {"carter_label", rec.carter_label},
                       {"order", rec.order},
                       {"eigenvalues", ev},
                       {"rho", rec.rho_invariant},
                       {"geiser", rec.geiser_partner},
                       {"minimality", MinimalityName(rec.minimality)},
                       {"class_size", rec.class_size},
                       {"representative", rec.representative.matrix().Flatten()},
                       {"representative_packed", packed.str()}});
  }
  return {{"format_version", kClassTableFormatVersion},
          {"group_order", group_order_},
          {"element_classes", records_.size()},
          {"cyclic_subgroup_classes", cyclic_subgroup_classes_},
          {"fingerprints_unique", fingerprints_unique_},
          {"classes", classes}};
}

std::string ClassTable::ToCsv() const {
  std::ostringstream os;
  os << "id,carter_label,order,eigenvalues,rho,geiser,minimality,class_size,representative\n";
  for (const auto& rec : records_) {
    os << rec.id << ',' << rec.carter_label << ',' << rec.order << ','
       << EigenvalueString(rec.eigenvalues) << ',' << rec.rho_invariant << ','
       << rec.geiser_partner << ',' << MinimalityName(rec.minimality) << ',' << rec.class_size
       << ',' << JoinInts(rec.representative.matrix().Flatten(), ' ') << '\n';
  }
  return os.str();
}

ClassTable ClassTable::FromJson(const json& j) {
  try {
    if (j.at("format_version").get<int>() != kClassTableFormatVersion) {
      Fail(ErrorCode::kParse, "class table format version mismatch");
    }
    ClassTable table;
    table.group_order_ = j.at("group_order").get<uint64_t>();
    table.cyclic_subgroup_classes_ = j.at("cyclic_subgroup_classes").get<int>();
    const json& classes = j.at("classes");
    if (!classes.is_array() || classes.size() != kNumClasses) {
      Fail(ErrorCode::kParse, "class table must have 60 rows");
    }
    uint64_t total = 0;
    for (size_t i = 0; i < classes.size(); ++i) {
      const json& c = classes[i];
      ConjugacyClassRecord rec;
      rec.id = c.at("id").get<int>();
      if (rec.id != static_cast<int>(i) + 1) Fail(ErrorCode::kParse, "class ids out of order");
      rec.carter_label = c.at("carter_label").get<std::string>();
      rec.representative = Isometry(IntMatrix8::FromFlat(c.at("representative").get<std::vector<int>>()));
      rec.order = rec.representative.Order();
      rec.eigenvalues = EigenvaluesOnKPerp(rec.representative);
      rec.rho_invariant = InvariantPicardRank(rec.representative);
      rec.geiser_partner = c.at("geiser").get<int>();
      rec.minimality = ComputeMinimality(rec.representative);
      rec.class_size = c.at("class_size").get<uint64_t>();
      rec.fingerprint = Fingerprint(rec.representative);
      std::vector<RootOfUnity> stored_ev;
      for (const auto& t : c.at("eigenvalues")) stored_ev.push_back(ParseRootToken(t.get<std::string>()));
      if (c.at("order").get<int>() != rec.order || stored_ev != rec.eigenvalues ||
          c.at("rho").get<int>() != rec.rho_invariant ||
          ParseMinimality(c.at("minimality").get<std::string>()) != rec.minimality) {
        Fail(ErrorCode::kConsistency, "cached row " + std::to_string(rec.id) + " disagrees with its representative");
      }
      if (rec.geiser_partner < 1 || rec.geiser_partner > kNumClasses) {
        Fail(ErrorCode::kParse, "geiser partner out of range");
      }
      if (rec.class_size == 0 || kWeylE7Order % rec.class_size != 0) {
        Fail(ErrorCode::kConsistency, "class size does not divide the group order");
      }
      total += rec.class_size;
      table.records_.push_back(std::move(rec));
    }
    if (total != kWeylE7Order || table.group_order_ != kWeylE7Order) {
      Fail(ErrorCode::kConsistency, "cached class sizes do not sum to the group order");
    }
    table.IndexFingerprints();
    if (!table.fingerprints_unique_) {
      Fail(ErrorCode::kConsistency, "cached table has colliding fingerprints; a rebuild is needed");
    }
    // The Geiser column is rechecked by classifying the twisted representatives.
    const Isometry geiser = Isometry::Geiser();
    for (const auto& rec : table.records_) {
      if (table.Classify(geiser * rec.representative) != rec.geiser_partner) {
        Fail(ErrorCode::kConsistency, "cached Geiser column is inconsistent");
      }
    }
    table.notes_.push_back("loaded from cache");
    return table;
  } catch (const json::exception& e) {
    Fail(ErrorCode::kParse, std::string("malformed class table: ") + e.what());
  }
}

ClassTable ClassTable::LoadOrBuild(const std::string& cache_dir, const GroupBuildOptions& options,
                                   bool* loaded) {
  namespace fs = std::filesystem;
  const fs::path path =
      fs::path(cache_dir) / ("class_table_v" + std::to_string(kClassTableFormatVersion) + ".json");
  if (loaded) *loaded = false;
  std::error_code ec;
  if (!cache_dir.empty() && fs::exists(path, ec)) {
    try {
      std::ifstream in(path);
      json j = json::parse(in);
      ClassTable t = FromJson(j);
      if (loaded) *loaded = true;
      return t;
    } catch (const std::exception&) {
      // Fall through to a rebuild.
    }
  }
  ClassTable t = Build(options);
  if (!cache_dir.empty()) {
    fs::create_directories(cache_dir, ec);
    const fs::path tmp = path.string() + ".tmp";
    {
      std::ofstream out(tmp);
      out << t.ToJson().dump(1) << '\n';
    }
    fs::rename(tmp, path, ec);
    if (ec) t.notes_.push_back("could not write cache: " + ec.message());
  }
  return t;
}

}  // namespace dp2
