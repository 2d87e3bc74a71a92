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

// The Weyl group W(E7) realised as the group of isometries of the Picard
// lattice fixing the canonical class.
//
// An element is determined by the images of E1..E7, each of which is one of
// the 56 exceptional classes.  The store therefore packs an element into 42
// bits: six bits per image, E1 most significant, so that numeric order of
// packed keys is lexicographic order of the image-index tuple.  A full
// closure of the seven simple reflections is held in an open-addressing hash
// set (about 100 MB for 2,903,040 elements).

#ifndef DP2_WEYL_E7_H_
#define DP2_WEYL_E7_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dp2/error.h"
#include "dp2/int_matrix.h"
#include "dp2/pic_lattice.h"

namespace dp2 {

inline constexpr uint64_t kWeylE7Order = 2903040;

class Isometry {
 public:
  // Validates the invariants (form preserved, K fixed, |entries| <= 32).
  // Throws kNotAnIsometry.
  explicit Isometry(const IntMatrix8& m);

  static Isometry Identity();
  // v -> (v.K) K - v; central in W(E7).
  static Isometry Geiser();
  // s(v) = v + (v.a) a for a root a.
  static Isometry Reflection(const DivisorClass& root);

  const IntMatrix8& matrix() const { return m_; }
  DivisorClass Apply(const DivisorClass& v) const;

  // Composition: (a * b)(v) = a(b(v)).
  Isometry operator*(const Isometry& o) const;
  bool operator==(const Isometry& o) const { return m_ == o.m_; }
  Isometry Power(unsigned e) const;
  Isometry Inverse() const;
  int Order() const;

 private:
  struct Unchecked {};
  Isometry(const IntMatrix8& m, Unchecked) : m_(m) {}

  IntMatrix8 m_;
};

// Returns an empty string when m is a valid isometry, otherwise the reason.
std::string IsometryViolation(const IntMatrix8& m);

// Simple roots E1-E2, ..., E6-E7, L-E1-E2-E3 (E7 Dynkin diagram with the
// branch node E3-E4), and their reflections in the same order.
const std::vector<DivisorClass>& SimpleRoots();
std::vector<Isometry> SimpleReflections();

// Index of v in ExceptionalClasses() / Roots(), or -1.
int ExceptionalIndex(const DivisorClass& v);
int RootIndex(const DivisorClass& v);

// The permutation induced on the 56 exceptional classes / 126 roots.
std::vector<int> ExceptionalPermutation(const Isometry& m);
std::vector<int> RootPermutation(const Isometry& m);

// Cycle lengths of a permutation, sorted descending.
std::vector<int> CycleType(std::span<const int> perm);

// Orbits of <m> on the exceptional classes.  Each orbit starts with its
// lexicographically smallest class and follows m from there; orbits are
// ordered by their first class.
std::vector<std::vector<DivisorClass>> ExceptionalOrbits(const Isometry& m);

// Rank of the sublattice fixed by <m>: multiplicity of eigenvalue 1.
int InvariantPicardRank(const Isometry& m);

using PackedElement = uint64_t;

PackedElement Pack(const Isometry& m);
Isometry Unpack(PackedElement key);

struct GroupBuildOptions {
  uint64_t memory_budget_bytes = uint64_t{1} << 30;
  int threads = 1;
};

// Raw conjugacy partition of the store, classes numbered in order of first
// appearance in the BFS order.
struct ConjugacyPartition {
  std::vector<uint8_t> class_of;         // per BFS index
  std::vector<uint32_t> representative;  // BFS index of the first member
  std::vector<uint64_t> size;
};

class WeylGroupStore {
 public:
  // BFS closure of SimpleReflections().  Layers are sorted by packed key.
  // Throws kBudgetExceeded with a progress report when the projected memory
  // use passes the budget.
  static WeylGroupStore Build(const GroupBuildOptions& options = {});

  WeylGroupStore(WeylGroupStore&&) noexcept = default;
  WeylGroupStore& operator=(WeylGroupStore&&) noexcept = default;

  size_t size() const { return bfs_.size(); }
  size_t num_layers() const { return layer_offsets_.size() - 1; }
  std::span<const PackedElement> elements() const { return bfs_; }
  // Elements of BFS layer k (word length k).
  std::span<const PackedElement> layer(size_t k) const;
  uint64_t memory_bytes() const;

  // BFS index of key, if present.
  std::optional<uint32_t> Find(PackedElement key) const;
  bool Contains(const Isometry& m) const { return Find(Pack(m)).has_value(); }

  // Exact conjugacy classes: orbits of conjugation by the generators.
  ConjugacyPartition ComputeConjugacyClasses() const;

 private:
  WeylGroupStore() = default;

  void Insert(PackedElement key, uint32_t value);
  uint32_t* Slot(PackedElement key);

  std::vector<PackedElement> bfs_;
  std::vector<size_t> layer_offsets_;
  // Open addressing, linear probe; kEmpty marks unused slots.
  std::vector<PackedElement> keys_;
  std::vector<uint32_t> values_;
  uint64_t mask_ = 0;
};

// Conjugation of a packed element by an involution given as an Isometry
// index into SimpleReflections(): s g s.
PackedElement ConjugateBySimple(PackedElement g, int generator);
// s * g for a simple reflection s.
PackedElement LeftMultiplyBySimple(PackedElement g, int generator);

}  // namespace dp2

#endif  // DP2_WEYL_E7_H_
