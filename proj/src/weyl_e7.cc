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

#include "dp2/weyl_e7.h"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>

namespace dp2 {

namespace {

constexpr int kNumExceptional = 56;
constexpr int kNumGenerators = 7;
constexpr int kBitsPerImage = 6;
constexpr PackedElement kEmptySlot = ~PackedElement{0};

// Exceptional classes have d in [0,3] and m_i in [-2,1]; the lookup key
// packs d and m_i + 2 in base 4.
int LookupKey(const DivisorClass& v) {
  if (v[0] < 0 || v[0] > 3) return -1;
  int key = v[0];
  for (int k = 1; k < kPicRank; ++k) {
    const int m = v[k] + 2;
    if (m < 0 || m > 3) return -1;
    key = key * 4 + m;
  }
  return key;
}

struct SparseClass {
  // (basis index, coefficient) pairs; basis 0 is L, 1..7 are E_i.
  std::vector<std::pair<int, int>> terms;
};

class PackedOps {
 public:
  static const PackedOps& Get() {
    static const PackedOps ops;
    return ops;
  }

  const std::vector<DivisorClass>& exc;
  std::array<int8_t, 1 << 16> lookup{};
  std::array<std::array<uint8_t, kNumExceptional>, kNumGenerators> gen_perm{};
  std::array<std::array<SparseClass, 8>, kNumGenerators> gen_on_basis{};

  int Index(const DivisorClass& v) const {
    const int key = LookupKey(v);
    return key < 0 ? -1 : lookup[key];
  }

  void Decode(PackedElement g, std::array<DivisorClass, 8>& cols) const {
    DivisorClass sum;
    for (int i = 1; i <= 7; ++i) {
      const int idx = static_cast<int>((g >> (kBitsPerImage * (7 - i))) & 63u);
      cols[i] = exc[idx];
      sum += cols[i];
    }
    // K = -3L + sum E_i is fixed, so g(L) = (sum g(E_i) - K) / 3.
    const DivisorClass num = sum - CanonicalClass();
    for (int k = 0; k < kPicRank; ++k) cols[0][k] = num[k] / 3;
  }

 private:
  PackedOps() : exc(ExceptionalClasses()) {
    lookup.fill(-1);
    for (int i = 0; i < kNumExceptional; ++i) lookup[LookupKey(exc[i])] = static_cast<int8_t>(i);
    const auto& roots = SimpleRoots();
    for (int s = 0; s < kNumGenerators; ++s) {
      const Isometry r = Isometry::Reflection(roots[s]);
      for (int i = 0; i < kNumExceptional; ++i) {
        gen_perm[s][i] = static_cast<uint8_t>(Index(r.Apply(exc[i])));
      }
      for (int b = 0; b < 8; ++b) {
        DivisorClass e;
        e[b] = 1;
        const DivisorClass img = r.Apply(e);
        for (int k = 0; k < kPicRank; ++k) {
          if (img[k] != 0) gen_on_basis[s][b].terms.emplace_back(k, img[k]);
        }
      }
    }
  }
};

PackedElement PackIndices(const std::array<int, 8>& idx) {
  PackedElement key = 0;
  for (int i = 1; i <= 7; ++i) key = (key << kBitsPerImage) | static_cast<PackedElement>(idx[i]);
  return key;
}

uint64_t HashKey(PackedElement key) {
  key ^= key >> 29;
  key *= 0xbf58476d1ce4e5b9ULL;
  key ^= key >> 32;
  return key;
}

}  // namespace

std::string IsometryViolation(const IntMatrix8& m) {
  if (m.MaxAbsEntry() > 32) return "entry magnitude exceeds 32";
  std::array<DivisorClass, 8> cols;
  for (int j = 0; j < 8; ++j)
    for (int i = 0; i < 8; ++i) cols[j][i] = m(i, j);
  for (int a = 0; a < 8; ++a) {
    for (int b = a; b < 8; ++b) {
      const int expected = (a != b) ? 0 : (a == 0 ? 1 : -1);
      if (Intersect(cols[a], cols[b]) != expected) {
        std::ostringstream os;
        os << "intersection form not preserved at basis pair (" << a << "," << b << ")";
        return os.str();
      }
    }
  }
  const DivisorClass k = CanonicalClass();
  DivisorClass mk;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) mk[i] += m(i, j) * k[j];
  if (mk != k) return "canonical class not fixed";
  return {};
}

Isometry::Isometry(const IntMatrix8& m) : m_(m) {
  const std::string why = IsometryViolation(m);
  if (!why.empty()) Fail(ErrorCode::kNotAnIsometry, why);
}

Isometry Isometry::Identity() { return Isometry(IntMatrix8::Identity(), Unchecked{}); }

Isometry Isometry::Geiser() {
  IntMatrix8 m;
  const DivisorClass k = CanonicalClass();
  for (int j = 0; j < 8; ++j) {
    DivisorClass e;
    e[j] = 1;
    const DivisorClass img = GeiserImage(e);
    for (int i = 0; i < 8; ++i) m(i, j) = img[i];
  }
  (void)k;
  return Isometry(m);
}

Isometry Isometry::Reflection(const DivisorClass& root) {
  if (Intersect(root, root) != -2 || Intersect(root, CanonicalClass()) != 0) {
    Fail(ErrorCode::kInvalidArgument, "reflection needs a root, got " + root.ToString());
  }
  IntMatrix8 m;
  for (int j = 0; j < 8; ++j) {
    DivisorClass e;
    e[j] = 1;
    const DivisorClass img = e + Intersect(e, root) * root;
    for (int i = 0; i < 8; ++i) m(i, j) = img[i];
  }
  return Isometry(m);
}

DivisorClass Isometry::Apply(const DivisorClass& v) const {
  DivisorClass r;
  for (int i = 0; i < 8; ++i) {
    int s = 0;
    for (int j = 0; j < 8; ++j) s += m_(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

Isometry Isometry::operator*(const Isometry& o) const { return Isometry(m_ * o.m_, Unchecked{}); }

Isometry Isometry::Power(unsigned e) const { return Isometry(m_.Power(e), Unchecked{}); }

Isometry Isometry::Inverse() const {
  // M^{-1} = G M^T G with G = diag(1, -1, ..., -1).
  IntMatrix8 t = m_.Transposed();
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const int gi = (i == 0) ? 1 : -1;
      const int gj = (j == 0) ? 1 : -1;
      t(i, j) *= gi * gj;
    }
  }
  return Isometry(t, Unchecked{});
}

int Isometry::Order() const {
  IntMatrix8 p = m_;
  const IntMatrix8 id = IntMatrix8::Identity();
  for (int k = 1; k <= 64; ++k) {
    if (p == id) return k;
    p = p * m_;
  }
  Fail(ErrorCode::kInternal, "element order exceeds 64");
}

const std::vector<DivisorClass>& SimpleRoots() {
  static const std::vector<DivisorClass> roots = [] {
    std::vector<DivisorClass> r;
    for (int i = 1; i <= 6; ++i) {
      r.push_back(DivisorClass::Exceptional(i) - DivisorClass::Exceptional(i + 1));
    }
    r.push_back(DivisorClass::Line() - DivisorClass::Exceptional(1) -
                DivisorClass::Exceptional(2) - DivisorClass::Exceptional(3));
    return r;
  }();
  return roots;
}

std::vector<Isometry> SimpleReflections() {
  std::vector<Isometry> out;
  for (const auto& a : SimpleRoots()) out.push_back(Isometry::Reflection(a));
  return out;
}

int ExceptionalIndex(const DivisorClass& v) { return PackedOps::Get().Index(v); }

int RootIndex(const DivisorClass& v) {
  const auto& roots = Roots();
  auto it = std::lower_bound(roots.begin(), roots.end(), v);
  if (it == roots.end() || *it != v) return -1;
  return static_cast<int>(it - roots.begin());
}

std::vector<int> ExceptionalPermutation(const Isometry& m) {
  const auto& exc = ExceptionalClasses();
  std::vector<int> perm(exc.size());
  for (size_t i = 0; i < exc.size(); ++i) perm[i] = ExceptionalIndex(m.Apply(exc[i]));
  return perm;
}

std::vector<int> RootPermutation(const Isometry& m) {
  const auto& roots = Roots();
  std::vector<int> perm(roots.size());
  for (size_t i = 0; i < roots.size(); ++i) perm[i] = RootIndex(m.Apply(roots[i]));
  return perm;
}

std::vector<int> CycleType(std::span<const int> perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> cycles;
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = static_cast<size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    cycles.push_back(len);
  }
  std::sort(cycles.rbegin(), cycles.rend());
  return cycles;
}

std::vector<std::vector<DivisorClass>> ExceptionalOrbits(const Isometry& m) {
  const auto& exc = ExceptionalClasses();
  const std::vector<int> perm = ExceptionalPermutation(m);
  std::vector<bool> seen(exc.size(), false);
  std::vector<std::vector<DivisorClass>> orbits;
  for (size_t i = 0; i < exc.size(); ++i) {
    if (seen[i]) continue;
    std::vector<DivisorClass> orbit;
    for (size_t j = i; !seen[j]; j = static_cast<size_t>(perm[j])) {
      seen[j] = true;
      orbit.push_back(exc[j]);
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

int InvariantPicardRank(const Isometry& m) {
  const auto factors = CyclotomicFactorization(CharacteristicPolynomial(m.matrix()));
  if (!factors) Fail(ErrorCode::kInternal, "characteristic polynomial is not cyclotomic");
  auto it = factors->find(1);
  return it == factors->end() ? 0 : it->second;
}

PackedElement Pack(const Isometry& m) {
  std::array<int, 8> idx{};
  for (int i = 1; i <= 7; ++i) {
    idx[i] = ExceptionalIndex(m.Apply(DivisorClass::Exceptional(i)));
    if (idx[i] < 0) Fail(ErrorCode::kNotAnIsometry, "E_i not sent to an exceptional class");
  }
  return PackIndices(idx);
}

Isometry Unpack(PackedElement key) {
  std::array<DivisorClass, 8> cols;
  PackedOps::Get().Decode(key, cols);
  IntMatrix8 m;
  for (int j = 0; j < 8; ++j)
    for (int i = 0; i < 8; ++i) m(i, j) = cols[j][i];
  return Isometry(m);
}

PackedElement LeftMultiplyBySimple(PackedElement g, int generator) {
  const PackedOps& ops = PackedOps::Get();
  PackedElement out = 0;
  for (int i = 1; i <= 7; ++i) {
    const int idx = static_cast<int>((g >> (kBitsPerImage * (7 - i))) & 63u);
    out = (out << kBitsPerImage) | ops.gen_perm[generator][idx];
  }
  return out;
}

PackedElement ConjugateBySimple(PackedElement g, int generator) {
  const PackedOps& ops = PackedOps::Get();
  std::array<DivisorClass, 8> cols;
  ops.Decode(g, cols);
  std::array<int, 8> idx{};
  for (int i = 1; i <= 7; ++i) {
    // s g s (E_i) = s(g(s(E_i))).
    DivisorClass u;
    for (const auto& [b, c] : ops.gen_on_basis[generator][i].terms) u += c * cols[b];
    const int j = ops.Index(u);
    idx[i] = ops.gen_perm[generator][j];
  }
  return PackIndices(idx);
}

std::span<const PackedElement> WeylGroupStore::layer(size_t k) const {
  return std::span<const PackedElement>(bfs_).subspan(layer_offsets_[k],
                                                       layer_offsets_[k + 1] - layer_offsets_[k]);
}

uint64_t WeylGroupStore::memory_bytes() const {
  return bfs_.capacity() * sizeof(PackedElement) + keys_.capacity() * sizeof(PackedElement) +
         values_.capacity() * sizeof(uint32_t);
}

uint32_t* WeylGroupStore::Slot(PackedElement key) {
  uint64_t h = HashKey(key) & mask_;
  while (keys_[h] != kEmptySlot) {
    if (keys_[h] == key) return &values_[h];
    h = (h + 1) & mask_;
  }
  return nullptr;
}

std::optional<uint32_t> WeylGroupStore::Find(PackedElement key) const {
  if (keys_.empty()) return std::nullopt;
  uint64_t h = HashKey(key) & mask_;
  while (keys_[h] != kEmptySlot) {
    if (keys_[h] == key) return values_[h];
    h = (h + 1) & mask_;
  }
  return std::nullopt;
}

void WeylGroupStore::Insert(PackedElement key, uint32_t value) {
  uint64_t h = HashKey(key) & mask_;
  while (keys_[h] != kEmptySlot) h = (h + 1) & mask_;
  keys_[h] = key;
  values_[h] = value;
}

WeylGroupStore WeylGroupStore::Build(const GroupBuildOptions& options) {
  WeylGroupStore store;
  const uint64_t budget = options.memory_budget_bytes;
  size_t capacity = size_t{1} << 16;
  size_t count = 0;

  auto progress = [&](const std::string& what) {
    std::ostringstream os;
    os << what << " after " << store.num_layers() << " complete BFS layers, " << count
       << " elements discovered (budget " << budget << " bytes)";
    return os.str();
  };
  auto check_budget = [&](uint64_t projected, const std::string& what) {
    if (projected > budget) Fail(ErrorCode::kBudgetExceeded, progress(what));
  };

  const uint64_t slot_bytes = sizeof(PackedElement) + sizeof(uint32_t);
  check_budget(capacity * slot_bytes, "hash table allocation");
  store.keys_.assign(capacity, kEmptySlot);
  store.values_.assign(capacity, 0);
  store.mask_ = capacity - 1;

  auto grow = [&]() {
    const size_t new_cap = capacity * 2;
    check_budget(store.memory_bytes() + new_cap * slot_bytes, "hash table growth");
    std::vector<PackedElement> old_keys;
    std::vector<uint32_t> old_values;
    old_keys.swap(store.keys_);
    old_values.swap(store.values_);
    capacity = new_cap;
    store.keys_.assign(capacity, kEmptySlot);
    store.values_.assign(capacity, 0);
    store.mask_ = capacity - 1;
    for (size_t i = 0; i < old_keys.size(); ++i) {
      if (old_keys[i] != kEmptySlot) store.Insert(old_keys[i], old_values[i]);
    }
  };

  const PackedElement identity = Pack(Isometry::Identity());
  store.bfs_.push_back(identity);
  store.Insert(identity, 0);
  count = 1;
  store.layer_offsets_ = {0, 1};

  const int threads = std::max(1, options.threads);
  while (true) {
    const size_t begin = store.layer_offsets_[store.layer_offsets_.size() - 2];
    const size_t end = store.layer_offsets_.back();
    const size_t layer_size = end - begin;

    // Products s * g for the current layer, computed in parallel chunks and
    // merged in chunk order.
    std::vector<std::vector<PackedElement>> chunks(threads);
    auto work = [&](int t) {
      const size_t lo = begin + layer_size * t / threads;
      const size_t hi = begin + layer_size * (t + 1) / threads;
      auto& out = chunks[t];
      out.reserve((hi - lo) * kNumGenerators);
      for (size_t i = lo; i < hi; ++i) {
        for (int s = 0; s < kNumGenerators; ++s) out.push_back(LeftMultiplyBySimple(store.bfs_[i], s));
      }
    };
    check_budget(store.memory_bytes() + layer_size * kNumGenerators * sizeof(PackedElement),
                 "layer expansion");
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }

    std::vector<PackedElement> next;
    for (auto& chunk : chunks) {
      for (PackedElement h : chunk) {
        if (store.Find(h)) continue;
        if ((count + 1) * 2 > capacity) grow();
        store.Insert(h, 0);
        ++count;
        next.push_back(h);
      }
      std::vector<PackedElement>().swap(chunk);
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    check_budget(store.memory_bytes() + next.size() * sizeof(PackedElement), "layer append");
    for (PackedElement h : next) {
      *store.Slot(h) = static_cast<uint32_t>(store.bfs_.size());
      store.bfs_.push_back(h);
    }
    store.layer_offsets_.push_back(store.bfs_.size());
  }
  store.bfs_.shrink_to_fit();
  return store;
}

ConjugacyPartition WeylGroupStore::ComputeConjugacyClasses() const {
  constexpr uint8_t kUnassigned = 0xFF;
  ConjugacyPartition part;
  part.class_of.assign(bfs_.size(), kUnassigned);
  std::vector<uint32_t> queue;
  for (size_t i = 0; i < bfs_.size(); ++i) {
    if (part.class_of[i] != kUnassigned) continue;
    if (part.representative.size() >= kUnassigned) {
      Fail(ErrorCode::kInternal, "too many conjugacy classes");
    }
    const uint8_t c = static_cast<uint8_t>(part.representative.size());
    part.representative.push_back(static_cast<uint32_t>(i));
    part.class_of[i] = c;
    queue.assign(1, static_cast<uint32_t>(i));
    for (size_t head = 0; head < queue.size(); ++head) {
      const PackedElement g = bfs_[queue[head]];
      for (int s = 0; s < kNumGenerators; ++s) {
        const auto j = Find(ConjugateBySimple(g, s));
        if (!j) Fail(ErrorCode::kInternal, "conjugate missing from store");
        if (part.class_of[*j] == kUnassigned) {
          part.class_of[*j] = c;
          queue.push_back(*j);
        }
      }
    }
    part.size.push_back(queue.size());
  }
  return part;
}

}  // namespace dp2
