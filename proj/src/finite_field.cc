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

#include "dp2/finite_field.h"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>

#include "dp2/error.h"

namespace dp2 {

namespace {

using u128 = unsigned __int128;

uint64_t MulMod(uint64_t a, uint64_t b, uint64_t n) {
  return static_cast<uint64_t>(static_cast<u128>(a) * b % n);
}

uint64_t PowMod(uint64_t a, uint64_t e, uint64_t n) {
  uint64_t r = 1 % n;
  a %= n;
  while (e) {
    if (e & 1) r = MulMod(r, a, n);
    a = MulMod(a, a, n);
    e >>= 1;
  }
  return r;
}

uint64_t PollardRho(uint64_t n) {
  if (n % 2 == 0) return 2;
  std::mt19937_64 rng(n);
  while (true) {
    const uint64_t c = rng() % (n - 1) + 1;
    uint64_t x = rng() % n, y = x, d = 1;
    auto f = [&](uint64_t v) { return (MulMod(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void FactorInto(uint64_t n, std::map<uint64_t, int>& out) {
  if (n == 1) return;
  for (uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    while (n % small == 0) {
      ++out[small];
      n /= small;
    }
  }
  if (n == 1) return;
  if (IsPrime(n)) {
    ++out[n];
    return;
  }
  const uint64_t d = PollardRho(n);
  FactorInto(d, out);
  FactorInto(n / d, out);
}

// Polynomial arithmetic over F_p for the irreducibility test.
void Trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly PolyMod(FpPoly a, const FpPoly& f, uint64_t p) {
  Trim(a);
  const size_t df = f.size() - 1;
  const uint64_t inv_lead = PowMod(f.back(), p - 2, p);
  while (a.size() > df) {
    const uint64_t c = MulMod(a.back(), inv_lead, p);
    const size_t shift = a.size() - 1 - df;
    for (size_t i = 0; i <= df; ++i) {
      a[shift + i] = (a[shift + i] + p - MulMod(c, f[i], p)) % p;
    }
    Trim(a);
  }
  return a;
}

FpPoly PolyMulMod(const FpPoly& a, const FpPoly& b, const FpPoly& f, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + MulMod(a[i], b[j], p)) % p;
  return PolyMod(std::move(r), f, p);
}

FpPoly PolyPowMod(FpPoly a, uint64_t e, const FpPoly& f, uint64_t p) {
  FpPoly r = {1};
  a = PolyMod(std::move(a), f, p);
  while (e) {
    if (e & 1) r = PolyMulMod(r, a, f, p);
    a = PolyMulMod(a, a, f, p);
    e >>= 1;
  }
  return r;
}

FpPoly PolyGcd(FpPoly a, FpPoly b, uint64_t p) {
  Trim(a);
  Trim(b);
  while (!b.empty()) {
    FpPoly r = PolyMod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

uint64_t CheckedPow(uint64_t p, int m) {
  uint64_t s = 1;
  for (int i = 0; i < m; ++i) {
    if (s > (uint64_t{1} << 63) / p) Fail(ErrorCode::kSizeCapExceeded, "field size exceeds 2^63");
    s *= p;
  }
  if (s >= (uint64_t{1} << 63)) Fail(ErrorCode::kSizeCapExceeded, "field size exceeds 2^63");
  return s;
}

std::vector<int> Divisors(int n) {
  std::vector<int> d;
  for (int k = 1; k <= n; ++k)
    if (n % k == 0) d.push_back(k);
  return d;
}

}  // namespace

bool IsPrime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    uint64_t x = PowMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = MulMod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<uint64_t, int>> Factorize(uint64_t n) {
  std::map<uint64_t, int> f;
  FactorInto(n, f);
  return {f.begin(), f.end()};
}

std::optional<PrimePower> AsPrimePower(uint64_t q) {
  if (q < 2) return std::nullopt;
  const auto f = Factorize(q);
  if (f.size() != 1) return std::nullopt;
  return PrimePower{f[0].first, f[0].second};
}

bool IsIrreducible(uint64_t p, const FpPoly& f_in) {
  FpPoly f = f_in;
  Trim(f);
  if (f.size() < 2) return false;
  const int m = static_cast<int>(f.size()) - 1;
  if (m == 1) return true;
  const FpPoly x = {0, 1};
  // x^(p^k) mod f for the needed k.
  std::vector<FpPoly> frob(m + 1);
  frob[0] = x;
  for (int k = 1; k <= m; ++k) frob[k] = PolyPowMod(frob[k - 1], p, f, p);
  auto minus_x = [&](FpPoly g) {
    if (g.size() < 2) g.resize(2, 0);
    g[1] = (g[1] + p - 1) % p;
    Trim(g);
    return g;
  };
  if (!minus_x(frob[m]).empty()) return false;
  for (const auto& [r, unused] : Factorize(static_cast<uint64_t>(m))) {
    const FpPoly g = PolyGcd(f, minus_x(frob[m / r]), p);
    if (g.size() != 1) return false;
  }
  return true;
}

FpPoly CanonicalModulus(uint64_t p, int m) {
  if (!IsPrime(p)) Fail(ErrorCode::kInvalidArgument, "characteristic must be prime");
  if (m < 1) Fail(ErrorCode::kInvalidArgument, "extension degree must be positive");
  const uint64_t count = CheckedPow(p, m);
  for (uint64_t v = 0; v < count; ++v) {
    FpPoly f(m + 1, 0);
    uint64_t t = v;
    for (int i = 0; i < m; ++i) {
      f[i] = t % p;
      t /= p;
    }
    f[m] = 1;
    if (IsIrreducible(p, f)) return f;
  }
  Fail(ErrorCode::kInternal, "no irreducible polynomial found");
}

std::shared_ptr<const FiniteField> FiniteField::Canonical(uint64_t p, int m) {
  static std::mutex mu;
  static std::map<std::pair<uint64_t, int>, std::shared_ptr<const FiniteField>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, m});
    if (it != cache.end()) return it->second;
  }
  if (!IsPrime(p)) Fail(ErrorCode::kInvalidArgument, "characteristic must be prime");
  CheckedPow(p, m);
  auto field = std::make_shared<const FiniteField>(p, CanonicalModulus(p, m));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(p, m), field).first->second;
}

std::shared_ptr<const FiniteField> FiniteField::WithModulus(uint64_t p, FpPoly modulus) {
  if (!IsPrime(p)) Fail(ErrorCode::kInvalidArgument, "characteristic must be prime");
  for (auto& c : modulus) c %= p;
  Trim(modulus);
  if (modulus.size() < 2 || modulus.back() != 1) {
    Fail(ErrorCode::kInvalidArgument, "modulus must be monic of positive degree");
  }
  if (!IsIrreducible(p, modulus)) Fail(ErrorCode::kInvalidArgument, "modulus is reducible");
  const int m = static_cast<int>(modulus.size()) - 1;
  auto canonical = Canonical(p, m);
  if (canonical->modulus() == modulus) return canonical;
  return std::make_shared<const FiniteField>(p, std::move(modulus));
}

FiniteField::FiniteField(uint64_t p, FpPoly modulus)
    : p_(p), m_(static_cast<int>(modulus.size()) - 1), modulus_(std::move(modulus)) {
  size_ = CheckedPow(p_, m_);
  pow_p_.resize(m_);
  uint64_t s = 1;
  for (int i = 0; i < m_; ++i) {
    pow_p_[i] = s;
    if (i + 1 < m_) s *= p_;
  }
  // Frobenius on the basis: (a^i)^p.
  frob_.resize(m_);
  const FqElem a = Generator();
  for (int i = 0; i < m_; ++i) {
    const FqElem ai = PowGeneric(a, static_cast<uint64_t>(i));
    frob_[i] = Digits(PowGeneric(ai, p_));
  }
  primitive_ = FindPrimitive();
  if (size_ <= kEnumerableCap) {
    exp_.resize(size_ - 1);
    log_.assign(size_, 0);
    FqElem x = 1;
    for (uint64_t k = 0; k + 1 < size_; ++k) {
      exp_[k] = static_cast<uint32_t>(x);
      log_[x] = static_cast<uint32_t>(k);
      x = MulGeneric(x, primitive_);
    }
  }
}

FqElem FiniteField::FromInt(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += static_cast<long long>(p_);
  return static_cast<FqElem>(r);
}

FqElem FiniteField::FromDigits(std::span<const uint64_t> digits) const {
  if (static_cast<int>(digits.size()) > m_) Fail(ErrorCode::kInvalidArgument, "too many digits");
  FqElem x = 0;
  for (size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] >= p_) Fail(ErrorCode::kInvalidArgument, "digit out of range");
    x += digits[i] * pow_p_[i];
  }
  return x;
}

std::vector<uint64_t> FiniteField::Digits(FqElem x) const {
  std::vector<uint64_t> d(m_);
  for (int i = 0; i < m_; ++i) {
    d[i] = x % p_;
    x /= p_;
  }
  return d;
}

FqElem FiniteField::Add(FqElem x, FqElem y) const {
  if (p_ == 2) return x ^ y;
  if (m_ == 1) return (x + y) % p_;
  FqElem r = 0;
  for (int i = 0; i < m_; ++i) {
    const uint64_t dx = x % p_, dy = y % p_;
    x /= p_;
    y /= p_;
    r += ((dx + dy) % p_) * pow_p_[i];
  }
  return r;
}

FqElem FiniteField::Neg(FqElem x) const {
  if (p_ == 2) return x;
  if (m_ == 1) return (p_ - x) % p_;
  FqElem r = 0;
  for (int i = 0; i < m_; ++i) {
    const uint64_t d = x % p_;
    x /= p_;
    r += ((p_ - d) % p_) * pow_p_[i];
  }
  return r;
}

FqElem FiniteField::Sub(FqElem x, FqElem y) const { return Add(x, Neg(y)); }

FqElem FiniteField::MulGeneric(FqElem x, FqElem y) const {
  if (m_ == 1) return MulMod(x, y, p_);
  if (p_ == 2) {
    // Carry-less product, then reduction by the modulus.
    u128 prod = 0;
    for (int i = 0; i < m_; ++i)
      if ((y >> i) & 1) prod ^= static_cast<u128>(x) << i;
    u128 mod = 0;
    for (int i = 0; i <= m_; ++i)
      if (modulus_[i]) mod |= static_cast<u128>(1) << i;
    for (int i = 2 * m_ - 2; i >= m_; --i) {
      if ((prod >> i) & 1) prod ^= mod << (i - m_);
    }
    return static_cast<FqElem>(prod);
  }
  const std::vector<uint64_t> dx = Digits(x), dy = Digits(y);
  std::vector<uint64_t> r(2 * m_ - 1, 0);
  for (int i = 0; i < m_; ++i) {
    if (!dx[i]) continue;
    for (int j = 0; j < m_; ++j) r[i + j] = (r[i + j] + MulMod(dx[i], dy[j], p_)) % p_;
  }
  for (int i = 2 * m_ - 2; i >= m_; --i) {
    const uint64_t c = r[i];
    if (!c) continue;
    for (int k = 0; k <= m_; ++k) {
      r[i - m_ + k] = (r[i - m_ + k] + p_ - MulMod(c, modulus_[k], p_)) % p_;
    }
  }
  FqElem out = 0;
  for (int i = 0; i < m_; ++i) out += r[i] * pow_p_[i];
  return out;
}

FqElem FiniteField::Mul(FqElem x, FqElem y) const {
  if (x == 0 || y == 0) return 0;
  if (!exp_.empty()) {
    uint64_t k = static_cast<uint64_t>(log_[x]) + log_[y];
    if (k >= size_ - 1) k -= size_ - 1;
    return exp_[k];
  }
  return MulGeneric(x, y);
}

FqElem FiniteField::PowGeneric(FqElem x, uint64_t e) const {
  FqElem r = 1;
  while (e) {
    if (e & 1) r = MulGeneric(r, x);
    x = MulGeneric(x, x);
    e >>= 1;
  }
  return r;
}

FqElem FiniteField::Pow(FqElem x, uint64_t e) const {
  if (x == 0) return e == 0 ? 1 : 0;
  if (!exp_.empty()) {
    const uint64_t k = MulMod(log_[x], e % (size_ - 1), size_ - 1);
    return exp_[k];
  }
  return PowGeneric(x, e);
}

FqElem FiniteField::Inv(FqElem x) const {
  if (x == 0) Fail(ErrorCode::kInvalidArgument, "inverse of zero");
  if (!exp_.empty()) return exp_[(size_ - 1 - log_[x]) % (size_ - 1)];
  return PowGeneric(x, size_ - 2);
}

FqElem FiniteField::Frobenius(FqElem x, int k) const {
  k %= m_;
  if (k < 0) k += m_;
  if (x == 0 || k == 0 || m_ == 1) return x;
  if (!exp_.empty()) {
    const uint64_t e = PowMod(p_, static_cast<uint64_t>(k), size_ - 1);
    return exp_[MulMod(log_[x], e, size_ - 1)];
  }
  for (int step = 0; step < k; ++step) {
    const std::vector<uint64_t> d = Digits(x);
    std::vector<uint64_t> r(m_, 0);
    for (int i = 0; i < m_; ++i) {
      if (!d[i]) continue;
      for (int j = 0; j < m_; ++j) r[j] = (r[j] + MulMod(d[i], frob_[i][j], p_)) % p_;
    }
    x = 0;
    for (int i = 0; i < m_; ++i) x += r[i] * pow_p_[i];
  }
  return x;
}

FqElem FiniteField::FindPrimitive() const {
  if (size_ == 2) return 1;
  const uint64_t order = size_ - 1;
  const auto factors = Factorize(order);
  for (FqElem g = 2; g < size_; ++g) {
    bool ok = true;
    for (const auto& [r, unused] : factors) {
      if (PowGeneric(g, order / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  Fail(ErrorCode::kInternal, "no primitive element");
}

int FiniteField::DegreeOver(FqElem x, int e) const {
  if (e <= 0 || m_ % e != 0) Fail(ErrorCode::kInvalidArgument, "base degree must divide the field degree");
  for (int k : Divisors(m_ / e)) {
    if (Frobenius(x, e * k) == x) return k;
  }
  Fail(ErrorCode::kInternal, "degree computation failed");
}

std::vector<FqElem> FiniteField::SubfieldElements(int d) const {
  if (d <= 0 || m_ % d != 0) Fail(ErrorCode::kInvalidArgument, "subfield degree must divide the field degree");
  const uint64_t sub = CheckedPow(p_, d);
  if (sub > kEnumerableCap) Fail(ErrorCode::kSizeCapExceeded, "subfield exceeds the enumeration cap");
  std::vector<FqElem> out;
  out.reserve(sub);
  if (d == m_) {
    for (FqElem x = 0; x < size_; ++x) out.push_back(x);
    return out;
  }
  out.push_back(0);
  const FqElem h = Pow(primitive_, (size_ - 1) / (sub - 1));
  FqElem x = 1;
  for (uint64_t k = 0; k + 1 < sub; ++k) {
    out.push_back(x);
    x = Mul(x, h);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FqElem FiniteField::Embed(const FiniteField& sub, FqElem x) const {
  if (sub.p() != p_ || m_ % sub.degree() != 0) {
    Fail(ErrorCode::kInvalidArgument, "field does not contain the given subfield");
  }
  if (sub.degree() == 1) return x;
  if (sub.modulus() == modulus_) return x;
  FqElem root;
  {
    std::lock_guard<std::mutex> lock(embed_mu_);
    auto it = embed_roots_.find(sub.modulus());
    if (it == embed_roots_.end()) {
      bool found = false;
      root = 0;
      for (FqElem r : SubfieldElements(sub.degree())) {
        FqElem v = 0;
        for (int i = sub.degree(); i >= 0; --i) v = Add(Mul(v, r), FromInt(static_cast<long long>(sub.modulus()[i])));
        if (v == 0) {
          root = r;
          found = true;
          break;
        }
      }
      if (!found) Fail(ErrorCode::kInternal, "modulus has no root in the extension");
      embed_roots_.emplace(sub.modulus(), root);
    } else {
      root = it->second;
    }
  }
  const std::vector<uint64_t> d = sub.Digits(x);
  FqElem v = 0;
  for (int i = sub.degree() - 1; i >= 0; --i) v = Add(Mul(v, root), FromInt(static_cast<long long>(d[i])));
  return v;
}

std::string FiniteField::ToString(FqElem x) const {
  if (x == 0) return "0";
  const std::vector<uint64_t> d = Digits(x);
  std::string s;
  for (int i = m_ - 1; i >= 0; --i) {
    if (!d[i]) continue;
    if (!s.empty()) s += '+';
    if (i == 0) {
      s += std::to_string(d[i]);
      continue;
    }
    if (d[i] != 1) s += std::to_string(d[i]);
    s += 'a';
    if (i > 1) s += '^' + std::to_string(i);
  }
  return s;
}

FqElem FiniteField::Parse(std::string_view text) const {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) Fail(ErrorCode::kParse, "empty field element");
  FqElem total = 0;
  size_t i = 0;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    }
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    long long coef = 1;
    const bool has_coef = i > start;
    if (has_coef) coef = std::stoll(s.substr(start, i - start));
    FqElem term = FromInt(coef);
    if (i < s.size() && s[i] == 'a') {
      if (m_ == 1) Fail(ErrorCode::kParse, "prime field has no generator 'a'");
      ++i;
      long long e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        size_t es = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == es) Fail(ErrorCode::kParse, "bad exponent in '" + s + "'");
        e = std::stoll(s.substr(es, i - es));
      }
      term = Mul(term, Pow(Generator(), static_cast<uint64_t>(e)));
    } else if (!has_coef) {
      Fail(ErrorCode::kParse, "bad field element '" + s + "'");
    }
    if (i < s.size() && s[i] != '+' && s[i] != '-') Fail(ErrorCode::kParse, "bad field element '" + s + "'");
    total = negative ? Sub(total, term) : Add(total, term);
  }
  return total;
}

}  // namespace dp2
