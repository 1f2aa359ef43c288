// Copyright 2026 The rslist Authors
//
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

#include "rslist/field.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <mutex>
#include <numeric>
#include <unordered_set>

namespace rslist {
namespace {

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> PrimeFactors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint32_t PowMod(std::uint64_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  a %= p;
  while (e != 0) {
    if (e & 1) result = result * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint64_t ParseUnsigned(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCode::kInvalidFieldSpec,
                "cannot parse " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

// ---- Dense polynomials over a field, low-to-high, used for the modulus
// arithmetic behind irreducibility testing.

using Poly = std::vector<std::uint32_t>;

void Trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int Degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

// a mod f, f monic.
void ReduceMonic(const Field& F, Poly& a, const Poly& f) {
  const int df = Degree(f);
  for (int i = Degree(a); i >= df; --i) {
    const std::uint32_t c = a[i];
    if (c == 0) continue;
    for (int j = 0; j <= df; ++j) {
      a[i - df + j] = F.SubRaw(a[i - df + j], F.MulRaw(c, f[j]));
    }
  }
  if (static_cast<int>(a.size()) > df) a.resize(df);
  Trim(a);
}

Poly MulModMonic(const Field& F, const Poly& a, const Poly& b, const Poly& f) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = F.AddRaw(out[i + j], F.MulRaw(a[i], b[j]));
    }
  }
  ReduceMonic(F, out, f);
  return out;
}

Poly PowModMonic(const Field& F, Poly base, std::uint64_t e, const Poly& f) {
  Poly result{1};
  ReduceMonic(F, result, f);
  ReduceMonic(F, base, f);
  while (e != 0) {
    if (e & 1) result = MulModMonic(F, result, base, f);
    e >>= 1;
    if (e != 0) base = MulModMonic(F, base, base, f);
  }
  return result;
}

// General remainder (divisor need not be monic).
void Remainder(const Field& F, Poly& a, const Poly& b) {
  const int db = Degree(b);
  const std::uint32_t lead_inv = F.InvRaw(b.back());
  for (int i = Degree(a); i >= db; --i) {
    const std::uint32_t c = F.MulRaw(a[i], lead_inv);
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      a[i - db + j] = F.SubRaw(a[i - db + j], F.MulRaw(c, b[j]));
    }
  }
  if (static_cast<int>(a.size()) > db) a.resize(std::max(db, 0));
  Trim(a);
}

Poly Gcd(const Field& F, Poly a, Poly b) {
  Trim(a);
  Trim(b);
  while (!b.empty()) {
    Remainder(F, a, b);
    std::swap(a, b);
  }
  return a;
}

}  // namespace

bool IsIrreducible(const Field& field, const std::vector<std::uint32_t>& monic) {
  Poly f = monic;
  Trim(f);
  const int d = Degree(f);
  if (d < 1 || f.back() != 1) {
    throw Error(ErrorCode::kInvalidParameters, "irreducibility test needs a monic polynomial");
  }
  if (d == 1) return true;
  const std::uint64_t q = field.order();
  const Poly x{0, 1};
  // frob[i] = x^(q^i) mod f
  std::vector<Poly> frob(d + 1);
  frob[0] = x;
  ReduceMonic(field, frob[0], f);
  for (int i = 1; i <= d; ++i) frob[i] = PowModMonic(field, frob[i - 1], q, f);
  if (frob[d] != frob[0]) return false;
  for (std::uint64_t r : PrimeFactors(static_cast<std::uint64_t>(d))) {
    Poly h = frob[d / r];
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = field.SubRaw(h[1], 1);
    Trim(h);
    if (h.empty()) return false;
    if (Degree(Gcd(field, h, f)) != 0) return false;
  }
  return true;
}

// ---- FieldSpec

std::uint64_t FieldSpec::order() const {
  std::uint64_t q = 1;
  for (int i = 0; i < degree; ++i) {
    q *= characteristic;
    if (q > kMaxFieldOrder) return kMaxFieldOrder + 1;
  }
  return q;
}

namespace {

std::vector<std::uint32_t> SmallestIrreducible(std::uint32_t p, int m) {
  const Field base = Field::Prime(p);
  std::uint64_t count = 1;
  for (int i = 0; i < m; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<std::uint32_t> f(m + 1, 0);
    std::uint64_t c = code;
    for (int i = 0; i < m; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[m] = 1;
    if (f[0] != 0 && IsIrreducible(base, f)) return f;
  }
  throw Error(ErrorCode::kInvalidFieldSpec, "no irreducible polynomial found");
}

}  // namespace

FieldSpec ParseFieldSpec(std::string_view text) {
  FieldSpec spec;
  const auto caret = text.find('^');
  if (caret == std::string_view::npos) {
    const std::uint64_t p = ParseUnsigned(text, "characteristic");
    if (p >= kMaxFieldOrder) {
      throw Error(ErrorCode::kInvalidFieldSpec, "field order exceeds 2^32");
    }
    spec.characteristic = static_cast<std::uint32_t>(p);
    spec.degree = 1;
    return spec;
  }
  const std::uint64_t p = ParseUnsigned(text.substr(0, caret), "characteristic");
  if (p >= kMaxFieldOrder || !IsPrime(p)) {
    throw Error(ErrorCode::kInvalidFieldSpec, "characteristic must be a prime below 2^32");
  }
  std::string_view rest = text.substr(caret + 1);
  const auto slash = rest.find('/');
  const std::uint64_t m = ParseUnsigned(rest.substr(0, slash), "degree");
  if (m < 1 || m > 32) throw Error(ErrorCode::kInvalidFieldSpec, "degree out of range");
  spec.characteristic = static_cast<std::uint32_t>(p);
  spec.degree = static_cast<int>(m);
  if (m == 1) {
    if (slash != std::string_view::npos) {
      throw Error(ErrorCode::kInvalidFieldSpec, "prime fields take no modulus");
    }
    return spec;
  }
  if (spec.order() > kMaxExtensionOrder) {
    throw Error(ErrorCode::kInvalidFieldSpec, "extension field order exceeds 2^20");
  }
  if (slash == std::string_view::npos) {
    spec.modulus = SmallestIrreducible(spec.characteristic, spec.degree);
    return spec;
  }
  std::string_view digits = rest.substr(slash + 1);
  std::vector<std::uint32_t> high_to_low;
  if (digits.find(',') != std::string_view::npos || p > 10) {
    std::size_t start = 0;
    while (start <= digits.size()) {
      const auto comma = digits.find(',', start);
      const auto piece = digits.substr(start, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - start);
      high_to_low.push_back(static_cast<std::uint32_t>(ParseUnsigned(piece, "modulus digit")));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    for (char ch : digits) {
      if (ch < '0' || ch > '9') {
        throw Error(ErrorCode::kInvalidFieldSpec, "bad modulus digit");
      }
      high_to_low.push_back(static_cast<std::uint32_t>(ch - '0'));
    }
  }
  if (high_to_low.size() != m + 1) {
    throw Error(ErrorCode::kInvalidFieldSpec, "modulus must have degree+1 digits");
  }
  spec.modulus.assign(high_to_low.rbegin(), high_to_low.rend());
  return spec;
}

std::string FormatFieldSpec(const FieldSpec& spec) {
  std::string out = std::to_string(spec.characteristic);
  if (spec.degree == 1) return out;
  out += "^" + std::to_string(spec.degree) + "/";
  const bool commas = spec.characteristic > 10;
  for (int i = spec.degree; i >= 0; --i) {
    out += std::to_string(spec.modulus[i]);
    if (commas && i > 0) out += ",";
  }
  return out;
}

// ---- Field

struct Field::Tables {
  std::vector<std::uint32_t> exp;  // length 2(q-1)
  std::vector<std::uint32_t> log;  // length q, log[0] unused
};

struct Field::PitCache {
  std::once_flag once;
  std::unique_ptr<ExtensionField> ext;
};

namespace {

// Multiplication of encoded elements via explicit polynomial arithmetic; only
// used while building the log tables.
std::uint32_t SlowMul(std::uint32_t a, std::uint32_t b, std::uint32_t p,
                      const std::vector<std::uint32_t>& modulus) {
  const int m = static_cast<int>(modulus.size()) - 1;
  std::vector<std::uint64_t> da(m), db(m), prod(2 * m - 1, 0);
  for (int i = 0; i < m; ++i) {
    da[i] = a % p;
    a /= p;
    db[i] = b % p;
    b /= p;
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  for (int i = 2 * m - 2; i >= m; --i) {
    const std::uint64_t c = prod[i];
    if (c == 0) continue;
    for (int j = 0; j <= m; ++j) {
      prod[i - m + j] = (prod[i - m + j] + (p - c) * modulus[j]) % p;
    }
  }
  std::uint64_t out = 0;
  for (int i = m - 1; i >= 0; --i) out = out * p + prod[i];
  return static_cast<std::uint32_t>(out);
}

}  // namespace

Field::Field(const FieldSpec& spec) : spec_(spec), pit_(std::make_shared<PitCache>()) {
  if (spec.degree < 1) throw Error(ErrorCode::kInvalidFieldSpec, "degree must be >= 1");
  if (!IsPrime(spec.characteristic)) {
    throw Error(ErrorCode::kInvalidFieldSpec,
                std::to_string(spec.characteristic) + " is not prime");
  }
  q_ = spec.order();
  if (q_ > kMaxFieldOrder) throw Error(ErrorCode::kInvalidFieldSpec, "order exceeds 2^32");
  p_ = spec.characteristic;
  if (spec.degree == 1) {
    spec_.modulus.clear();
    return;
  }
  if (q_ > kMaxExtensionOrder) {
    throw Error(ErrorCode::kInvalidFieldSpec, "extension field order exceeds 2^20");
  }
  if (static_cast<int>(spec.modulus.size()) != spec.degree + 1 || spec.modulus.back() != 1) {
    throw Error(ErrorCode::kInvalidFieldSpec, "modulus must be monic of the given degree");
  }
  for (std::uint32_t c : spec.modulus) {
    if (c >= p_) throw Error(ErrorCode::kInvalidFieldSpec, "modulus digit out of range");
  }
  if (!IsIrreducible(Field::Prime(p_), spec.modulus)) {
    throw Error(ErrorCode::kInvalidFieldSpec, "modulus is reducible over F_p");
  }

  const std::uint32_t q = static_cast<std::uint32_t>(q_);
  const auto factors = PrimeFactors(q - 1);
  auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t r = 1;
    while (e != 0) {
      if (e & 1) r = SlowMul(r, a, p_, spec.modulus);
      a = SlowMul(a, a, p_, spec.modulus);
      e >>= 1;
    }
    return r;
  };
  std::uint32_t generator = 0;
  for (std::uint32_t g = 2; g < q && generator == 0; ++g) {
    bool primitive = true;
    for (std::uint64_t r : factors) {
      if (slow_pow(g, (q - 1) / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) generator = g;
  }
  if (generator == 0) throw Error(ErrorCode::kInvalidFieldSpec, "no primitive element");

  auto tables = std::make_shared<Tables>();
  tables->exp.resize(2 * (q - 1));
  tables->log.assign(q, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < q - 1; ++i) {
    tables->exp[i] = x;
    tables->log[x] = i;
    x = SlowMul(x, generator, p_, spec.modulus);
  }
  for (std::uint32_t i = q - 1; i < 2 * (q - 1); ++i) tables->exp[i] = tables->exp[i - (q - 1)];
  exp_ = tables->exp.data();
  log_ = tables->log.data();
  tables_ = std::move(tables);
}

Field Field::Prime(std::uint32_t p) {
  FieldSpec spec;
  spec.characteristic = p;
  spec.degree = 1;
  return Field(spec);
}

FieldElement Field::Element(std::uint64_t value) const {
  if (value >= q_) {
    throw Error(ErrorCode::kInvalidElement,
                std::to_string(value) + " is not an element of F_" + std::to_string(q_));
  }
  return {static_cast<std::uint32_t>(value)};
}

void Field::ThrowInvalid(FieldElement a) const {
  throw Error(ErrorCode::kInvalidElement,
              std::to_string(a.value) + " is not an element of F_" + std::to_string(q_));
}

std::uint32_t Field::DigitAdd(std::uint32_t a, std::uint32_t b, bool subtract) const {
  std::uint32_t out = 0, scale = 1;
  for (int i = 0; i < spec_.degree; ++i) {
    const std::uint32_t da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    const std::uint32_t d = subtract ? (da + p_ - db) % p_ : (da + db) % p_;
    out += d * scale;
    scale *= p_;
  }
  return out;
}

std::uint32_t Field::InvRaw(std::uint32_t a) const {
  if (a == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  if (exp_ == nullptr) return PowMod(a, p_ - 2, p_);
  const std::uint32_t n = static_cast<std::uint32_t>(q_ - 1);
  return exp_[(n - log_[a]) % n];
}

FieldElement Field::Inv(FieldElement a) const {
  Check(a);
  return {InvRaw(a.value)};
}

FieldElement Field::Pow(FieldElement a, std::uint64_t e) const {
  Check(a);
  if (e == 0) return One();
  if (a.value == 0) return Zero();
  if (exp_ == nullptr) return {PowMod(a.value, e, p_)};
  const std::uint64_t n = q_ - 1;
  return {exp_[(std::uint64_t{log_[a.value]} * (e % n)) % n]};
}

const ExtensionField& Field::pit_extension() const {
  if (!pit_) throw Error(ErrorCode::kInvalidParameters, "field copy has no extension cache");
  std::call_once(pit_->once, [this] {
    pit_->ext = std::make_unique<ExtensionField>(ExtensionField::WithMinimumBits(*this, 48.0));
  });
  return *pit_->ext;
}

// ---- ExtensionField

namespace {

std::vector<std::uint32_t> FindIrreducible(const Field& base, int d) {
  const std::uint64_t q = base.order();
  std::vector<std::uint32_t> f(d + 1, 0);
  f[d] = 1;
  // Sparse candidates x^d + a x^e + c first: they make reduction cheap.
  for (int e = 1; e < d; ++e) {
    for (std::uint64_t a = 1; a < std::min<std::uint64_t>(q, 4); ++a) {
      for (std::uint64_t c = 1; c < std::min<std::uint64_t>(q, 4); ++c) {
        std::fill(f.begin(), f.end() - 1, 0);
        f[e] = static_cast<std::uint32_t>(a);
        f[0] = static_cast<std::uint32_t>(c);
        if (IsIrreducible(base, f)) return f;
      }
    }
  }
  Rng rng(0x5eed, static_cast<std::uint64_t>(d));
  while (true) {
    for (int i = 0; i < d; ++i) f[i] = static_cast<std::uint32_t>(rng.Below(q));
    if (f[0] != 0 && IsIrreducible(base, f)) return f;
  }
}

}  // namespace

ExtensionField::ExtensionField(const Field& base, int degree) : base_(base), degree_(degree) {
  if (degree < 1 || degree > kMaxDegree) {
    throw Error(ErrorCode::kInvalidParameters, "extension degree out of range");
  }
  // The extension's copy of the base field must not own a cache that points
  // back at an extension.
  base_.pit_.reset();
  modulus_ = FindIrreducible(base_, degree);
  for (int i = 0; i < degree; ++i) {
    if (modulus_[i] != 0) reduction_.emplace_back(i, base_.NegRaw(modulus_[i]));
  }
  lazy_prime_ = base_.is_prime() && base_.order() < (std::uint64_t{1} << 26);
}

ExtensionField ExtensionField::WithMinimumBits(const Field& base, double bits) {
  const double per = std::log2(static_cast<double>(base.order()));
  int d = std::max(1, static_cast<int>(std::ceil(bits / per - 1e-12)));
  return ExtensionField(base, d);
}

double ExtensionField::log2_order() const {
  return degree_ * std::log2(static_cast<double>(base_.order()));
}

void ExtensionField::Add(const std::uint32_t* a, const std::uint32_t* b,
                         std::uint32_t* out) const {
  for (int i = 0; i < degree_; ++i) out[i] = base_.AddRaw(a[i], b[i]);
}

void ExtensionField::Sub(const std::uint32_t* a, const std::uint32_t* b,
                         std::uint32_t* out) const {
  for (int i = 0; i < degree_; ++i) out[i] = base_.SubRaw(a[i], b[i]);
}

void ExtensionField::Neg(const std::uint32_t* a, std::uint32_t* out) const {
  for (int i = 0; i < degree_; ++i) out[i] = base_.NegRaw(a[i]);
}

void ExtensionField::Mul(const std::uint32_t* a, const std::uint32_t* b,
                         std::uint32_t* out) const {
  const int d = degree_;
  if (lazy_prime_) {
    const std::uint64_t p = base_.order();
    std::uint64_t t[2 * kMaxDegree] = {};
    for (int i = 0; i < d; ++i) {
      const std::uint64_t ai = a[i];
      if (ai == 0) continue;
      for (int j = 0; j < d; ++j) t[i + j] += ai * b[j];
    }
    for (int i = 2 * d - 2; i >= d; --i) {
      const std::uint64_t c = t[i] % p;
      if (c == 0) continue;
      for (const auto& [e, neg] : reduction_) t[i - d + e] += c * neg;
    }
    for (int i = 0; i < d; ++i) out[i] = static_cast<std::uint32_t>(t[i] % p);
    return;
  }
  std::uint32_t t[2 * kMaxDegree] = {};
  for (int i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < d; ++j) t[i + j] = base_.AddRaw(t[i + j], base_.MulRaw(a[i], b[j]));
  }
  for (int i = 2 * d - 2; i >= d; --i) {
    const std::uint32_t c = t[i];
    if (c == 0) continue;
    for (const auto& [e, neg] : reduction_) {
      t[i - d + e] = base_.AddRaw(t[i - d + e], base_.MulRaw(c, neg));
    }
  }
  std::copy(t, t + d, out);
}

void ExtensionField::Embed(FieldElement a, std::uint32_t* out) const {
  std::fill(out, out + degree_, 0);
  out[0] = a.value;
}

void ExtensionField::Random(Rng& rng, std::uint32_t* out) const {
  for (int i = 0; i < degree_; ++i) out[i] = static_cast<std::uint32_t>(rng.Below(base_.order()));
}

bool ExtensionField::IsZero(const std::uint32_t* a) const {
  return std::all_of(a, a + degree_, [](std::uint32_t c) { return c == 0; });
}

// ---- Sampling

std::vector<FieldElement> SampleDistinctPoints(const Field& field, std::size_t n,
                                               std::uint64_t seed) {
  Rng rng(seed);
  return SampleDistinctPoints(field, n, rng);
}

std::vector<FieldElement> SampleDistinctPoints(const Field& field, std::size_t n, Rng& rng) {
  const std::uint64_t q = field.order();
  if (n > q) {
    throw Error(ErrorCode::kNotEnoughPoints,
                "cannot pick " + std::to_string(n) + " distinct points from F_" +
                    std::to_string(q));
  }
  std::vector<FieldElement> out;
  out.reserve(n);
  if (q <= kMaxExtensionOrder) {
    // Partial Fisher-Yates over the materialized field.
    std::vector<std::uint32_t> all(q);
    std::iota(all.begin(), all.end(), 0u);
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t j = i + rng.Below(q - i);
      std::swap(all[i], all[j]);
      out.push_back({all[i]});
    }
    return out;
  }
  std::unordered_set<std::uint32_t> seen;
  while (out.size() < n) {
    const auto v = static_cast<std::uint32_t>(rng.Below(q));
    if (seen.insert(v).second) out.push_back({v});
  }
  return out;
}

}  // namespace rslist
