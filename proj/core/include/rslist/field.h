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

#ifndef RSLIST_FIELD_H_
#define RSLIST_FIELD_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "rslist/errors.h"
#include "rslist/rng.h"

namespace rslist {

// Canonical encoding of an element of F_q as an integer in [0, q). For an
// extension field F_p[x]/(f) the encoding of c_0 + c_1 x + ... is
// c_0 + c_1 p + c_2 p^2 + ...
struct FieldElement {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

struct FieldSpec {
  std::uint32_t characteristic = 2;
  int degree = 1;
  // Monic irreducible modulus, coefficients low-to-high (size degree + 1).
  // Empty for prime fields.
  std::vector<std::uint32_t> modulus;

  std::uint64_t order() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// Accepts "p" for prime fields and "p^m/c_m..c_0" for extensions, where the
// modulus digits are written high-to-low in base p. Digits are contiguous when
// p <= 10 ("2^4/10011") and comma-separated otherwise ("11^2/1,0,1").
// "p^m" without a modulus picks the smallest monic irreducible polynomial.
FieldSpec ParseFieldSpec(std::string_view text);
std::string FormatFieldSpec(const FieldSpec& spec);

inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 32;
inline constexpr std::uint64_t kMaxExtensionOrder = std::uint64_t{1} << 20;

class ExtensionField;

// Finite field F_q. Prime fields reduce modulo p on every operation; extension
// fields use log/antilog tables. Copies share their tables and are cheap.
class Field {
 public:
  explicit Field(const FieldSpec& spec);

  static Field Prime(std::uint32_t p);
  static Field Parse(std::string_view text) { return Field(ParseFieldSpec(text)); }

  const FieldSpec& spec() const { return spec_; }
  std::uint64_t order() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  bool is_prime() const { return exp_ == nullptr; }

  bool Contains(FieldElement a) const { return a.value < q_; }
  FieldElement Element(std::uint64_t value) const;
  static constexpr FieldElement Zero() { return {0}; }
  static constexpr FieldElement One() { return {1}; }

  FieldElement Add(FieldElement a, FieldElement b) const {
    Check(a), Check(b);
    return {AddRaw(a.value, b.value)};
  }
  FieldElement Sub(FieldElement a, FieldElement b) const {
    Check(a), Check(b);
    return {SubRaw(a.value, b.value)};
  }
  FieldElement Neg(FieldElement a) const {
    Check(a);
    return {NegRaw(a.value)};
  }
  FieldElement Mul(FieldElement a, FieldElement b) const {
    Check(a), Check(b);
    return {MulRaw(a.value, b.value)};
  }
  FieldElement Inv(FieldElement a) const;
  FieldElement Div(FieldElement a, FieldElement b) const { return Mul(a, Inv(b)); }
  FieldElement Pow(FieldElement a, std::uint64_t e) const;

  // Unchecked arithmetic on canonical encodings, for inner loops.
  std::uint32_t AddRaw(std::uint32_t a, std::uint32_t b) const {
    if (exp_ == nullptr) {
      std::uint64_t s = std::uint64_t{a} + b;
      return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    }
    if (p_ == 2) return a ^ b;
    return DigitAdd(a, b, false);
  }
  std::uint32_t SubRaw(std::uint32_t a, std::uint32_t b) const {
    if (exp_ == nullptr) {
      return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p_ - b);
    }
    if (p_ == 2) return a ^ b;
    return DigitAdd(a, b, true);
  }
  std::uint32_t NegRaw(std::uint32_t a) const { return SubRaw(0, a); }
  std::uint32_t MulRaw(std::uint32_t a, std::uint32_t b) const {
    if (exp_ == nullptr) {
      return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
    }
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  std::uint32_t InvRaw(std::uint32_t a) const;

  // Extension of this field used for randomized identity testing; its order is
  // at least 2^48. Built on first use and shared between copies.
  const ExtensionField& pit_extension() const;

 private:
  friend class ExtensionField;
  struct Tables;
  struct PitCache;

  void Check(FieldElement a) const {
    if (a.value >= q_) ThrowInvalid(a);
  }
  [[noreturn]] void ThrowInvalid(FieldElement a) const;
  std::uint32_t DigitAdd(std::uint32_t a, std::uint32_t b, bool subtract) const;

  FieldSpec spec_;
  std::uint64_t q_ = 0;
  std::uint32_t p_ = 0;
  std::shared_ptr<const Tables> tables_;
  const std::uint32_t* exp_ = nullptr;  // null for prime fields
  const std::uint32_t* log_ = nullptr;
  std::shared_ptr<PitCache> pit_;
};

// Extension F_{q^d} of a base field, elements stored as d base-field
// coefficients (low-to-high) in caller-owned arrays. Only what randomized
// rank testing needs is provided.
class ExtensionField {
 public:
  static constexpr int kMaxDegree = 64;

  // Deterministically searches for a monic irreducible of the given degree.
  ExtensionField(const Field& base, int degree);

  static ExtensionField WithMinimumBits(const Field& base, double bits);

  const Field& base() const { return base_; }
  int degree() const { return degree_; }
  double log2_order() const;
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  void Add(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const;
  void Sub(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const;
  void Neg(const std::uint32_t* a, std::uint32_t* out) const;
  void Mul(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const;
  void Embed(FieldElement a, std::uint32_t* out) const;
  void Random(Rng& rng, std::uint32_t* out) const;
  bool IsZero(const std::uint32_t* a) const;

 private:
  Field base_;
  int degree_;
  std::vector<std::uint32_t> modulus_;
  // Nonzero terms of modulus below the leading one, as (exponent, -coeff).
  std::vector<std::pair<int, std::uint32_t>> reduction_;
  bool lazy_prime_ = false;
};

// Monic irreducibility test over the given field (Rabin's criterion).
// Coefficients low-to-high; the leading coefficient must be 1.
bool IsIrreducible(const Field& field, const std::vector<std::uint32_t>& monic);

// Uniform over ordered n-tuples of pairwise distinct elements; deterministic
// in (field, n, seed).
std::vector<FieldElement> SampleDistinctPoints(const Field& field, std::size_t n,
                                               std::uint64_t seed);
std::vector<FieldElement> SampleDistinctPoints(const Field& field, std::size_t n,
                                               Rng& rng);

}  // namespace rslist

#endif  // RSLIST_FIELD_H_
