/*
   Copyright 2026 The wpsq Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wpsq {

/// An element of a Field, stored as its position in the canonical element
/// ordering: code 0 is zero and code 1 + m is delta^m. Comparing codes
/// therefore compares elements in canonical order.
struct Elem {
  std::uint32_t code = 0;

  constexpr bool is_zero() const noexcept { return code == 0; }
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

inline constexpr std::uint32_t kDefaultFieldLimit = 1u << 16;

/// GF(p^k) with a fixed primitive element and discrete-log tables.
///
/// The modulus is the lexicographically smallest monic irreducible polynomial
/// of degree k (coefficients compared low degree first). delta is the
/// generator of GF(q)^* with the smallest polynomial-basis encoding
/// sum c_i p^i. Arithmetic runs on logarithms with a Zech table for addition.
/// A Field is immutable once built.
class Field {
 public:
  static Field create(std::uint32_t p, std::uint32_t k, std::uint32_t limit = kDefaultFieldLimit);

  /// Parses `--q` values: a prime power given as "9" or "3^2".
  static Field from_order(std::string_view q_text, std::uint32_t limit = kDefaultFieldLimit);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t k() const noexcept { return k_; }
  std::uint32_t q() const noexcept { return q_; }
  std::uint32_t group_order() const noexcept { return q_ - 1; }

  /// Modulus coefficients low degree first (size k + 1, monic); empty when k == 1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  std::string modulus_string() const;

  Elem zero() const noexcept { return Elem{0}; }
  Elem one() const noexcept { return Elem{1}; }
  Elem delta() const noexcept { return delta_pow(1); }
  Elem delta_pow(std::int64_t m) const noexcept;

  Elem add(Elem a, Elem b) const noexcept {
    if (a.code == 0) return b;
    if (b.code == 0) return a;
    const std::uint32_t la = a.code - 1;
    const std::uint32_t lb = b.code - 1;
    const std::uint32_t diff = lb >= la ? lb - la : lb + (q_ - 1) - la;
    const std::int32_t z = zech_[diff];
    if (z < 0) return Elem{0};
    std::uint32_t s = la + static_cast<std::uint32_t>(z);
    if (s >= q_ - 1) s -= q_ - 1;
    return Elem{s + 1};
  }
  Elem neg(Elem a) const noexcept { return mul(a, minus_one_); }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const noexcept {
    if (a.code == 0 || b.code == 0) return Elem{0};
    std::uint32_t s = (a.code - 1) + (b.code - 1);
    if (s >= q_ - 1) s -= q_ - 1;
    return Elem{s + 1};
  }
  /// Throws Errc::precondition on a zero argument.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  /// 0^0 == 1; negative exponents invert first (zero base throws).
  Elem pow(Elem a, std::int64_t e) const;

  /// Discrete log base delta; throws on zero.
  std::uint32_t log(Elem a) const;

  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t n) const noexcept;
  /// Integer value when a lies in the prime subfield.
  std::optional<std::uint32_t> to_int(Elem a) const noexcept;

  /// Polynomial-basis encoding sum c_i p^i of an element, and its inverse.
  std::uint32_t encoding(Elem a) const noexcept { return a.code == 0 ? 0 : exp_[a.code - 1]; }
  Elem from_encoding(std::uint32_t enc) const;

  /// All q elements in canonical order.
  std::vector<Elem> elements() const;
  std::vector<Elem> nonzero_elements() const;

  /// Text form: prime-subfield elements as integers, others as g^m.
  std::string format(Elem a) const;
  /// Accepts an integer in [0, p), "g", or "g^m" (m any integer).
  Elem parse(std::string_view text) const;

 private:
  Field() = default;

  std::uint32_t p_ = 0;
  std::uint32_t k_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;  // exp_[m] = encoding of delta^m
  std::vector<std::uint32_t> log_;  // log_[enc] = m, log_[0] unused
  std::vector<std::int32_t> zech_;  // zech_[m] = log(1 + delta^m), -1 when zero
  Elem minus_one_{1};
};

/// Kernel and image of z -> z^a on GF(q)^*.
struct SubgroupData {
  std::int64_t a = 1;
  std::uint32_t r = 1;           // gcd(a, q - 1)
  std::vector<Elem> mu;          // a-th roots of unity, canonical order
  std::vector<Elem> powers;      // a-th powers (Delta^a), canonical order
  std::vector<bool> is_power;    // indexed by Elem::code

  bool contains_power(Elem x) const { return is_power[x.code]; }
};

SubgroupData subgroup_data(const Field& field, std::int64_t a);

Elem primitive_element(const Field& field) noexcept;

bool is_prime(std::uint64_t n) noexcept;

namespace detail {

/// Reference arithmetic on polynomial-basis encodings, independent of the
/// log tables. Used to build the tables and by the exhaustive field tests.
std::uint32_t encoded_add(std::uint32_t p, std::uint32_t k, std::uint32_t a, std::uint32_t b);
std::uint32_t encoded_mul(std::uint32_t p, const std::vector<std::uint32_t>& modulus,
                          std::uint32_t a, std::uint32_t b);

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic);

}  // namespace detail

}  // namespace wpsq
