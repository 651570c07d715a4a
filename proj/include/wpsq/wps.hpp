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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wpsq/gf.hpp"

namespace wpsq {

/// Weights (a_0, ..., a_n) of a weighted projective space; n >= 1, a_i >= 1.
class WeightSystem {
 public:
  explicit WeightSystem(std::vector<std::int64_t> weights);

  /// Comma list such as "1,1,2".
  static WeightSystem parse(std::string_view text);

  const std::vector<std::int64_t>& weights() const noexcept { return weights_; }
  std::int64_t operator[](std::size_t i) const { return weights_[i]; }
  std::size_t size() const noexcept { return weights_.size(); }
  int dimension() const noexcept { return static_cast<int>(weights_.size()) - 1; }

  /// r_i = gcd(a_i, q - 1).
  std::uint32_t r(std::size_t i, const Field& field) const;
  WeightSystem with_weight(std::size_t i, std::int64_t a) const;
  bool is_straight() const noexcept;

  /// "(1,1,2)"
  std::string to_string() const;

  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;

 private:
  std::vector<std::int64_t> weights_;
};

using Coords = std::vector<Elem>;

/// Data attached to the support I of a point: d_I, reduced weights
/// b_i = a_i / d_I and Bezout coefficients with sum u_i b_i = 1, all aligned
/// with `support` (increasing indices).
struct Stratum {
  std::vector<std::size_t> support;
  std::int64_t gcd = 0;
  std::vector<std::int64_t> reduced;
  std::vector<std::int64_t> bezout;

  std::uint32_t mask() const noexcept;
};

/// Stratum of a nonempty support set given as a bit mask over indices.
/// Bezout coefficients come from a left-to-right extended-Euclid fold where
/// each new coefficient t is taken in [0, g/g') for the running gcd g.
Stratum stratum_for_mask(std::uint32_t mask, const WeightSystem& w);

struct CanonicalPoint {
  Coords coords;
  Stratum stratum;

  friend bool operator==(const CanonicalPoint& a, const CanonicalPoint& b) { return a.coords == b.coords; }
  friend auto operator<=>(const CanonicalPoint& a, const CanonicalPoint& b) { return a.coords <=> b.coords; }
};

/// p_n = q^n + ... + q + 1, and 0 for negative n.
std::uint64_t pn(int n, std::uint64_t q);

/// Reusable canonicalizer. Strata are tabulated per support set up to 12
/// coordinates and computed on demand beyond that. Holds a reference to the
/// field, which must outlive it.
class Canonicalizer {
 public:
  Canonicalizer(const WeightSystem& w, const Field& field);

  /// Canonical coordinates of v; throws Errc::zero_vector for v == 0.
  Coords canonical_coords(std::span<const Elem> v) const;
  void canonicalize_into(std::span<const Elem> v, std::span<Elem> out) const;
  Stratum stratum(std::uint32_t mask) const;

  const WeightSystem& weights() const noexcept { return w_; }
  const Field& field() const noexcept { return field_; }

 private:
  WeightSystem w_;
  const Field& field_;
  std::vector<Stratum> table_;
};

CanonicalPoint canonicalize(std::span<const Elem> v, const WeightSystem& w, const Field& field);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

/// All rational points, sorted lexicographically in canonical element order.
std::vector<CanonicalPoint> enumerate_points(const WeightSystem& w, const Field& field,
                                             std::uint64_t budget = kDefaultEnumerationBudget);

/// The q - 1 tuples (lambda^{b_i} x_i) for lambda in GF(q)^*, sorted.
std::vector<Coords> representatives(const CanonicalPoint& point, const WeightSystem& w, const Field& field);

/// O_i = [0:...:1:...:0].
CanonicalPoint distinguished_point(std::size_t i, const WeightSystem& w, const Field& field);

/// "[x0:x1:...:xn]"
std::string format_point(std::span<const Elem> coords, const Field& field);
Coords parse_point(std::string_view text, const Field& field);

/// Base-q integer of the codes with coords[0] most significant; integer order
/// matches the canonical lexicographic order.
std::uint64_t encode_coords(std::span<const Elem> coords, std::uint32_t q) noexcept;
void decode_coords(std::uint64_t code, std::uint32_t q, std::span<Elem> out) noexcept;

}  // namespace wpsq
