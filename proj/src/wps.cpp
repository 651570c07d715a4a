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

#include "wpsq/wps.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "wpsq/error.hpp"

namespace wpsq {

WeightSystem::WeightSystem(std::vector<std::int64_t> weights) : weights_(std::move(weights)) {
  if (weights_.size() < 2) {
    throw Error(Errc::invalid_weights, "a weight system needs at least two weights (n >= 1)");
  }
  if (weights_.size() > 31) {
    throw Error(Errc::invalid_weights, "at most 31 weights are supported");
  }
  for (std::int64_t a : weights_) {
    if (a < 1) throw Error(Errc::invalid_weights, "weights must be positive integers");
  }
}

WeightSystem WeightSystem::parse(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw Error(Errc::syntax, "cannot parse weights '" + std::string(text) + "'");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return WeightSystem(std::move(out));
}

std::uint32_t WeightSystem::r(std::size_t i, const Field& field) const {
  return static_cast<std::uint32_t>(std::gcd(weights_.at(i), static_cast<std::int64_t>(field.group_order())));
}

WeightSystem WeightSystem::with_weight(std::size_t i, std::int64_t a) const {
  auto copy = weights_;
  copy.at(i) = a;
  return WeightSystem(std::move(copy));
}

bool WeightSystem::is_straight() const noexcept {
  return std::all_of(weights_.begin(), weights_.end(), [](std::int64_t a) { return a == 1; });
}

std::string WeightSystem::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(weights_[i]);
  }
  return out + ")";
}

std::uint32_t Stratum::mask() const noexcept {
  std::uint32_t m = 0;
  for (std::size_t i : support) m |= 1u << i;
  return m;
}

namespace {

// Inverse of x modulo m (m >= 2, gcd(x, m) == 1), in [0, m).
std::int64_t inverse_mod(std::int64_t x, std::int64_t m) {
  std::int64_t old_r = ((x % m) + m) % m, r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - quot * r};
    std::tie(old_s, s) = std::pair{s, old_s - quot * s};
  }
  return ((old_s % m) + m) % m;
}

std::int64_t mod_order(std::int64_t x, std::int64_t order) {
  std::int64_t r = x % order;
  return r < 0 ? r + order : r;
}

}  // namespace

Stratum stratum_for_mask(std::uint32_t mask, const WeightSystem& w) {
  Stratum s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (mask & (1u << i)) s.support.push_back(i);
  }
  if (s.support.empty()) throw Error(Errc::zero_vector, "empty support");
  std::int64_t d = 0;
  for (std::size_t i : s.support) d = std::gcd(d, w[i]);
  s.gcd = d;
  for (std::size_t i : s.support) s.reduced.push_back(w[i] / d);

  // Fold s*g + t*b = g' over the support, t chosen in [0, g/g').
  std::int64_t g = s.reduced.front();
  s.bezout.push_back(1);
  for (std::size_t k = 1; k < s.reduced.size(); ++k) {
    const std::int64_t b = s.reduced[k];
    const std::int64_t g2 = std::gcd(g, b);
    const std::int64_t m = g / g2;
    const std::int64_t t = m == 1 ? 0 : inverse_mod(b / g2, m);
    const std::int64_t f = (g2 - t * b) / g;
    for (auto& u : s.bezout) u *= f;
    s.bezout.push_back(t);
    g = g2;
  }
  return s;
}

std::uint64_t pn(int n, std::uint64_t q) {
  if (n < 0) return 0;
  std::uint64_t sum = 0, term = 1;
  for (int m = 0; m <= n; ++m) {
    sum += term;
    term *= q;
  }
  return sum;
}

Canonicalizer::Canonicalizer(const WeightSystem& w, const Field& field) : w_(w), field_(field) {
  if (w_.size() <= 12) {
    const std::uint32_t count = 1u << w_.size();
    table_.resize(count);
    for (std::uint32_t mask = 1; mask < count; ++mask) table_[mask] = stratum_for_mask(mask, w_);
  }
}

Stratum Canonicalizer::stratum(std::uint32_t mask) const {
  if (!table_.empty()) return table_.at(mask);
  return stratum_for_mask(mask, w_);
}

void Canonicalizer::canonicalize_into(std::span<const Elem> v, std::span<Elem> out) const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) mask |= 1u << i;
  }
  if (mask == 0) throw Error(Errc::zero_vector, "the zero vector is not a point");
  Stratum local;
  const Stratum* s = nullptr;
  if (!table_.empty()) {
    s = &table_[mask];
  } else {
    local = stratum_for_mask(mask, w_);
    s = &local;
  }
  const std::int64_t order = field_.group_order();
  // log(lambda) = -sum u_i log(v_i)
  std::int64_t log_lambda = 0;
  for (std::size_t k = 0; k < s->support.size(); ++k) {
    const std::int64_t lv = v[s->support[k]].code - 1;
    log_lambda = mod_order(log_lambda - mod_order(s->bezout[k], order) * lv, order);
  }
  std::fill(out.begin(), out.end(), Elem{0});
  for (std::size_t k = 0; k < s->support.size(); ++k) {
    const std::size_t i = s->support[k];
    const std::int64_t lv = v[i].code - 1;
    const std::int64_t lw = mod_order(lv + mod_order(s->reduced[k], order) * log_lambda, order);
    out[i] = Elem{static_cast<std::uint32_t>(lw) + 1};
  }
}

Coords Canonicalizer::canonical_coords(std::span<const Elem> v) const {
  if (v.size() != w_.size()) throw Error(Errc::precondition, "coordinate count does not match the weights");
  Coords out(v.size());
  canonicalize_into(v, out);
  return out;
}

CanonicalPoint canonicalize(std::span<const Elem> v, const WeightSystem& w, const Field& field) {
  if (v.size() != w.size()) throw Error(Errc::precondition, "coordinate count does not match the weights");
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) mask |= 1u << i;
  }
  if (mask == 0) throw Error(Errc::zero_vector, "the zero vector is not a point");
  CanonicalPoint point;
  point.stratum = stratum_for_mask(mask, w);
  const std::int64_t order = field.group_order();
  std::int64_t log_lambda = 0;
  for (std::size_t k = 0; k < point.stratum.support.size(); ++k) {
    const std::int64_t lv = v[point.stratum.support[k]].code - 1;
    log_lambda = mod_order(log_lambda - mod_order(point.stratum.bezout[k], order) * lv, order);
  }
  point.coords.assign(v.size(), Elem{0});
  for (std::size_t k = 0; k < point.stratum.support.size(); ++k) {
    const std::size_t i = point.stratum.support[k];
    const std::int64_t lv = v[i].code - 1;
    point.coords[i] = Elem{static_cast<std::uint32_t>(
                               mod_order(lv + mod_order(point.stratum.reduced[k], order) * log_lambda, order)) +
                           1};
  }
  return point;
}

std::uint64_t encode_coords(std::span<const Elem> coords, std::uint32_t q) noexcept {
  std::uint64_t code = 0;
  for (Elem e : coords) code = code * q + e.code;
  return code;
}

void decode_coords(std::uint64_t code, std::uint32_t q, std::span<Elem> out) noexcept {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = Elem{static_cast<std::uint32_t>(code % q)};
    code /= q;
  }
}

std::vector<CanonicalPoint> enumerate_points(const WeightSystem& w, const Field& field, std::uint64_t budget) {
  const std::uint32_t q = field.q();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (total > budget / q) {
      throw Error(Errc::budget_exceeded, "enumeration of GF(" + std::to_string(q) + ")^" +
                                             std::to_string(w.size()) + " exceeds the vector budget of " +
                                             std::to_string(budget));
    }
    total *= q;
  }

  const Canonicalizer canon(w, field);
  Coords v(w.size()), c(w.size());
  std::vector<std::uint64_t> codes;
  if (total <= (1u << 24)) {
    std::vector<std::uint8_t> seen(total, 0);
    for (std::uint64_t idx = 1; idx < total; ++idx) {
      decode_coords(idx, q, v);
      canon.canonicalize_into(v, c);
      seen[encode_coords(c, q)] = 1;
    }
    for (std::uint64_t idx = 1; idx < total; ++idx) {
      if (seen[idx]) codes.push_back(idx);
    }
  } else {
    codes.reserve(pn(w.dimension(), q));
    for (std::uint64_t idx = 1; idx < total; ++idx) {
      decode_coords(idx, q, v);
      canon.canonicalize_into(v, c);
      const std::uint64_t code = encode_coords(c, q);
      if (code == idx) codes.push_back(code);
    }
  }

  std::vector<CanonicalPoint> points;
  points.reserve(codes.size());
  for (std::uint64_t code : codes) {
    decode_coords(code, q, v);
    CanonicalPoint p;
    p.coords = v;
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_zero()) mask |= 1u << i;
    }
    p.stratum = canon.stratum(mask);
    points.push_back(std::move(p));
  }
  return points;
}

std::vector<Coords> representatives(const CanonicalPoint& point, const WeightSystem& w, const Field& field) {
  if (point.coords.size() != w.size()) throw Error(Errc::precondition, "coordinate count does not match the weights");
  std::vector<Coords> out;
  out.reserve(field.group_order());
  for (Elem lambda : field.nonzero_elements()) {
    Coords rep(w.size(), Elem{0});
    for (std::size_t k = 0; k < point.stratum.support.size(); ++k) {
      const std::size_t i = point.stratum.support[k];
      rep[i] = field.mul(field.pow(lambda, point.stratum.reduced[k]), point.coords[i]);
    }
    out.push_back(std::move(rep));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CanonicalPoint distinguished_point(std::size_t i, const WeightSystem& w, const Field& field) {
  if (i >= w.size()) throw Error(Errc::index_out_of_range, "index " + std::to_string(i) + " out of range");
  Coords v(w.size(), field.zero());
  v[i] = field.one();
  return canonicalize(v, w, field);
}

std::string format_point(std::span<const Elem> coords, const Field& field) {
  std::string out = "[";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ":";
    out += field.format(coords[i]);
  }
  return out + "]";
}

Coords parse_point(std::string_view text, const Field& field) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw Error(Errc::syntax, "points are written [x0:x1:...:xn]");
  }
  text = text.substr(1, text.size() - 2);
  Coords out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t colon = std::min(text.find(':', pos), text.size());
    out.push_back(field.parse(text.substr(pos, colon - pos)));
    pos = colon + 1;
  }
  return out;
}

}  // namespace wpsq
