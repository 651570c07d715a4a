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

#include "wpsq/gf.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "wpsq/error.hpp"

namespace wpsq {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::not_prime: return "not_prime";
    case Errc::bad_extension_degree: return "bad_extension_degree";
    case Errc::field_too_large: return "field_too_large";
    case Errc::invalid_weights: return "invalid_weights";
    case Errc::zero_vector: return "zero_vector";
    case Errc::budget_exceeded: return "budget_exceeded";
    case Errc::syntax: return "syntax";
    case Errc::not_homogeneous: return "not_homogeneous";
    case Errc::index_out_of_range: return "index_out_of_range";
    case Errc::coefficient_not_in_field: return "coefficient_not_in_field";
    case Errc::empty_basis: return "empty_basis";
    case Errc::zero_polynomial: return "zero_polynomial";
    case Errc::precondition: return "precondition";
    case Errc::io: return "io";
  }
  return "unknown";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace detail {

namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first, trimmed

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime and small; Fermat.
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo b over GF(p); b nonzero.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - 1 - db;
    const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly decode(std::uint32_t enc, std::uint32_t p, std::size_t len) {
  Poly out(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    out[i] = enc % p;
    enc /= p;
  }
  return out;
}

std::uint32_t encode(const Poly& a, std::uint32_t p) {
  std::uint32_t enc = 0;
  for (std::size_t i = a.size(); i-- > 0;) enc = enc * p + a[i];
  return enc;
}

}  // namespace

std::uint32_t encoded_add(std::uint32_t p, std::uint32_t k, std::uint32_t a, std::uint32_t b) {
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    out += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return out;
}

std::uint32_t encoded_mul(std::uint32_t p, const std::vector<std::uint32_t>& modulus,
                          std::uint32_t a, std::uint32_t b) {
  if (modulus.empty()) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
  }
  const std::size_t k = modulus.size() - 1;
  const Poly x = decode(a, p, k);
  const Poly y = decode(b, p, k);
  Poly prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p);
    }
  }
  return encode(poly_rem(std::move(prod), modulus, p), p);
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic) {
  const std::size_t k = monic.size() - 1;
  if (k <= 1) return k == 1;
  // Try every monic divisor of degree 1..k/2.
  for (std::size_t deg = 1; deg <= k / 2; ++deg) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly divisor = decode(static_cast<std::uint32_t>(idx), p, deg);
      divisor.push_back(1);
      if (poly_rem(monic, divisor, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

Field Field::create(std::uint32_t p, std::uint32_t k, std::uint32_t limit) {
  if (!is_prime(p)) {
    throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
  }
  if (k < 1) {
    throw Error(Errc::bad_extension_degree, "extension degree must be at least 1");
  }
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > limit) {
      throw Error(Errc::field_too_large, "field size " + std::to_string(p) + "^" + std::to_string(k) +
                                             " exceeds the limit " + std::to_string(limit));
    }
  }

  Field f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = static_cast<std::uint32_t>(q);

  if (k > 1) {
    // Candidates (c_0, ..., c_{k-1}) in lexicographic order, c_0 most significant.
    for (std::uint32_t idx = 0; idx < f.q_; ++idx) {
      std::vector<std::uint32_t> monic(k + 1, 0);
      std::uint32_t rest = idx;
      for (std::uint32_t i = k; i-- > 0;) {
        monic[i] = rest % p;
        rest /= p;
      }
      monic[k] = 1;
      if (detail::is_irreducible(p, monic)) {
        f.modulus_ = std::move(monic);
        break;
      }
    }
  }

  const std::uint32_t order = f.q_ - 1;
  std::uint32_t generator = 0;
  for (std::uint32_t cand = 1; cand < f.q_ && generator == 0; ++cand) {
    std::uint32_t x = cand, m = 1;
    while (x != 1) {
      x = detail::encoded_mul(p, f.modulus_, x, cand);
      ++m;
    }
    if (m == order) generator = cand;
  }

  f.exp_.resize(order);
  f.log_.assign(f.q_, 0);
  std::uint32_t x = 1;
  for (std::uint32_t m = 0; m < order; ++m) {
    f.exp_[m] = x;
    f.log_[x] = m;
    x = detail::encoded_mul(p, f.modulus_, x, generator);
  }
  f.zech_.resize(order);
  for (std::uint32_t m = 0; m < order; ++m) {
    const std::uint32_t s = detail::encoded_add(p, k, 1, f.exp_[m]);
    f.zech_[m] = s == 0 ? -1 : static_cast<std::int32_t>(f.log_[s]);
  }
  f.minus_one_ = Elem{(p == 2 ? 0u : order / 2) + 1};
  return f;
}

Field Field::from_order(std::string_view q_text, std::uint32_t limit) {
  auto parse_uint = [&](std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw Error(Errc::syntax, "cannot parse field size '" + std::string(q_text) + "'");
    }
    return v;
  };
  const auto caret = q_text.find('^');
  if (caret != std::string_view::npos) {
    const std::uint64_t p = parse_uint(q_text.substr(0, caret));
    const std::uint64_t k = parse_uint(q_text.substr(caret + 1));
    if (p > limit) throw Error(Errc::field_too_large, "field size exceeds the limit");
    if (k > 64) throw Error(Errc::field_too_large, "field size exceeds the limit");
    return create(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k), limit);
  }
  const std::uint64_t q = parse_uint(q_text);
  if (q > limit) throw Error(Errc::field_too_large, "field size " + std::to_string(q) + " exceeds the limit");
  std::uint64_t p = 2;
  while (p <= q && q % p != 0) ++p;
  if (q < 2) throw Error(Errc::not_prime, std::to_string(q) + " is not a prime power");
  std::uint64_t rest = q;
  std::uint32_t k = 0;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw Error(Errc::not_prime, std::to_string(q) + " is not a prime power");
  return create(static_cast<std::uint32_t>(p), k, limit);
}

std::string Field::modulus_string() const {
  if (modulus_.empty()) return "";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    const std::uint32_t c = modulus_[i];
    if (c == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (i == 0 || c != 1) out << c;
    if (i >= 1) out << "x";
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

Elem Field::delta_pow(std::int64_t m) const noexcept {
  const std::int64_t order = q_ - 1;
  std::int64_t r = m % order;
  if (r < 0) r += order;
  return Elem{static_cast<std::uint32_t>(r) + 1};
}

Elem Field::inv(Elem a) const {
  if (a.is_zero()) throw Error(Errc::precondition, "zero has no inverse");
  const std::uint32_t order = q_ - 1;
  const std::uint32_t l = a.code - 1;
  return Elem{(l == 0 ? 0 : order - l) + 1};
}

Elem Field::pow(Elem a, std::int64_t e) const {
  if (a.is_zero()) {
    if (e == 0) return one();
    if (e > 0) return zero();
    throw Error(Errc::precondition, "zero raised to a negative power");
  }
  const std::int64_t order = q_ - 1;
  std::int64_t e_red = e % order;
  if (e_red < 0) e_red += order;
  const std::uint64_t l = (static_cast<std::uint64_t>(a.code - 1) * static_cast<std::uint64_t>(e_red)) %
                          static_cast<std::uint64_t>(order);
  return Elem{static_cast<std::uint32_t>(l) + 1};
}

std::uint32_t Field::log(Elem a) const {
  if (a.is_zero()) throw Error(Errc::precondition, "log of zero");
  return a.code - 1;
}

Elem Field::from_int(std::int64_t n) const noexcept {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  if (r == 0) return zero();
  return Elem{log_[static_cast<std::uint32_t>(r)] + 1};
}

std::optional<std::uint32_t> Field::to_int(Elem a) const noexcept {
  const std::uint32_t enc = encoding(a);
  if (enc < p_) return enc;
  return std::nullopt;
}

Elem Field::from_encoding(std::uint32_t enc) const {
  if (enc >= q_) throw Error(Errc::precondition, "encoding out of range");
  if (enc == 0) return zero();
  return Elem{log_[enc] + 1};
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out(q_);
  for (std::uint32_t c = 0; c < q_; ++c) out[c] = Elem{c};
  return out;
}

std::vector<Elem> Field::nonzero_elements() const {
  std::vector<Elem> out(q_ - 1);
  for (std::uint32_t c = 1; c < q_; ++c) out[c - 1] = Elem{c};
  return out;
}

std::string Field::format(Elem a) const {
  if (auto v = to_int(a)) return std::to_string(*v);
  return "g^" + std::to_string(a.code - 1);
}

Elem Field::parse(std::string_view text) const {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw Error(Errc::syntax, "empty field element");
  if (text.front() == 'g') {
    if (text.size() == 1) return delta();
    if (text[1] != '^' || text.size() == 2) {
      throw Error(Errc::syntax, "bad field element '" + std::string(text) + "'");
    }
    std::int64_t m = 0;
    const auto body = text.substr(2);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), m);
    if (ec != std::errc() || ptr != body.data() + body.size()) {
      throw Error(Errc::syntax, "bad exponent in '" + std::string(text) + "'");
    }
    return delta_pow(m);
  }
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec == std::errc::result_out_of_range) {
    throw Error(Errc::coefficient_not_in_field, "'" + std::string(text) + "' is not an element of GF(" +
                                                    std::to_string(q_) + ")");
  }
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(Errc::syntax, "bad field element '" + std::string(text) + "'");
  }
  if (v >= p_) {
    throw Error(Errc::coefficient_not_in_field,
                "'" + std::string(text) + "' is not an element of GF(" + std::to_string(q_) + ")");
  }
  return from_int(static_cast<std::int64_t>(v));
}

Elem primitive_element(const Field& field) noexcept { return field.delta(); }

SubgroupData subgroup_data(const Field& field, std::int64_t a) {
  if (a < 1) throw Error(Errc::precondition, "weight must be positive");
  SubgroupData out;
  out.a = a;
  out.r = static_cast<std::uint32_t>(std::gcd(a, static_cast<std::int64_t>(field.group_order())));
  out.is_power.assign(field.q(), false);
  for (Elem z : field.nonzero_elements()) {
    const Elem w = field.pow(z, a);
    if (w == field.one()) out.mu.push_back(z);
    out.is_power[w.code] = true;
  }
  for (Elem z : field.nonzero_elements()) {
    if (out.is_power[z.code]) out.powers.push_back(z);
  }
  return out;
}

}  // namespace wpsq
