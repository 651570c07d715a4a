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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wpsq/gf.hpp"
#include "wpsq/wps.hpp"

namespace wpsq {

/// Exponent tuple (e_0, ..., e_n).
using Monomial = std::vector<std::int64_t>;

/// Basis order: lexicographically descending exponents, so X0^2 precedes X0*X1.
struct BasisOrder {
  bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
};

using TermMap = std::map<Monomial, Elem, BasisOrder>;

std::int64_t weighted_degree(const Monomial& m, const WeightSystem& w);

/// A weighted-homogeneous polynomial: every stored monomial has weighted
/// degree `degree()` and every stored coefficient is nonzero. The zero
/// polynomial has no terms.
class WeightedPolynomial {
 public:
  WeightedPolynomial(WeightSystem w, std::int64_t degree);

  /// Drops zero coefficients; throws Errc::not_homogeneous when a monomial
  /// has another degree.
  static WeightedPolynomial from_terms(WeightSystem w, std::int64_t degree, const TermMap& terms);

  /// Coefficients given over an ordered basis (dense form used by search).
  static WeightedPolynomial from_dense(WeightSystem w, std::int64_t degree, std::span<const Monomial> basis,
                                       std::span<const Elem> coeffs);

  const WeightSystem& weights() const noexcept { return w_; }
  std::int64_t degree() const noexcept { return degree_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds c * m to the polynomial.
  void add_term(const Monomial& m, Elem c, const Field& field);

  friend bool operator==(const WeightedPolynomial&, const WeightedPolynomial&) = default;

 private:
  WeightSystem w_;
  std::int64_t degree_;
  TermMap terms_;
};

/// All exponent tuples of weighted degree d, in basis order. Empty exactly
/// when d is not in a_0 N + ... + a_n N.
std::vector<Monomial> monomial_basis(const WeightSystem& w, std::int64_t d);

/// Grammar: term (('+'|'-') term)*, term = [coeff '*'] X<i>[^e] ('*' X<j>[^e])*,
/// coeff an integer in [0, p) or g / g^m. A leading sign is accepted.
WeightedPolynomial parse_poly(std::string_view text, const WeightSystem& w, const Field& field);

/// Text in basis order, e.g. "X0^3*X1 + 2*X0*X1^3"; "0" for the zero polynomial.
std::string format_poly(const WeightedPolynomial& f, const Field& field);

struct HomogeneityReport {
  bool homogeneous = true;
  std::optional<std::int64_t> degree;  // unset for the empty map
  std::vector<std::int64_t> degrees;   // distinct degrees seen, ascending
  std::uint64_t numeric_checks = 0;    // (lambda, point) pairs compared
  std::uint64_t numeric_mismatches = 0;
  std::optional<Coords> mismatch_witness;
};

/// Symbolic check plus the numeric scaling identity
/// F(lambda^{a_i} x_i) = lambda^d F(x) over every lambda in GF(q)^* on a
/// deterministic point sample.
HomogeneityReport is_homogeneous(const TermMap& terms, const WeightSystem& w, const Field& field);

Elem evaluate_terms(const TermMap& terms, std::span<const Elem> v, const Field& field);
Elem evaluate(const WeightedPolynomial& f, std::span<const Elem> v, const Field& field);

/// X_i <- X_i^{a_i}; the result lives on the weights with a_i replaced by 1.
WeightedPolynomial pullback(const WeightedPolynomial& f, std::size_t i);

/// f composed with X_i <- delta^j X_i.
WeightedPolynomial twist(const WeightedPolynomial& f, std::size_t i, std::int64_t j, const Field& field);

WeightedPolynomial scale(const WeightedPolynomial& f, Elem c, const Field& field);
WeightedPolynomial add(const WeightedPolynomial& f, const WeightedPolynomial& g, const Field& field);
WeightedPolynomial multiply(const WeightedPolynomial& f, const WeightedPolynomial& g, const Field& field);

using P1Pair = std::pair<Elem, Elem>;

/// prod_k (alpha_k X_r^{a_rs/a_r} - beta_k X_s^{a_rs/a_s}), a_rs = lcm(a_r, a_s),
/// with d / a_rs factors taken at pairwise distinct points of P^1(F_q).
WeightedPolynomial product_of_forms(std::span<const P1Pair> pairs, std::size_t r, std::size_t s,
                                    const WeightSystem& w, std::int64_t d, const Field& field);

/// The first `count` points of P^1(F_q) in canonical order, as (alpha, beta).
std::vector<P1Pair> p1_pairs(std::size_t count, const Field& field);

/// X_0^{d-q-1} (X_0^q X_1 - X_0 X_1^q); needs a_0 = a_1 = 1 and d >= q + 1.
WeightedPolynomial saturating_poly(std::int64_t d, const WeightSystem& w, const Field& field);

}  // namespace wpsq
