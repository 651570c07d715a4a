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
#include <optional>
#include <random>
#include <vector>

#include "wpsq/gf.hpp"
#include "wpsq/wpoly.hpp"
#include "wpsq/wps.hpp"

namespace wpsq {

enum class SearchMode { exhaustive, random };

const char* search_mode_name(SearchMode m) noexcept;

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;
inline constexpr std::size_t kDefaultWitnessCap = 16;

struct SearchOptions {
  std::uint64_t budget = kDefaultSearchBudget;
  std::size_t max_witnesses = kDefaultWitnessCap;
  unsigned threads = 1;
};

struct SearchResult {
  std::uint32_t q = 0;
  std::vector<std::int64_t> weights;
  std::int64_t degree = 0;
  SearchMode mode = SearchMode::exhaustive;
  std::uint64_t value = 0;
  std::vector<Monomial> basis;
  std::vector<std::vector<Elem>> witnesses;  // dense coefficients over `basis`
  std::uint64_t maximizers = 0;              // distinct normalized maximizers seen
  std::uint64_t searched = 0;
  std::optional<std::uint64_t> seed;
  bool exhaustive = false;  // value is e_q itself
  // Point count of the product-of-forms polynomial when that construction
  // applies; the exhaustive value must not be smaller.
  std::optional<std::uint64_t> construction;

  WeightedPolynomial witness(std::size_t k) const;
};

/// (q^m - 1) / (q - 1), or nullopt when it exceeds `cap`.
std::optional<std::uint64_t> normalized_count(std::uint32_t q, std::size_t m, std::uint64_t cap);

/// Normalized coefficient vectors (first nonzero entry 1) over the basis of
/// S_d, in lexicographic order of element codes.
class CandidateStream {
 public:
  CandidateStream(const WeightSystem& w, std::int64_t d, const Field& field,
                  std::uint64_t budget = kDefaultSearchBudget);

  /// Advances to the next candidate; false once the stream is exhausted.
  bool next();
  const std::vector<Elem>& coefficients() const noexcept { return coeffs_; }
  WeightedPolynomial polynomial() const;
  const std::vector<Monomial>& basis() const noexcept { return basis_; }
  std::uint64_t size() const noexcept { return size_; }

 private:
  WeightSystem w_;
  std::int64_t d_;
  std::uint32_t q_;
  std::vector<Monomial> basis_;
  std::vector<Elem> coeffs_;
  std::uint64_t size_ = 0;
  bool started_ = false;
  bool done_ = false;
};

CandidateStream iterate_polynomials(const WeightSystem& w, std::int64_t d, const Field& field,
                                    std::uint64_t budget = kDefaultSearchBudget);

/// e_q(d; W) by exhaustive search. Errors: Errc::empty_basis,
/// Errc::budget_exceeded.
SearchResult eq_exhaustive(const WeightSystem& w, std::int64_t d, const Field& field,
                           const SearchOptions& options = {});

/// Lower bound for e_q from `trials` seeded uniform normalized candidates.
SearchResult eq_random(const WeightSystem& w, std::int64_t d, const Field& field, std::uint64_t trials,
                       std::uint64_t seed, const SearchOptions& options = {});

/// N of the product of d / a distinct forms in the two variables realizing
/// a = min lcm(a_r, a_s), when a divides d and d / a <= q + 1.
std::optional<std::uint64_t> construction_count(const WeightSystem& w, std::int64_t d, const Field& field);

/// Uniform integer in [0, n) by rejection, so draws do not depend on the
/// standard library's distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

/// A uniformly drawn nonzero element of S_d, normalized so that its first
/// nonzero coefficient over the basis is 1.
WeightedPolynomial random_polynomial(const WeightSystem& w, std::int64_t d, const Field& field, std::mt19937_64& rng);

/// Recounts every witness; true when each has exactly `value` zeros and the
/// exhaustive candidate count matches the basis size.
bool verify_result(const SearchResult& result, const Field& field);

}  // namespace wpsq
