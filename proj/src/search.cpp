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

#include "wpsq/search.hpp"

#include <limits>
#include <memory>
#include <mutex>
#include <numeric>
#include <random>
#include <set>

#include "wpsq/counting.hpp"
#include "wpsq/error.hpp"
#include "wpsq/parallel.hpp"

namespace wpsq {

const char* search_mode_name(SearchMode m) noexcept {
  return m == SearchMode::exhaustive ? "exhaustive" : "random";
}

WeightedPolynomial SearchResult::witness(std::size_t k) const {
  return WeightedPolynomial::from_dense(WeightSystem(weights), degree, basis, witnesses.at(k));
}

std::optional<std::uint64_t> normalized_count(std::uint32_t q, std::size_t m, std::uint64_t cap) {
  // 1 + q + ... + q^{m-1}
  std::uint64_t total = 0, power = 1;
  for (std::size_t k = 0; k < m; ++k) {
    if (total > cap - power) return std::nullopt;
    total += power;
    if (k + 1 < m) {
      if (power > cap / q) return std::nullopt;
      power *= q;
    }
  }
  return total;
}

namespace {

std::vector<Monomial> checked_basis(const WeightSystem& w, std::int64_t d) {
  auto basis = monomial_basis(w, d);
  if (basis.empty()) {
    throw Error(Errc::empty_basis, "no monomial of weighted degree " + std::to_string(d) + " for weights " +
                                       w.to_string());
  }
  return basis;
}

std::uint64_t checked_count(std::uint32_t q, std::size_t m, std::uint64_t budget) {
  const auto n = normalized_count(q, m, budget);
  if (!n) {
    throw Error(Errc::budget_exceeded, "search space of basis size " + std::to_string(m) + " over GF(" +
                                           std::to_string(q) + ") exceeds the budget of " +
                                           std::to_string(budget) + " candidates");
  }
  return *n;
}

// Monomial values laid out by basis position: table[t * points + p].
std::vector<Elem> monomial_table(const std::vector<Monomial>& basis, const std::vector<CanonicalPoint>& points,
                                 const Field& field) {
  std::vector<Elem> table(basis.size() * points.size());
  for (std::size_t t = 0; t < basis.size(); ++t) {
    for (std::size_t p = 0; p < points.size(); ++p) {
      Elem v = field.one();
      for (std::size_t k = 0; k < basis[t].size(); ++k) v = field.mul(v, field.pow(points[p].coords[k], basis[t][k]));
      table[t * points.size() + p] = v;
    }
  }
  return table;
}

struct Tally {
  bool seen = false;
  std::uint64_t best = 0;
  std::uint64_t maximizers = 0;
  std::vector<std::vector<Elem>> witnesses;

  void record(const std::vector<Elem>& v, std::uint64_t value, std::size_t cap) {
    if (!seen || value > best) {
      seen = true;
      best = value;
      maximizers = 1;
      witnesses.assign(1, v);
    } else if (value == best) {
      ++maximizers;
      if (witnesses.size() < cap) witnesses.push_back(v);
    }
  }

  void merge(const Tally& other, std::size_t cap) {
    if (!other.seen) return;
    if (!seen || other.best > best) {
      *this = other;
    } else if (other.best == best) {
      maximizers += other.maximizers;
      for (const auto& v : other.witnesses) {
        if (witnesses.size() >= cap) break;
        witnesses.push_back(v);
      }
    }
  }
};

// A contiguous run of the stream: `lead` leading zeros, then 1, then
// optionally a fixed next coefficient.
struct Chunk {
  std::size_t lead;
  std::optional<std::uint32_t> fixed;
};

class ChunkSearch {
 public:
  ChunkSearch(const Field& field, const std::vector<Elem>& table, std::size_t m, std::size_t points,
              std::size_t cap)
      : field_(field), table_(table), m_(m), np_(points), cap_(cap), sums_(m + 1, std::vector<Elem>(points)),
        cur_(m), hits_(field.q()) {}

  Tally run(const Chunk& chunk) {
    tally_ = Tally{};
    std::fill(cur_.begin(), cur_.end(), field_.zero());
    cur_[chunk.lead] = field_.one();
    std::size_t pos = chunk.lead + 1;
    std::vector<Elem>& s = sums_[pos];
    for (std::size_t p = 0; p < np_; ++p) s[p] = at(chunk.lead, p);
    if (chunk.fixed) {
      const Elem c{*chunk.fixed};
      cur_[pos] = c;
      for (std::size_t p = 0; p < np_; ++p) sums_[pos + 1][p] = field_.add(s[p], field_.mul(c, at(pos, p)));
      ++pos;
    }
    descend(pos);
    return std::move(tally_);
  }

 private:
  Elem at(std::size_t t, std::size_t p) const { return table_[t * np_ + p]; }

  void descend(std::size_t pos) {
    const std::vector<Elem>& s = sums_[pos];
    if (pos == m_) {
      std::uint64_t zeros = 0;
      for (const Elem& v : s) zeros += v.is_zero();
      tally_.record(cur_, zeros, cap_);
      return;
    }
    if (pos + 1 == m_) {
      // Last coefficient: each point vanishes for at most one value of c
      // unless the monomial is zero there.
      std::uint64_t base = 0;
      std::fill(hits_.begin(), hits_.end(), 0);
      for (std::size_t p = 0; p < np_; ++p) {
        const Elem ml = at(pos, p);
        if (ml.is_zero()) {
          base += s[p].is_zero();
        } else {
          ++hits_[field_.div(field_.neg(s[p]), ml).code];
        }
      }
      for (std::uint32_t c = 0; c < field_.q(); ++c) {
        cur_[pos] = Elem{c};
        tally_.record(cur_, base + hits_[c], cap_);
      }
      return;
    }
    std::vector<Elem>& out = sums_[pos + 1];
    for (std::uint32_t c = 0; c < field_.q(); ++c) {
      const Elem e{c};
      cur_[pos] = e;
      for (std::size_t p = 0; p < np_; ++p) out[p] = field_.add(s[p], field_.mul(e, at(pos, p)));
      descend(pos + 1);
    }
    cur_[pos] = field_.zero();
  }

  const Field& field_;
  const std::vector<Elem>& table_;
  std::size_t m_, np_, cap_;
  std::vector<std::vector<Elem>> sums_;
  std::vector<Elem> cur_;
  std::vector<std::uint64_t> hits_;
  Tally tally_;
};

SearchResult make_result(const WeightSystem& w, std::int64_t d, const Field& field, SearchMode mode,
                         std::vector<Monomial> basis) {
  SearchResult r;
  r.q = field.q();
  r.weights = w.weights();
  r.degree = d;
  r.mode = mode;
  r.basis = std::move(basis);
  return r;
}

}  // namespace

std::optional<std::uint64_t> construction_count(const WeightSystem& w, std::int64_t d, const Field& field) {
  const BoundSet b = bounds(d, w, field);
  if (!b.lower || d <= 0) return std::nullopt;
  const std::int64_t factors = d / b.lower_a;
  if (factors > static_cast<std::int64_t>(field.q()) + 1) return std::nullopt;
  for (std::size_t r = 0; r < w.size(); ++r) {
    for (std::size_t s = r + 1; s < w.size(); ++s) {
      if (std::lcm(w[r], w[s]) != b.lower_a) continue;
      const auto pairs = p1_pairs(static_cast<std::size_t>(factors), field);
      return count_zeros(product_of_forms(pairs, r, s, w, d, field), field);
    }
  }
  return std::nullopt;
}

CandidateStream::CandidateStream(const WeightSystem& w, std::int64_t d, const Field& field, std::uint64_t budget)
    : w_(w), d_(d), q_(field.q()), basis_(checked_basis(w, d)) {
  size_ = checked_count(q_, basis_.size(), budget);
  coeffs_.assign(basis_.size(), Elem{0});
}

bool CandidateStream::next() {
  if (done_) return false;
  const std::size_t m = coeffs_.size();
  if (!started_) {
    started_ = true;
    coeffs_.back() = Elem{1};
    return true;
  }
  // Odometer step, least significant entry last.
  std::size_t k = m;
  while (k > 0) {
    --k;
    if (coeffs_[k].code + 1 < q_) {
      ++coeffs_[k].code;
      break;
    }
    coeffs_[k].code = 0;
    if (k == 0) {
      done_ = true;
      return false;
    }
  }
  // A leading entry past 1 means this block is finished: open the next one.
  std::size_t lead = 0;
  while (coeffs_[lead].is_zero()) ++lead;
  if (coeffs_[lead].code > 1) {
    if (lead == 0) {
      done_ = true;
      return false;
    }
    coeffs_[lead].code = 0;
    coeffs_[lead - 1].code = 1;
  }
  return true;
}

WeightedPolynomial CandidateStream::polynomial() const {
  return WeightedPolynomial::from_dense(w_, d_, basis_, coeffs_);
}

CandidateStream iterate_polynomials(const WeightSystem& w, std::int64_t d, const Field& field, std::uint64_t budget) {
  return CandidateStream(w, d, field, budget);
}

SearchResult eq_exhaustive(const WeightSystem& w, std::int64_t d, const Field& field, const SearchOptions& options) {
  SearchResult result = make_result(w, d, field, SearchMode::exhaustive, checked_basis(w, d));
  const std::size_t m = result.basis.size();
  result.searched = checked_count(field.q(), m, options.budget);

  const auto points = enumerate_points(w, field);
  const auto table = monomial_table(result.basis, points, field);

  std::vector<Chunk> chunks;
  for (std::size_t lead = m; lead-- > 0;) {
    if (m - lead - 1 >= 2) {
      for (std::uint32_t c = 0; c < field.q(); ++c) chunks.push_back({lead, c});
    } else {
      chunks.push_back({lead, std::nullopt});
    }
  }

  std::vector<Tally> tallies(chunks.size());
  const unsigned threads = std::max(1u, options.threads);
  std::vector<std::unique_ptr<ChunkSearch>> workers;
  std::mutex pool_mutex;
  parallel_for(chunks.size(), threads, [&](std::size_t k) {
    std::unique_ptr<ChunkSearch> worker;
    {
      std::lock_guard lock(pool_mutex);
      if (!workers.empty()) {
        worker = std::move(workers.back());
        workers.pop_back();
      }
    }
    if (!worker) worker = std::make_unique<ChunkSearch>(field, table, m, points.size(), options.max_witnesses);
    tallies[k] = worker->run(chunks[k]);
    std::lock_guard lock(pool_mutex);
    workers.push_back(std::move(worker));
  });

  Tally total;
  for (const auto& t : tallies) total.merge(t, options.max_witnesses);
  result.value = total.best;
  result.maximizers = total.maximizers;
  result.witnesses = std::move(total.witnesses);
  result.exhaustive = true;
  result.construction = construction_count(w, d, field);
  return result;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % n;
  }
}

namespace {

// Fills v with a uniform nonzero vector scaled to have leading entry 1.
void draw_normalized(std::vector<Elem>& v, const Field& field, std::mt19937_64& rng) {
  std::size_t lead;
  do {
    for (auto& c : v) c = Elem{static_cast<std::uint32_t>(uniform_below(rng, field.q()))};
    lead = 0;
    while (lead < v.size() && v[lead].is_zero()) ++lead;
  } while (lead == v.size());
  const Elem inv = field.inv(v[lead]);
  for (auto& c : v) c = field.mul(c, inv);
}

}  // namespace

WeightedPolynomial random_polynomial(const WeightSystem& w, std::int64_t d, const Field& field, std::mt19937_64& rng) {
  const auto basis = checked_basis(w, d);
  std::vector<Elem> v(basis.size());
  draw_normalized(v, field, rng);
  return WeightedPolynomial::from_dense(w, d, basis, v);
}

SearchResult eq_random(const WeightSystem& w, std::int64_t d, const Field& field, std::uint64_t trials,
                       std::uint64_t seed, const SearchOptions& options) {
  if (trials < 1) throw Error(Errc::precondition, "random search needs at least one trial");
  SearchResult result = make_result(w, d, field, SearchMode::random, checked_basis(w, d));
  result.seed = seed;
  result.searched = trials;
  const std::size_t m = result.basis.size();
  const auto points = enumerate_points(w, field);
  const auto table = monomial_table(result.basis, points, field);
  const std::size_t np = points.size();

  std::mt19937_64 rng(seed);
  std::vector<Elem> v(m);
  std::set<std::vector<Elem>> maximizers;
  bool seen = false;
  for (std::uint64_t t = 0; t < trials; ++t) {
    draw_normalized(v, field, rng);

    std::uint64_t zeros = 0;
    for (std::size_t p = 0; p < np; ++p) {
      Elem s = field.zero();
      for (std::size_t k = 0; k < m; ++k) s = field.add(s, field.mul(v[k], table[k * np + p]));
      zeros += s.is_zero();
    }
    if (!seen || zeros > result.value) {
      seen = true;
      result.value = zeros;
      maximizers.clear();
      result.witnesses.clear();
    }
    if (zeros == result.value && maximizers.insert(v).second && result.witnesses.size() < options.max_witnesses) {
      result.witnesses.push_back(v);
    }
  }
  result.maximizers = maximizers.size();
  return result;
}

bool verify_result(const SearchResult& result, const Field& field) {
  if (result.q != field.q() || result.witnesses.empty()) return false;
  const WeightSystem w(result.weights);
  if (monomial_basis(w, result.degree) != result.basis) return false;
  if (result.mode == SearchMode::exhaustive &&
      normalized_count(field.q(), result.basis.size(), std::numeric_limits<std::uint64_t>::max()) != result.searched) {
    return false;
  }
  for (std::size_t k = 0; k < result.witnesses.size(); ++k) {
    if (result.witnesses[k].size() != result.basis.size()) return false;
    const WeightedPolynomial f = result.witness(k);
    if (f.is_zero() || count_zeros(f, field) != result.value) return false;
  }
  return true;
}

}  // namespace wpsq
