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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "wpsq/counting.hpp"
#include "wpsq/error.hpp"
#include "wpsq/io.hpp"
#include "wpsq/reproduce.hpp"
#include "wpsq/search.hpp"

using namespace wpsq;

namespace {

struct Naive {
  std::uint64_t value = 0;
  std::uint64_t maximizers = 0;
  std::vector<std::vector<Elem>> witnesses;
  std::uint64_t searched = 0;
};

// Straight walk over the candidate stream with the plain point counter.
Naive naive_search(const WeightSystem& w, std::int64_t d, const Field& f) {
  Naive out;
  auto stream = iterate_polynomials(w, d, f);
  const auto points = enumerate_points(w, f);
  while (stream.next()) {
    ++out.searched;
    const auto n = count_zeros(stream.polynomial(), points, f);
    if (out.searched == 1 || n > out.value) {
      out.value = n;
      out.maximizers = 1;
      out.witnesses.assign(1, stream.coefficients());
    } else if (n == out.value) {
      ++out.maximizers;
      if (out.witnesses.size() < kDefaultWitnessCap) out.witnesses.push_back(stream.coefficients());
    }
  }
  return out;
}

std::filesystem::path temp_file(const char* name) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST(Stream, SpecExamples) {
  const Field f2 = Field::create(2, 1);
  auto s = iterate_polynomials(WeightSystem({1, 1}), 1, f2);
  std::vector<std::string> seen;
  while (s.next()) seen.push_back(format_poly(s.polynomial(), f2));
  EXPECT_EQ(seen, (std::vector<std::string>{"X1", "X0", "X0 + X1"}));

  auto s2 = iterate_polynomials(WeightSystem({1, 1, 2}), 2, f2);
  EXPECT_EQ(s2.size(), 15u);
  std::uint64_t n = 0;
  while (s2.next()) ++n;
  EXPECT_EQ(n, 15u);

  const Field f5 = Field::create(5, 1);
  EXPECT_THROW(iterate_polynomials(WeightSystem({2, 3}), 1, f5), Error);
}

TEST(Stream, NormalizedLexicographicAndComplete) {
  const Field f = Field::create(3, 1);
  auto s = iterate_polynomials(WeightSystem({1, 2}), 4, f);
  std::vector<std::vector<Elem>> all;
  while (s.next()) all.push_back(s.coefficients());
  EXPECT_EQ(all.size(), s.size());
  EXPECT_EQ(all.size(), (27u - 1) / 2);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
  for (const auto& v : all) {
    auto lead = std::find_if(v.begin(), v.end(), [](Elem e) { return !e.is_zero(); });
    ASSERT_NE(lead, v.end());
    EXPECT_EQ(*lead, f.one());
  }
}

TEST(Stream, Budget) {
  const Field f = Field::create(3, 1);
  try {
    iterate_polynomials(WeightSystem({1, 1, 1}), 4, f, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::budget_exceeded);
  }
}

TEST(Exhaustive, SpecExamples) {
  const Field f3 = Field::create(3, 1), f2 = Field::create(2, 1), f5 = Field::create(5, 1);
  auto r = eq_exhaustive(WeightSystem({1, 1}), 2, f3);
  EXPECT_EQ(r.value, 2u);
  EXPECT_EQ(r.searched, 13u);
  r = eq_exhaustive(WeightSystem({1, 1, 2}), 2, f2);
  EXPECT_EQ(r.value, 5u);
  EXPECT_EQ(r.searched, 15u);
  EXPECT_TRUE(r.exhaustive);
  r = eq_exhaustive(WeightSystem({2, 3}), 6, f5);
  EXPECT_EQ(r.value, 1u);
}

TEST(Exhaustive, AgreesWithNaiveStream) {
  struct Case {
    const char* q;
    std::vector<std::int64_t> w;
    std::int64_t d;
  };
  const std::vector<Case> cases{{"2", {1, 1, 1}, 3}, {"3", {1, 1, 2}, 3}, {"4", {1, 2}, 6},
                                {"3", {1, 2, 3}, 6}, {"5", {2, 3}, 12},   {"2", {1, 1, 2, 2}, 4}};
  for (const auto& c : cases) {
    const Field f = Field::from_order(c.q);
    const WeightSystem w(c.w);
    const auto fast = eq_exhaustive(w, c.d, f);
    const auto slow = naive_search(w, c.d, f);
    EXPECT_EQ(fast.value, slow.value) << w.to_string() << " d=" << c.d;
    EXPECT_EQ(fast.maximizers, slow.maximizers);
    EXPECT_EQ(fast.searched, slow.searched);
    EXPECT_EQ(fast.witnesses, slow.witnesses);
    EXPECT_TRUE(verify_result(fast, f));
  }
}

TEST(Exhaustive, ThreadCountDoesNotChangeTheResult) {
  const Field f = Field::create(3, 1);
  const WeightSystem w({1, 1, 2});
  SearchOptions one, many;
  many.threads = 4;
  const auto a = eq_exhaustive(w, 4, f, one);
  const auto b = eq_exhaustive(w, 4, f, many);
  EXPECT_EQ(search_json(a, f).dump(), search_json(b, f).dump());
}

TEST(Exhaustive, BoundsSandwich) {
  for (const char* q : {"2", "3", "4"}) {
    const Field f = Field::from_order(q);
    for (const auto& ws : std::vector<std::vector<std::int64_t>>{{1, 2}, {1, 1, 2}, {1, 2, 3}, {2, 3}}) {
      const WeightSystem w(ws);
      for (std::int64_t d = 1; d <= 6; ++d) {
        const auto basis = monomial_basis(w, d);
        if (basis.empty()) continue;
        SearchOptions o;
        o.budget = 2'000'000;
        if (!normalized_count(f.q(), basis.size(), o.budget)) continue;
        const auto r = eq_exhaustive(w, d, f, o);
        const auto b = bounds(d, w, f);
        EXPECT_LE(r.value, b.pn);
        if (b.lower) EXPECT_GE(r.value, *b.lower) << w.to_string() << " d=" << d << " q=" << q;
        if (r.construction) EXPECT_GE(r.value, *r.construction);
      }
    }
  }
}

TEST(Exhaustive, SerreTightOnStraightPlanes) {
  for (std::uint32_t q : {2u, 3u}) {
    const Field f = Field::create(q, 1);
    for (std::int64_t d = 1; d <= static_cast<std::int64_t>(q); ++d) {
      const auto r = eq_exhaustive(WeightSystem({1, 1, 1}), d, f);
      EXPECT_EQ(r.value, d * q + 1);
      bool pencil = false;
      for (std::size_t k = 0; k < r.witnesses.size(); ++k) pencil = pencil || is_line_pencil(r.witness(k), f);
      EXPECT_TRUE(pencil);
    }
  }
}

TEST(Random, SpecExamples) {
  const Field f2 = Field::create(2, 1);
  EXPECT_EQ(eq_random(WeightSystem({1, 1}), 1, f2, 1, 99).value, 1u);

  const Field f3 = Field::create(3, 1);
  const WeightSystem w({1, 1, 2});
  const auto a = eq_random(w, 3, f3, 200, 5);
  const auto b = eq_random(w, 3, f3, 200, 5);
  EXPECT_EQ(search_json(a, f3).dump(), search_json(b, f3).dump());
  EXPECT_EQ(a.seed, 5u);
  EXPECT_FALSE(a.exhaustive);

  const auto exact = eq_exhaustive(w, 3, f3);
  EXPECT_LE(a.value, exact.value);
  EXPECT_EQ(eq_random(w, 3, f3, 20000, 1).value, exact.value);
  EXPECT_TRUE(verify_result(a, f3));
  EXPECT_THROW(eq_random(w, 3, f3, 0, 1), Error);
}

TEST(Verify, RejectsTamperedResults) {
  const Field f = Field::create(3, 1);
  auto r = eq_exhaustive(WeightSystem({1, 1, 2}), 2, f);
  EXPECT_TRUE(verify_result(r, f));
  auto bad = r;
  ++bad.value;
  EXPECT_FALSE(verify_result(bad, f));
  bad = r;
  ++bad.searched;
  EXPECT_FALSE(verify_result(bad, f));
  bad = r;
  bad.witnesses.clear();
  EXPECT_FALSE(verify_result(bad, f));
}

TEST(Cache, StoresAndRevalidates) {
  const auto path = temp_file("wpsq_cache_test.jsonl");
  const Field f = Field::create(3, 1);
  const WeightSystem w({1, 1, 2});
  const ResultCache cache(path);
  EXPECT_FALSE(cache.lookup(w, 3, SearchMode::exhaustive, std::nullopt, std::nullopt, f));

  const auto r = eq_exhaustive(w, 3, f);
  cache.store(r, f);
  const auto hit = cache.lookup(w, 3, SearchMode::exhaustive, std::nullopt, std::nullopt, f);
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->value, r.value);
  EXPECT_EQ(hit->witnesses, r.witnesses);
  EXPECT_EQ(hit->searched, r.searched);
  EXPECT_FALSE(cache.lookup(w, 2, SearchMode::exhaustive, std::nullopt, std::nullopt, f));

  const auto rnd = eq_random(w, 3, f, 50, 8);
  cache.store(rnd, f);
  EXPECT_TRUE(cache.lookup(w, 3, SearchMode::random, 8, 50, f));
  EXPECT_FALSE(cache.lookup(w, 3, SearchMode::random, 9, 50, f));
  std::filesystem::remove(path);
}

TEST(Cache, IgnoresCorruptEntries) {
  const auto path = temp_file("wpsq_cache_corrupt.jsonl");
  const Field f = Field::create(2, 1);
  const WeightSystem w({1, 1, 2});
  {
    std::ofstream out(path);
    out << "not json\n";
    json e = {{"q", 2},           {"weights", {1, 1, 2}}, {"d", 2},           {"mode", "exhaustive"},
              {"value", 6},       {"witnesses", {"X0*X1"}}, {"searched", 15}, {"version", kVersion}};
    out << e.dump() << '\n';
  }
  const ResultCache cache(path);
  EXPECT_FALSE(cache.lookup(w, 2, SearchMode::exhaustive, std::nullopt, std::nullopt, f));
  {
    std::ofstream out(path, std::ios::app);
    json e = {{"q", 2},     {"weights", {1, 1, 2}},   {"d", 2},         {"mode", "exhaustive"},
              {"value", 5}, {"witnesses", {"X0*X1"}}, {"searched", 15}, {"version", kVersion}};
    out << e.dump() << '\n';
  }
  const auto hit = cache.lookup(w, 2, SearchMode::exhaustive, std::nullopt, std::nullopt, f);
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->value, 5u);
  std::filesystem::remove(path);
}

TEST(Json, AuditReportFields) {
  const Field f = Field::create(3, 1);
  const auto r = audit_identities(parse_poly("X1 - X2", WeightSystem({1, 2, 2}), f), 1, f);
  const json j = audit_json(r, f);
  for (const char* key : {"prop", "q", "weights", "i", "poly", "verdict", "safe", "lhs", "rhs", "witnesses"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["verdict"], "fail");
  EXPECT_EQ(j["safe"], false);
  EXPECT_EQ(j["overlap"], json::array({"[0:1:1]"}));
}
