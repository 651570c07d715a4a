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

#include <random>

#include "../oracle.hpp"
#include "wpsq/counting.hpp"
#include "wpsq/error.hpp"
#include "wpsq/search.hpp"

using namespace wpsq;

namespace {

CanonicalPoint point(const char* text, const WeightSystem& w, const Field& f) {
  return canonicalize(parse_point(text, f), w, f);
}

const Check* find_check(const AuditReport& r, std::string_view prefix) {
  for (const auto& c : r.checks) {
    if (c.name.rfind(prefix, 0) == 0) return &c;
  }
  return nullptr;
}

}  // namespace

TEST(CountZeros, SpecExamples) {
  const Field f3 = Field::create(3, 1), f2 = Field::create(2, 1);
  EXPECT_EQ(count_zeros(parse_poly("X0", WeightSystem({1, 1, 2}), f3), f3), 4u);
  EXPECT_EQ(count_zeros(saturating_poly(3, WeightSystem({1, 1}), f2), f2), 3u);
  EXPECT_EQ(count_zeros(parse_poly("X0*X1", WeightSystem({1, 1, 1}), f2), f2), 5u);
  EXPECT_THROW(count_zeros(WeightedPolynomial(WeightSystem({1, 1}), 1), f2), Error);
}

TEST(CountZeros, MatchesVectorCountOracle) {
  std::mt19937_64 rng(7);
  for (const char* q : {"2", "3", "4", "5", "7", "9"}) {
    const Field f = Field::from_order(q);
    for (const auto& ws : std::vector<std::vector<std::int64_t>>{{1, 2}, {2, 3}, {1, 1, 2}, {1, 2, 3}, {2, 2, 3}}) {
      const WeightSystem w(ws);
      for (std::int64_t d = 1; d <= 8; ++d) {
        if (monomial_basis(w, d).empty()) continue;
        for (int k = 0; k < 4; ++k) {
          const auto poly = random_polynomial(w, d, f, rng);
          ASSERT_EQ(count_zeros(poly, f), oracle::zero_count(poly, f)) << format_poly(poly, f) << " q=" << q;
        }
      }
    }
  }
}

TEST(CountZeros, ScalarAndStraightTwistInvariance) {
  std::mt19937_64 rng(11);
  const Field f = Field::create(2, 3);
  const WeightSystem straight({1, 1, 1});
  for (int k = 0; k < 20; ++k) {
    const auto poly = random_polynomial(straight, 1 + k % 4, f, rng);
    const auto n = count_zeros(poly, f);
    for (Elem c : f.nonzero_elements()) EXPECT_EQ(count_zeros(scale(poly, c, f), f), n);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::int64_t j = 0; j < 7; ++j) EXPECT_EQ(count_zeros(twist(poly, i, j, f), f), n);
    }
  }
}

TEST(Partition, SpecExamples) {
  const Field f3 = Field::create(3, 1);
  const WeightSystem w12({1, 2});
  auto pc = partition_counts(nullptr, w12, 1, PartitionMode::disjoint, f3);
  EXPECT_EQ(pc.R, 2u);
  EXPECT_EQ(pc.T, 1u);
  EXPECT_EQ(pc.I, 1u);

  for (const char* q : {"2", "3", "4", "5"}) {
    const Field f = Field::from_order(q);
    EXPECT_EQ(partition_counts(nullptr, WeightSystem({1, 1}), 0, PartitionMode::disjoint, f).I, 0u);
  }

  pc = partition_counts(parse_poly("X0", w12, f3), 1, PartitionMode::disjoint, f3);
  EXPECT_EQ(pc.R, 1u);
  EXPECT_EQ(pc.T, 0u);
  EXPECT_EQ(pc.I, 0u);
}

TEST(Partition, DisjointSumsAndLiteralOverlap) {
  for (const char* q : {"3", "4", "5", "7"}) {
    const Field f = Field::from_order(q);
    for (const auto& ws : std::vector<std::vector<std::int64_t>>{{1, 2}, {1, 2, 2}, {2, 3, 4}, {1, 3}}) {
      const WeightSystem w(ws);
      for (std::size_t i = 0; i < w.size(); ++i) {
        const auto dj = partition_counts(nullptr, w, i, PartitionMode::disjoint, f);
        const auto lit = partition_counts(nullptr, w, i, PartitionMode::literal, f);
        EXPECT_EQ(dj.R + dj.T + dj.I, dj.examined);
        EXPECT_GE(lit.R + lit.T + lit.I, lit.examined);
        EXPECT_EQ(lit.overlap.empty(), lit.R + lit.T + lit.I == lit.examined);
      }
    }
  }
}

TEST(Preimage, SpecExamples) {
  const Field f5 = Field::create(5, 1), f3 = Field::create(3, 1);
  const WeightSystem w({1, 2});
  const auto r = preimage_count(point("[1:1]", w, f5), 1, w, f5);
  EXPECT_EQ(r.count, 2u);
  EXPECT_EQ(r.preimages, (std::vector<Coords>{parse_point("[1:1]", f5), parse_point("[1:4]", f5)}));
  EXPECT_EQ(preimage_count(point("[1:0]", w, f5), 1, w, f5).count, 1u);
  EXPECT_EQ(preimage_count(point("[1:2]", w, f3), 1, w, f3).count, 0u);
}

TEST(Preimage, FibersCoverTheUpstairsSpace) {
  const Field f = Field::create(7, 1);
  const WeightSystem w({2, 3, 6});
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::uint64_t total = 0;
    for (const auto& [p, n] : fiber_sizes(w, i, f)) total += n;
    EXPECT_EQ(total, pn(2, 7));
  }
}

TEST(Safety, Flags) {
  const Field f3 = Field::create(3, 1);
  EXPECT_FALSE(is_safe(WeightSystem({1, 2, 2}), 1, f3));
  EXPECT_TRUE(is_safe(WeightSystem({1, 2, 2}), 0, f3));
  EXPECT_TRUE(is_safe(WeightSystem({1, 2, 3}), 1, f3));
  EXPECT_TRUE(is_safe(WeightSystem({1, 1, 2}), 2, f3));
}

TEST(Bounds, SpecExamples) {
  const Field f3 = Field::create(3, 1), f2 = Field::create(2, 1), f5 = Field::create(5, 1);
  auto b = bounds(2, WeightSystem({1, 1, 2}), f3);
  EXPECT_EQ(b.pn, 13u);
  EXPECT_EQ(b.serre, 7u);
  EXPECT_EQ(b.conjecture, 7u);
  EXPECT_EQ(b.lower, 7u);
  b = bounds(3, WeightSystem({1, 1}), f2);
  EXPECT_EQ(b.serre, 3u);
  EXPECT_EQ(b.serre, b.pn);
  b = bounds(1, WeightSystem({2, 3}), f5);
  EXPECT_FALSE(b.conjecture.has_value());
  EXPECT_EQ(b.serre, 1u);
}

TEST(Bounds, LowerNeverExceedsConjecture) {
  const Field f = Field::create(5, 1);
  for (const auto& ws : std::vector<std::vector<std::int64_t>>{{1, 2, 3}, {1, 2, 4}, {1, 3, 3, 6}, {1, 1, 2}}) {
    const WeightSystem w(ws);
    for (std::int64_t d = 1; d <= 36; ++d) {
      const auto b = bounds(d, w, f);
      if (b.lower && b.conjecture) EXPECT_LE(*b.lower, *b.conjecture);
    }
  }
}

TEST(AuditLesZi, SpecExamples) {
  const Field f3 = Field::create(3, 1), f4 = Field::create(2, 2);
  EXPECT_EQ(audit_lesZi(WeightSystem({1, 1, 2}), f3, 2).verdict, Verdict::pass);
  const auto r1 = audit_lesZi(WeightSystem({1, 1}), f4, 1);
  EXPECT_EQ(r1.verdict, Verdict::pass);
  EXPECT_EQ(r1.notes.front(), "r_i = 1: I_i is empty");
  const WeightSystem w({1, 2});
  const auto r2 = audit_lesZi(w, f3, 1);
  EXPECT_EQ(r2.verdict, Verdict::pass);
  EXPECT_EQ(r2.overlap, std::vector<Coords>{distinguished_point(1, w, f3).coords});
}

TEST(AuditIdentities, SpecExamples) {
  const Field f3 = Field::create(3, 1);
  auto r = audit_identities(parse_poly("X0*X1", WeightSystem({1, 1}), f3), 1, f3);
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_EQ(r.lhs, 2);
  EXPECT_EQ(r.rhs, 2);

  r = audit_identities(parse_poly("X0", WeightSystem({1, 2}), f3), 1, f3);
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_EQ(r.lhs, 1);

  r = audit_identities(parse_poly("X1 - X2", WeightSystem({1, 2, 2}), f3), 1, f3);
  EXPECT_FALSE(r.safe);
  EXPECT_EQ(r.verdict, Verdict::fail);
  EXPECT_FALSE(r.violation());
  const Check* c = find_check(r, "N(pullback)");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->lhs, 4);
  EXPECT_EQ(c->rhs, 5);
  EXPECT_FALSE(r.witnesses.empty());
}

TEST(AuditMondo, SpecExamples) {
  const Field f3 = Field::create(3, 1);
  auto r = audit_mondo(parse_poly("X0", WeightSystem({1, 2}), f3), 1, f3);
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_EQ(r.lhs, 2);
  EXPECT_EQ(r.rhs, 2);
  EXPECT_TRUE(r.equality.value());
  EXPECT_TRUE(r.coprime_condition.value());

  // r_i = 1 gives N(F) = N(pullback).
  const Field f4 = Field::create(2, 2);
  std::mt19937_64 rng(3);
  const WeightSystem w({1, 2, 3});
  for (int k = 0; k < 30; ++k) {
    const auto poly = random_polynomial(w, 6, f4, rng);
    for (std::size_t i = 0; i < 3; ++i) {
      const auto m = audit_mondo(poly, i, f4);
      EXPECT_EQ(m.verdict, Verdict::pass);
      if (w.r(i, f4) == 1) EXPECT_EQ(m.lhs, static_cast<std::int64_t>(count_zeros(pullback(poly, i), f4)));
    }
  }
}

TEST(Unscrew, Examples) {
  const Field f3 = Field::create(3, 1), f5 = Field::create(5, 1);
  const auto straight = parse_poly("X0*X1 + X2^2", WeightSystem({1, 1, 1}), f3);
  auto u = unscrew(straight, f3);
  ASSERT_EQ(u.leaves.size(), 1u);
  EXPECT_EQ(u.leaves.front(), straight);

  u = unscrew(parse_poly("X0", WeightSystem({1, 2}), f3), f3);
  ASSERT_EQ(u.leaves.size(), 2u);
  for (const auto& g : u.leaves) EXPECT_EQ(g, parse_poly("X0", WeightSystem({1, 1}), f3));
  EXPECT_EQ(u.report.lhs, 2);
  EXPECT_EQ(u.report.rhs, 2);

  // r_0 = gcd(2, 4) = 2 and r_1 = gcd(3, 4) = 1.
  u = unscrew(parse_poly("X0^3 - X1^2", WeightSystem({2, 3}), f5), f5);
  EXPECT_EQ(u.r, (std::vector<std::uint32_t>{2, 1}));
  EXPECT_EQ(u.leaves.size(), 2u);
  EXPECT_EQ(u.report.verdict, Verdict::pass);
  for (const auto& g : u.leaves) {
    EXPECT_TRUE(g.weights().is_straight());
    EXPECT_EQ(g.degree(), 6);
  }
}

TEST(Unscrew, BudgetAndZero) {
  const Field f = Field::create(13, 1);
  const WeightSystem w({12, 12, 12, 12});
  EXPECT_THROW(unscrew(parse_poly("X0", w, f), f, 1000), Error);
  EXPECT_THROW(unscrew(WeightedPolynomial(WeightSystem({1, 1}), 1), f), Error);
}
