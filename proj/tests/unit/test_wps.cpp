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

#include <set>

#include "../oracle.hpp"
#include "wpsq/error.hpp"
#include "wpsq/wps.hpp"

using namespace wpsq;

namespace {

Coords ints(const Field& f, std::initializer_list<int> v) {
  Coords out;
  for (int x : v) out.push_back(f.from_int(x));
  return out;
}

}  // namespace

TEST(Pn, Values) {
  EXPECT_EQ(pn(2, 3), 13u);
  EXPECT_EQ(pn(-1, 7), 0u);
  EXPECT_EQ(pn(0, 5), 1u);
  EXPECT_EQ(pn(3, 2), 15u);
}

TEST(WeightSystem, ParseAndValidate) {
  const auto w = WeightSystem::parse("1, 1,2");
  EXPECT_EQ(w.weights(), (std::vector<std::int64_t>{1, 1, 2}));
  EXPECT_EQ(w.dimension(), 2);
  EXPECT_EQ(w.to_string(), "(1,1,2)");
  EXPECT_THROW(WeightSystem({1}), Error);
  EXPECT_THROW(WeightSystem({1, 0}), Error);
  EXPECT_THROW(WeightSystem::parse("1,,2"), Error);
  const Field f7 = Field::create(7, 1);
  EXPECT_EQ(WeightSystem({4, 3}).r(0, f7), 2u);
  EXPECT_EQ(WeightSystem({4, 3}).r(1, f7), 3u);
}

TEST(Stratum, BezoutIdentity) {
  const WeightSystem w({4, 6, 9, 10});
  for (std::uint32_t mask = 1; mask < 16; ++mask) {
    const Stratum s = stratum_for_mask(mask, w);
    std::int64_t sum = 0;
    for (std::size_t k = 0; k < s.support.size(); ++k) {
      EXPECT_EQ(s.reduced[k] * s.gcd, w[s.support[k]]);
      sum += s.bezout[k] * s.reduced[k];
    }
    EXPECT_EQ(sum, 1) << "mask " << mask;
    EXPECT_EQ(s.mask(), mask);
  }
}

TEST(Canonicalize, SpecExamples) {
  const Field f3 = Field::create(3, 1);
  EXPECT_EQ(canonicalize(ints(f3, {0, 2}), WeightSystem({1, 2}), f3).coords, ints(f3, {0, 1}));
  EXPECT_EQ(canonicalize(ints(f3, {1, 1}), WeightSystem({1, 2}), f3).coords, ints(f3, {1, 1}));
  EXPECT_EQ(canonicalize(ints(f3, {2, 1, 0}), WeightSystem({1, 1, 2}), f3).coords, ints(f3, {1, 2, 0}));
  EXPECT_THROW(canonicalize(ints(f3, {0, 0}), WeightSystem({1, 2}), f3), Error);
}

TEST(Enumerate, SpecExamples) {
  const Field f3 = Field::create(3, 1);
  const auto pts = enumerate_points(WeightSystem({1, 2}), f3);
  std::vector<Coords> coords;
  for (const auto& p : pts) coords.push_back(p.coords);
  EXPECT_EQ(coords, (std::vector<Coords>{ints(f3, {0, 1}), ints(f3, {1, 0}), ints(f3, {1, 1}), ints(f3, {1, 2})}));

  const Field f2 = Field::create(2, 1);
  EXPECT_EQ(enumerate_points(WeightSystem({1, 1}), f2).size(), 3u);
  EXPECT_EQ(enumerate_points(WeightSystem({1, 1, 2}), f2).size(), 7u);
  EXPECT_THROW(enumerate_points(WeightSystem({1, 1, 1, 1}), f3, 50), Error);
}

TEST(Representatives, SpecExamples) {
  const Field f3 = Field::create(3, 1);
  const WeightSystem w12({1, 2});
  EXPECT_EQ(representatives(canonicalize(ints(f3, {0, 1}), w12, f3), w12, f3),
            (std::vector<Coords>{ints(f3, {0, 1}), ints(f3, {0, 2})}));
  const WeightSystem w11({1, 1});
  EXPECT_EQ(representatives(canonicalize(ints(f3, {1, 1}), w11, f3), w11, f3),
            (std::vector<Coords>{ints(f3, {1, 1}), ints(f3, {2, 2})}));
  const Field f4 = Field::create(2, 2);
  const WeightSystem w112({1, 1, 2});
  const auto reps = representatives(distinguished_point(2, w112, f4), w112, f4);
  ASSERT_EQ(reps.size(), 3u);
  for (const auto& r : reps) {
    EXPECT_TRUE(r[0].is_zero() && r[1].is_zero() && !r[2].is_zero());
  }
}

// The canonical classes coincide with the equivalence classes of the
// pairwise-relation oracle, each of size q - 1, p_n of them.
TEST(Enumerate, MatchesOracleClasses) {
  const std::vector<std::vector<std::int64_t>> systems{{1, 2}, {2, 3}, {2, 4}, {3, 3}, {1, 1, 2}, {2, 2, 3},
                                                       {2, 3, 4}, {1, 2, 2, 4}};
  for (const char* q : {"2", "3", "4", "5", "7", "8", "9"}) {
    const Field f = Field::from_order(q);
    for (const auto& ws : systems) {
      const WeightSystem w(ws);
      if (f.q() > 5 && w.size() > 3) continue;
      const auto classes = oracle::classes(w, f);
      const auto points = enumerate_points(w, f);
      ASSERT_EQ(classes.size(), oracle::pn(w.dimension(), f.q())) << w.to_string() << " q=" << q;
      ASSERT_EQ(points.size(), classes.size());
      std::set<Coords> seen;
      for (const auto& c : classes) {
        EXPECT_EQ(c.size(), f.group_order());
        const Coords canon = canonicalize(c.front(), w, f).coords;
        for (const auto& v : c) EXPECT_EQ(canonicalize(v, w, f).coords, canon);
        EXPECT_TRUE(seen.insert(canon).second);
        auto reps = representatives(canonicalize(canon, w, f), w, f);
        auto members = c;
        std::sort(members.begin(), members.end());
        EXPECT_EQ(reps, members);
      }
    }
  }
}

TEST(Canonicalize, InvariantsOnEveryVector) {
  for (const char* q : {"3", "4", "5", "9"}) {
    const Field f = Field::from_order(q);
    for (const auto& ws : std::vector<std::vector<std::int64_t>>{{2, 3, 6}, {1, 4, 6}, {3, 5, 2}}) {
      const WeightSystem w(ws);
      for (const auto& v : oracle::nonzero_vectors(w.size(), f)) {
        const CanonicalPoint p = canonicalize(v, w, f);
        EXPECT_EQ(canonicalize(p.coords, w, f).coords, p.coords);
        EXPECT_TRUE(oracle::equivalent(v, p.coords, w, f));
        // prod x_i^{u_i} = 1 on the support.
        Elem prod = f.one();
        for (std::size_t k = 0; k < p.stratum.support.size(); ++k) {
          const std::size_t i = p.stratum.support[k];
          EXPECT_FALSE(v[i].is_zero());
          prod = f.mul(prod, f.pow(p.coords[i], p.stratum.bezout[k]));
        }
        EXPECT_EQ(prod, f.one());
        for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(v[i].is_zero(), p.coords[i].is_zero());
      }
    }
  }
}

TEST(Canonicalize, StraightWeightsScaleToLeadingOne) {
  const Field f = Field::create(5, 1);
  const WeightSystem w({1, 1, 1});
  for (const auto& v : oracle::nonzero_vectors(3, f)) {
    std::size_t lead = 0;
    while (v[lead].is_zero()) ++lead;
    Coords expect = v;
    const Elem inv = f.inv(v[lead]);
    for (auto& x : expect) x = f.mul(x, inv);
    EXPECT_EQ(canonicalize(v, w, f).coords, expect);
  }
}

TEST(Points, FormatParseEncode) {
  const Field f9 = Field::create(3, 2);
  const WeightSystem w({1, 2, 3});
  for (const auto& p : enumerate_points(w, f9)) {
    EXPECT_EQ(parse_point(format_point(p.coords, f9), f9), p.coords);
    Coords back(p.coords.size());
    decode_coords(encode_coords(p.coords, f9.q()), f9.q(), back);
    EXPECT_EQ(back, p.coords);
  }
  EXPECT_THROW(parse_point("0:1", f9), Error);
}

TEST(Points, EnumerationIsSorted) {
  const Field f = Field::create(2, 3);
  const auto pts = enumerate_points(WeightSystem({1, 3, 3}), f);
  EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
  EXPECT_EQ(pts.size(), pn(2, 8));
}
