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

#include <map>
#include <numeric>
#include <set>

#include "wpsq/error.hpp"
#include "wpsq/gf.hpp"

using namespace wpsq;

namespace {

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kSmallFields = {
    {2, 1}, {3, 1}, {2, 2}, {5, 1},  {7, 1},  {2, 3},  {3, 2},  {11, 1}, {13, 1}, {2, 4},
    {17, 1}, {19, 1}, {23, 1}, {5, 2}, {3, 3}, {29, 1}, {31, 1}, {2, 5}, {37, 1}, {41, 1},
    {43, 1}, {47, 1}, {7, 2}, {53, 1}, {59, 1}, {61, 1}, {2, 6}};

// Schoolbook product of two encodings modulo the field's modulus, written
// here rather than borrowed from the library.
std::uint32_t slow_mul(const Field& f, std::uint32_t a, std::uint32_t b) {
  const std::uint32_t p = f.p(), k = f.k();
  if (k == 1) return (a * b) % p;
  std::vector<std::uint32_t> x(k), y(k), z(2 * k, 0);
  for (std::uint32_t i = 0; i < k; ++i, a /= p, b /= p) {
    x[i] = a % p;
    y[i] = b % p;
  }
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j) z[i + j] = (z[i + j] + x[i] * y[j]) % p;
  const auto& m = f.modulus();
  for (std::uint32_t deg = 2 * k - 1; deg >= k; --deg) {
    const std::uint32_t c = z[deg];
    if (c == 0) continue;
    for (std::uint32_t i = 0; i <= k; ++i) z[deg - k + i] = (z[deg - k + i] + (p - c) * m[i]) % p;
  }
  std::uint32_t out = 0;
  for (std::uint32_t i = k; i-- > 0;) out = out * p + z[i];
  return out;
}

std::uint32_t slow_add(const Field& f, std::uint32_t a, std::uint32_t b) {
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < f.k(); ++i, a /= f.p(), b /= f.p(), scale *= f.p()) {
    out += ((a % f.p() + b % f.p()) % f.p()) * scale;
  }
  return out;
}

}  // namespace

TEST(Field, SpecExamples) {
  const Field f3 = Field::create(3, 1);
  EXPECT_EQ(f3.q(), 3u);
  EXPECT_EQ(f3.to_int(f3.delta()), 2u);

  const Field f4 = Field::create(2, 2);
  EXPECT_EQ(f4.modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(f4.encoding(f4.delta()), 2u);  // the class of x

  EXPECT_EQ(Field::create(5, 1).to_int(Field::create(5, 1).delta()), 2u);
  EXPECT_EQ(Field::create(2, 1).to_int(Field::create(2, 1).delta()), 1u);
  EXPECT_EQ(Field::create(7, 1).to_int(Field::create(7, 1).delta()), 3u);
}

TEST(Field, CreateErrors) {
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::io;
  };
  EXPECT_EQ(code([] { Field::create(4, 1); }), Errc::not_prime);
  EXPECT_EQ(code([] { Field::create(3, 0); }), Errc::bad_extension_degree);
  EXPECT_EQ(code([] { Field::create(2, 17); }), Errc::field_too_large);
  EXPECT_EQ(code([] { Field::from_order("6"); }), Errc::not_prime);
  EXPECT_EQ(code([] { Field::from_order("q"); }), Errc::syntax);
}

TEST(Field, FromOrder) {
  EXPECT_EQ(Field::from_order("9").k(), 2u);
  EXPECT_EQ(Field::from_order("3^2").q(), 9u);
  EXPECT_EQ(Field::from_order("2^6").q(), 64u);
  EXPECT_EQ(Field::from_order("13").p(), 13u);
}

TEST(Field, ModulusIsSmallestIrreducible) {
  EXPECT_EQ(Field::create(3, 2).modulus_string(), "x^2 + 1");
  EXPECT_EQ(Field::create(2, 3).modulus_string(), "x^3 + x^2 + 1");
  EXPECT_EQ(Field::create(2, 4).modulus_string(), "x^4 + x^3 + 1");
  for (auto [p, k] : kSmallFields) {
    if (k == 1) continue;
    const Field f = Field::create(p, k);
    EXPECT_TRUE(detail::is_irreducible(p, f.modulus())) << f.modulus_string();
  }
}

TEST(Field, TablesAgreeWithPolynomialArithmetic) {
  for (auto [p, k] : kSmallFields) {
    const Field f = Field::create(p, k);
    for (Elem a : f.elements()) {
      for (Elem b : f.elements()) {
        ASSERT_EQ(f.encoding(f.add(a, b)), slow_add(f, f.encoding(a), f.encoding(b))) << "q=" << f.q();
        ASSERT_EQ(f.encoding(f.mul(a, b)), slow_mul(f, f.encoding(a), f.encoding(b))) << "q=" << f.q();
      }
    }
  }
}

TEST(Field, Axioms) {
  for (auto [p, k] : kSmallFields) {
    const Field f = Field::create(p, k);
    const auto all = f.elements();
    for (Elem a : all) {
      EXPECT_EQ(f.add(a, f.neg(a)), f.zero());
      if (!a.is_zero()) EXPECT_EQ(f.mul(a, f.inv(a)), f.one());
      for (Elem b : all) {
        ASSERT_EQ(f.add(a, b), f.add(b, a));
        ASSERT_EQ(f.mul(a, b), f.mul(b, a));
        for (Elem c : all) {
          ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
          ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
          ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST(Field, DeltaGeneratesAndLogInvertsExp) {
  for (auto [p, k] : kSmallFields) {
    const Field f = Field::create(p, k);
    const std::uint32_t order = f.group_order();
    EXPECT_EQ(f.pow(f.delta(), order), f.one());
    Elem x = f.one();
    std::set<Elem> seen;
    for (std::uint32_t m = 1; m < order; ++m) {
      x = f.mul(x, f.delta());
      EXPECT_NE(x, f.one()) << "q=" << f.q() << " m=" << m;
      seen.insert(x);
    }
    EXPECT_EQ(seen.size(), order - 1);
    for (Elem e : f.nonzero_elements()) EXPECT_EQ(f.delta_pow(f.log(e)), e);
    // delta has the smallest encoding among generators.
    for (Elem e : f.nonzero_elements()) {
      if (f.encoding(e) < f.encoding(f.delta())) EXPECT_NE(std::gcd(f.log(e), order), 1u) << "q=" << f.q();
    }
  }
}

TEST(Field, PowConventions) {
  const Field f = Field::create(7, 1);
  EXPECT_EQ(f.pow(f.zero(), 0), f.one());
  EXPECT_EQ(f.pow(f.zero(), 3), f.zero());
  EXPECT_EQ(f.pow(f.from_int(3), -1), f.from_int(5));
  EXPECT_THROW(f.pow(f.zero(), -1), Error);
  EXPECT_THROW(f.inv(f.zero()), Error);
  EXPECT_THROW(f.log(f.zero()), Error);
}

TEST(Field, FormatAndParse) {
  const Field f9 = Field::create(3, 2);
  for (Elem e : f9.elements()) EXPECT_EQ(f9.parse(f9.format(e)), e);
  EXPECT_EQ(f9.parse("g"), f9.delta());
  EXPECT_EQ(f9.parse("g^-1"), f9.inv(f9.delta()));
  EXPECT_EQ(f9.parse("2"), f9.neg(f9.one()));
  EXPECT_THROW(f9.parse("3"), Error);
  EXPECT_THROW(f9.parse("h"), Error);
  const Field f5 = Field::create(5, 1);
  EXPECT_EQ(f5.format(f5.from_int(4)), "4");
  EXPECT_EQ(f5.parse("g^2"), f5.from_int(4));
}

TEST(Subgroup, SpecExamples) {
  const Field f5 = Field::create(5, 1);
  auto s = subgroup_data(f5, 2);
  EXPECT_EQ(s.r, 2u);
  EXPECT_EQ(s.powers, (std::vector<Elem>{f5.from_int(1), f5.from_int(4)}));
  EXPECT_EQ(s.mu, (std::vector<Elem>{f5.from_int(1), f5.from_int(4)}));

  const Field f7 = Field::create(7, 1);
  s = subgroup_data(f7, 3);
  EXPECT_EQ(s.r, 3u);
  std::set<std::uint32_t> powers, mu;
  for (Elem e : s.powers) powers.insert(*f7.to_int(e));
  for (Elem e : s.mu) mu.insert(*f7.to_int(e));
  EXPECT_EQ(powers, (std::set<std::uint32_t>{1, 6}));
  EXPECT_EQ(mu, (std::set<std::uint32_t>{1, 2, 4}));

  const Field f4 = Field::create(2, 2);
  s = subgroup_data(f4, 5);
  EXPECT_EQ(s.r, 1u);
  EXPECT_EQ(s.powers.size(), 3u);
  EXPECT_EQ(s.mu, std::vector<Elem>{f4.one()});

  EXPECT_THROW(subgroup_data(f4, 0), Error);
}

TEST(Subgroup, PowerMapFibersHaveSizeR) {
  for (auto [p, k] : kSmallFields) {
    const Field f = Field::create(p, k);
    for (std::int64_t a = 1; a <= 12; ++a) {
      const auto s = subgroup_data(f, a);
      EXPECT_EQ(s.r, std::gcd<std::uint32_t>(static_cast<std::uint32_t>(a), f.group_order()));
      EXPECT_EQ(s.mu.size(), s.r);
      EXPECT_EQ(s.mu.size() * s.powers.size(), f.group_order());
      std::map<Elem, std::uint32_t> fiber;
      for (Elem z : f.nonzero_elements()) ++fiber[f.pow(z, a)];
      for (const auto& [y, n] : fiber) {
        EXPECT_EQ(n, s.r);
        EXPECT_TRUE(s.contains_power(y));
        // Delta^a is generated by delta^r.
        EXPECT_EQ(f.log(y) % s.r, 0u);
      }
    }
  }
}
