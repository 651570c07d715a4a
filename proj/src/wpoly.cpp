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

#include "wpsq/wpoly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <random>
#include <set>

#include "wpsq/error.hpp"

namespace wpsq {

std::int64_t weighted_degree(const Monomial& m, const WeightSystem& w) {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * w[i];
  return d;
}

WeightedPolynomial::WeightedPolynomial(WeightSystem w, std::int64_t degree) : w_(std::move(w)), degree_(degree) {}

WeightedPolynomial WeightedPolynomial::from_terms(WeightSystem w, std::int64_t degree, const TermMap& terms) {
  WeightedPolynomial f(std::move(w), degree);
  for (const auto& [m, c] : terms) {
    if (m.size() != f.w_.size()) throw Error(Errc::precondition, "monomial has the wrong number of variables");
    if (weighted_degree(m, f.w_) != degree) {
      throw Error(Errc::not_homogeneous, "monomial of weighted degree " + std::to_string(weighted_degree(m, f.w_)) +
                                             " in a polynomial of degree " + std::to_string(degree));
    }
    if (!c.is_zero()) f.terms_.emplace(m, c);
  }
  return f;
}

WeightedPolynomial WeightedPolynomial::from_dense(WeightSystem w, std::int64_t degree, std::span<const Monomial> basis,
                                                  std::span<const Elem> coeffs) {
  if (basis.size() != coeffs.size()) throw Error(Errc::precondition, "basis and coefficient sizes differ");
  WeightedPolynomial f(std::move(w), degree);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!coeffs[k].is_zero()) f.terms_.emplace_hint(f.terms_.end(), basis[k], coeffs[k]);
  }
  return f;
}

void WeightedPolynomial::add_term(const Monomial& m, Elem c, const Field& field) {
  if (m.size() != w_.size()) throw Error(Errc::precondition, "monomial has the wrong number of variables");
  if (weighted_degree(m, w_) != degree_) {
    throw Error(Errc::not_homogeneous, "monomial of weighted degree " + std::to_string(weighted_degree(m, w_)) +
                                           " in a polynomial of degree " + std::to_string(degree_));
  }
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second = field.add(it->second, c);
  if (it->second.is_zero()) terms_.erase(it);
}

namespace {

void basis_rec(const WeightSystem& w, std::size_t i, std::int64_t rest, Monomial& cur, std::vector<Monomial>& out) {
  if (i + 1 == w.size()) {
    if (rest % w[i] == 0) {
      cur[i] = rest / w[i];
      out.push_back(cur);
    }
    return;
  }
  for (std::int64_t e = rest / w[i]; e >= 0; --e) {
    cur[i] = e;
    basis_rec(w, i + 1, rest - e * w[i], cur, out);
  }
  cur[i] = 0;
}

}  // namespace

std::vector<Monomial> monomial_basis(const WeightSystem& w, std::int64_t d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur(w.size(), 0);
  basis_rec(w, 0, d, cur, out);
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const WeightSystem& w, const Field& field) : text_(text), w_(w), field_(field) {}

  WeightedPolynomial run() {
    struct Parsed {
      Monomial m;
      Elem c;
    };
    std::vector<Parsed> terms;
    skip_ws();
    if (at_end()) throw Error(Errc::syntax, "empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      bool negate = false;
      if (!first && at_end()) break;
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        negate = peek() == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [m, c] = term();
      if (negate) c = field_.neg(c);
      terms.push_back({std::move(m), c});
    }

    std::optional<std::int64_t> degree;
    for (const auto& t : terms) {
      const std::int64_t d = weighted_degree(t.m, w_);
      if (degree && *degree != d) {
        throw Error(Errc::not_homogeneous, "terms of weighted degrees " + std::to_string(*degree) + " and " +
                                               std::to_string(d) + " are mixed");
      }
      degree = d;
    }
    WeightedPolynomial f(w_, *degree);
    for (const auto& t : terms) f.add_term(t.m, t.c, field_);
    return f;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::syntax, what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::int64_t number() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc()) fail("number out of range");
    return v;
  }

  std::pair<Monomial, Elem> term() {
    Monomial m(w_.size(), 0);
    Elem c = field_.one();
    bool any = false;
    while (true) {
      skip_ws();
      if (at_end()) fail("expected a factor");
      const char ch = peek();
      if (ch == 'X' || ch == 'x') {
        ++pos_;
        const std::int64_t index = number();
        if (index < 0 || static_cast<std::size_t>(index) >= w_.size()) {
          throw Error(Errc::index_out_of_range, "variable X" + std::to_string(index) + " does not exist for weights " +
                                                    w_.to_string());
        }
        skip_ws();
        std::int64_t e = 1;
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          e = number();
        }
        m[static_cast<std::size_t>(index)] += e;
      } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == 'g') {
        const std::size_t start = pos_;
        if (ch == 'g') {
          ++pos_;
          if (!at_end() && peek() == '^') {
            ++pos_;
            if (!at_end() && peek() == '-') ++pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
          }
        } else {
          while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        }
        c = field_.mul(c, field_.parse(text_.substr(start, pos_ - start)));
      } else {
        fail(std::string("unexpected '") + ch + "'");
      }
      any = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    return {std::move(m), c};
  }

  std::string_view text_;
  const WeightSystem& w_;
  const Field& field_;
  std::size_t pos_ = 0;
};

}  // namespace

WeightedPolynomial parse_poly(std::string_view text, const WeightSystem& w, const Field& field) {
  return PolyParser(text, w, field).run();
}

std::string format_poly(const WeightedPolynomial& f, const Field& field) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    const bool constant = std::all_of(m.begin(), m.end(), [](std::int64_t e) { return e == 0; });
    std::string factors;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += "X" + std::to_string(i);
      if (m[i] != 1) factors += "^" + std::to_string(m[i]);
    }
    if (constant) {
      out += field.format(c);
    } else if (c == field.one()) {
      out += factors;
    } else {
      out += field.format(c) + "*" + factors;
    }
  }
  return out;
}

Elem evaluate_terms(const TermMap& terms, std::span<const Elem> v, const Field& field) {
  Elem sum = field.zero();
  for (const auto& [m, c] : terms) {
    Elem t = c;
    for (std::size_t i = 0; i < m.size() && !t.is_zero(); ++i) {
      if (m[i] != 0) t = field.mul(t, field.pow(v[i], m[i]));
    }
    sum = field.add(sum, t);
  }
  return sum;
}

Elem evaluate(const WeightedPolynomial& f, std::span<const Elem> v, const Field& field) {
  if (v.size() != f.weights().size()) throw Error(Errc::precondition, "coordinate count does not match the weights");
  return evaluate_terms(f.terms(), v, field);
}

HomogeneityReport is_homogeneous(const TermMap& terms, const WeightSystem& w, const Field& field) {
  HomogeneityReport report;
  std::set<std::int64_t> degrees;
  for (const auto& [m, c] : terms) degrees.insert(weighted_degree(m, w));
  report.degrees.assign(degrees.begin(), degrees.end());
  report.homogeneous = degrees.size() <= 1;
  if (degrees.size() == 1) report.degree = *degrees.begin();
  if (!report.homogeneous || !report.degree) return report;

  // Deterministic sample: every vector for small spaces, else a fixed-seed draw.
  const std::uint32_t q = field.q();
  std::uint64_t total = 1;
  bool small = true;
  for (std::size_t i = 0; i < w.size() && small; ++i) {
    total *= q;
    if (total > 4096) small = false;
  }
  std::vector<Coords> sample;
  Coords v(w.size());
  if (small) {
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      decode_coords(idx, q, v);
      sample.push_back(v);
    }
  } else {
    std::mt19937_64 rng(0x5eedULL);
    for (int s = 0; s < 512; ++s) {
      for (auto& x : v) x = Elem{static_cast<std::uint32_t>(rng() % q)};
      sample.push_back(v);
    }
  }
  const std::int64_t d = *report.degree;
  Coords scaled(w.size());
  for (Elem lambda : field.nonzero_elements()) {
    const Elem lambda_d = field.pow(lambda, d);
    for (const auto& x : sample) {
      for (std::size_t i = 0; i < w.size(); ++i) scaled[i] = field.mul(field.pow(lambda, w[i]), x[i]);
      ++report.numeric_checks;
      const Elem lhs = evaluate_terms(terms, scaled, field);
      const Elem rhs = field.mul(lambda_d, evaluate_terms(terms, x, field));
      if (lhs != rhs) {
        ++report.numeric_mismatches;
        if (!report.mismatch_witness) report.mismatch_witness = x;
      }
    }
  }
  return report;
}

WeightedPolynomial pullback(const WeightedPolynomial& f, std::size_t i) {
  const WeightSystem& w = f.weights();
  if (i >= w.size()) throw Error(Errc::index_out_of_range, "index " + std::to_string(i) + " out of range");
  TermMap terms;
  for (const auto& [m, c] : f.terms()) {
    Monomial m2 = m;
    m2[i] *= w[i];
    terms.emplace(std::move(m2), c);
  }
  return WeightedPolynomial::from_terms(w.with_weight(i, 1), f.degree(), terms);
}

WeightedPolynomial twist(const WeightedPolynomial& f, std::size_t i, std::int64_t j, const Field& field) {
  if (i >= f.weights().size()) throw Error(Errc::index_out_of_range, "index " + std::to_string(i) + " out of range");
  TermMap terms;
  for (const auto& [m, c] : f.terms()) terms.emplace(m, field.mul(c, field.delta_pow(j * m[i])));
  return WeightedPolynomial::from_terms(f.weights(), f.degree(), terms);
}

WeightedPolynomial scale(const WeightedPolynomial& f, Elem c, const Field& field) {
  TermMap terms;
  for (const auto& [m, a] : f.terms()) terms.emplace(m, field.mul(a, c));
  return WeightedPolynomial::from_terms(f.weights(), f.degree(), terms);
}

WeightedPolynomial add(const WeightedPolynomial& f, const WeightedPolynomial& g, const Field& field) {
  if (f.weights() != g.weights() || f.degree() != g.degree()) {
    throw Error(Errc::not_homogeneous, "cannot add polynomials of different degrees or weights");
  }
  WeightedPolynomial out = f;
  for (const auto& [m, c] : g.terms()) out.add_term(m, c, field);
  return out;
}

WeightedPolynomial multiply(const WeightedPolynomial& f, const WeightedPolynomial& g, const Field& field) {
  if (f.weights() != g.weights()) throw Error(Errc::precondition, "cannot multiply across weight systems");
  WeightedPolynomial out(f.weights(), f.degree() + g.degree());
  for (const auto& [m1, c1] : f.terms()) {
    for (const auto& [m2, c2] : g.terms()) {
      Monomial m(m1.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = m1[i] + m2[i];
      out.add_term(m, field.mul(c1, c2), field);
    }
  }
  return out;
}

namespace {

P1Pair normalize_pair(P1Pair pair, const Field& field) {
  const Elem lead = pair.first.is_zero() ? pair.second : pair.first;
  const Elem inv = field.inv(lead);
  return {field.mul(pair.first, inv), field.mul(pair.second, inv)};
}

}  // namespace

WeightedPolynomial product_of_forms(std::span<const P1Pair> pairs, std::size_t r, std::size_t s,
                                    const WeightSystem& w, std::int64_t d, const Field& field) {
  if (r >= w.size() || s >= w.size()) throw Error(Errc::index_out_of_range, "index out of range");
  if (r == s) throw Error(Errc::precondition, "the two indices must differ");
  const std::int64_t ars = std::lcm(w[r], w[s]);
  if (d < 0 || d % ars != 0) {
    throw Error(Errc::precondition, "lcm(a_r, a_s) = " + std::to_string(ars) + " does not divide d = " +
                                        std::to_string(d));
  }
  const std::int64_t factors = d / ars;
  if (factors > static_cast<std::int64_t>(field.q()) + 1) {
    throw Error(Errc::precondition, "d / lcm(a_r, a_s) = " + std::to_string(factors) + " exceeds q + 1");
  }
  if (static_cast<std::int64_t>(pairs.size()) != factors) {
    throw Error(Errc::precondition, "expected " + std::to_string(factors) + " pairs, got " +
                                        std::to_string(pairs.size()));
  }
  std::set<P1Pair> seen;
  for (const auto& pair : pairs) {
    if (pair.first.is_zero() && pair.second.is_zero()) {
      throw Error(Errc::precondition, "(0:0) is not a point of P^1");
    }
    if (!seen.insert(normalize_pair(pair, field)).second) {
      throw Error(Errc::precondition, "pairs must be distinct points of P^1");
    }
  }

  Monomial one(w.size(), 0);
  WeightedPolynomial out(w, 0);
  out.add_term(one, field.one(), field);
  Monomial xr(w.size(), 0), xs(w.size(), 0);
  xr[r] = ars / w[r];
  xs[s] = ars / w[s];
  for (const auto& [alpha, beta] : pairs) {
    WeightedPolynomial factor(w, ars);
    factor.add_term(xr, alpha, field);
    factor.add_term(xs, field.neg(beta), field);
    out = multiply(out, factor, field);
  }
  return out;
}

std::vector<P1Pair> p1_pairs(std::size_t count, const Field& field) {
  if (count > field.q() + 1) throw Error(Errc::precondition, "P^1 has only q + 1 points");
  std::vector<P1Pair> out;
  for (const auto& p : enumerate_points(WeightSystem({1, 1}), field)) {
    if (out.size() == count) break;
    out.emplace_back(p.coords[0], p.coords[1]);
  }
  return out;
}

WeightedPolynomial saturating_poly(std::int64_t d, const WeightSystem& w, const Field& field) {
  if (w[0] != 1 || w[1] != 1) throw Error(Errc::precondition, "the first two weights must both be 1");
  const std::int64_t q = field.q();
  if (d < q + 1) throw Error(Errc::precondition, "the saturating polynomial needs d >= q + 1");
  WeightedPolynomial f(w, d);
  Monomial m1(w.size(), 0), m2(w.size(), 0);
  m1[0] = d - 1;
  m1[1] = 1;
  m2[0] = d - q;
  m2[1] = q;
  f.add_term(m1, field.one(), field);
  f.add_term(m2, field.neg(field.one()), field);
  return f;
}

}  // namespace wpsq
