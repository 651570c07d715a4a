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

#include "wpsq/reproduce.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "wpsq/counting.hpp"
#include "wpsq/error.hpp"
#include "wpsq/search.hpp"
#include "wpsq/wps.hpp"

namespace wpsq {

bool SuiteResult::all_match() const {
  return std::all_of(rows.begin(), rows.end(), [](const SuiteRow& r) { return r.observation || r.match; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"serre-p2", "two-weights", "main-theorem",
                                              "mondo",    "partitions",  "theorem41"};
  return names;
}

namespace {

std::string str(std::uint64_t v) { return std::to_string(v); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string ratio(std::uint64_t k, std::uint64_t n) { return str(k) + "/" + str(n); }

SearchOptions with_threads(unsigned threads) {
  SearchOptions o;
  o.threads = threads;
  return o;
}

Elem dot(std::span<const Elem> c, std::span<const Elem> x, const Field& field) {
  Elem s = field.zero();
  for (std::size_t k = 0; k < c.size(); ++k) s = field.add(s, field.mul(c[k], x[k]));
  return s;
}

SuiteResult serre_p2(unsigned threads) {
  SuiteResult s{"serre-p2", {"q", "n", "d", "e_q", "expected", "pencil witnesses"}, {}, {}};
  for (std::uint32_t q : {2u, 3u}) {
    const Field field = Field::create(q, 1);
    for (int n : {1, 2}) {
      const WeightSystem w(std::vector<std::int64_t>(n + 1, 1));
      const std::int64_t top = n == 1 ? q + 2 : q + 1;
      for (std::int64_t d = 1; d <= top; ++d) {
        const SearchResult r = eq_exhaustive(w, d, field, with_threads(threads));
        const std::uint64_t p = pn(n, q);
        const std::uint64_t qn1 = n == 1 ? 1 : q;
        const std::uint64_t serre = d * qn1 + pn(n - 2, q);
        const std::uint64_t want = d <= static_cast<std::int64_t>(q) ? serre : p;
        std::string pencil = "-";
        if (d <= static_cast<std::int64_t>(q)) {
          std::uint64_t good = 0;
          for (std::size_t k = 0; k < r.witnesses.size(); ++k) good += is_line_pencil(r.witness(k), field);
          pencil = ratio(good, r.witnesses.size());
        }
        s.rows.push_back({{str(q), std::to_string(n), std::to_string(d), str(r.value), str(want), pencil},
                          r.value == want});
      }
    }
  }
  s.notes.push_back("pencil witnesses: stored maximizers that are d distinct lines through one point (recorded only)");
  return s;
}

SuiteResult two_weights(unsigned threads) {
  SuiteResult s{"two-weights", {"q", "W", "d", "e_q", "min{p_1, d/a}"}, {}, {}};
  const std::vector<std::vector<std::int64_t>> systems{{1, 1}, {1, 2}, {2, 3}, {2, 4}};
  for (std::uint32_t q : {2u, 3u, 5u}) {
    const Field field = Field::create(q, 1);
    for (const auto& ws : systems) {
      const WeightSystem w(ws);
      const std::int64_t a = std::lcm(ws[0], ws[1]);
      for (std::int64_t t = 1; t <= static_cast<std::int64_t>(q) + 1; ++t) {
        const std::int64_t d = a * t;
        const SearchResult r = eq_exhaustive(w, d, field, with_threads(threads));
        const std::uint64_t want = std::min<std::uint64_t>(pn(1, q), static_cast<std::uint64_t>(t));
        s.rows.push_back({{str(q), w.to_string(), std::to_string(d), str(r.value), str(want)}, r.value == want});
      }
    }
  }
  s.notes.push_back("degrees are the multiples of a = lcm(a_0, a_1) up to a(q + 1)");
  return s;
}

SuiteResult main_theorem(unsigned threads) {
  SuiteResult s{"main-theorem", {"q", "W", "d", "e_q", "min{p_n, d q^(n-1) + p_(n-2)}", "maximizers"}, {}, {}};
  auto row = [&](const Field& field, const WeightSystem& w, std::int64_t d) {
    const SearchResult r = eq_exhaustive(w, d, field, with_threads(threads));
    const BoundSet b = bounds(d, w, field);
    const std::uint64_t want = std::min(b.pn, b.serre);
    s.rows.push_back({{str(field.q()), w.to_string(), std::to_string(d), str(r.value), str(want), str(r.maximizers)},
                      r.value == want});
  };
  for (std::uint32_t q : {2u, 3u}) {
    const Field field = Field::create(q, 1);
    for (std::int64_t a2 : {2, 3}) {
      for (std::int64_t d = 1; d <= static_cast<std::int64_t>(q) + 2; ++d) row(field, WeightSystem({1, 1, a2}), d);
    }
  }
  row(Field::create(2, 1), WeightSystem({1, 1, 2, 2}), 2);
  return s;
}

SuiteResult theorem41(unsigned threads) {
  SuiteResult s{"theorem41", {"q", "W", "d", "max N", "d q + 1", "candidates", "chain"}, {}, {}};
  const std::vector<std::vector<std::int64_t>> systems{{1, 1, 2}, {1, 2, 2}, {1, 1, 3}, {1, 2, 3}};
  for (std::uint32_t q : {2u, 3u}) {
    const Field field = Field::create(q, 1);
    SpaceCache spaces(field);
    for (const auto& ws : systems) {
      const WeightSystem w(ws);
      for (std::int64_t d = 1; d <= static_cast<std::int64_t>(q) + 1; ++d) {
        if (monomial_basis(w, d).empty()) continue;
        const SearchResult r = eq_exhaustive(w, d, field, with_threads(threads));
        const BoundSet b = bounds(d, w, field);
        const UnscrewResult u = unscrew(r.witness(0), spaces);
        const bool chain = u.report.verdict == Verdict::pass;
        s.rows.push_back({{str(q), w.to_string(), std::to_string(d), str(r.value), str(b.serre), str(r.searched),
                           chain ? "pass" : "fail"},
                          r.value <= b.serre && chain});
      }
    }
  }
  s.notes.push_back("chain: unscrewing of the first maximizer down to P^n");
  return s;
}

std::uint64_t config_seed(std::uint32_t q, const WeightSystem& w, std::size_t i) {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  auto mix = [&](std::uint64_t v) { h = (h ^ v) * 0x100000001b3ull; };
  mix(q);
  for (std::int64_t a : w.weights()) mix(static_cast<std::uint64_t>(a));
  mix(i);
  return h;
}

SuiteResult mondo() {
  SuiteResult s{"mondo",
                {"q", "W", "i", "safe", "polys", "identities", "inequality", "equality", "coprime", "fibers"},
                {},
                {}};
  constexpr int kPolys = 200;
  struct Config {
    std::vector<std::int64_t> w;
    std::vector<std::uint32_t> qs;
  };
  const std::vector<Config> configs{{{1, 1}, {2, 3, 4, 5}},    {{1, 2}, {2, 3, 4, 5}},
                                    {{1, 1, 2}, {2, 3, 4, 5}}, {{2, 3}, {2, 3, 4, 5}},
                                    {{1, 2, 3}, {2, 3, 4, 5}}, {{1, 2, 2}, {3, 5}},
                                    {{2, 4}, {3, 5}}};
  std::map<std::uint32_t, Field> fields;
  for (const auto& cfg : configs) {
    const WeightSystem w(cfg.w);
    const std::int64_t top = 2 * *std::max_element(cfg.w.begin(), cfg.w.end()) + 2;
    std::vector<std::int64_t> degrees;
    for (std::int64_t d = 1; d <= top; ++d) {
      if (!monomial_basis(w, d).empty()) degrees.push_back(d);
    }
    for (std::uint32_t q : cfg.qs) {
      const Field& field = fields.try_emplace(q, Field::from_order(std::to_string(q))).first->second;
      SpaceCache spaces(field);
      for (std::size_t i = 0; i < w.size(); ++i) {
        const bool safe = is_safe(w, i, field);
        const bool coprime = pairwise_coprime_tail(w);
        const auto fibers = fiber_sizes(w, i, field);
        std::mt19937_64 rng(config_seed(q, w, i));
        std::uint64_t ident = 0, ineq = 0, equal = 0, fiber_ok = 0;
        for (int k = 0; k < kPolys; ++k) {
          const std::int64_t d = degrees[uniform_below(rng, degrees.size())];
          const WeightedPolynomial f = random_polynomial(w, d, field, rng);
          const AuditReport id = audit_identities(f, i, spaces);
          const AuditReport mo = audit_mondo(f, i, spaces);
          ident += id.verdict == Verdict::pass;
          ineq += mo.verdict == Verdict::pass;
          equal += mo.equality.value_or(false);
          const WeightedPolynomial up = pullback(f, i);
          std::uint64_t sum = 0;
          for (const auto& p : zero_set(f, spaces.points(w), field)) sum += fibers.at(p.coords);
          fiber_ok += count_zeros(up, spaces.points(up.weights()), field) == sum;
        }
        const std::uint64_t n = kPolys;
        const bool fibers_match = fiber_ok == n;
        const bool props = ident == n && ineq == n && (!coprime || equal == n);
        SuiteRow row{{str(q), w.to_string(), std::to_string(i), safe ? "SAFE" : "UNSAFE", str(n), ratio(ident, n),
                      ratio(ineq, n), ratio(equal, n), yes_no(coprime), ratio(fiber_ok, n)},
                     fibers_match && (!safe || props)};
        s.rows.push_back(std::move(row));
      }
    }
  }
  s.notes.push_back("UNSAFE rows must match only the fiber identity; their audit counts are observations");
  return s;
}

SuiteResult partitions() {
  SuiteResult s{"partitions", {"q", "W", "i", "safe", "lesZi", "antecedent", "overlap"}, {}, {}};
  const std::vector<std::vector<std::int64_t>> systems{{1, 2},    {2, 3},    {2, 4},    {1, 1, 2},
                                                       {1, 2, 2}, {1, 2, 3}, {2, 2, 3}, {1, 2, 4}};
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const Field field = Field::from_order(std::to_string(q));
    for (const auto& ws : systems) {
      const WeightSystem w(ws);
      for (std::size_t i = 0; i < w.size(); ++i) {
        const AuditReport lz = audit_lesZi(w, field, i);
        const AuditReport an = audit_antecedent(w, field, i);
        const bool pass = lz.verdict == Verdict::pass && an.verdict == Verdict::pass;
        SuiteRow row{{str(q), w.to_string(), std::to_string(i), lz.safe ? "SAFE" : "UNSAFE",
                      verdict_name(lz.verdict), verdict_name(an.verdict), str(an.overlap.size())},
                     pass,
                     !lz.safe};
        s.rows.push_back(std::move(row));
      }
    }
  }
  // Regression point: overlap and a single preimage at [0:1:1].
  const Field f3 = Field::create(3, 1);
  const WeightSystem w({1, 2, 2});
  const CanonicalPoint p = canonicalize(parse_point("[0:1:1]", f3), w, f3);
  const AuditReport an = audit_antecedent(w, f3, 1);
  const bool overlap = std::find(an.overlap.begin(), an.overlap.end(), p.coords) != an.overlap.end();
  const std::uint64_t pre = preimage_count(p, 1, w, f3).count;
  s.rows.push_back({{"3", w.to_string(), "1", "UNSAFE", "overlap at [0:1:1]: " + yes_no(overlap),
                     "preimages " + str(pre) + " (expected 1)", "-"},
                    overlap && pre == 1});
  s.notes.push_back("UNSAFE rows are observations; the last row is a fixed regression");
  return s;
}

}  // namespace

SuiteResult run_suite(std::string_view name, unsigned threads) {
  if (name == "serre-p2") return serre_p2(threads);
  if (name == "two-weights") return two_weights(threads);
  if (name == "main-theorem") return main_theorem(threads);
  if (name == "theorem41") return theorem41(threads);
  if (name == "mondo") return mondo();
  if (name == "partitions") return partitions();
  throw Error(Errc::precondition, "unknown suite '" + std::string(name) + "'");
}

std::string format_table(const SuiteResult& suite) {
  std::vector<std::string> header = suite.columns;
  header.push_back("status");
  std::vector<std::vector<std::string>> body;
  for (const auto& r : suite.rows) {
    auto cells = r.cells;
    cells.push_back(r.observation ? (r.match ? "ok (obs)" : "differs (obs)") : (r.match ? "ok" : "MISMATCH"));
    body.push_back(std::move(cells));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& cells : body) {
    for (std::size_t c = 0; c < cells.size(); ++c) width[c] = std::max(width[c], cells[c].size());
  }
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      out << cells[c];
      if (c + 1 < cells.size()) out << std::string(width[c] - cells[c].size() + 2, ' ');
    }
    out << '\n';
  };
  line(header);
  for (const auto& cells : body) line(cells);
  for (const auto& n : suite.notes) out << "note: " << n << '\n';
  return out.str();
}

bool is_line_pencil(const WeightedPolynomial& f, const Field& field) {
  const WeightSystem& w = f.weights();
  if (f.is_zero() || !w.is_straight() || w[0] != 1) return false;
  const std::int64_t d = f.degree();
  if (w.size() == 2) return d >= 1 && count_zeros(f, field) == static_cast<std::uint64_t>(d);
  if (w.size() != 3 || d < 1) return false;

  const auto points = enumerate_points(w, field);
  std::vector<bool> zero(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) zero[k] = evaluate(f, points[k].coords, field).is_zero();

  // Lines are the points of the dual plane.
  std::vector<std::vector<std::size_t>> contained;
  for (const auto& line : points) {
    std::vector<std::size_t> on;
    bool inside = true;
    for (std::size_t k = 0; k < points.size() && inside; ++k) {
      if (dot(line.coords, points[k].coords, field).is_zero()) {
        on.push_back(k);
        inside = zero[k];
      }
    }
    if (inside) contained.push_back(std::move(on));
  }
  if (contained.size() != static_cast<std::size_t>(d)) return false;

  std::vector<int> hits(points.size(), 0);
  std::vector<bool> covered(points.size(), false);
  for (const auto& on : contained) {
    for (std::size_t k : on) {
      ++hits[k];
      covered[k] = true;
    }
  }
  const bool concurrent = std::any_of(hits.begin(), hits.end(), [&](int h) { return h == d; });
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (zero[k] && !covered[k]) return false;
  }
  return concurrent;
}

}  // namespace wpsq
