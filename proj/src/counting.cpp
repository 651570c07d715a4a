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

#include "wpsq/counting.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "wpsq/error.hpp"

namespace wpsq {

const std::vector<CanonicalPoint>& SpaceCache::points(const WeightSystem& w) {
  auto it = cache_.find(w.weights());
  if (it == cache_.end()) it = cache_.emplace(w.weights(), enumerate_points(w, field_)).first;
  return it->second;
}

namespace {

void require_nonzero(const WeightedPolynomial& f) {
  if (f.is_zero()) throw Error(Errc::zero_polynomial, "the zero polynomial does not define a hypersurface");
}

void require_index(std::size_t i, const WeightSystem& w) {
  if (i >= w.size()) {
    throw Error(Errc::index_out_of_range, "index " + std::to_string(i) + " out of range for weights " + w.to_string());
  }
}

bool is_origin(const CanonicalPoint& p, std::size_t i) {
  return p.stratum.support.size() == 1 && p.stratum.support.front() == i;
}

std::int64_t to_i64(std::uint64_t v) { return static_cast<std::int64_t>(v); }

AuditReport base_report(Proposition prop, const WeightSystem& w, const Field& field, std::optional<std::size_t> i) {
  AuditReport report;
  report.prop = prop;
  report.q = field.q();
  report.weights = w.weights();
  report.index = i;
  return report;
}

void finish_checks(AuditReport& report) {
  const bool all = std::all_of(report.checks.begin(), report.checks.end(), [](const Check& c) { return c.pass; });
  report.verdict = all ? Verdict::pass : Verdict::fail;
  for (const auto& c : report.checks) {
    if (!c.pass) report.witnesses.insert(report.witnesses.end(), c.witnesses.begin(), c.witnesses.end());
  }
}

Check compare(std::string name, std::int64_t lhs, std::int64_t rhs) {
  Check c;
  c.name = std::move(name);
  c.lhs = lhs;
  c.rhs = rhs;
  c.pass = lhs == rhs;
  if (!c.pass) c.witnesses.push_back({c.name, std::nullopt, {lhs, rhs}});
  return c;
}

}  // namespace

std::uint64_t count_zeros(const WeightedPolynomial& f, const std::vector<CanonicalPoint>& points,
                          const Field& field) {
  require_nonzero(f);
  std::uint64_t n = 0;
  for (const auto& p : points) {
    if (evaluate_terms(f.terms(), p.coords, field).is_zero()) ++n;
  }
  return n;
}

std::uint64_t count_zeros(const WeightedPolynomial& f, const Field& field) {
  require_nonzero(f);
  return count_zeros(f, enumerate_points(f.weights(), field), field);
}

std::vector<CanonicalPoint> zero_set(const WeightedPolynomial& f, const std::vector<CanonicalPoint>& points,
                                     const Field& field) {
  require_nonzero(f);
  std::vector<CanonicalPoint> out;
  for (const auto& p : points) {
    if (evaluate_terms(f.terms(), p.coords, field).is_zero()) out.push_back(p);
  }
  return out;
}

LiteralClasses literal_classes(const CanonicalPoint& point, std::size_t i, const WeightSystem& w,
                               const Field& field) {
  require_index(i, w);
  LiteralClasses c;
  const std::uint32_t order = field.group_order();
  const std::uint32_t r = w.r(i, field);
  c.z.assign(order, false);
  c.origin = is_origin(point, i);
  for (const auto& rep : representatives(point, w, field)) {
    const Elem y = rep[i];
    if (y.is_zero()) {
      c.r = true;
      continue;
    }
    const std::uint32_t l = field.log(y);
    c.z[l] = true;
    if (l == 0) c.t = true;
    // Delta^{a_i} = <delta^{r_i}>.
    if (l % r != 0) c.i = true;
  }
  if (c.origin) {
    c.r = true;
    c.t = false;
  }
  return c;
}

namespace {

PartitionCounts classify(const std::vector<CanonicalPoint>& examined, const WeightSystem& w, std::size_t i,
                         PartitionMode mode, const Field& field) {
  PartitionCounts pc;
  pc.index = i;
  pc.mode = mode;
  pc.r = w.r(i, field);
  pc.examined = examined.size();
  pc.Z.assign(pc.r > 1 ? pc.r - 1 : 0, 0);
  for (const auto& p : examined) {
    const LiteralClasses c = literal_classes(p, i, w, field);
    if (c.class_count() > 1) pc.overlap.push_back(p.coords);
    if (mode == PartitionMode::literal) {
      pc.R += c.r;
      pc.T += c.t;
      pc.I += c.i;
      for (std::uint32_t j = 1; j < pc.r; ++j) pc.Z[j - 1] += c.z_at(j, field.group_order());
    } else {
      if (c.r) {
        ++pc.R;
      } else if (c.t) {
        ++pc.T;
      } else {
        ++pc.I;
      }
      if (!c.r) {
        for (std::uint32_t j = 1; j < pc.r; ++j) pc.Z[j - 1] += c.z_at(j, field.group_order());
      }
    }
  }
  return pc;
}

}  // namespace

PartitionCounts partition_counts(const WeightedPolynomial* f, const WeightSystem& w, std::size_t i,
                                 PartitionMode mode, const Field& field) {
  require_index(i, w);
  auto points = enumerate_points(w, field);
  if (f) {
    if (!(f->weights() == w)) throw Error(Errc::precondition, "polynomial and weights disagree");
    points = zero_set(*f, points, field);
  }
  return classify(points, w, i, mode, field);
}

PartitionCounts partition_counts(const WeightedPolynomial& f, std::size_t i, PartitionMode mode, const Field& field) {
  return partition_counts(&f, f.weights(), i, mode, field);
}

namespace {

Coords push_forward(const Coords& up, std::size_t i, std::int64_t a, const Canonicalizer& down) {
  Coords v = up;
  v[i] = down.field().pow(v[i], a);
  return down.canonical_coords(v);
}

}  // namespace

PreimageResult preimage_count(const CanonicalPoint& point, std::size_t i, const WeightSystem& w, const Field& field) {
  require_index(i, w);
  const Coords target = canonicalize(point.coords, w, field).coords;
  const Canonicalizer down(w, field);
  PreimageResult out;
  for (const auto& q : enumerate_points(w.with_weight(i, 1), field)) {
    if (push_forward(q.coords, i, w[i], down) == target) {
      ++out.count;
      out.preimages.push_back(q.coords);
    }
  }
  return out;
}

std::map<Coords, std::uint64_t> fiber_sizes(const WeightSystem& w, std::size_t i, const Field& field) {
  require_index(i, w);
  std::map<Coords, std::uint64_t> out;
  for (const auto& p : enumerate_points(w, field)) out.emplace(p.coords, 0);
  const Canonicalizer down(w, field);
  for (const auto& q : enumerate_points(w.with_weight(i, 1), field)) ++out[push_forward(q.coords, i, w[i], down)];
  return out;
}

bool is_safe(const WeightSystem& w, std::size_t i, const Field& field) {
  require_index(i, w);
  const std::int64_t order = field.group_order();
  const std::int64_t ri = std::gcd(w[i], order);
  const std::uint32_t count = 1u << w.size();
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    if (!(mask & (1u << i)) || std::popcount(mask) < 2) continue;
    std::int64_t d = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (mask & (1u << k)) d = std::gcd(d, w[k]);
    }
    if (std::gcd(w[i] / d, order) != ri) return false;
  }
  return true;
}

BoundSet bounds(std::int64_t d, const WeightSystem& w, const Field& field) {
  const std::uint64_t q = field.q();
  const int n = w.dimension();
  std::uint64_t qn1 = 1;
  for (int k = 0; k < n - 1; ++k) qn1 *= q;
  const std::uint64_t tail = pn(n - 2, q);

  BoundSet b;
  b.pn = pn(n, q);
  b.serre = static_cast<std::uint64_t>(d) * qn1 + tail;
  b.serre_vacuous = b.serre >= b.pn;

  // Conjecture: one coordinate of weight 1 plays a_0, the rest are sorted.
  const auto one = std::find(w.weights().begin(), w.weights().end(), 1);
  if (one == w.weights().end()) {
    b.conjecture_note = "no weight equals 1";
  } else {
    std::vector<std::int64_t> rest(w.weights().begin(), one);
    rest.insert(rest.end(), one + 1, w.weights().end());
    std::int64_t l = 1;
    for (std::int64_t a : rest) l = std::lcm(l, a);
    const std::int64_t a1 = *std::min_element(rest.begin(), rest.end());
    b.conjecture_a1 = a1;
    if (d % l != 0) {
      b.conjecture_note = "lcm(a_1, ..., a_n) = " + std::to_string(l) + " does not divide d";
    } else {
      b.conjecture = std::min(b.pn, static_cast<std::uint64_t>(d / a1) * qn1 + tail);
    }
  }

  std::int64_t a = 0;
  for (std::size_t r = 0; r < w.size(); ++r) {
    for (std::size_t s = r + 1; s < w.size(); ++s) {
      const std::int64_t l = std::lcm(w[r], w[s]);
      if (a == 0 || l < a) a = l;
    }
  }
  b.lower_a = a;
  if (d % a != 0) {
    b.lower_note = "a = " + std::to_string(a) + " does not divide d";
  } else {
    b.lower = std::min(b.pn, static_cast<std::uint64_t>(d / a) * qn1 + tail);
  }
  return b;
}

const char* proposition_name(Proposition p) noexcept {
  switch (p) {
    case Proposition::les_zi: return "lesZi";
    case Proposition::antecedent: return "antecedent";
    case Proposition::identities: return "identities";
    case Proposition::mondo: return "mondo";
    case Proposition::unscrew: return "unscrew";
  }
  return "unknown";
}

const char* verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inapplicable: return "inapplicable";
  }
  return "unknown";
}

AuditReport audit_lesZi(const WeightSystem& w, const Field& field, std::size_t i) {
  require_index(i, w);
  AuditReport report = base_report(Proposition::les_zi, w, field, i);
  report.safe = is_safe(w, i, field);
  const std::uint32_t order = field.group_order();
  const std::uint32_t r = w.r(i, field);

  std::vector<std::pair<const CanonicalPoint*, LiteralClasses>> classes;
  const auto points = enumerate_points(w, field);
  for (const auto& p : points) {
    auto c = literal_classes(p, i, w, field);
    if (c.class_count() > 1) report.overlap.push_back(p.coords);
    if (!c.origin) classes.emplace_back(&p, std::move(c));
  }

  // (i) Z(j1) == Z(j2) whenever j1 == j2 mod r, j in 1 .. q - 1.
  Check periodic;
  periodic.name = "Z(j1) = Z(j2) for j1 = j2 mod r";
  for (std::uint32_t j1 = 1; j1 <= order; ++j1) {
    for (std::uint32_t j2 = j1 + r; j2 <= order; j2 += r) {
      for (const auto& [p, c] : classes) {
        if (c.z_at(j1, order) != c.z_at(j2, order)) {
          ++periodic.lhs;
          if (periodic.witnesses.size() < 8) {
            periodic.witnesses.push_back({"Z(" + std::to_string(j1) + ") differs from Z(" + std::to_string(j2) + ")",
                                          p->coords,
                                          {j1, j2}});
          }
        }
      }
    }
  }
  periodic.pass = periodic.lhs == 0;
  report.checks.push_back(std::move(periodic));

  // (ii) Z(r) == T.
  Check top;
  top.name = "Z(r) = T";
  for (const auto& [p, c] : classes) {
    if (c.z_at(r, order) != c.t) {
      ++top.lhs;
      if (top.witnesses.size() < 8) top.witnesses.push_back({top.name, p->coords, {c.z_at(r, order), c.t}});
    }
  }
  top.pass = top.lhs == 0;
  report.checks.push_back(std::move(top));

  // (iii) I == Z(1) u ... u Z(r - 1), which is empty when r == 1.
  Check inert;
  inert.name = r == 1 ? "I = empty (r = 1)" : "I = Z(1) u ... u Z(r-1)";
  for (const auto& [p, c] : classes) {
    bool in_union = false;
    for (std::uint32_t j = 1; j < r; ++j) in_union = in_union || c.z_at(j, order);
    if (c.i != in_union) {
      ++inert.lhs;
      if (inert.witnesses.size() < 8) inert.witnesses.push_back({inert.name, p->coords, {c.i, in_union}});
    }
  }
  inert.pass = inert.lhs == 0;
  report.checks.push_back(std::move(inert));
  if (r == 1) report.notes.push_back("r_i = 1: I_i is empty");
  if (!report.overlap.empty()) {
    report.notes.push_back(std::to_string(report.overlap.size()) + " point(s) lie in more than one literal class");
  }

  finish_checks(report);
  report.lhs = 0;
  for (const auto& c : report.checks) report.lhs += c.lhs;
  report.rhs = 0;
  return report;
}

AuditReport audit_antecedent(const WeightSystem& w, const Field& field, std::size_t i) {
  require_index(i, w);
  AuditReport report = base_report(Proposition::antecedent, w, field, i);
  report.safe = is_safe(w, i, field);
  const std::uint32_t r = w.r(i, field);
  const auto fibers = fiber_sizes(w, i, field);

  Check check;
  check.name = "fiber size = 1 on R, r on T, 0 on I";
  for (const auto& p : enumerate_points(w, field)) {
    const auto c = literal_classes(p, i, w, field);
    if (c.class_count() > 1) report.overlap.push_back(p.coords);
    const std::uint64_t predicted = c.r ? 1 : (c.t ? r : 0);
    const std::uint64_t observed = fibers.at(p.coords);
    if (observed != predicted) {
      ++check.lhs;
      const char* cls = c.r ? "R" : (c.t ? "T" : "I");
      check.witnesses.push_back({std::string("class ") + cls + ": observed vs predicted fiber size", p.coords,
                                 {to_i64(observed), to_i64(predicted)}});
    }
  }
  check.pass = check.lhs == 0;
  report.checks.push_back(std::move(check));
  if (!report.safe) report.notes.push_back("UNSAFE configuration: results are observations");
  finish_checks(report);
  report.lhs = report.checks.front().lhs;
  report.rhs = 0;
  return report;
}

AuditReport audit_identities(const WeightedPolynomial& f, std::size_t i, const Field& field) {
  SpaceCache spaces(field);
  return audit_identities(f, i, spaces);
}

AuditReport audit_identities(const WeightedPolynomial& f, std::size_t i, SpaceCache& spaces) {
  require_nonzero(f);
  const Field& field = spaces.field();
  const WeightSystem& w = f.weights();
  require_index(i, w);
  AuditReport report = base_report(Proposition::identities, w, field, i);
  report.poly = format_poly(f, field);
  report.safe = is_safe(w, i, field);
  const std::uint32_t r = w.r(i, field);

  const auto& points = spaces.points(w);
  const auto zeros = zero_set(f, points, field);
  const PartitionCounts pc = classify(zeros, w, i, PartitionMode::disjoint, field);
  const std::uint64_t n = zeros.size();

  report.checks.push_back(compare("N = R + T + I", to_i64(n), to_i64(pc.R + pc.T + pc.I)));

  const WeightedPolynomial up = pullback(f, i);
  const std::uint64_t n_up = count_zeros(up, spaces.points(up.weights()), field);
  Check pull = compare("N(pullback) = r T + R", to_i64(n_up), to_i64(r * pc.T + pc.R));
  if (!pull.pass) {
    // Point-level witnesses: zeros whose fiber differs from the class prediction.
    const auto fibers = fiber_sizes(w, i, field);
    for (const auto& p : zeros) {
      const auto c = literal_classes(p, i, w, field);
      const std::uint64_t predicted = c.r ? 1 : (c.t ? r : 0);
      const std::uint64_t observed = fibers.at(p.coords);
      if (observed != predicted) {
        pull.witnesses.push_back({"fiber size differs from class prediction", p.coords,
                                  {to_i64(observed), to_i64(predicted)}});
      }
    }
  }
  report.lhs = pull.lhs;
  report.rhs = pull.rhs;
  report.checks.push_back(std::move(pull));

  if (r != 1) {
    for (std::uint32_t j = 1; j <= r; ++j) {
      const WeightedPolynomial tw = twist(f, i, j, field);
      const PartitionCounts pj = classify(zero_set(tw, points, field), w, i, PartitionMode::disjoint, field);
      const std::string js = std::to_string(j);
      if (j < r) {
        report.checks.push_back(compare("T(F o sigma^" + js + ") = Z(" + js + ")", to_i64(pj.T), to_i64(pc.z(j))));
        report.checks.push_back(compare("R(F o sigma^" + js + ") = R(F)", to_i64(pj.R), to_i64(pc.R)));
      } else {
        report.checks.push_back(compare("T(F o sigma^r) = T(F)", to_i64(pj.T), to_i64(pc.T)));
      }
    }
  }
  if (!report.safe) report.notes.push_back("UNSAFE configuration: results are observations");
  report.overlap = pc.overlap;
  finish_checks(report);
  return report;
}

bool pairwise_coprime_tail(const WeightSystem& w) {
  for (std::size_t j = 1; j < w.size(); ++j) {
    for (std::size_t k = j + 1; k < w.size(); ++k) {
      if (std::gcd(w[j], w[k]) != 1) return false;
    }
  }
  return true;
}

AuditReport audit_mondo(const WeightedPolynomial& f, std::size_t i, const Field& field) {
  SpaceCache spaces(field);
  return audit_mondo(f, i, spaces);
}

AuditReport audit_mondo(const WeightedPolynomial& f, std::size_t i, SpaceCache& spaces) {
  require_nonzero(f);
  const Field& field = spaces.field();
  const WeightSystem& w = f.weights();
  require_index(i, w);
  AuditReport report = base_report(Proposition::mondo, w, field, i);
  report.poly = format_poly(f, field);
  report.safe = is_safe(w, i, field);
  const std::uint32_t r = w.r(i, field);

  const std::uint64_t n = count_zeros(f, spaces.points(w), field);
  std::vector<std::int64_t> terms;
  std::uint64_t sum = 0;
  for (std::uint32_t j = 0; j < r; ++j) {
    const WeightedPolynomial up = pullback(twist(f, i, j, field), i);
    const std::uint64_t c = count_zeros(up, spaces.points(up.weights()), field);
    terms.push_back(to_i64(c));
    sum += c;
  }
  report.lhs = to_i64(r * n);
  report.rhs = to_i64(sum);
  report.equality = report.lhs == report.rhs;
  report.coprime_condition = pairwise_coprime_tail(w);

  Check ineq;
  ineq.name = "r N(F) <= sum_j N(pullback(F o sigma^j))";
  ineq.lhs = report.lhs;
  ineq.rhs = report.rhs;
  ineq.pass = ineq.lhs <= ineq.rhs;
  if (!ineq.pass) {
    Witness wt{"r N(F), then N(pullback(F o sigma^j)) for j = 0 .. r-1", std::nullopt, {report.lhs}};
    wt.values.insert(wt.values.end(), terms.begin(), terms.end());
    ineq.witnesses.push_back(std::move(wt));
  }
  report.checks.push_back(ineq);
  report.verdict = ineq.pass ? Verdict::pass : Verdict::fail;
  report.witnesses = ineq.witnesses;

  Check remark;
  remark.name = "equality under pairwise coprime a_1 .. a_n";
  remark.lhs = report.lhs;
  remark.rhs = report.rhs;
  remark.pass = !*report.coprime_condition || *report.equality;
  if (!remark.pass) remark.witnesses.push_back({remark.name, std::nullopt, {report.lhs, report.rhs}});
  report.checks.push_back(std::move(remark));
  if (!report.safe) report.notes.push_back("UNSAFE configuration: results are observations");
  return report;
}

UnscrewResult unscrew(const WeightedPolynomial& f, const Field& field, std::uint64_t budget) {
  SpaceCache spaces(field);
  return unscrew(f, spaces, budget);
}

UnscrewResult unscrew(const WeightedPolynomial& f, SpaceCache& spaces, std::uint64_t budget) {
  require_nonzero(f);
  const Field& field = spaces.field();
  const WeightSystem& w = f.weights();
  UnscrewResult out;

  std::uint64_t product = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    out.r.push_back(w.r(i, field));
    product *= out.r.back();
    if (product > budget) {
      throw Error(Errc::budget_exceeded, "unscrewing needs " + std::to_string(product) +
                                             "+ pullbacks, over the budget of " + std::to_string(budget));
    }
  }

  std::vector<WeightedPolynomial> level{f};
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::vector<WeightedPolynomial> next;
    next.reserve(level.size() * out.r[i]);
    for (const auto& g : level) {
      for (std::uint32_t j = 0; j < out.r[i]; ++j) next.push_back(pullback(twist(g, i, j, field), i));
    }
    level = std::move(next);
  }
  out.leaves = std::move(level);

  const WeightSystem straight(std::vector<std::int64_t>(w.size(), 1));
  const auto& flat = spaces.points(straight);
  std::uint64_t sum = 0, max_leaf = 0;
  for (const auto& g : out.leaves) {
    const std::uint64_t c = count_zeros(g, flat, field);
    out.leaf_counts.push_back(c);
    sum += c;
    max_leaf = std::max(max_leaf, c);
  }
  const std::uint64_t n = count_zeros(f, spaces.points(w), field);
  const BoundSet b = bounds(f.degree(), w, field);

  AuditReport& report = out.report;
  report = base_report(Proposition::unscrew, w, field, std::nullopt);
  report.poly = format_poly(f, field);
  report.lhs = to_i64(product * n);
  report.rhs = to_i64(sum);

  Check chain;
  chain.name = "(r_0 ... r_n) N(F) <= sum N(leaves)";
  chain.lhs = report.lhs;
  chain.rhs = report.rhs;
  chain.pass = chain.lhs <= chain.rhs;
  if (!chain.pass) chain.witnesses.push_back({chain.name, std::nullopt, {chain.lhs, chain.rhs}});
  report.checks.push_back(std::move(chain));

  Check leaves;
  leaves.name = "max N(leaf) <= d q^(n-1) + p_(n-2)";
  leaves.lhs = to_i64(max_leaf);
  leaves.rhs = to_i64(b.serre);
  leaves.pass = max_leaf <= b.serre;
  if (!leaves.pass) leaves.witnesses.push_back({leaves.name, std::nullopt, {leaves.lhs, leaves.rhs}});
  report.checks.push_back(std::move(leaves));

  Check bound;
  bound.name = "N(F) <= d q^(n-1) + p_(n-2)";
  bound.lhs = to_i64(n);
  bound.rhs = to_i64(b.serre);
  bound.pass = n <= b.serre;
  if (!bound.pass) bound.witnesses.push_back({bound.name, std::nullopt, {bound.lhs, bound.rhs}});
  report.checks.push_back(std::move(bound));

  if (f.degree() > static_cast<std::int64_t>(field.q()) + 1) {
    report.notes.push_back("d > q + 1: outside the degree hypothesis of the bound");
  }
  if (b.serre_vacuous) report.notes.push_back("bound is vacuous: d q^(n-1) + p_(n-2) >= p_n");
  finish_checks(report);
  return out;
}

}  // namespace wpsq
