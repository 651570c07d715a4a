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

// wpsq: command-line front end for point counts on weighted projective
// hypersurfaces over finite fields.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wpsq/counting.hpp"
#include "wpsq/error.hpp"
#include "wpsq/gf.hpp"
#include "wpsq/io.hpp"
#include "wpsq/reproduce.hpp"
#include "wpsq/search.hpp"
#include "wpsq/wpoly.hpp"
#include "wpsq/wps.hpp"

namespace {

using wpsq::json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kViolation = 2;
constexpr int kCrash = 3;

struct Options {
  std::string q;
  std::string weights;
  std::optional<std::int64_t> degree;
  std::string poly;
  std::string prop = "identities";
  std::optional<std::size_t> index;
  std::string mode = "disjoint";
  bool exhaustive = false;
  bool random = false;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string output;
  unsigned threads = 1;
  std::string cache;
  std::optional<std::uint64_t> budget;
  std::size_t witness_cap = wpsq::kDefaultWitnessCap;
  bool list = false;
  std::string suite;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Report {
  json config = json::object();
  json results = json::object();
  json checks = json::array();
  std::vector<std::string> body;
  bool violation = false;

  void check(const wpsq::Check& c, const wpsq::Field& field) {
    checks.push_back(wpsq::check_json(c, field));
    body.push_back("check " + c.name + ": " + (c.pass ? "pass" : "FAIL") + " (" + std::to_string(c.lhs) + " vs " +
                   std::to_string(c.rhs) + ")");
  }
};

Report start(const std::string& command, const Options& o, const wpsq::Field& field) {
  Report r;
  r.config = {{"command", command}, {"field", wpsq::field_json(field)}, {"threads", o.threads}};
  return r;
}

std::string field_line(const wpsq::Field& f) {
  std::string s = "GF(" + std::to_string(f.q()) + ")";
  if (f.k() > 1) s += " = GF(" + std::to_string(f.p()) + ")[x]/(" + f.modulus_string() + "), g = x mod modulus";
  s += ", delta = " + f.format(f.delta());
  if (f.k() > 1) s += " (encoding " + std::to_string(f.encoding(f.delta())) + ")";
  return s;
}

std::string render_text(const Report& r, const wpsq::Field* field) {
  std::ostringstream out;
  out << "wpsq " << wpsq::kVersion << " " << r.config.at("command").get<std::string>() << '\n';
  if (field) out << "field: " << field_line(*field) << '\n';
  for (const auto& [key, value] : r.config.items()) {
    if (key == "command" || key == "field") continue;
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  out << '\n';
  for (const auto& line : r.body) out << line << '\n';
  return out.str();
}

int emit(const Report& r, const Options& o, const wpsq::Field* field) {
  std::string text;
  if (o.format == "json") {
    json doc = {{"config", r.config}, {"results", r.results}, {"checks", r.checks}, {"version", wpsq::kVersion}};
    text = doc.dump(2) + "\n";
  } else {
    text = render_text(r, field);
  }
  if (o.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.output);
    out << text;
    if (!out) throw wpsq::Error(wpsq::Errc::io, "cannot write " + o.output);
  }
  return r.violation ? kViolation : kOk;
}

wpsq::Field field_of(const Options& o) {
  if (o.q.empty()) throw UsageError("--q is required");
  return wpsq::Field::from_order(o.q);
}

wpsq::WeightSystem weights_of(const Options& o) {
  if (o.weights.empty()) throw UsageError("--weights is required");
  return wpsq::WeightSystem::parse(o.weights);
}

wpsq::WeightedPolynomial poly_of(const Options& o, const wpsq::WeightSystem& w, const wpsq::Field& field) {
  if (o.poly.empty()) throw UsageError("--poly is required");
  auto f = wpsq::parse_poly(o.poly, w, field);
  if (f.is_zero()) throw wpsq::Error(wpsq::Errc::zero_polynomial, "the polynomial is zero");
  if (o.degree && *o.degree != f.degree()) {
    throw UsageError("--degree " + std::to_string(*o.degree) + " disagrees with the polynomial's degree " +
                     std::to_string(f.degree()));
  }
  return f;
}

std::string serre_check_name(const std::string& lhs, const wpsq::BoundSet& b) {
  return lhs + " <= d q^(n-1) + p_(n-2)" + (b.serre_vacuous ? " (vacuous)" : "");
}

void add_bounds(Report& r, const wpsq::BoundSet& b) {
  r.results["bounds"] = wpsq::bounds_json(b);
  r.body.push_back("p_n = " + std::to_string(b.pn));
  r.body.push_back("serre bound d q^(n-1) + p_(n-2) = " + std::to_string(b.serre) +
                   (b.serre_vacuous ? " (vacuous: >= p_n)" : ""));
  r.body.push_back("conjecture = " + (b.conjecture ? std::to_string(*b.conjecture) : "n/a (" + b.conjecture_note + ")"));
  r.body.push_back("lower bound = " + (b.lower ? std::to_string(*b.lower) : "n/a (" + b.lower_note + ")") +
                   ", a = " + std::to_string(b.lower_a));
}

int cmd_points(const Options& o) {
  const auto field = field_of(o);
  const auto w = weights_of(o);
  Report r = start("points", o, field);
  r.config["weights"] = w.weights();
  const auto points = wpsq::enumerate_points(w, field);
  json list = json::array();
  bool reps_ok = true;
  for (const auto& p : points) {
    list.push_back(wpsq::point_json(p.coords, field));
    const auto reps = wpsq::representatives(p, w, field);
    reps_ok = reps_ok && reps.size() == field.group_order();
    std::string line = wpsq::format_point(p.coords, field);
    if (o.list) {
      line += "  reps:";
      for (const auto& v : reps) line += " " + wpsq::format_point(v, field);
    }
    r.body.push_back(line);
  }
  const std::uint64_t expected = wpsq::pn(w.dimension(), field.q());
  r.results = {{"points", list}, {"count", points.size()}, {"p_n", expected}};
  wpsq::Check count{"#points = p_n", points.size() == expected, static_cast<std::int64_t>(points.size()),
                    static_cast<std::int64_t>(expected), {}};
  wpsq::Check reps{"q - 1 representatives per point", reps_ok, reps_ok, 1, {}};
  r.checks.push_back(wpsq::check_json(count, field));
  r.checks.push_back(wpsq::check_json(reps, field));
  r.body.push_back("p_" + std::to_string(w.dimension()) + " = " + std::to_string(points.size()) + ": " +
                   (count.pass && reps_ok ? "OK" : "MISMATCH (expected " + std::to_string(expected) + ")"));
  r.violation = !(count.pass && reps_ok);
  return emit(r, o, &field);
}

int cmd_count(const Options& o) {
  const auto field = field_of(o);
  const auto w = weights_of(o);
  const auto f = poly_of(o, w, field);
  Report r = start("count", o, field);
  r.config["weights"] = w.weights();
  r.config["poly"] = wpsq::format_poly(f, field);
  r.config["degree"] = f.degree();
  const auto zeros = wpsq::zero_set(f, wpsq::enumerate_points(w, field), field);
  const std::uint64_t n = zeros.size();
  const auto b = wpsq::bounds(f.degree(), w, field);
  r.results["N"] = n;
  r.results["polynomial"] = wpsq::poly_json(f, field);
  r.body.push_back("N = " + std::to_string(n));
  add_bounds(r, b);
  if (o.list) {
    json pts = json::array();
    for (const auto& p : zeros) {
      pts.push_back(wpsq::point_json(p.coords, field));
      r.body.push_back("  " + wpsq::format_point(p.coords, field));
    }
    r.results["zeros"] = pts;
  }
  const auto sn = static_cast<std::int64_t>(n);
  r.check({"N <= p_n", n <= b.pn, sn, static_cast<std::int64_t>(b.pn), {}}, field);
  r.check({serre_check_name("N", b), n <= b.serre, sn, static_cast<std::int64_t>(b.serre), {}}, field);
  // The conjectured value is proven when a second weight equals 1 and for lines.
  const bool proven = w.size() == 2 || (b.conjecture_a1 && *b.conjecture_a1 == 1);
  if (b.conjecture && proven) {
    r.check({"N <= conjecture", n <= *b.conjecture, sn, static_cast<std::int64_t>(*b.conjecture), {}}, field);
  }
  for (const auto& c : r.checks) r.violation = r.violation || !c.at("pass").get<bool>();
  return emit(r, o, &field);
}

int cmd_bounds(const Options& o) {
  const auto field = field_of(o);
  const auto w = weights_of(o);
  if (!o.degree) throw UsageError("--degree is required");
  Report r = start("bounds", o, field);
  r.config["weights"] = w.weights();
  r.config["degree"] = *o.degree;
  add_bounds(r, wpsq::bounds(*o.degree, w, field));
  return emit(r, o, &field);
}

void add_audit(Report& r, const wpsq::AuditReport& a, const wpsq::Field& field) {
  r.results["audits"].push_back(wpsq::audit_json(a, field));
  std::string head = std::string("[") + wpsq::proposition_name(a.prop) + "]";
  if (a.index) head += " i=" + std::to_string(*a.index);
  head += std::string(" verdict=") + wpsq::verdict_name(a.verdict) + " " + (a.safe ? "SAFE" : "UNSAFE") +
          " lhs=" + std::to_string(a.lhs) + " rhs=" + std::to_string(a.rhs);
  if (a.equality) head += std::string(" equality=") + (*a.equality ? "yes" : "no");
  if (a.coprime_condition) head += std::string(" coprime=") + (*a.coprime_condition ? "yes" : "no");
  r.body.push_back(head);
  for (const auto& c : a.checks) {
    r.checks.push_back(wpsq::check_json(c, field));
    r.body.push_back("  check " + c.name + ": " + (c.pass ? "pass" : "FAIL") + " (" + std::to_string(c.lhs) +
                     " vs " + std::to_string(c.rhs) + ")");
    if (!c.pass) {
      for (const auto& wt : c.witnesses) {
        std::string line = "    witness " + wt.label;
        if (wt.point) line += " at " + wpsq::format_point(*wt.point, field);
        for (auto v : wt.values) line += " " + std::to_string(v);
        r.body.push_back(line);
      }
    }
  }
  if (!a.overlap.empty()) {
    std::string line = "  literal overlap:";
    for (const auto& p : a.overlap) line += " " + wpsq::format_point(p, field);
    r.body.push_back(line);
  }
  for (const auto& n : a.notes) r.body.push_back("  note: " + n);
  r.violation = r.violation || a.violation();
}

void add_partition(Report& r, const wpsq::PartitionCounts& pc) {
  r.results["partitions"].push_back(wpsq::partition_json(pc));
  std::string line = "  partition (" + std::string(pc.mode == wpsq::PartitionMode::literal ? "literal" : "disjoint") +
                     ", r=" + std::to_string(pc.r) + "): R=" + std::to_string(pc.R) + " T=" + std::to_string(pc.T) +
                     " I=" + std::to_string(pc.I);
  for (std::size_t j = 1; j <= pc.Z.size(); ++j) line += " Z(" + std::to_string(j) + ")=" + std::to_string(pc.z(j));
  r.body.push_back(line);
}

wpsq::PartitionMode mode_of(const Options& o) {
  if (o.mode == "literal") return wpsq::PartitionMode::literal;
  if (o.mode == "disjoint") return wpsq::PartitionMode::disjoint;
  throw UsageError("--mode must be literal or disjoint");
}

int cmd_audit(const Options& o) {
  const auto field = field_of(o);
  const auto w = weights_of(o);
  Report r = start("audit", o, field);
  r.config["weights"] = w.weights();
  r.config["prop"] = o.prop;
  r.config["mode"] = o.mode;
  r.results["audits"] = json::array();
  const auto mode = mode_of(o);

  if (o.index && *o.index >= w.size()) {
    throw UsageError("--index " + std::to_string(*o.index) + " out of range for " + w.to_string());
  }
  std::vector<std::size_t> indices;
  if (o.index) {
    indices.push_back(*o.index);
    r.config["index"] = *o.index;
  } else {
    for (std::size_t i = 0; i < w.size(); ++i) indices.push_back(i);
  }

  if (o.prop == "lesZi" || o.prop == "antecedent") {
    for (std::size_t i : indices) {
      add_audit(r, o.prop == "lesZi" ? wpsq::audit_lesZi(w, field, i) : wpsq::audit_antecedent(w, field, i), field);
      add_partition(r, wpsq::partition_counts(nullptr, w, i, mode, field));
    }
  } else if (o.prop == "identities" || o.prop == "mondo") {
    const auto f = poly_of(o, w, field);
    r.config["poly"] = wpsq::format_poly(f, field);
    r.config["degree"] = f.degree();
    wpsq::SpaceCache spaces(field);
    for (std::size_t i : indices) {
      add_audit(r, o.prop == "mondo" ? wpsq::audit_mondo(f, i, spaces) : wpsq::audit_identities(f, i, spaces), field);
      add_partition(r, wpsq::partition_counts(f, i, mode, field));
    }
  } else {
    throw UsageError("--prop must be one of lesZi, antecedent, identities, mondo");
  }
  return emit(r, o, &field);
}

int cmd_unscrew(const Options& o) {
  const auto field = field_of(o);
  const auto w = weights_of(o);
  const auto f = poly_of(o, w, field);
  Report r = start("unscrew", o, field);
  r.config["weights"] = w.weights();
  r.config["poly"] = wpsq::format_poly(f, field);
  r.config["degree"] = f.degree();
  const std::uint64_t budget = o.budget.value_or(wpsq::kDefaultUnscrewBudget);
  r.config["budget"] = budget;
  const auto u = wpsq::unscrew(f, field, budget);
  json leaves = json::array();
  std::string rs = "r =";
  for (auto v : u.r) rs += " " + std::to_string(v);
  r.body.push_back(rs);
  r.body.push_back("leaves on P^" + std::to_string(w.dimension()) + ": " + std::to_string(u.leaves.size()));
  for (std::size_t k = 0; k < u.leaves.size(); ++k) {
    leaves.push_back({{"poly", wpsq::format_poly(u.leaves[k], field)}, {"N", u.leaf_counts[k]}});
    r.body.push_back("  N = " + std::to_string(u.leaf_counts[k]) + "  " + wpsq::format_poly(u.leaves[k], field));
  }
  r.results["r"] = u.r;
  r.results["leaves"] = leaves;
  r.results["audit"] = wpsq::audit_json(u.report, field);
  for (const auto& c : u.report.checks) r.check(c, field);
  for (const auto& n : u.report.notes) r.body.push_back("note: " + n);
  r.violation = u.report.violation();
  return emit(r, o, &field);
}

int cmd_eq(const Options& o) {
  const auto field = field_of(o);
  const auto w = weights_of(o);
  if (!o.degree) throw UsageError("--degree is required");
  if (o.exhaustive == o.random) throw UsageError("exactly one of --exhaustive and --random is required");
  Report r = start("eq", o, field);
  r.config["weights"] = w.weights();
  r.config["degree"] = *o.degree;
  r.config["mode"] = o.exhaustive ? "exhaustive" : "random";
  wpsq::SearchOptions opts;
  opts.threads = o.threads;
  opts.budget = o.budget.value_or(wpsq::kDefaultSearchBudget);
  opts.max_witnesses = o.witness_cap;
  r.config["budget"] = opts.budget;
  if (o.random) {
    r.config["trials"] = o.trials;
    r.config["seed"] = o.seed;
  }

  const auto mode = o.exhaustive ? wpsq::SearchMode::exhaustive : wpsq::SearchMode::random;
  std::optional<wpsq::SearchResult> result;
  bool cached = false;
  std::optional<wpsq::ResultCache> cache;
  if (!o.cache.empty()) {
    cache.emplace(o.cache);
    result = cache->lookup(w, *o.degree, mode, o.random ? std::optional(o.seed) : std::nullopt,
                           o.random ? std::optional(o.trials) : std::nullopt, field);
    cached = result.has_value();
  }
  if (!result) {
    result = o.exhaustive ? wpsq::eq_exhaustive(w, *o.degree, field, opts)
                          : wpsq::eq_random(w, *o.degree, field, o.trials, o.seed, opts);
    if (cache) cache->store(*result, field);
  }
  if (cache) r.config["cache"] = o.cache;
  r.results = wpsq::search_json(*result, field);
  r.results["from_cache"] = cached;

  const auto b = wpsq::bounds(*o.degree, w, field);
  r.body.push_back(std::string(o.exhaustive ? "e_q" : "random lower bound") + " = " + std::to_string(result->value));
  r.body.push_back("searched = " + std::to_string(result->searched) + (cached ? " (verified cache entry)" : ""));
  r.body.push_back("maximizers = " + std::to_string(result->maximizers));
  for (std::size_t k = 0; k < result->witnesses.size(); ++k) {
    r.body.push_back("witness: " + wpsq::format_poly(result->witness(k), field));
  }
  add_bounds(r, b);
  const auto v = static_cast<std::int64_t>(result->value);
  r.check({"value <= p_n", result->value <= b.pn, v, static_cast<std::int64_t>(b.pn), {}}, field);
  r.check({serre_check_name("value", b), result->value <= b.serre, v, static_cast<std::int64_t>(b.serre), {}}, field);
  if (result->construction) {
    r.check({"value >= product-of-forms count", result->value >= *result->construction, v,
             static_cast<std::int64_t>(*result->construction), {}},
            field);
  }
  for (const auto& c : r.checks) r.violation = r.violation || !c.at("pass").get<bool>();
  return emit(r, o, &field);
}

int cmd_reproduce(const Options& o) {
  const auto suite = wpsq::run_suite(o.suite, o.threads);
  Report r;
  r.config = {{"command", "reproduce"}, {"suite", o.suite}, {"threads", o.threads}};
  json rows = json::array();
  for (const auto& row : suite.rows) {
    json obj = json::object();
    for (std::size_t c = 0; c < suite.columns.size(); ++c) obj[suite.columns[c]] = row.cells[c];
    obj["match"] = row.match;
    obj["observation"] = row.observation;
    rows.push_back(obj);
  }
  r.results = {{"rows", rows}, {"notes", suite.notes}, {"all_match", suite.all_match()}};
  std::istringstream table(wpsq::format_table(suite));
  for (std::string line; std::getline(table, line);) r.body.push_back(line);
  r.body.push_back("suite " + suite.name + ": " + (suite.all_match() ? "all match" : "MISMATCH"));
  r.violation = !suite.all_match();
  return emit(r, o, nullptr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational points on hypersurfaces of weighted projective spaces over finite fields", "wpsq"};
  app.set_version_flag("--version", std::string(wpsq::kVersion));
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool needs_field) {
    if (needs_field) {
      sub->add_option("--q", o.q, "field order, p or p^k")->required();
      sub->add_option("--weights", o.weights, "comma-separated weights a0,a1,...")->required();
    }
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output", o.output, "write the report to this file");
    sub->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  };

  auto* points = app.add_subcommand("points", "list the rational points");
  common(points, true);
  points->add_flag("--list", o.list, "show all representatives of each point");

  auto* count = app.add_subcommand("count", "count the rational zeros of a polynomial");
  common(count, true);
  count->add_option("--poly", o.poly, "polynomial, e.g. \"X0*X1 + 2*X2\"")->required();
  count->add_option("--degree", o.degree, "expected weighted degree");
  count->add_flag("--list", o.list, "list the zeros");

  auto* bounds = app.add_subcommand("bounds", "upper and lower bounds for a degree");
  common(bounds, true);
  bounds->add_option("--degree", o.degree, "weighted degree")->required();

  auto* audit = app.add_subcommand("audit", "check the counting identities of the pullback maps");
  common(audit, true);
  audit->add_option("--prop", o.prop, "lesZi | antecedent | identities | mondo")
      ->check(CLI::IsMember({"lesZi", "antecedent", "identities", "mondo"}));
  audit->add_option("--index", o.index, "coordinate index i (default: all)");
  audit->add_option("--poly", o.poly, "polynomial for identities and mondo");
  audit->add_option("--degree", o.degree, "expected weighted degree");
  audit->add_option("--mode", o.mode, "partition reading")->check(CLI::IsMember({"literal", "disjoint"}));

  auto* eq = app.add_subcommand("eq", "maximal number of zeros in a degree");
  common(eq, true);
  eq->add_option("--degree", o.degree, "weighted degree")->required();
  auto* ex = eq->add_flag("--exhaustive", o.exhaustive, "search every polynomial up to scalars");
  auto* rnd = eq->add_flag("--random", o.random, "sample random polynomials");
  ex->excludes(rnd);
  eq->add_option("--trials", o.trials, "samples for --random")->check(CLI::PositiveNumber);
  eq->add_option("--seed", o.seed, "seed for --random");
  eq->add_option("--budget", o.budget, "maximum number of candidates");
  eq->add_option("--witnesses", o.witness_cap, "maximizers to keep");
  eq->add_option("--cache", o.cache, "JSON-lines result cache");

  auto* unscrew = app.add_subcommand("unscrew", "pull a polynomial back to the straight space");
  common(unscrew, true);
  unscrew->add_option("--poly", o.poly, "polynomial")->required();
  unscrew->add_option("--degree", o.degree, "expected weighted degree");
  unscrew->add_option("--budget", o.budget, "maximum number of leaves");

  auto* reproduce = app.add_subcommand("reproduce", "run an experiment suite");
  common(reproduce, false);
  reproduce->add_option("suite", o.suite, "suite name")->required()->check(CLI::IsMember(wpsq::suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*points) return cmd_points(o);
    if (*count) return cmd_count(o);
    if (*bounds) return cmd_bounds(o);
    if (*audit) return cmd_audit(o);
    if (*eq) return cmd_eq(o);
    if (*unscrew) return cmd_unscrew(o);
    if (*reproduce) return cmd_reproduce(o);
  } catch (const UsageError& e) {
    std::cerr << "wpsq: " << e.what() << '\n';
    return kUsage;
  } catch (const wpsq::Error& e) {
    std::cerr << "wpsq: " << wpsq::errc_name(e.code()) << ": " << e.what() << '\n';
    return e.code() == wpsq::Errc::io ? kCrash : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "wpsq: internal error: " << e.what() << '\n';
    return kCrash;
  }
  return kUsage;
}
