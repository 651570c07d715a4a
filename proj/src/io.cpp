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

#include "wpsq/io.hpp"

#include <fstream>

#include "wpsq/error.hpp"

namespace wpsq {

json field_json(const Field& field) {
  return {{"q", field.q()},
          {"p", field.p()},
          {"k", field.k()},
          {"modulus", field.modulus_string()},
          {"delta", field.encoding(field.delta())}};
}

json point_json(const Coords& coords, const Field& field) {
  json out = json::array();
  for (const Elem& e : coords) out.push_back(field.format(e));
  return out;
}

json poly_json(const WeightedPolynomial& f, const Field& field) {
  json terms = json::array();
  for (const auto& [m, c] : f.terms()) terms.push_back({{"exps", m}, {"coeff", field.format(c)}});
  return {{"degree", f.degree()}, {"weights", f.weights().weights()}, {"text", format_poly(f, field)}, {"terms", terms}};
}

json witness_json(const Witness& w, const Field& field) {
  json out = {{"label", w.label}, {"values", w.values}};
  if (w.point) out["point"] = format_point(*w.point, field);
  return out;
}

json check_json(const Check& c, const Field& field) {
  json ws = json::array();
  for (const auto& w : c.witnesses) ws.push_back(witness_json(w, field));
  return {{"name", c.name}, {"pass", c.pass}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"witnesses", ws}};
}

json bounds_json(const BoundSet& b) {
  json out = {{"p_n", b.pn}, {"serre", b.serre}, {"serre_vacuous", b.serre_vacuous}, {"lower_a", b.lower_a}};
  out["conjecture"] = b.conjecture ? json(*b.conjecture) : json(nullptr);
  out["lower"] = b.lower ? json(*b.lower) : json(nullptr);
  if (b.conjecture_a1) out["conjecture_a1"] = *b.conjecture_a1;
  if (!b.conjecture_note.empty()) out["conjecture_note"] = b.conjecture_note;
  if (!b.lower_note.empty()) out["lower_note"] = b.lower_note;
  return out;
}

json partition_json(const PartitionCounts& pc) {
  return {{"index", pc.index},
          {"mode", pc.mode == PartitionMode::literal ? "literal" : "disjoint"},
          {"r", pc.r},
          {"examined", pc.examined},
          {"R", pc.R},
          {"T", pc.T},
          {"I", pc.I},
          {"Z", pc.Z},
          {"overlap", pc.overlap.size()}};
}

json audit_json(const AuditReport& report, const Field& field) {
  json witnesses = json::array();
  for (const auto& w : report.witnesses) witnesses.push_back(witness_json(w, field));
  json checks = json::array();
  for (const auto& c : report.checks) checks.push_back(check_json(c, field));
  json overlap = json::array();
  for (const auto& p : report.overlap) overlap.push_back(format_point(p, field));
  json out = {{"prop", proposition_name(report.prop)},
              {"q", report.q},
              {"weights", report.weights},
              {"i", report.index ? json(*report.index) : json(nullptr)},
              {"poly", report.poly.empty() ? json(nullptr) : json(report.poly)},
              {"verdict", verdict_name(report.verdict)},
              {"safe", report.safe},
              {"lhs", report.lhs},
              {"rhs", report.rhs},
              {"witnesses", witnesses},
              {"checks", checks},
              {"overlap", overlap},
              {"notes", report.notes}};
  if (report.equality) out["equality"] = *report.equality;
  if (report.coprime_condition) out["coprime_condition"] = *report.coprime_condition;
  return out;
}

json search_json(const SearchResult& result, const Field& field) {
  json witnesses = json::array();
  for (std::size_t k = 0; k < result.witnesses.size(); ++k) {
    witnesses.push_back(format_poly(result.witness(k), field));
  }
  json basis = json::array();
  for (const auto& m : result.basis) basis.push_back(m);
  json out = {{"q", result.q},
              {"weights", result.weights},
              {"d", result.degree},
              {"mode", search_mode_name(result.mode)},
              {"value", result.value},
              {"witnesses", witnesses},
              {"maximizers", result.maximizers},
              {"searched", result.searched},
              {"exhaustive", result.exhaustive},
              {"basis_size", result.basis.size()}};
  if (result.seed) out["seed"] = *result.seed;
  if (result.construction) out["construction"] = *result.construction;
  return out;
}

namespace {

std::optional<SearchResult> from_cache_entry(const json& e, const WeightSystem& w, std::int64_t d,
                                             SearchMode mode, const Field& field) {
  SearchResult r;
  r.q = field.q();
  r.weights = w.weights();
  r.degree = d;
  r.mode = mode;
  r.basis = monomial_basis(w, d);
  r.value = e.at("value").get<std::uint64_t>();
  r.searched = e.at("searched").get<std::uint64_t>();
  r.maximizers = e.value("maximizers", std::uint64_t{0});
  r.exhaustive = mode == SearchMode::exhaustive;
  if (e.contains("seed")) r.seed = e.at("seed").get<std::uint64_t>();
  for (const auto& text : e.at("witnesses")) {
    const WeightedPolynomial f = parse_poly(text.get<std::string>(), w, field);
    if (f.degree() != d) return std::nullopt;
    std::vector<Elem> dense(r.basis.size(), field.zero());
    for (const auto& [m, c] : f.terms()) {
      const auto it = std::find(r.basis.begin(), r.basis.end(), m);
      if (it == r.basis.end()) return std::nullopt;
      dense[static_cast<std::size_t>(it - r.basis.begin())] = c;
    }
    r.witnesses.push_back(std::move(dense));
  }
  if (!verify_result(r, field)) return std::nullopt;
  if (r.exhaustive) r.construction = construction_count(w, d, field);
  return r;
}

}  // namespace

std::optional<SearchResult> ResultCache::lookup(const WeightSystem& w, std::int64_t d, SearchMode mode,
                                                std::optional<std::uint64_t> seed,
                                                std::optional<std::uint64_t> trials, const Field& field) const {
  std::ifstream in(path_);
  if (!in) return std::nullopt;
  std::optional<SearchResult> found;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      const json e = json::parse(line);
      if (e.at("version") != kVersion || e.at("q") != field.q() || e.at("weights") != w.weights() ||
          e.at("d") != d || e.at("mode") != search_mode_name(mode)) {
        continue;
      }
      if (mode == SearchMode::random && (!e.contains("seed") || e.at("seed") != seed || e.at("searched") != trials)) {
        continue;
      }
      if (auto r = from_cache_entry(e, w, d, mode, field)) found = std::move(r);
    } catch (const json::exception&) {
      continue;
    } catch (const Error&) {
      continue;
    }
  }
  return found;
}

void ResultCache::store(const SearchResult& result, const Field& field) const {
  json e = search_json(result, field);
  json entry = {{"q", e["q"]},
                {"weights", e["weights"]},
                {"d", e["d"]},
                {"mode", e["mode"]},
                {"value", e["value"]},
                {"witnesses", e["witnesses"]},
                {"searched", e["searched"]},
                {"maximizers", e["maximizers"]},
                {"version", kVersion}};
  if (result.seed) entry["seed"] = *result.seed;
  std::ofstream out(path_, std::ios::app);
  if (!out) throw Error(Errc::io, "cannot open cache file " + path_.string());
  out << entry.dump() << '\n';
  if (!out) throw Error(Errc::io, "cannot write cache file " + path_.string());
}

}  // namespace wpsq
