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


#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wpsq/counting.hpp"
#include "wpsq/gf.hpp"
#include "wpsq/search.hpp"
#include "wpsq/wpoly.hpp"
#include "wpsq/wps.hpp"

namespace wpsq {

inline constexpr const char* kVersion = "1.0.0";

using json = nlohmann::json;

json field_json(const Field& field);
json point_json(const Coords& coords, const Field& field);
json poly_json(const WeightedPolynomial& f, const Field& field);
json witness_json(const Witness& w, const Field& field);
json check_json(const Check& c, const Field& field);
json bounds_json(const BoundSet& b);
json partition_json(const PartitionCounts& pc);
/// {prop, q, weights, i, poly, verdict, safe, lhs, rhs, witnesses, checks, ...}
json audit_json(const AuditReport& report, const Field& field);
json search_json(const SearchResult& result, const Field& field);

/// Append-only JSON-lines store of search results keyed by
/// (q, weights, d, mode) plus (seed, trials) for random runs. Entries are
/// recounted on lookup; a stale or corrupt entry is ignored.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path path) : path_(std::move(path)) {}

  std::optional<SearchResult> lookup(const WeightSystem& w, std::int64_t d, SearchMode mode,
                                     std::optional<std::uint64_t> seed, std::optional<std::uint64_t> trials,
                                     const Field& field) const;
  void store(const SearchResult& result, const Field& field) const;
  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace wpsq
