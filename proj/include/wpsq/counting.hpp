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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wpsq/gf.hpp"
#include "wpsq/wpoly.hpp"
#include "wpsq/wps.hpp"

namespace wpsq {

/// Caches the point list of each weight system it is asked about. Not
/// thread-safe; use one per worker.
class SpaceCache {
 public:
  explicit SpaceCache(const Field& field) : field_(field) {}

  const std::vector<CanonicalPoint>& points(const WeightSystem& w);
  const Field& field() const noexcept { return field_; }

 private:
  const Field& field_;
  std::map<std::vector<std::int64_t>, std::vector<CanonicalPoint>> cache_;
};

/// N(f): the number of rational points on V(f). Throws Errc::zero_polynomial.
std::uint64_t count_zeros(const WeightedPolynomial& f, const Field& field);
std::uint64_t count_zeros(const WeightedPolynomial& f, const std::vector<CanonicalPoint>& points,
                          const Field& field);
std::vector<CanonicalPoint> zero_set(const WeightedPolynomial& f, const std::vector<CanonicalPoint>& points,
                                     const Field& field);

/// Membership of one point in the coordinate-defined classes for index i,
/// read off its q - 1 representatives.
struct LiteralClasses {
  bool origin = false;  // the point is O_i
  bool r = false;       // some representative has y_i = 0, or origin
  bool t = false;       // some representative has y_i = 1, and not origin
  bool i = false;       // some representative has y_i outside Delta^{a_i} (and nonzero)
  std::vector<bool> z;  // z[m]: some representative has y_i = delta^m, m in [0, q-1)

  bool z_at(std::int64_t j, std::uint32_t group_order) const {
    return z[static_cast<std::size_t>(((j % group_order) + group_order) % group_order)];
  }
  int class_count() const { return int(r) + int(t) + int(i); }
};

LiteralClasses literal_classes(const CanonicalPoint& point, std::size_t i, const WeightSystem& w,
                               const Field& field);

enum class PartitionMode { literal, disjoint };

struct PartitionCounts {
  std::size_t index = 0;
  PartitionMode mode = PartitionMode::disjoint;
  std::uint32_t r = 1;
  std::uint64_t examined = 0;
  std::uint64_t R = 0, T = 0, I = 0;
  std::vector<std::uint64_t> Z;  // Z[j - 1] for j = 1 .. r - 1
  std::vector<Coords> overlap;   // points in more than one of R, T, I (literal reading)

  std::uint64_t z(std::size_t j) const { return Z.at(j - 1); }
};

/// Classifies the points of V(f), or every point when f is absent.
/// Literal mode counts every class a point belongs to. Disjoint mode assigns
/// R before T before I; Z[j] counts points outside R with a representative
/// y_i = delta^j.
PartitionCounts partition_counts(const WeightedPolynomial* f, const WeightSystem& w, std::size_t i,
                                 PartitionMode mode, const Field& field);
PartitionCounts partition_counts(const WeightedPolynomial& f, std::size_t i, PartitionMode mode, const Field& field);

struct PreimageResult {
  std::uint64_t count = 0;
  std::vector<Coords> preimages;  // canonical points of the upstairs space
};

/// Fiber of pi_i over P, found by enumerating P(a_0, ..., 1, ..., a_n).
PreimageResult preimage_count(const CanonicalPoint& point, std::size_t i, const WeightSystem& w, const Field& field);

/// Fiber sizes of pi_i over every point of the target space.
std::map<Coords, std::uint64_t> fiber_sizes(const WeightSystem& w, std::size_t i, const Field& field);

/// SAFE when every support I containing i with |I| >= 2 has
/// gcd(a_i / d_I, q - 1) == gcd(a_i, q - 1).
bool is_safe(const WeightSystem& w, std::size_t i, const Field& field);

struct BoundSet {
  std::uint64_t pn = 0;
  std::uint64_t serre = 0;
  std::optional<std::uint64_t> conjecture;
  std::optional<std::uint64_t> lower;
  std::optional<std::int64_t> conjecture_a1;  // smallest weight besides the weight-1 coordinate
  std::int64_t lower_a = 0;                   // min lcm(a_r, a_s) over r < s
  std::string conjecture_note;
  std::string lower_note;
  bool serre_vacuous = false;                 // serre >= p_n
};

BoundSet bounds(std::int64_t d, const WeightSystem& w, const Field& field);

enum class Proposition { les_zi, antecedent, identities, mondo, unscrew };
enum class Verdict { pass, fail, inapplicable };

const char* proposition_name(Proposition p) noexcept;
const char* verdict_name(Verdict v) noexcept;

struct Witness {
  std::string label;
  std::optional<Coords> point;
  std::vector<std::int64_t> values;
};

struct Check {
  std::string name;
  bool pass = true;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  std::vector<Witness> witnesses;
};

struct AuditReport {
  Proposition prop = Proposition::les_zi;
  std::uint32_t q = 0;
  std::vector<std::int64_t> weights;
  std::optional<std::size_t> index;
  std::string poly;
  Verdict verdict = Verdict::pass;
  bool safe = true;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  std::vector<Witness> witnesses;
  std::vector<Check> checks;
  std::vector<Coords> overlap;
  std::optional<bool> equality;          // audit_mondo
  std::optional<bool> coprime_condition;  // audit_mondo: (a_j, a_k) = 1 for 1 <= j != k <= n
  std::vector<std::string> notes;

  /// A failure on a SAFE configuration; failures elsewhere are observations.
  bool violation() const noexcept {
    if (!safe) return false;
    if (verdict == Verdict::fail) return true;
    for (const auto& c : checks) {
      if (!c.pass) return true;
    }
    return false;
  }
};

/// Set identities of the Z_i(j) classes in literal reading over all points
/// other than O_i, whose membership is fixed by R_i containing it.
AuditReport audit_lesZi(const WeightSystem& w, const Field& field, std::size_t i);

/// Enumerated fiber sizes of pi_i against 1 / r_i / 0 for the disjoint class.
AuditReport audit_antecedent(const WeightSystem& w, const Field& field, std::size_t i);

AuditReport audit_identities(const WeightedPolynomial& f, std::size_t i, const Field& field);
AuditReport audit_identities(const WeightedPolynomial& f, std::size_t i, SpaceCache& spaces);

/// r_i N(f) <= sum_{j < r_i} N(pi_i^*(f o sigma_i^j)), compared without division.
AuditReport audit_mondo(const WeightedPolynomial& f, std::size_t i, const Field& field);
AuditReport audit_mondo(const WeightedPolynomial& f, std::size_t i, SpaceCache& spaces);

/// True when (a_j, a_k) = 1 for every 1 <= j != k <= n.
bool pairwise_coprime_tail(const WeightSystem& w);

inline constexpr std::uint64_t kDefaultUnscrewBudget = 10'000;

struct UnscrewResult {
  std::vector<WeightedPolynomial> leaves;  // on (1, ..., 1), order j_0 major
  std::vector<std::uint32_t> r;            // r_0 .. r_n along the chain
  std::vector<std::uint64_t> leaf_counts;
  AuditReport report;
};

/// Pulls f back along pi_0, ..., pi_n with all twists, down to P^n.
UnscrewResult unscrew(const WeightedPolynomial& f, const Field& field, std::uint64_t budget = kDefaultUnscrewBudget);
UnscrewResult unscrew(const WeightedPolynomial& f, SpaceCache& spaces, std::uint64_t budget = kDefaultUnscrewBudget);

}  // namespace wpsq
