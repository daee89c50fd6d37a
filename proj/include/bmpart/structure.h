// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Structural statistics of partition reductions of B_d and covering numbers
// of B_d \ {0}.
//
// Every threshold below is compared in exact integer arithmetic; doubles in
// the reports are for display only.

#ifndef BMPART_STRUCTURE_H_
#define BMPART_STRUCTURE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bmpart/gf2.h"
#include "bmpart/matroid.h"
#include "bmpart/reduction.h"

namespace bmpart {

struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double value() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

// Reduced to lowest terms. den must be nonzero.
Fraction MakeFraction(std::uint64_t num, std::uint64_t den);

// Cross-part pairs (x in P_i, y in P_j, i < j) classified by whether x + y
// lies in R = F_2^d minus the parts, against the bound 2 max|P_i| |R|.
struct PairCountReport {
  std::int64_t cross_pairs_total = 0;
  std::int64_t pairs_into_r = 0;
  std::int64_t pairs_into_parts = 0;
  std::int64_t bound = 0;
  std::int64_t max_part = 0;
  std::int64_t r_size = 0;
  bool holds = true;
};

// Throws GuardExceeded above 2^12 elements.
PairCountReport CountPairs(const PartitionReduction& p);

// max|P_i| against c n / 8 with n = sum |P_i| and c = n / 2^d, i.e. against
// n^2 / 2^(d+3).
struct MaxPartReport {
  std::int64_t max_part = 0;
  std::int64_t n = 0;
  Fraction c;
  Fraction bound;
  // Strict inequality max|P_i| > c n / 8. Vacuously true when n = 0.
  bool holds = true;
};

MaxPartReport CheckMaxPartBound(const PartitionReduction& p);

struct HeavyPartReport {
  std::vector<int> t_set;    // surviving part indices, ascending
  std::vector<int> removed;  // in removal order
  std::int64_t union_size_initial = 0;
  std::int64_t union_size_final = 0;
  int removals = 0;
  // floor(2^d / d^(1/4)); comparisons use the exact real threshold.
  std::int64_t threshold = 0;
  int removal_cap = 0;  // ceil(8 sqrt(d))
  bool within_cap = true;
  bool final_below_threshold = true;
};

// |U| >= 2^d / d^(1/4), evaluated as |U|^4 d >= 2^(4d).
bool AtLeastHeavyThreshold(std::uint64_t union_size, int dim);
std::int64_t HeavyThresholdFloor(int dim);
int RemovalCap(int dim);  // ceil(8 sqrt(d))

// Starting from all parts, repeatedly removes the largest remaining part
// (lowest index on ties) while the union of the rest is at least
// 2^d / d^(1/4). Throws IntegrityError if a validated reduction needs more
// than ceil(8 sqrt(d)) removals.
HeavyPartReport ExtractHeavyParts(const PartitionReduction& p);
// Same loop on bare part sizes.
HeavyPartReport ExtractHeavyParts(int dim, std::span<const std::size_t> sizes,
                                  bool validated);

inline constexpr int kMaxBetaEnumerationDim = 6;
inline constexpr int kMaxCoverConstructionDim = 10;

struct CoverReport {
  Fraction beta;
  int witness_flat_rank = 0;
  std::int64_t covering_number = 0;
  // Pairwise disjoint independent sets whose union is F_2^d \ {0}.
  std::optional<std::vector<std::vector<Word>>> cover;
  std::optional<std::string> warning;
};

// beta = max over nonempty F of |F| / rank(F), reported with the rank of a
// maximizing flat (the largest such rank). The full ground set
// F_2^d \ {0} uses the closed form (2^d - 1) / d at any d; other ground sets
// enumerate every subspace and need d <= 6 (GuardExceeded otherwise).
// Throws std::invalid_argument if the ground set is empty or contains 0.
CoverReport ComputeBeta(std::span<const Word> ground, int dim);
CoverReport ComputeBetaFull(int dim);
// Subspace enumeration regardless of the ground set. d <= 6.
CoverReport ComputeBetaEnumerated(std::span<const Word> ground, int dim);

// Splits the orbit of a primitive element of GF(2^d) into runs of d
// consecutive powers. Any d consecutive powers are independent, so this
// covers F_2^d \ {0} with ceil((2^d - 1) / d) independent sets.
std::vector<std::vector<Word>> CyclicCover(int dim);

// Degree-d primitive polynomial over F_2 without its leading term, as a bit
// mask (bit k = coefficient of x^k). Smallest such mask.
Word PrimitivePolynomial(int dim);

// ceil((2^d - 1) / d), with an explicit certified cover when d <= 10.
CoverReport CoveringNumber(int dim);

// Checks a proposed cover of F_2^d \ {0}: each set independent, sets
// pairwise disjoint, union complete.
bool IsValidCover(const std::vector<std::vector<Word>>& cover, int dim);

struct RefutationRow {
  std::string label;
  std::int64_t max_part = 0;
  bool meets_floor = false;  // 8 max|P_i| >= 2^d - 1
  bool violates = false;     // max|P_i| > 2k
};

struct RefutationReport {
  int dim = 0;
  std::int64_t k = 0;  // covering number of B_d \ {0}
  std::int64_t two_k = 0;
  Fraction floor_bound;  // (2^d - 1) / 8, unreduced
  // (2^d - 1) / 8 > 2k: every valid full-support reduction violates.
  bool refuted = false;
  std::vector<RefutationRow> rows;

  std::string verdict() const { return refuted ? "refuted" : "inconclusive"; }
};

// Every corpus entry must have full support F_2^d \ {0} and be validated;
// otherwise std::invalid_argument. Throws IntegrityError if a validated
// reduction falls below the (2^d - 1) / 8 floor.
RefutationReport RefutationCertificate(int dim,
                                       const std::vector<CorpusEntry>& corpus);

// Columns: d,max_part,k,2k,bound,verdict.
std::string RefutationCsv(const RefutationReport& report);

}  // namespace bmpart

#endif  // BMPART_STRUCTURE_H_
