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

// Certifying and falsifying partition reductions of B_d, plus generators for
// reductions that are valid by construction.
//
// A partition matroid on parts P_0 .. P_{d-1} is a reduction of B_d iff every
// transversal (at most one element per part) is linearly independent.

#ifndef BMPART_REDUCTION_H_
#define BMPART_REDUCTION_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bmpart/gf2.h"
#include "bmpart/matroid.h"
#include "bmpart/random.h"

namespace bmpart {

inline constexpr int kMaxExactCheckDim = 20;

struct TransversalEntry {
  int part;
  Word vector;

  friend bool operator==(const TransversalEntry&,
                         const TransversalEntry&) = default;
};

enum class CheckMethod { kExact, kRandomized };

std::string ToString(CheckMethod method);

struct ValidityCertificate {
  bool valid = true;
  // Present iff !valid: elements from pairwise distinct parts whose rank is
  // smaller than their count.
  std::optional<std::vector<TransversalEntry>> witness;
  CheckMethod method = CheckMethod::kExact;
  std::int64_t trials = 0;
};

// Exact decision. Grows, part by part, the set N of XORs of nonempty partial
// transversals; part k closes a dependence iff it meets N. Sumsets are
// computed directly when small and by Walsh-Hadamard convolution otherwise,
// so the cost is O(d^2 2^d) in the worst case.
//
// Throws GuardExceeded if dim > kMaxExactCheckDim.
ValidityCertificate CheckReductionExact(const PartitionReduction& p);

// Depth-first search over transversals (parts in decreasing size order)
// with an incremental basis. Exponential; intended for small instances and
// as a second route for the exact checker. Throws GuardExceeded once
// `node_budget` search nodes have been expanded.
ValidityCertificate CheckReductionDfs(const PartitionReduction& p,
                                      std::int64_t node_budget = 10'000'000);

// One-sided falsifier: samples transversals (each nonempty part joins with
// probability 1/2, contributing a uniform element). valid=false is certain;
// valid=true only means no dependence was sampled. Throws
// std::invalid_argument if trials < 1.
ValidityCertificate CheckReductionRandomized(const PartitionReduction& p,
                                             std::int64_t trials, Rng& rng);

// Part b holds every vector whose highest set bit is b, so |P_b| = 2^b and
// the parts cover F_2^d \ {0}. Valid: a transversal is triangular.
PartitionReduction LeadingBitReduction(int dim);

// Image of p under an invertible linear map. Validity and part sizes are
// preserved, and so is the validated flag.
PartitionReduction TransformReduction(const PartitionReduction& p,
                                      const Gl2Map& map);

struct PairSumViolation {
  Word x;
  Word y;
  int part_x;
  int part_y;
  int part_sum;
};

// For each cross-part pair x in P_i, y in P_j (i < j), where x + y landed.
struct PairSumReport {
  std::int64_t pairs = 0;
  std::int64_t into_first_part = 0;   // x + y in P_i
  std::int64_t into_second_part = 0;  // x + y in P_j
  std::int64_t into_residual = 0;     // x + y outside every part
  std::int64_t violations = 0;        // x + y in a third part
  std::optional<PairSumViolation> first_violation;
};

inline constexpr std::size_t kMaxPairLoopElements = std::size_t{1} << 12;

// Throws GuardExceeded if the parts hold more than 2^12 elements.
PairSumReport VerifyPairSums(const PartitionReduction& p);

// Deletes each element independently with probability q. Deletion keeps a
// valid reduction valid, so the validated flag is inherited.
PartitionReduction PruneReduction(const PartitionReduction& p, double q,
                                  Rng& rng);

// Moves one uniformly chosen element into a different, uniformly chosen
// part. The result is unvalidated. Requires a nonempty ground set and
// dim >= 2.
PartitionReduction MoveRandomVector(const PartitionReduction& p, Rng& rng);

// Each nonzero vector joins a uniform random part with probability
// `density`, and is left out otherwise. Unvalidated.
PartitionReduction RandomCandidateReduction(int dim, double density,
                                            Rng& rng);

struct CorpusEntry {
  std::string label;
  PartitionReduction reduction;
};

// Reductions that are valid by construction: the leading-bit reduction,
// `gl_images` images of it under random invertible maps, and prunings of
// each with q = 1/4 and q = 1/2.
std::vector<CorpusEntry> BuildValidCorpus(int dim, int gl_images,
                                          std::uint64_t seed);

}  // namespace bmpart

#endif  // BMPART_REDUCTION_H_
