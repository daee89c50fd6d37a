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

// Matroid-secretary experiment on B_d against partition-reduction
// algorithms.
//
// Weights are indicators of a multiset X of d uniform draws from F_2^d. An
// algorithm observes a uniform sample S of fixed size, sees X1 = X n S,
// and maps (S, X1) to a partition reduction on the complement of S. Its
// value is bounded by opt_P(X2), the number of parts hit by X2 = X \ S;
// the benchmark is opt_B(w) = rank(X).

#ifndef BMPART_SECRETARY_H_
#define BMPART_SECRETARY_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bmpart/gf2.h"
#include "bmpart/matroid.h"
#include "bmpart/random.h"

namespace bmpart {

using Rational = boost::multiprecision::cpp_rational;

struct WeightAssignment {
  int dim = 0;
  std::vector<Word> x;  // d draws with replacement; may repeat, may be 0

  double Weight(Word v) const;
  std::vector<Word> Distinct() const;  // ascending
  // opt over B_d, which equals rank of the distinct draws.
  int Opt() const;
};

// d i.i.d. uniform draws from F_2^d. dim <= 24.
WeightAssignment SampleAdversarialWeights(int dim, Rng& rng);

// E[rank X] exactly, by a dynamic program over the span dimension r: each
// draw raises r with probability (2^d - 2^r) / 2^d. Throws IntegrityError
// if the result is below d / 2.
Rational ExactExpectedRank(int dim);

struct SampleSplit {
  VectorSet sample;
  std::vector<Word> x1;  // copies of X whose vector lies in S
  std::vector<Word> x2;  // the remaining copies
};

// S is a uniform subset of F_2^d with exactly sample_size elements.
SampleSplit SplitSample(const WeightAssignment& x, std::size_t sample_size,
                        Rng& rng);

// opt_P for indicator weights: the number of parts meeting x2.
int OptOnPartition(const PartitionReduction& p, std::span<const Word> x2);

// (S, X1, rng) -> partition reduction on a subset of the complement of S.
using PartitionMapping = std::function<PartitionReduction(
    const VectorSet& sample, std::span<const Word> sample_hits, Rng& rng)>;

struct MappingSpec {
  // "leading-bit", "gl-image" or "sample-adapted".
  std::string name = "leading-bit";
  // gl-image only: when set, one fixed map drawn from this seed; otherwise
  // a fresh map per trial.
  std::optional<std::uint64_t> seed;
};

// Throws std::invalid_argument on an unknown name.
PartitionMapping MakeMapping(const MappingSpec& spec, int dim);

// The leading-bit reduction pushed through `map` (identity if absent) and
// restricted to vectors outside `sample`. The result is validated.
PartitionReduction LeadingBitOutsideSample(const VectorSet& sample,
                                           const Gl2Map* map);

// Accepts an arriving element iff its weight is positive and it keeps the
// accepted set independent in B_d.
std::vector<Word> TrivialGreedy(int dim,
                                std::span<const WeightedElement> arrival);

struct TrialRecord {
  std::int64_t trial = 0;
  int opt_m = 0;
  int opt_p = 0;
  int x1_size = 0;
  int x2_in_t = 0;  // copies of X2 in the union of the parts kept in T
  int removals = 0;
  bool bound_ok = true;  // opt_p <= x2_in_t + removals
};

struct TrialOptions {
  // Certify every mapping output (exact for d <= 12, randomized above) and
  // throw std::logic_error on failure.
  bool validate_mapping = false;
};

TrialRecord RunTrial(int dim, const PartitionMapping& mapping,
                     std::size_t sample_size, Rng& rng,
                     const TrialOptions& options = {});

// Same weights, but the value is what TrivialGreedy collects when the
// distinct positive-weight vectors arrive in uniformly random order.
TrialRecord RunTrivialGreedyTrial(int dim, Rng& rng);

enum class Algorithm { kPartition, kTrivialGreedy };

std::string ToString(Algorithm algorithm);
Algorithm ParseAlgorithm(const std::string& name);

struct ExperimentConfig {
  int dim = 8;
  std::int64_t trials = 1000;
  std::optional<std::int64_t> sample_size;
  std::optional<double> fraction;  // of 2^d; used when sample_size is unset
  MappingSpec mapping;
  Algorithm algorithm = Algorithm::kPartition;
  std::uint64_t seed = 0;
  int jobs = 1;
  bool validate_mapping = false;

  // sample_size, else round(fraction 2^d), else 0.
  std::size_t ResolvedSampleSize() const;
};

struct ExperimentReport {
  int dim = 0;
  std::int64_t trials = 0;
  std::size_t sample_size = 0;
  std::string mapping;
  std::string algorithm;
  std::uint64_t seed = 0;
  double mean_opt_p = 0.0;
  double mean_opt_m = 0.0;
  double se_opt_p = 0.0;
  double se_opt_m = 0.0;
  double ratio = 0.0;      // mean_opt_p / mean_opt_m
  double std_error = 0.0;  // of ratio, delta method
  double exact_mean_opt_m = 0.0;
  double comparator_two_d_three_quarters = 0.0;  // 2 d^(3/4)
  double comparator_four_d_minus_quarter = 0.0;  // 4 d^(-1/4) mean_opt_m
  std::int64_t bound_checks_passed = 0;
  std::int64_t bound_checks_total = 0;
  std::vector<TrialRecord> per_trial;
};

// Trial t draws from Rng(DeriveSeed(seed, t)), so results do not depend on
// `jobs`. Throws std::invalid_argument if trials < 1 or the sample size is
// out of range.
ExperimentReport RunExperiment(const ExperimentConfig& config);

}  // namespace bmpart

#endif  // BMPART_SECRETARY_H_
