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

// Independence oracles for the complete binary matroid B_d and for partition
// matroids on subsets of F_2^d, plus the matroid greedy algorithm.

#ifndef BMPART_MATROID_H_
#define BMPART_MATROID_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "bmpart/gf2.h"

namespace bmpart {

// The complete binary matroid on F_2^d. The zero vector is its only loop.
class BinaryMatroid {
 public:
  explicit BinaryMatroid(int dim);

  int dim() const { return dim_; }

  // True iff the vectors are distinct and linearly independent. Throws
  // DimensionMismatch on vectors of another dimension.
  bool IsIndependent(std::span<const Gf2Vector> set) const;

 private:
  int dim_;
};

// A partition matroid P_0 .. P_{d-1} whose ground set is the union of the
// parts, a subset of F_2^d \ {0}. Parts may be empty. Part indices are
// 0-based.
class PartitionReduction {
 public:
  // Throws std::invalid_argument if there are not exactly `dim` parts, a
  // vector is out of range or zero, or a vector appears twice.
  PartitionReduction(int dim, std::vector<std::vector<Word>> parts,
                     bool validated = false);

  int dim() const { return dim_; }
  int num_parts() const { return static_cast<int>(parts_.size()); }
  const std::vector<std::vector<Word>>& parts() const { return parts_; }
  std::span<const Word> part(int i) const { return parts_[i]; }

  // Part index containing v, or -1 if v is outside the ground set.
  int PartOf(Word v) const { return part_of_[v]; }
  bool InGround(Word v) const { return part_of_[v] >= 0; }

  // Set once some checker (or a construction argument) has certified that
  // every transversal is independent in B_d.
  bool validated() const { return validated_; }
  void set_validated(bool validated) { validated_ = validated; }

  std::vector<std::size_t> PartSizes() const;
  std::size_t TotalSize() const { return total_size_; }
  std::size_t MaxPartSize() const;
  // |R| where R = F_2^d minus the union of the parts (includes zero).
  std::size_t ResidualSize() const {
    return (std::size_t{1} << dim_) - total_size_;
  }

 private:
  int dim_;
  std::vector<std::vector<Word>> parts_;
  std::vector<std::int8_t> part_of_;
  std::size_t total_size_ = 0;
  bool validated_;
};

enum class PartitionVerdict {
  kIndependent,
  kOutsideGround,  // some element is in no part
  kSharedPart,     // two elements fall in the same part
};

// Diagnostic form of the partition independence test.
PartitionVerdict ClassifyPartitionSet(const PartitionReduction& p,
                                      std::span<const Word> set);

bool IsIndependentBinary(const BinaryMatroid& m,
                         std::span<const Gf2Vector> set);
bool IsIndependentPartition(const PartitionReduction& p,
                            std::span<const Word> set);

struct WeightedElement {
  Word vector;
  double weight;
};

using IndependenceOracle = std::function<bool(std::span<const Word>)>;

IndependenceOracle BinaryOracle(int dim);
IndependenceOracle PartitionOracle(const PartitionReduction& p);

struct GreedyResult {
  std::vector<Word> set;
  double total_weight = 0.0;
};

// Matroid greedy. Elements are taken by decreasing weight (ties by vector
// ascending) and kept when the oracle accepts the extended set. Duplicate
// vectors are collapsed to their heaviest copy. Throws std::invalid_argument
// on a negative weight.
GreedyResult MaxWeightIndependent(const IndependenceOracle& oracle,
                                  std::vector<WeightedElement> elements);

}  // namespace bmpart

#endif  // BMPART_MATROID_H_
