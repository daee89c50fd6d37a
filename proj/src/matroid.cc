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

#include "bmpart/matroid.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

namespace bmpart {

BinaryMatroid::BinaryMatroid(int dim) : dim_(dim) { CheckDim(dim); }

bool BinaryMatroid::IsIndependent(std::span<const Gf2Vector> set) const {
  Gf2Basis basis(dim_);
  for (const Gf2Vector& v : set) {
    if (v.dim() != dim_) throw DimensionMismatch("BinaryMatroid");
  }
  // A repeated vector fails insertion, so duplicates read as dependent.
  for (const Gf2Vector& v : set) {
    if (!basis.InsertBits(v.bits())) return false;
  }
  return true;
}

PartitionReduction::PartitionReduction(int dim,
                                       std::vector<std::vector<Word>> parts,
                                       bool validated)
    : dim_(dim), parts_(std::move(parts)), validated_(validated) {
  CheckDim(dim, kMaxSpaceDim);
  if (static_cast<int>(parts_.size()) != dim) {
    throw std::invalid_argument("PartitionReduction: expected " +
                                std::to_string(dim) + " parts, got " +
                                std::to_string(parts_.size()));
  }
  part_of_.assign(std::size_t{1} << dim, -1);
  const Word limit = Word{1} << dim;
  for (int i = 0; i < dim; ++i) {
    for (Word v : parts_[i]) {
      if (v == 0) {
        throw std::invalid_argument(
            "PartitionReduction: zero vector is a loop and cannot be in a part");
      }
      if (v >= limit) {
        throw std::invalid_argument("PartitionReduction: vector " +
                                    std::to_string(v) + " out of range");
      }
      if (part_of_[v] >= 0) {
        throw std::invalid_argument("PartitionReduction: vector " +
                                    std::to_string(v) +
                                    " appears in more than one place");
      }
      part_of_[v] = static_cast<std::int8_t>(i);
    }
    total_size_ += parts_[i].size();
  }
}

std::vector<std::size_t> PartitionReduction::PartSizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(parts_.size());
  for (const auto& part : parts_) sizes.push_back(part.size());
  return sizes;
}

std::size_t PartitionReduction::MaxPartSize() const {
  std::size_t best = 0;
  for (const auto& part : parts_) best = std::max(best, part.size());
  return best;
}

PartitionVerdict ClassifyPartitionSet(const PartitionReduction& p,
                                      std::span<const Word> set) {
  std::uint32_t used = 0;
  bool shared = false;
  const Word limit = Word{1} << p.dim();
  for (Word v : set) {
    if (v >= limit || !p.InGround(v)) return PartitionVerdict::kOutsideGround;
    const std::uint32_t bit = std::uint32_t{1} << p.PartOf(v);
    if (used & bit) shared = true;
    used |= bit;
  }
  return shared ? PartitionVerdict::kSharedPart
                : PartitionVerdict::kIndependent;
}

bool IsIndependentBinary(const BinaryMatroid& m,
                         std::span<const Gf2Vector> set) {
  return m.IsIndependent(set);
}

bool IsIndependentPartition(const PartitionReduction& p,
                            std::span<const Word> set) {
  return ClassifyPartitionSet(p, set) == PartitionVerdict::kIndependent;
}

IndependenceOracle BinaryOracle(int dim) {
  CheckDim(dim);
  return [dim](std::span<const Word> set) {
    const Word mask = DimMask(dim);
    for (Word v : set) {
      if ((v & ~mask) != 0) throw DimensionMismatch("BinaryOracle");
    }
    return RankBits(set) == static_cast<int>(set.size());
  };
}

IndependenceOracle PartitionOracle(const PartitionReduction& p) {
  return [&p](std::span<const Word> set) {
    return IsIndependentPartition(p, set);
  };
}

GreedyResult MaxWeightIndependent(const IndependenceOracle& oracle,
                                  std::vector<WeightedElement> elements) {
  for (const WeightedElement& e : elements) {
    if (!(e.weight >= 0.0)) {
      throw std::invalid_argument("MaxWeightIndependent: negative weight");
    }
  }
  std::sort(elements.begin(), elements.end(),
            [](const WeightedElement& a, const WeightedElement& b) {
              if (a.weight != b.weight) return a.weight > b.weight;
              return a.vector < b.vector;
            });
  GreedyResult result;
  std::unordered_set<Word> seen;
  for (const WeightedElement& e : elements) {
    if (!seen.insert(e.vector).second) continue;
    result.set.push_back(e.vector);
    if (oracle(result.set)) {
      result.total_weight += e.weight;
    } else {
      result.set.pop_back();
    }
  }
  return result;
}

}  // namespace bmpart
