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

#include "bmpart/gf2.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace bmpart {

void CheckDim(int dim, int max_dim) {
  if (dim < 1 || dim > max_dim) {
    throw std::invalid_argument("dimension " + std::to_string(dim) +
                                " outside [1, " + std::to_string(max_dim) +
                                "]");
  }
}

Gf2Vector::Gf2Vector(Word bits, int dim) : bits_(bits), dim_(dim) {
  CheckDim(dim);
  if ((bits & ~DimMask(dim)) != 0) {
    throw std::invalid_argument("vector " + std::to_string(bits) +
                                " has bits above dimension " +
                                std::to_string(dim));
  }
}

Gf2Vector Gf2Vector::operator+(const Gf2Vector& other) const {
  if (dim_ != other.dim_) throw DimensionMismatch("Gf2Vector::operator+");
  return Gf2Vector(bits_ ^ other.bits_, dim_);
}

Gf2Basis::Gf2Basis(int dim) : dim_(dim) {
  CheckDim(dim);
  order_.reserve(dim);
}

Word Gf2Basis::Reduce(Word v) const {
  while (v != 0) {
    const Word row = pivot_rows_[LeadingBit(v)];
    if (row == 0) return v;
    v ^= row;
  }
  return 0;
}

bool Gf2Basis::InSpan(const Gf2Vector& v) const {
  if (v.dim() != dim_) throw DimensionMismatch("Gf2Basis::InSpan");
  return Reduce(v.bits()) == 0;
}

bool Gf2Basis::Insert(const Gf2Vector& v) {
  if (v.dim() != dim_) throw DimensionMismatch("Gf2Basis::Insert");
  return InsertBits(v.bits());
}

bool Gf2Basis::InsertBits(Word v) {
  v = Reduce(v);
  if (v == 0) return false;
  const int lead = LeadingBit(v);
  pivot_rows_[lead] = v;
  order_.push_back(static_cast<std::int8_t>(lead));
  return true;
}

std::vector<Gf2Vector> Gf2Basis::Rows() const {
  std::vector<Gf2Vector> rows;
  rows.reserve(order_.size());
  for (int b = dim_ - 1; b >= 0; --b) {
    if (pivot_rows_[b] != 0) rows.emplace_back(pivot_rows_[b], dim_);
  }
  return rows;
}

void Gf2Basis::Rollback(std::size_t checkpoint) {
  while (order_.size() > checkpoint) {
    pivot_rows_[order_.back()] = 0;
    order_.pop_back();
  }
}

int Rank(std::span<const Gf2Vector> vectors) {
  if (vectors.empty()) return 0;
  const int dim = vectors.front().dim();
  Gf2Basis basis(dim);
  for (const Gf2Vector& v : vectors) {
    if (v.dim() != dim) throw DimensionMismatch("Rank: mixed dimensions");
    basis.InsertBits(v.bits());
  }
  return basis.rank();
}

int RankBits(std::span<const Word> vectors) {
  std::array<Word, 32> pivots{};
  int rank = 0;
  for (Word v : vectors) {
    while (v != 0) {
      const int lead = LeadingBit(v);
      if (pivots[lead] == 0) {
        pivots[lead] = v;
        ++rank;
        break;
      }
      v ^= pivots[lead];
    }
  }
  return rank;
}

bool InSpan(const Gf2Basis& basis, const Gf2Vector& v) {
  return basis.InSpan(v);
}

namespace {

// Echelon rows that remember which input columns they combine.
struct TaggedEchelon {
  std::array<Word, kMaxVectorDim> value{};
  std::array<Word, kMaxVectorDim> combo{};

  bool Insert(Word v, Word tag) {
    while (v != 0) {
      const int lead = LeadingBit(v);
      if (value[lead] == 0) {
        value[lead] = v;
        combo[lead] = tag;
        return true;
      }
      v ^= value[lead];
      tag ^= combo[lead];
    }
    return false;
  }

  // Combination of inputs summing to target; target must be spanned.
  Word Express(Word target) const {
    Word tag = 0;
    while (target != 0) {
      const int lead = LeadingBit(target);
      target ^= value[lead];
      tag ^= combo[lead];
    }
    return tag;
  }
};

}  // namespace

Gl2Map::Gl2Map(std::vector<Word> columns) : columns_(std::move(columns)) {
  const int d = static_cast<int>(columns_.size());
  CheckDim(d);
  TaggedEchelon echelon;
  for (int j = 0; j < d; ++j) {
    if ((columns_[j] & ~DimMask(d)) != 0 ||
        !echelon.Insert(columns_[j], Word{1} << j)) {
      throw std::invalid_argument("Gl2Map: columns are not invertible");
    }
  }
}

Gl2Map Gl2Map::Identity(int dim) {
  CheckDim(dim);
  std::vector<Word> columns(dim);
  for (int j = 0; j < dim; ++j) columns[j] = Word{1} << j;
  return Gl2Map(std::move(columns));
}

Word Gl2Map::Apply(Word v) const {
  Word out = 0;
  while (v != 0) {
    out ^= columns_[std::countr_zero(v)];
    v &= v - 1;
  }
  return out;
}

Gf2Vector Gl2Map::Apply(const Gf2Vector& v) const {
  if (v.dim() != dim()) throw DimensionMismatch("Gl2Map::Apply");
  return Gf2Vector(Apply(v.bits()), v.dim());
}

Gl2Map Gl2Map::Inverse() const {
  const int d = dim();
  TaggedEchelon echelon;
  for (int j = 0; j < d; ++j) echelon.Insert(columns_[j], Word{1} << j);
  std::vector<Word> inverse(d);
  for (int i = 0; i < d; ++i) inverse[i] = echelon.Express(Word{1} << i);
  return Gl2Map(std::move(inverse));
}

Gl2Map Gl2Map::Compose(const Gl2Map& other) const {
  if (other.dim() != dim()) throw DimensionMismatch("Gl2Map::Compose");
  std::vector<Word> columns(dim());
  for (int j = 0; j < dim(); ++j) columns[j] = Apply(other.columns_[j]);
  return Gl2Map(std::move(columns));
}

std::vector<Word> Gl2Map::ImageTable() const {
  if (dim() > kMaxSpaceDim) throw GuardExceeded("Gl2Map::ImageTable");
  const std::size_t n = std::size_t{1} << dim();
  std::vector<Word> image(n);
  for (std::size_t v = 1; v < n; ++v) {
    image[v] = image[v & (v - 1)] ^ columns_[std::countr_zero(v)];
  }
  return image;
}

Gl2Map RandomGl2(int dim, Rng& rng) {
  CheckDim(dim);
  std::vector<Word> columns(dim);
  for (;;) {
    for (Word& c : columns) c = static_cast<Word>(rng.NextU64()) & DimMask(dim);
    if (RankBits(columns) == dim) return Gl2Map(columns);
  }
}

VectorSet::VectorSet(int dim) : dim_(dim) {
  CheckDim(dim, kMaxSpaceDim);
  words_.assign((universe_size() + 63) / 64, 0);
}

bool VectorSet::Insert(Word v) {
  std::uint64_t& w = words_[v >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if (w & bit) return false;
  w |= bit;
  ++size_;
  return true;
}

bool VectorSet::Erase(Word v) {
  std::uint64_t& w = words_[v >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if (!(w & bit)) return false;
  w &= ~bit;
  --size_;
  return true;
}

void VectorSet::Clear() {
  std::fill(words_.begin(), words_.end(), 0);
  size_ = 0;
}

std::vector<Word> VectorSet::ToVector() const {
  std::vector<Word> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      out.push_back(static_cast<Word>(i * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

// Draws a fair coin per position, then adds or removes uniformly random
// elements until the size is exact. Every step commutes with relabeling the
// ground set, so the result is uniform over subsets of the requested size.
VectorSet VectorSet::RandomSubset(int dim, std::size_t size, Rng& rng) {
  VectorSet set(dim);
  const std::size_t n = set.universe_size();
  if (size > n) {
    throw std::invalid_argument("RandomSubset: size exceeds 2^dim");
  }
  if (size == n) {
    for (Word v = 0; v < n; ++v) set.Insert(v);
    return set;
  }
  if (size == 0) return set;
  if (size < n / 4 || size > n - n / 4) {
    // Far from n/2 the coin start would need many corrections; start from
    // the nearer extreme instead.
    if (size < n / 4) {
      while (set.size_ < size) set.Insert(static_cast<Word>(rng.Below(n)));
    } else {
      for (Word v = 0; v < n; ++v) set.Insert(v);
      while (set.size_ > size) set.Erase(static_cast<Word>(rng.Below(n)));
    }
    return set;
  }
  const std::uint64_t last_mask =
      n % 64 == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n % 64)) - 1;
  std::size_t count = 0;
  for (std::size_t i = 0; i < set.words_.size(); ++i) {
    std::uint64_t w = rng.NextU64();
    if (i + 1 == set.words_.size()) w &= last_mask;
    set.words_[i] = w;
    count += std::popcount(w);
  }
  set.size_ = count;
  while (set.size_ > size) set.Erase(static_cast<Word>(rng.Below(n)));
  while (set.size_ < size) set.Insert(static_cast<Word>(rng.Below(n)));
  return set;
}

}  // namespace bmpart
