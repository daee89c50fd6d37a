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

// Bit-packed linear algebra over F_2^d.
//
// A vector is an unsigned integer: bit k holds coordinate k+1. Addition is
// XOR. Dimensions are capped at 30 for vector arithmetic and at 24 for
// anything that touches the whole space (enumeration, bitmaps over 2^d).

#ifndef BMPART_GF2_H_
#define BMPART_GF2_H_

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <ranges>
#include <span>
#include <vector>

#include "bmpart/errors.h"
#include "bmpart/random.h"

namespace bmpart {

using Word = std::uint32_t;

inline constexpr int kMaxVectorDim = 30;
inline constexpr int kMaxSpaceDim = 24;

// Throws std::invalid_argument unless 1 <= dim <= max_dim.
void CheckDim(int dim, int max_dim = kMaxVectorDim);

inline constexpr Word DimMask(int dim) {
  return dim >= 32 ? ~Word{0} : (Word{1} << dim) - 1;
}

// Index of the highest set bit, or -1 for zero.
inline constexpr int LeadingBit(Word bits) {
  return bits == 0 ? -1 : std::bit_width(bits) - 1;
}

class Gf2Vector {
 public:
  // Throws std::invalid_argument if dim is out of range or bits has a set
  // bit at or above position dim.
  Gf2Vector(Word bits, int dim);

  Word bits() const { return bits_; }
  int dim() const { return dim_; }
  bool IsZero() const { return bits_ == 0; }
  int LeadingBit() const { return bmpart::LeadingBit(bits_); }
  bool Coordinate(int k) const { return (bits_ >> k) & 1U; }

  // XOR. Throws DimensionMismatch on differing dims.
  Gf2Vector operator+(const Gf2Vector& other) const;

  friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;
  friend auto operator<=>(const Gf2Vector&, const Gf2Vector&) = default;

 private:
  Word bits_;
  int dim_;
};

// Incremental row-echelon basis. Every stored row has a distinct leading
// bit. Supports checkpoint/rollback so a depth-first search can push and
// pop vectors cheaply.
class Gf2Basis {
 public:
  explicit Gf2Basis(int dim);

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(order_.size()); }

  // Reduces v against the rows. The result is zero iff v is in the span.
  Word Reduce(Word v) const;
  bool InSpan(const Gf2Vector& v) const;

  // Adds v if it is outside the span. Returns false (rows unchanged) if v
  // is already spanned.
  bool Insert(const Gf2Vector& v);
  // Unchecked variant on raw encodings; v must be below 2^dim.
  bool InsertBits(Word v);

  // Rows ordered by decreasing leading bit.
  std::vector<Gf2Vector> Rows() const;

  std::size_t Checkpoint() const { return order_.size(); }
  void Rollback(std::size_t checkpoint);

 private:
  int dim_;
  std::array<Word, kMaxVectorDim> pivot_rows_{};
  std::vector<std::int8_t> order_;
};

// Dimension of the span. 0 for an empty input. Throws DimensionMismatch if
// the inputs disagree on dim.
int Rank(std::span<const Gf2Vector> vectors);
// Same on raw encodings of a common dimension.
int RankBits(std::span<const Word> vectors);

bool InSpan(const Gf2Basis& basis, const Gf2Vector& v);

// Invertible d x d matrix over F_2, stored by columns. Apply(v) is the XOR
// of the columns selected by the set bits of v.
class Gl2Map {
 public:
  // Throws std::invalid_argument unless the columns form an invertible map.
  explicit Gl2Map(std::vector<Word> columns);

  static Gl2Map Identity(int dim);

  int dim() const { return static_cast<int>(columns_.size()); }
  const std::vector<Word>& columns() const { return columns_; }

  Word Apply(Word v) const;
  Gf2Vector Apply(const Gf2Vector& v) const;
  Gl2Map Inverse() const;
  // (this * other)(v) = this(other(v)).
  Gl2Map Compose(const Gl2Map& other) const;

  // Images of all 2^d vectors, indexed by preimage. dim <= kMaxSpaceDim.
  std::vector<Word> ImageTable() const;

  friend bool operator==(const Gl2Map&, const Gl2Map&) = default;

 private:
  std::vector<Word> columns_;
};

// Samples d uniform columns and retries until they have full rank.
Gl2Map RandomGl2(int dim, Rng& rng);

// All 2^d vectors in increasing integer order, starting at 0. Throws
// GuardExceeded if dim > kMaxSpaceDim.
inline auto EnumerateSpace(int dim) {
  if (dim > kMaxSpaceDim) {
    throw GuardExceeded("EnumerateSpace: dim exceeds 24");
  }
  CheckDim(dim);
  return std::views::iota(Word{0}, Word{1} << dim) |
         std::views::transform([dim](Word bits) { return Gf2Vector(bits, dim); });
}

// Subset of F_2^d stored as a bitmap over all 2^d positions.
class VectorSet {
 public:
  explicit VectorSet(int dim);

  int dim() const { return dim_; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  std::size_t universe_size() const { return std::size_t{1} << dim_; }

  bool Contains(Word v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  // Returns true if v was newly inserted.
  bool Insert(Word v);
  bool Erase(Word v);
  void Clear();

  std::vector<Word> ToVector() const;

  // Uniform random subset of exactly `size` elements.
  static VectorSet RandomSubset(int dim, std::size_t size, Rng& rng);

  std::span<const std::uint64_t> words() const { return words_; }

 private:
  int dim_;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace bmpart

#endif  // BMPART_GF2_H_
