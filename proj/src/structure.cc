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

#include "bmpart/structure.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bmpart {
namespace {

using u128 = unsigned __int128;

u128 Pow4(u128 x) { return x * x * x * x; }

}  // namespace

Fraction MakeFraction(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::invalid_argument("MakeFraction: zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  if (g == 0) return {0, 1};
  return {num / g, den / g};
}

PairCountReport CountPairs(const PartitionReduction& p) {
  if (p.TotalSize() > kMaxPairLoopElements) {
    throw GuardExceeded("CountPairs: more than 2^12 elements");
  }
  PairCountReport report;
  report.max_part = static_cast<std::int64_t>(p.MaxPartSize());
  report.r_size = static_cast<std::int64_t>(p.ResidualSize());
  report.bound = 2 * report.max_part * report.r_size;
  for (int i = 0; i < p.num_parts(); ++i) {
    for (int j = i + 1; j < p.num_parts(); ++j) {
      for (Word x : p.part(i)) {
        for (Word y : p.part(j)) {
          ++report.cross_pairs_total;
          if (p.InGround(x ^ y)) {
            ++report.pairs_into_parts;
          } else {
            ++report.pairs_into_r;
          }
        }
      }
    }
  }
  report.holds = report.pairs_into_r <= report.bound;
  return report;
}

MaxPartReport CheckMaxPartBound(const PartitionReduction& p) {
  MaxPartReport report;
  const std::uint64_t n = p.TotalSize();
  const std::uint64_t space = std::uint64_t{1} << p.dim();
  report.n = static_cast<std::int64_t>(n);
  report.max_part = static_cast<std::int64_t>(p.MaxPartSize());
  report.c = MakeFraction(n, space);
  // c n / 8 = n^2 / (8 2^d); n <= 2^24 keeps n^2 within 64 bits.
  report.bound = MakeFraction(n * n, 8 * space);
  report.holds = n == 0 || static_cast<u128>(report.max_part) * 8 * space >
                               static_cast<u128>(n) * n;
  return report;
}

bool AtLeastHeavyThreshold(std::uint64_t union_size, int dim) {
  return Pow4(union_size) * static_cast<u128>(dim) >= (u128{1} << (4 * dim));
}

std::int64_t HeavyThresholdFloor(int dim) {
  CheckDim(dim, kMaxSpaceDim);
  // Largest t with t^4 d <= 2^(4d).
  std::uint64_t lo = 0;
  std::uint64_t hi = std::uint64_t{1} << dim;
  const u128 limit = u128{1} << (4 * dim);
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (Pow4(mid) * static_cast<u128>(dim) <= limit) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return static_cast<std::int64_t>(lo);
}

int RemovalCap(int dim) {
  int m = 0;
  while (static_cast<std::int64_t>(m) * m < 64LL * dim) ++m;
  return m;
}

HeavyPartReport ExtractHeavyParts(const PartitionReduction& p) {
  const auto sizes = p.PartSizes();
  return ExtractHeavyParts(p.dim(), sizes, p.validated());
}

HeavyPartReport ExtractHeavyParts(int dim, std::span<const std::size_t> sizes,
                                  bool validated) {
  CheckDim(dim, kMaxSpaceDim);
  if (static_cast<int>(sizes.size()) != dim) {
    throw std::invalid_argument("ExtractHeavyParts: expected d part sizes");
  }
  HeavyPartReport report;
  report.threshold = HeavyThresholdFloor(dim);
  report.removal_cap = RemovalCap(dim);
  std::vector<bool> alive(dim, true);
  std::uint64_t union_size = 0;
  for (std::size_t s : sizes) union_size += s;
  report.union_size_initial = static_cast<std::int64_t>(union_size);

  while (AtLeastHeavyThreshold(union_size, dim)) {
    int best = -1;
    for (int i = 0; i < dim; ++i) {
      if (alive[i] && (best < 0 || sizes[i] > sizes[best])) best = i;
    }
    alive[best] = false;
    union_size -= sizes[best];
    report.removed.push_back(best);
    ++report.removals;
    if (report.removals > report.removal_cap) {
      report.within_cap = false;
      if (validated) {
        throw IntegrityError(
            "ExtractHeavyParts: validated reduction needs more than "
            "ceil(8 sqrt(d)) removals");
      }
    }
  }
  for (int i = 0; i < dim; ++i) {
    if (alive[i]) report.t_set.push_back(i);
  }
  report.union_size_final = static_cast<std::int64_t>(union_size);
  report.final_below_threshold = !AtLeastHeavyThreshold(union_size, dim);
  return report;
}

CoverReport ComputeBetaFull(int dim) {
  CheckDim(dim);
  CoverReport report;
  const std::uint64_t size = (std::uint64_t{1} << dim) - 1;
  report.beta = MakeFraction(size, static_cast<std::uint64_t>(dim));
  report.witness_flat_rank = dim;
  report.covering_number = static_cast<std::int64_t>((size + dim - 1) / dim);
  return report;
}

CoverReport ComputeBetaEnumerated(std::span<const Word> ground, int dim) {
  CheckDim(dim);
  if (dim > kMaxBetaEnumerationDim) {
    throw GuardExceeded("ComputeBeta: subspace enumeration needs d <= 6");
  }
  // Subsets of F_2^d as 64-bit masks over the 2^d positions.
  std::uint64_t ground_mask = 0;
  for (Word v : ground) {
    if (v == 0) throw std::invalid_argument("ComputeBeta: 0 is a loop");
    if (v >> dim) throw std::invalid_argument("ComputeBeta: vector too wide");
    ground_mask |= std::uint64_t{1} << v;
  }
  if (ground_mask == 0) throw std::invalid_argument("ComputeBeta: empty");

  const Word space = Word{1} << dim;
  std::set<std::uint64_t> seen{1};
  std::vector<std::uint64_t> frontier{1};
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t sub : frontier) {
      for (Word v = 1; v < space; ++v) {
        if ((sub >> v) & 1U) continue;
        std::uint64_t grown = sub;
        for (Word u = 0; u < space; ++u) {
          if ((sub >> u) & 1U) grown |= std::uint64_t{1} << (u ^ v);
        }
        if (seen.insert(grown).second) next.push_back(grown);
      }
    }
    frontier = std::move(next);
  }

  std::uint64_t best_count = 0;
  int best_rank = 0;
  for (std::uint64_t sub : seen) {
    const int rank = std::countr_zero(static_cast<std::uint64_t>(
        std::popcount(sub)));
    if (rank == 0) continue;
    const std::uint64_t count = std::popcount(sub & ground_mask);
    if (count == 0) continue;
    // count / rank vs best_count / best_rank, ties to the larger rank.
    const std::uint64_t lhs = count * static_cast<std::uint64_t>(best_rank);
    const std::uint64_t rhs = best_count * static_cast<std::uint64_t>(rank);
    if (best_rank == 0 || lhs > rhs || (lhs == rhs && rank > best_rank)) {
      best_count = count;
      best_rank = rank;
    }
  }
  CoverReport report;
  report.beta = MakeFraction(best_count, static_cast<std::uint64_t>(best_rank));
  report.witness_flat_rank = best_rank;
  report.covering_number = static_cast<std::int64_t>(
      (report.beta.num + report.beta.den - 1) / report.beta.den);
  return report;
}

CoverReport ComputeBeta(std::span<const Word> ground, int dim) {
  CheckDim(dim);
  const std::uint64_t full = (std::uint64_t{1} << dim) - 1;
  if (ground.size() == full && dim <= kMaxSpaceDim) {
    VectorSet distinct(dim);
    bool has_zero = false;
    for (Word v : ground) {
      if (v >> dim) throw std::invalid_argument("ComputeBeta: vector too wide");
      has_zero |= v == 0;
      distinct.Insert(v);
    }
    if (has_zero) throw std::invalid_argument("ComputeBeta: 0 is a loop");
    if (distinct.size() == full) return ComputeBetaFull(dim);
  }
  return ComputeBetaEnumerated(ground, dim);
}

Word PrimitivePolynomial(int dim) {
  CheckDim(dim, kMaxSpaceDim);
  const Word top = Word{1} << (dim - 1);
  const std::uint64_t period = (std::uint64_t{1} << dim) - 1;
  for (Word low = 1; low < (Word{1} << dim); low += 2) {
    // Multiplication by x in F_2[x] / (x^d + low).
    Word v = 1;
    std::uint64_t steps = 0;
    do {
      const bool carry = v & top;
      v = (v << 1) & DimMask(dim);
      if (carry) v ^= low;
      ++steps;
    } while (v != 1 && steps <= period);
    if (steps == period) return low;
  }
  throw IntegrityError("PrimitivePolynomial: none found");
}

std::vector<std::vector<Word>> CyclicCover(int dim) {
  CheckDim(dim, kMaxSpaceDim);
  const Word low = PrimitivePolynomial(dim);
  const Word top = Word{1} << (dim - 1);
  const std::uint64_t period = (std::uint64_t{1} << dim) - 1;
  std::vector<std::vector<Word>> cover;
  Word v = 1;
  for (std::uint64_t i = 0; i < period; ++i) {
    if (i % dim == 0) cover.emplace_back();
    cover.back().push_back(v);
    const bool carry = v & top;
    v = (v << 1) & DimMask(dim);
    if (carry) v ^= low;
  }
  return cover;
}

bool IsValidCover(const std::vector<std::vector<Word>>& cover, int dim) {
  CheckDim(dim, kMaxSpaceDim);
  VectorSet covered(dim);
  for (const auto& set : cover) {
    if (RankBits(set) != static_cast<int>(set.size())) return false;
    for (Word v : set) {
      if (v == 0 || (v >> dim) != 0 || !covered.Insert(v)) return false;
    }
  }
  return covered.size() == covered.universe_size() - 1;
}

CoverReport CoveringNumber(int dim) {
  CoverReport report = ComputeBetaFull(dim);
  if (dim <= kMaxCoverConstructionDim) {
    auto cover = CyclicCover(dim);
    if (static_cast<std::int64_t>(cover.size()) == report.covering_number &&
        IsValidCover(cover, dim)) {
      report.cover = std::move(cover);
    } else {
      report.warning = "cover construction failed certification";
    }
  }
  return report;
}

RefutationReport RefutationCertificate(int dim,
                                       const std::vector<CorpusEntry>& corpus) {
  CheckDim(dim, kMaxSpaceDim);
  RefutationReport report;
  report.dim = dim;
  const std::uint64_t nonzero = (std::uint64_t{1} << dim) - 1;
  report.k = static_cast<std::int64_t>((nonzero + dim - 1) / dim);
  report.two_k = 2 * report.k;
  report.floor_bound = {nonzero, 8};
  report.refuted = nonzero > 8 * static_cast<std::uint64_t>(report.two_k);
  for (const CorpusEntry& entry : corpus) {
    const PartitionReduction& p = entry.reduction;
    if (p.dim() != dim) throw DimensionMismatch("RefutationCertificate");
    if (p.TotalSize() != nonzero) {
      throw std::invalid_argument("RefutationCertificate: '" + entry.label +
                                  "' does not cover F_2^d \\ {0}");
    }
    if (!p.validated()) {
      throw std::invalid_argument("RefutationCertificate: '" + entry.label +
                                  "' is not certified valid");
    }
    RefutationRow row;
    row.label = entry.label;
    row.max_part = static_cast<std::int64_t>(p.MaxPartSize());
    row.meets_floor = 8 * static_cast<std::uint64_t>(row.max_part) >= nonzero;
    row.violates = row.max_part > report.two_k;
    if (!row.meets_floor) {
      throw IntegrityError("RefutationCertificate: '" + entry.label +
                           "' has max part below (2^d - 1) / 8");
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string RefutationCsv(const RefutationReport& report) {
  std::ostringstream out;
  out << "d,max_part,k,2k,bound,verdict\n";
  // (2^d - 1) / 8 has at most three binary fraction digits.
  const std::uint64_t whole = report.floor_bound.num / 8;
  const std::uint64_t frac = (report.floor_bound.num % 8) * 125;
  for (const RefutationRow& row : report.rows) {
    out << report.dim << ',' << row.max_part << ',' << report.k << ','
        << report.two_k << ',' << whole << '.';
    if (frac < 100) out << '0';
    if (frac < 10) out << '0';
    out << frac << ',' << (row.violates ? "violated" : "inconclusive")
        << '\n';
  }
  return out.str();
}

}  // namespace bmpart
