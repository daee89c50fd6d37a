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

#include "bmpart/selftest.h"

#include <algorithm>
#include <exception>
#include <functional>
#include <numeric>
#include <string>

#include "bmpart/gf2.h"
#include "bmpart/matroid.h"
#include "bmpart/reduction.h"
#include "bmpart/secretary.h"
#include "bmpart/structure.h"

namespace bmpart {
namespace {

// Brute-force oracles below deliberately avoid echelon forms.

bool DependentBySubsets(const std::vector<Word>& set) {
  const std::size_t m = set.size();
  for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
    Word sum = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1U) sum ^= set[i];
    }
    if (sum == 0) return true;
  }
  return false;
}

int RankBySubsets(const std::vector<Word>& set) {
  // log2 of the number of distinct subset sums.
  std::vector<Word> sums{0};
  for (Word v : set) {
    const std::size_t n = sums.size();
    for (std::size_t i = 0; i < n; ++i) sums.push_back(sums[i] ^ v);
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  }
  int rank = 0;
  while ((std::size_t{1} << rank) < sums.size()) ++rank;
  return rank;
}

bool AllTransversalsIndependent(const PartitionReduction& p) {
  std::vector<Word> chosen;
  std::function<bool(int)> walk = [&](int i) {
    if (i == p.num_parts()) return !DependentBySubsets(chosen);
    if (!walk(i + 1)) return false;
    for (Word v : p.part(i)) {
      chosen.push_back(v);
      const bool ok = walk(i + 1);
      chosen.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return walk(0);
}

bool WitnessIsDependentTransversal(const PartitionReduction& p,
                                   const std::vector<TransversalEntry>& w) {
  std::vector<Word> vectors;
  std::vector<int> parts;
  for (const TransversalEntry& e : w) {
    if (p.PartOf(e.vector) != e.part) return false;
    vectors.push_back(e.vector);
    parts.push_back(e.part);
  }
  std::sort(parts.begin(), parts.end());
  if (std::adjacent_find(parts.begin(), parts.end()) != parts.end()) {
    return false;
  }
  return DependentBySubsets(vectors);
}

SelfTestResult Check(const std::string& name,
                     const std::function<std::string()>& body) {
  SelfTestResult result{name, false, ""};
  try {
    result.detail = body();
    result.passed = result.detail.empty();
  } catch (const std::exception& e) {
    result.detail = std::string("exception: ") + e.what();
  }
  return result;
}

std::vector<Word> RandomSet(int d, int size, Rng& rng) {
  std::vector<Word> set;
  for (int i = 0; i < size; ++i) {
    set.push_back(static_cast<Word>(rng.Below(std::uint64_t{1} << d)));
  }
  return set;
}

}  // namespace

std::vector<SelfTestResult> RunSelfTest(std::uint64_t seed) {
  std::vector<SelfTestResult> results;
  Rng rng(seed);

  results.push_back(Check("gf2: rank matches subset-sum count", [&] {
    for (int trial = 0; trial < 1000; ++trial) {
      const int d = 1 + static_cast<int>(rng.Below(4));
      auto set = RandomSet(d, static_cast<int>(rng.Below(7)), rng);
      const int expected = RankBySubsets(set);
      if (RankBits(set) != expected) return std::string("rank mismatch");
      std::reverse(set.begin(), set.end());
      if (RankBits(set) != expected) return std::string("order dependence");
    }
    return std::string();
  }));

  results.push_back(Check("gf2: in_span exhaustive at d <= 4", [&] {
    for (int d = 1; d <= 4; ++d) {
      const Word n = Word{1} << d;
      for (Word a = 0; a < n; ++a) {
        for (Word b = 0; b < n; ++b) {
          Gf2Basis basis(d);
          basis.InsertBits(a);
          basis.InsertBits(b);
          for (Word v = 0; v < n; ++v) {
            const bool expected = v == 0 || v == a || v == b || v == (a ^ b);
            if (basis.InSpan(Gf2Vector(v, d)) != expected) {
              return "in_span mismatch at d=" + std::to_string(d);
            }
          }
        }
      }
    }
    return std::string();
  }));

  results.push_back(Check("reduction: exact checker vs all transversals", [&] {
    int valid = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const int d = 2 + static_cast<int>(rng.Below(3));
      const double density = 0.2 + 0.6 * rng.Uniform01();
      const PartitionReduction p = RandomCandidateReduction(d, density, rng);
      const bool expected = AllTransversalsIndependent(p);
      const ValidityCertificate cert = CheckReductionExact(p);
      if (cert.valid != expected) return std::string("verdict mismatch");
      if (!cert.valid && !WitnessIsDependentTransversal(p, *cert.witness)) {
        return std::string("bad witness");
      }
      if (CheckReductionDfs(p).valid != expected) {
        return std::string("dfs verdict mismatch");
      }
      valid += expected;
    }
    if (valid == 0 || valid == 1000) return std::string("corpus not mixed");
    return std::string();
  }));

  results.push_back(Check("structure: corpus invariants at d <= 4", [&] {
    for (int d = 1; d <= 4; ++d) {
      for (const CorpusEntry& e : BuildValidCorpus(d, 3, rng.NextU64())) {
        const PartitionReduction& p = e.reduction;
        const std::string where = " (" + e.label + ", d=" +
                                  std::to_string(d) + ")";
        if (!CheckReductionExact(p).valid) return "not valid" + where;
        if (VerifyPairSums(p).violations != 0) return "pair sums" + where;
        if (!CountPairs(p).holds) return "pair bound" + where;
        if (!CheckMaxPartBound(p).holds) return "max part bound" + where;
        const HeavyPartReport h = ExtractHeavyParts(p);
        if (!h.within_cap || !h.final_below_threshold) {
          return "heavy parts" + where;
        }
      }
    }
    return std::string();
  }));

  results.push_back(Check("structure: beta and covers at d <= 4", [&] {
    for (int d = 1; d <= 4; ++d) {
      std::vector<Word> ground((std::size_t{1} << d) - 1);
      std::iota(ground.begin(), ground.end(), Word{1});
      const CoverReport closed = ComputeBetaFull(d);
      const CoverReport enumerated = ComputeBetaEnumerated(ground, d);
      if (!(closed.beta == enumerated.beta) ||
          closed.witness_flat_rank != enumerated.witness_flat_rank) {
        return "beta mismatch at d=" + std::to_string(d);
      }
      const CoverReport cover = CoveringNumber(d);
      if (!cover.cover || !IsValidCover(*cover.cover, d) ||
          static_cast<std::int64_t>(cover.cover->size()) !=
              cover.covering_number) {
        return "cover at d=" + std::to_string(d);
      }
    }
    return std::string();
  }));

  results.push_back(Check("matroid: greedy vs brute force", [&] {
    for (int trial = 0; trial < 200; ++trial) {
      const int d = 1 + static_cast<int>(rng.Below(3));
      const int m = 1 + static_cast<int>(rng.Below(8));
      std::vector<WeightedElement> elems;
      std::vector<Word> vecs;
      for (int i = 0; i < m; ++i) {
        Word v;
        do {
          v = static_cast<Word>(rng.Below(std::uint64_t{1} << d));
        } while (std::find(vecs.begin(), vecs.end(), v) != vecs.end() &&
                 vecs.size() < (std::size_t{1} << d));
        if (std::find(vecs.begin(), vecs.end(), v) != vecs.end()) break;
        vecs.push_back(v);
        elems.push_back({v, static_cast<double>(rng.Below(5))});
      }
      double best = 0;
      for (std::uint32_t mask = 0; mask < (1U << elems.size()); ++mask) {
        std::vector<Word> set;
        double weight = 0;
        for (std::size_t i = 0; i < elems.size(); ++i) {
          if ((mask >> i) & 1U) {
            set.push_back(elems[i].vector);
            weight += elems[i].weight;
          }
        }
        if (!DependentBySubsets(set)) best = std::max(best, weight);
      }
      if (MaxWeightIndependent(BinaryOracle(d), elems).total_weight != best) {
        return std::string("greedy not optimal");
      }
    }
    return std::string();
  }));

  results.push_back(Check("secretary: expected rank vs enumeration", [&] {
    for (int d = 1; d <= 3; ++d) {
      const std::uint64_t space = std::uint64_t{1} << d;
      std::uint64_t total = 0;
      std::uint64_t draws = 1;
      for (int i = 0; i < d; ++i) draws *= space;
      for (std::uint64_t code = 0; code < draws; ++code) {
        std::vector<Word> x;
        std::uint64_t c = code;
        for (int i = 0; i < d; ++i, c /= space) {
          x.push_back(static_cast<Word>(c % space));
        }
        total += RankBySubsets(x);
      }
      if (ExactExpectedRank(d) != Rational(total, draws)) {
        return "mismatch at d=" + std::to_string(d);
      }
    }
    return std::string();
  }));

  results.push_back(Check("secretary: trivial greedy over all orders", [&] {
    for (int d = 1; d <= 3; ++d) {
      for (int trial = 0; trial < 50; ++trial) {
        const WeightAssignment w = SampleAdversarialWeights(d, rng);
        std::vector<Word> order = w.Distinct();
        do {
          std::vector<WeightedElement> arrival;
          for (Word v : order) arrival.push_back({v, 1.0});
          if (static_cast<int>(TrivialGreedy(d, arrival).size()) != w.Opt()) {
            return std::string("greedy below opt");
          }
        } while (std::next_permutation(order.begin(), order.end()));
      }
    }
    return std::string();
  }));

  return results;
}

}  // namespace bmpart
