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

#include "bmpart/reduction.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace bmpart {
namespace {

constexpr std::uint8_t kUnreached = 0xFF;

// In-place unnormalized Walsh-Hadamard transform.
void Hadamard(std::vector<std::int64_t>& a) {
  const std::size_t n = a.size();
  for (std::size_t len = 1; len < n; len <<= 1) {
    for (std::size_t i = 0; i < n; i += len << 1) {
      for (std::size_t j = i; j < i + len; ++j) {
        const std::int64_t u = a[j];
        const std::int64_t v = a[j + len];
        a[j] = u + v;
        a[j + len] = u - v;
      }
    }
  }
}

// Walks back from a vector reached at `step` to the partial transversal
// (parts all <= step, pairwise distinct) whose XOR it is.
std::vector<TransversalEntry> Unwind(const PartitionReduction& p,
                                     const std::vector<std::uint8_t>& reach,
                                     Word v) {
  std::vector<TransversalEntry> chain;
  while (true) {
    const int step = reach[v];
    if (p.PartOf(v) == step) {
      chain.push_back({step, v});
      break;
    }
    bool found = false;
    for (Word q : p.part(step)) {
      const Word rest = v ^ q;
      if (reach[rest] < step) {
        chain.push_back({step, q});
        v = rest;
        found = true;
        break;
      }
    }
    if (!found) throw IntegrityError("CheckReductionExact: broken chain");
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

}  // namespace

std::string ToString(CheckMethod method) {
  return method == CheckMethod::kExact ? "exact" : "randomized";
}

ValidityCertificate CheckReductionExact(const PartitionReduction& p) {
  const int d = p.dim();
  if (d > kMaxExactCheckDim) {
    throw GuardExceeded("CheckReductionExact: dim " + std::to_string(d) +
                        " exceeds " + std::to_string(kMaxExactCheckDim));
  }
  const std::size_t n = std::size_t{1} << d;
  std::vector<std::uint8_t> reach(n, kUnreached);
  std::vector<Word> reached;

  ValidityCertificate cert;
  cert.method = CheckMethod::kExact;
  for (int k = 0; k < d; ++k) {
    const auto part = p.part(k);
    if (part.empty()) continue;
    for (Word v : part) {
      if (reach[v] != kUnreached) {
        auto witness = Unwind(p, reach, v);
        witness.push_back({k, v});
        cert.valid = false;
        cert.witness = std::move(witness);
        return cert;
      }
    }
    const std::size_t before = reached.size();
    auto mark = [&](Word t) {
      if (reach[t] == kUnreached) {
        reach[t] = static_cast<std::uint8_t>(k);
        reached.push_back(t);
      }
    };
    const std::size_t direct_cost = before * part.size();
    if (direct_cost <= 3 * n * static_cast<std::size_t>(d)) {
      for (std::size_t i = 0; i < before; ++i) {
        const Word s = reached[i];
        for (Word q : part) mark(s ^ q);
      }
    } else {
      std::vector<std::int64_t> a(n, 0);
      std::vector<std::int64_t> b(n, 0);
      for (std::size_t i = 0; i < before; ++i) a[reached[i]] = 1;
      for (Word q : part) b[q] = 1;
      Hadamard(a);
      Hadamard(b);
      for (std::size_t i = 0; i < n; ++i) a[i] *= b[i];
      Hadamard(a);
      // a now holds n times the number of representations t = s + q.
      for (std::size_t t = 1; t < n; ++t) {
        if (a[t] != 0) mark(static_cast<Word>(t));
      }
    }
    for (Word q : part) mark(q);
  }
  return cert;
}

ValidityCertificate CheckReductionDfs(const PartitionReduction& p,
                                      std::int64_t node_budget) {
  std::vector<int> order;
  for (int i = 0; i < p.num_parts(); ++i) {
    if (!p.part(i).empty()) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(), [&p](int a, int b) {
    return p.part(a).size() > p.part(b).size();
  });

  Gf2Basis basis(p.dim());
  std::vector<TransversalEntry> chosen;
  std::int64_t nodes = 0;
  std::optional<std::vector<TransversalEntry>> witness;

  // Returns true once a dependent transversal has been recorded.
  auto search = [&](auto& self, std::size_t depth) -> bool {
    if (++nodes > node_budget) {
      throw GuardExceeded("CheckReductionDfs: node budget exhausted");
    }
    if (depth == order.size()) return false;
    const int part = order[depth];
    if (self(self, depth + 1)) return true;
    for (Word v : p.part(part)) {
      const std::size_t mark = basis.Checkpoint();
      if (!basis.InsertBits(v)) {
        witness = chosen;
        witness->push_back({part, v});
        return true;
      }
      chosen.push_back({part, v});
      const bool found = self(self, depth + 1);
      chosen.pop_back();
      basis.Rollback(mark);
      if (found) return true;
    }
    return false;
  };

  ValidityCertificate cert;
  cert.method = CheckMethod::kExact;
  if (search(search, 0)) {
    cert.valid = false;
    std::sort(witness->begin(), witness->end(),
              [](const TransversalEntry& a, const TransversalEntry& b) {
                return a.part < b.part;
              });
    cert.witness = std::move(witness);
  }
  return cert;
}

ValidityCertificate CheckReductionRandomized(const PartitionReduction& p,
                                             std::int64_t trials, Rng& rng) {
  if (trials < 1) {
    throw std::invalid_argument("CheckReductionRandomized: trials must be >= 1");
  }
  ValidityCertificate cert;
  cert.method = CheckMethod::kRandomized;
  std::vector<TransversalEntry> sample;
  std::vector<Word> vectors;
  for (std::int64_t t = 0; t < trials; ++t) {
    sample.clear();
    vectors.clear();
    for (int i = 0; i < p.num_parts(); ++i) {
      const auto part = p.part(i);
      if (part.empty() || !rng.Bernoulli(0.5)) continue;
      const Word v = part[rng.Below(part.size())];
      sample.push_back({i, v});
      vectors.push_back(v);
    }
    if (RankBits(vectors) < static_cast<int>(vectors.size())) {
      cert.valid = false;
      cert.witness = sample;
      cert.trials = t + 1;
      return cert;
    }
  }
  cert.trials = trials;
  return cert;
}

PartitionReduction LeadingBitReduction(int dim) {
  CheckDim(dim, kMaxSpaceDim);
  std::vector<std::vector<Word>> parts(dim);
  for (int b = 0; b < dim; ++b) {
    parts[b].resize(std::size_t{1} << b);
    std::iota(parts[b].begin(), parts[b].end(), Word{1} << b);
  }
  return PartitionReduction(dim, std::move(parts), /*validated=*/true);
}

PartitionReduction TransformReduction(const PartitionReduction& p,
                                      const Gl2Map& map) {
  if (map.dim() != p.dim()) throw DimensionMismatch("TransformReduction");
  std::vector<std::vector<Word>> parts(p.parts());
  for (auto& part : parts) {
    for (Word& v : part) v = map.Apply(v);
  }
  return PartitionReduction(p.dim(), std::move(parts), p.validated());
}

PairSumReport VerifyPairSums(const PartitionReduction& p) {
  if (p.TotalSize() > kMaxPairLoopElements) {
    throw GuardExceeded("VerifyPairSums: more than 2^12 elements");
  }
  PairSumReport report;
  for (int i = 0; i < p.num_parts(); ++i) {
    for (int j = i + 1; j < p.num_parts(); ++j) {
      for (Word x : p.part(i)) {
        for (Word y : p.part(j)) {
          ++report.pairs;
          const int k = p.PartOf(x ^ y);
          if (k < 0) {
            ++report.into_residual;
          } else if (k == i) {
            ++report.into_first_part;
          } else if (k == j) {
            ++report.into_second_part;
          } else {
            ++report.violations;
            if (!report.first_violation) {
              report.first_violation = PairSumViolation{x, y, i, j, k};
            }
          }
        }
      }
    }
  }
  return report;
}

PartitionReduction PruneReduction(const PartitionReduction& p, double q,
                                  Rng& rng) {
  std::vector<std::vector<Word>> parts(p.num_parts());
  for (int i = 0; i < p.num_parts(); ++i) {
    for (Word v : p.part(i)) {
      if (!rng.Bernoulli(q)) parts[i].push_back(v);
    }
  }
  return PartitionReduction(p.dim(), std::move(parts), p.validated());
}

PartitionReduction MoveRandomVector(const PartitionReduction& p, Rng& rng) {
  if (p.TotalSize() == 0 || p.dim() < 2) {
    throw std::invalid_argument("MoveRandomVector: nothing to move");
  }
  std::vector<std::vector<Word>> parts(p.parts());
  std::size_t pick = rng.Below(p.TotalSize());
  int from = 0;
  while (pick >= parts[from].size()) pick -= parts[from++].size();
  const Word v = parts[from][pick];
  parts[from].erase(parts[from].begin() + static_cast<std::ptrdiff_t>(pick));
  int to = static_cast<int>(rng.Below(p.num_parts() - 1));
  if (to >= from) ++to;
  parts[to].push_back(v);
  return PartitionReduction(p.dim(), std::move(parts), false);
}

PartitionReduction RandomCandidateReduction(int dim, double density,
                                            Rng& rng) {
  CheckDim(dim, kMaxSpaceDim);
  std::vector<std::vector<Word>> parts(dim);
  const Word n = Word{1} << dim;
  for (Word v = 1; v < n; ++v) {
    if (rng.Bernoulli(density)) parts[rng.Below(dim)].push_back(v);
  }
  return PartitionReduction(dim, std::move(parts), false);
}

std::vector<CorpusEntry> BuildValidCorpus(int dim, int gl_images,
                                          std::uint64_t seed) {
  Rng rng(seed);
  std::vector<CorpusEntry> bases;
  bases.push_back({"leading-bit", LeadingBitReduction(dim)});
  for (int g = 0; g < gl_images; ++g) {
    bases.push_back({"gl-image-" + std::to_string(g),
                     TransformReduction(bases.front().reduction,
                                        RandomGl2(dim, rng))});
  }
  std::vector<CorpusEntry> corpus;
  for (const CorpusEntry& base : bases) {
    corpus.push_back(base);
    for (const auto& [q, tag] : {std::pair{0.25, "q=1/4"},
                                 std::pair{0.5, "q=1/2"}}) {
      corpus.push_back({base.label + "/pruned-" + tag,
                        PruneReduction(base.reduction, q, rng)});
    }
  }
  return corpus;
}

}  // namespace bmpart
