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

// Acceptance suite. Prints one PASS/FAIL line per criterion, each with its
// measured runtime against the allowed budget, and exits nonzero if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "bmpart/gf2.h"
#include "bmpart/matroid.h"
#include "bmpart/reduction.h"
#include "bmpart/secretary.h"
#include "bmpart/structure.h"
#include "cli.h"
#include "oracles.h"

namespace bmpart {
namespace {

constexpr std::uint64_t kSeed = 20260101;

int Jobs() {
  return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

struct Outcome {
  bool passed = false;
  std::string detail;
};

class Suite {
 public:
  void Run(int id, const std::string& title, double budget_s,
           const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = body();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    const bool in_time = elapsed <= budget_s;
    const bool passed = outcome.passed && in_time;
    failures_ += !passed;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", elapsed, budget_s);
    std::cout << (passed ? "PASS" : "FAIL") << " " << id << " " << title
              << ": " << outcome.detail << " [" << timing
              << (in_time ? "" : ", over budget") << "]" << std::endl;
  }

  int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

// Corpus entries certified by the exact checker.
std::vector<CorpusEntry> CertifiedCorpus(int d, std::uint64_t seed) {
  std::vector<CorpusEntry> corpus = BuildValidCorpus(d, 3, seed);
  for (CorpusEntry& e : corpus) {
    if (!CheckReductionExact(e.reduction).valid) {
      throw IntegrityError("corpus entry " + e.label + " is not valid");
    }
    e.reduction.set_validated(true);
  }
  return corpus;
}

Outcome Criterion1() {
  Rng rng(DeriveSeed(kSeed, 1));
  int valid = 0;
  int invalid = 0;
  int disagreements = 0;
  const int candidates = 2000;
  for (int t = 0; t < candidates; ++t) {
    const int d = 1 + static_cast<int>(rng.Below(4));
    PartitionReduction p =
        t % 2 == 0
            ? RandomCandidateReduction(d, 0.1 + 0.8 * rng.Uniform01(), rng)
            : PruneReduction(TransformReduction(LeadingBitReduction(d),
                                                RandomGl2(d, rng)),
                             0.25, rng);
    if (t % 2 == 1 && d >= 2 && p.TotalSize() > 0) {
      p = MoveRandomVector(p, rng);
    }
    const bool expected = oracle::AllTransversalsIndependent(p);
    const ValidityCertificate cert = CheckReductionExact(p);
    bool agree = cert.valid == expected;
    if (agree && !cert.valid) {
      agree = oracle::IsDependentTransversal(p, *cert.witness);
    }
    disagreements += !agree;
    (expected ? valid : invalid)++;
  }
  std::ostringstream s;
  s << candidates << " candidates at d<=4 (" << valid << " valid, " << invalid
    << " invalid), " << disagreements << " disagreements";
  return {disagreements == 0 && valid > 0 && invalid > 0, s.str()};
}

Outcome Criterion2() {
  std::int64_t reductions = 0;
  std::int64_t pairs = 0;
  std::int64_t violations = 0;
  for (int d = 1; d <= 12; ++d) {
    for (const CorpusEntry& e : CertifiedCorpus(d, DeriveSeed(kSeed, 200 + d))) {
      const PairSumReport r = VerifyPairSums(e.reduction);
      ++reductions;
      pairs += r.pairs;
      violations += r.violations;
    }
  }
  std::ostringstream s;
  s << reductions << " certified reductions at d<=12, " << pairs
    << " cross-part pairs, " << violations << " violations";
  return {violations == 0, s.str()};
}

Outcome Criterion3() {
  std::int64_t reductions = 0;
  std::int64_t failing = 0;
  std::int64_t into_r = 0;
  for (int d = 1; d <= 12; ++d) {
    for (const CorpusEntry& e : CertifiedCorpus(d, DeriveSeed(kSeed, 300 + d))) {
      if (e.reduction.TotalSize() > kMaxPairLoopElements) continue;
      const PairCountReport r = CountPairs(e.reduction);
      ++reductions;
      into_r += r.pairs_into_r;
      failing += !r.holds;
    }
  }
  std::ostringstream s;
  s << reductions << " reductions, total pairs_into_R=" << into_r << ", "
    << failing << " exceed 2*max|P_i|*|R|";
  return {failing == 0 && reductions > 0, s.str()};
}

Outcome Criterion4() {
  std::int64_t reductions = 0;
  std::int64_t failing = 0;
  for (int d = 1; d <= 20; ++d) {
    for (const CorpusEntry& e : CertifiedCorpus(d, DeriveSeed(kSeed, 400 + d))) {
      ++reductions;
      failing += !CheckMaxPartBound(e.reduction).holds;
    }
  }
  std::ostringstream s;
  s << reductions << " certified reductions at d<=20, " << failing
    << " with max|P_i| <= c*n/8 (exact rational comparison)";
  return {failing == 0, s.str()};
}

Outcome Criterion5() {
  std::int64_t reductions = 0;
  std::int64_t failing = 0;
  int max_removals = 0;
  for (int d : {8, 12, 16, 20}) {
    for (const CorpusEntry& e : CertifiedCorpus(d, DeriveSeed(kSeed, 500 + d))) {
      const HeavyPartReport r = ExtractHeavyParts(e.reduction);
      ++reductions;
      failing += !(r.within_cap && r.final_below_threshold &&
                   r.removals <= RemovalCap(d));
      max_removals = std::max(max_removals, r.removals);
    }
  }
  std::ostringstream s;
  s << reductions << " reductions at d in {8,12,16,20}, max removals "
    << max_removals << ", " << failing
    << " exceed ceil(8 sqrt d) or end at union >= 2^d/d^(1/4)";
  return {failing == 0, s.str()};
}

Outcome Criterion6() {
  bool ok = true;
  std::ostringstream s;
  for (int d = 1; d <= 10; ++d) {
    const CoverReport r = CoveringNumber(d);
    const std::int64_t expected = ((std::int64_t{1} << d) - 1 + d - 1) / d;
    const bool good = r.covering_number == expected && r.cover &&
                      static_cast<std::int64_t>(r.cover->size()) == expected &&
                      IsValidCover(*r.cover, d);
    ok &= good;
    if (!good) s << "d=" << d << " failed; ";
  }
  const CoverReport d3 = CoveringNumber(3);
  const bool d3_ok = d3.covering_number == 3 && d3.beta == Fraction{7, 3};
  ok &= d3_ok;
  s << "covers verified for d=1..10 (independent, disjoint, complete, count "
       "ceil((2^d-1)/d)); d=3 -> "
    << d3.covering_number << " sets, beta=" << d3.beta.num << "/"
    << d3.beta.den;
  return {ok, s.str()};
}

Outcome Criterion7() {
  const RefutationReport r =
      RefutationCertificate(17, {{"leading-bit", LeadingBitReduction(17)}});
  const bool floor_beats = r.floor_bound.num > static_cast<std::uint64_t>(
                                                   r.two_k) * r.floor_bound.den;
  const bool ok = r.refuted && floor_beats && r.rows.size() == 1 &&
                  r.rows[0].max_part >= 65536 && r.rows[0].violates &&
                  r.k == 7711 && r.two_k == 15422;
  std::ostringstream s;
  s << std::fixed << std::setprecision(3);
  s << "(2^17-1)/8 = " << r.floor_bound.value() << " > 2k = 2*" << r.k
    << " = " << r.two_k << "; leading-bit max|P_i| = " << r.rows[0].max_part
    << "; verdict " << r.verdict();
  return {ok, s.str()};
}

Outcome Criterion8() {
  std::ostringstream s;
  bool ok = true;
  for (int d = 1; d <= 3; ++d) {
    const std::uint64_t space = std::uint64_t{1} << d;
    std::uint64_t draws = 1;
    for (int i = 0; i < d; ++i) draws *= space;
    std::uint64_t total = 0;
    for (std::uint64_t code = 0; code < draws; ++code) {
      std::vector<Word> x;
      std::uint64_t c = code;
      for (int i = 0; i < d; ++i, c /= space) {
        x.push_back(static_cast<Word>(c % space));
      }
      total += oracle::RankBySubsets(x);
    }
    ok &= ExactExpectedRank(d) == Rational(total, draws);
  }
  ok &= ExactExpectedRank(2) == Rational(21, 16);
  s << "enumeration d<=3 " << (ok ? "matches" : "MISMATCH")
    << ", d=2 -> " << ExactExpectedRank(2);
  bool half = true;
  for (int d = 1; d <= 24; ++d) half &= ExactExpectedRank(d) >= Rational(d, 2);
  ok &= half;
  s << ", >= d/2 for d<=24: " << (half ? "yes" : "NO");
  for (int d : {8, 16}) {
    ExperimentConfig config;
    config.dim = d;
    config.trials = 100000;
    config.algorithm = Algorithm::kTrivialGreedy;
    config.seed = DeriveSeed(kSeed, 800 + d);
    config.jobs = Jobs();
    const ExperimentReport r = RunExperiment(config);
    const double exact = ExactExpectedRank(d).convert_to<double>();
    const double z = (r.mean_opt_m - exact) / r.se_opt_m;
    ok &= std::abs(z) <= 3.0;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "; d=%d MC %.4f +- %.4f vs exact %.4f (z=%.2f)", d,
                  r.mean_opt_m, r.se_opt_m, exact, z);
    s << buf;
  }
  return {ok, s.str()};
}

Outcome Criterion9() {
  std::ostringstream s;
  bool ok = true;
  for (const char* mapping : {"leading-bit", "gl-image"}) {
    for (std::int64_t size : {std::int64_t{0}, std::int64_t{1} << 15}) {
      ExperimentConfig config;
      config.dim = 16;
      config.trials = 100000;
      config.sample_size = size;
      config.mapping = {mapping, std::nullopt};
      config.seed = DeriveSeed(kSeed, 900 + size);
      config.jobs = Jobs();
      const ExperimentReport r = RunExperiment(config);
      const bool all = r.bound_checks_total == config.trials &&
                       r.bound_checks_passed == r.bound_checks_total;
      ok &= all;
      s << mapping << "/s=" << size << ": " << r.bound_checks_passed << "/"
        << r.bound_checks_total << "; ";
    }
  }
  s << "opt_P(X2) <= |X2 in union of T| + removals at d=16";
  return {ok, s.str()};
}

Outcome Criterion10() {
  std::int64_t orders = 0;
  std::int64_t wrong = 0;
  // Exhaustive: every distinct set X and every order of all 2^d elements
  // (zero-weight elements included) for d <= 3.
  for (int d = 1; d <= 3; ++d) {
    const Word n = Word{1} << d;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      std::vector<Word> x;
      for (Word v = 0; v < n; ++v) {
        if ((mask >> v) & 1U) x.push_back(v);
      }
      const int opt = RankBits(x);
      std::vector<Word> order(n);
      std::iota(order.begin(), order.end(), Word{0});
      std::vector<WeightedElement> arrival(n);
      do {
        for (Word i = 0; i < n; ++i) {
          arrival[i] = {order[i], ((mask >> order[i]) & 1U) ? 1.0 : 0.0};
        }
        ++orders;
        wrong += static_cast<int>(TrivialGreedy(d, arrival).size()) != opt;
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }
  // Randomized: 10^4 uniform orders of all of F_2^12.
  Rng rng(DeriveSeed(kSeed, 10));
  const int d = 12;
  const Word n = Word{1} << d;
  std::int64_t random_orders = 0;
  for (int t = 0; t < 10000; ++t) {
    const WeightAssignment w = SampleAdversarialWeights(d, rng);
    std::vector<WeightedElement> arrival(n);
    for (Word v = 0; v < n; ++v) arrival[v] = {v, w.Weight(v)};
    for (std::size_t i = arrival.size(); i > 1; --i) {
      std::swap(arrival[i - 1], arrival[rng.Below(i)]);
    }
    ++random_orders;
    wrong += static_cast<int>(TrivialGreedy(d, arrival).size()) != w.Opt();
  }
  std::ostringstream s;
  s << orders << " exhaustive orders at d<=3 and " << random_orders
    << " random orders at d=12, " << wrong << " with ratio != 1";
  return {wrong == 0, s.str()};
}

std::string ReadFile(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  std::ostringstream s;
  s << file.rdbuf();
  return s.str();
}

Outcome Criterion11() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::current_path() / "acceptance_determinism";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string config = (dir / "config.json").string();
  std::ofstream(config)
      << R"({"d":12,"trials":2000,"fraction":0.5,"mapping":"gl-image"})";
  std::vector<std::string> json(2);
  std::vector<std::string> csv(2);
  std::ostringstream sink;
  for (int run = 0; run < 2; ++run) {
    const std::string out = (dir / ("run" + std::to_string(run))).string();
    const int code = cli::Run(
        {"--seed", "77", "--jobs", std::to_string(Jobs()), "--out",
         out + ".json", "simulate", config, "--per-trial", out + ".csv"},
        sink, sink);
    if (code != cli::kExitOk) {
      return {false, "simulate exited with " + std::to_string(code)};
    }
    json[run] = ReadFile(out + ".json");
    csv[run] = ReadFile(out + ".csv");
  }
  const bool ok = !json[0].empty() && json[0] == json[1] && csv[0] == csv[1];
  std::ostringstream s;
  s << "two simulate runs with --seed 77: JSON " << json[0].size()
    << " bytes " << (json[0] == json[1] ? "identical" : "DIFFER") << ", CSV "
    << csv[0].size() << " bytes " << (csv[0] == csv[1] ? "identical" : "DIFFER");
  fs::remove_all(dir);
  return {ok, s.str()};
}

Outcome Criterion12() {
  std::ostringstream s;
  bool finite = true;
  s << "informational, no inequality asserted;";
  for (int d : {8, 12, 16, 20}) {
    ExperimentConfig config;
    config.dim = d;
    config.trials = d == 20 ? 2000 : 10000;
    config.fraction = 0.5;
    config.mapping = {"leading-bit", std::nullopt};
    config.seed = DeriveSeed(kSeed, 1200 + d);
    config.jobs = Jobs();
    const ExperimentReport r = RunExperiment(config);
    finite &= std::isfinite(r.ratio) && std::isfinite(r.std_error);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  " d=%d ratio %.4f +- %.4f (d^-1/4 = %.4f, %lld trials);", d,
                  r.ratio, r.std_error, std::pow(d, -0.25),
                  static_cast<long long>(r.trials));
    s << buf;
  }
  return {finite, s.str()};
}

}  // namespace
}  // namespace bmpart

int main() {
  using namespace bmpart;
  Suite suite;
  suite.Run(1, "exact checker vs all-transversal enumeration", 60, Criterion1);
  suite.Run(2, "pair sums stay in their parts or the residual", 60,
            Criterion2);
  suite.Run(3, "pairs into the residual bounded by 2 max|P_i| |R|", 120,
            Criterion3);
  suite.Run(4, "max part exceeds c n / 8", 60, Criterion4);
  suite.Run(5, "heavy-part extraction bounds", 60, Criterion5);
  suite.Run(6, "covering number of B_d minus 0", 120, Criterion6);
  suite.Run(7, "refutation certificate at d=17", 1, Criterion7);
  suite.Run(8, "expected rank of the weight draw", 120, Criterion8);
  suite.Run(9, "per-trial heavy-part bound on 10^5 trials", 300, Criterion9);
  suite.Run(10, "trivial greedy is optimal on indicator weights", 60,
            Criterion10);
  suite.Run(11, "simulate is deterministic", 60, Criterion11);
  suite.Run(12, "ratio trend over d", 600, Criterion12);
  std::cout << (suite.failures() == 0 ? "ALL CRITERIA PASS"
                                      : std::to_string(suite.failures()) +
                                            " CRITERIA FAIL")
            << std::endl;
  return suite.failures() == 0 ? 0 : 1;
}
