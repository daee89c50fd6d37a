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

#include "bmpart/secretary.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <thread>

#include "bmpart/reduction.h"
#include "bmpart/structure.h"

namespace bmpart {

double WeightAssignment::Weight(Word v) const {
  return std::find(x.begin(), x.end(), v) != x.end() ? 1.0 : 0.0;
}

std::vector<Word> WeightAssignment::Distinct() const {
  std::vector<Word> out(x);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int WeightAssignment::Opt() const { return RankBits(x); }

WeightAssignment SampleAdversarialWeights(int dim, Rng& rng) {
  CheckDim(dim, kMaxSpaceDim);
  WeightAssignment w;
  w.dim = dim;
  w.x.reserve(dim);
  for (int i = 0; i < dim; ++i) {
    w.x.push_back(static_cast<Word>(rng.Below(std::uint64_t{1} << dim)));
  }
  return w;
}

Rational ExactExpectedRank(int dim) {
  CheckDim(dim, kMaxSpaceDim);
  const Rational space = Rational(boost::multiprecision::cpp_int(1) << dim);
  std::vector<Rational> dist(dim + 1);
  dist[0] = 1;
  for (int step = 0; step < dim; ++step) {
    std::vector<Rational> next(dim + 1);
    for (int r = 0; r <= step; ++r) {
      if (dist[r] == 0) continue;
      const Rational stay =
          Rational(boost::multiprecision::cpp_int(1) << r) / space;
      next[r] += dist[r] * stay;
      if (r < dim) next[r + 1] += dist[r] * (1 - stay);
    }
    dist = std::move(next);
  }
  Rational mean = 0;
  for (int r = 0; r <= dim; ++r) mean += dist[r] * r;
  if (mean < Rational(dim, 2)) {
    throw IntegrityError("ExactExpectedRank: below d/2");
  }
  return mean;
}

SampleSplit SplitSample(const WeightAssignment& x, std::size_t sample_size,
                        Rng& rng) {
  SampleSplit split{VectorSet::RandomSubset(x.dim, sample_size, rng), {}, {}};
  for (Word v : x.x) {
    (split.sample.Contains(v) ? split.x1 : split.x2).push_back(v);
  }
  return split;
}

int OptOnPartition(const PartitionReduction& p, std::span<const Word> x2) {
  std::uint32_t hit = 0;
  const Word limit = Word{1} << p.dim();
  for (Word v : x2) {
    if (v < limit && p.InGround(v)) hit |= std::uint32_t{1} << p.PartOf(v);
  }
  return std::popcount(hit);
}

PartitionReduction LeadingBitOutsideSample(const VectorSet& sample,
                                           const Gl2Map* map) {
  const int d = sample.dim();
  if (map != nullptr && map->dim() != d) {
    throw DimensionMismatch("LeadingBitOutsideSample");
  }
  // Block b holds [2^b, 2^(b+1)), whose images are the images of
  // [0, 2^b) shifted by column b. Filtering is branch-free because the
  // sample typically covers about half of each block.
  std::vector<Word> image;
  if (map != nullptr) image.assign(std::size_t{1} << d, 0);
  std::vector<std::vector<Word>> parts(d);
  for (int b = 0; b < d; ++b) {
    const Word lo = Word{1} << b;
    std::vector<Word>& part = parts[b];
    part.resize(lo);
    std::size_t kept = 0;
    if (map == nullptr) {
      for (Word v = lo; v < 2 * lo; ++v) {
        part[kept] = v;
        kept += !sample.Contains(v);
      }
    } else {
      const Word column = map->columns()[b];
      for (Word v = 0; v < lo; ++v) {
        const Word w = image[v] ^ column;
        image[lo + v] = w;
        part[kept] = w;
        kept += !sample.Contains(w);
      }
    }
    part.resize(kept);
  }
  return PartitionReduction(d, std::move(parts), /*validated=*/true);
}

namespace {

// Invertible map whose last columns are a maximal independent subset of the
// sample hits, completed with standard basis vectors in the first columns.
Gl2Map SampleAdaptedMap(int dim, std::span<const Word> hits) {
  Gf2Basis basis(dim);
  std::vector<Word> picked;
  for (Word v : hits) {
    if (basis.InsertBits(v)) picked.push_back(v);
  }
  std::vector<Word> completion;
  for (int i = 0; i < dim && basis.rank() < dim; ++i) {
    if (basis.InsertBits(Word{1} << i)) completion.push_back(Word{1} << i);
  }
  completion.insert(completion.end(), picked.rbegin(), picked.rend());
  return Gl2Map(std::move(completion));
}

}  // namespace

PartitionMapping MakeMapping(const MappingSpec& spec, int dim) {
  CheckDim(dim, kMaxSpaceDim);
  if (spec.name == "leading-bit") {
    return [](const VectorSet& sample, std::span<const Word>, Rng&) {
      return LeadingBitOutsideSample(sample, nullptr);
    };
  }
  if (spec.name == "gl-image") {
    if (spec.seed) {
      Rng map_rng(*spec.seed);
      auto map = std::make_shared<const Gl2Map>(RandomGl2(dim, map_rng));
      return [map](const VectorSet& sample, std::span<const Word>, Rng&) {
        return LeadingBitOutsideSample(sample, map.get());
      };
    }
    return [dim](const VectorSet& sample, std::span<const Word>, Rng& rng) {
      const Gl2Map map = RandomGl2(dim, rng);
      return LeadingBitOutsideSample(sample, &map);
    };
  }
  if (spec.name == "sample-adapted") {
    return [dim](const VectorSet& sample, std::span<const Word> hits, Rng&) {
      const Gl2Map map = SampleAdaptedMap(dim, hits);
      return LeadingBitOutsideSample(sample, &map);
    };
  }
  throw std::invalid_argument("unknown mapping '" + spec.name + "'");
}

std::vector<Word> TrivialGreedy(int dim,
                                std::span<const WeightedElement> arrival) {
  Gf2Basis basis(dim);
  std::vector<Word> accepted;
  for (const WeightedElement& e : arrival) {
    if (e.weight > 0.0 && basis.InsertBits(e.vector & DimMask(dim))) {
      accepted.push_back(e.vector);
    }
  }
  return accepted;
}

TrialRecord RunTrial(int dim, const PartitionMapping& mapping,
                     std::size_t sample_size, Rng& rng,
                     const TrialOptions& options) {
  const WeightAssignment w = SampleAdversarialWeights(dim, rng);
  const SampleSplit split = SplitSample(w, sample_size, rng);
  const PartitionReduction p = mapping(split.sample, split.x1, rng);

  if (options.validate_mapping) {
    for (int i = 0; i < p.num_parts(); ++i) {
      for (Word v : p.part(i)) {
        if (split.sample.Contains(v)) {
          throw std::logic_error("mapping output meets the sample");
        }
      }
    }
    const ValidityCertificate cert = dim <= 12
                                         ? CheckReductionExact(p)
                                         : CheckReductionRandomized(p, 64, rng);
    if (!cert.valid) throw std::logic_error("mapping output is not valid");
  }

  TrialRecord record;
  record.opt_m = w.Opt();
  record.opt_p = OptOnPartition(p, split.x2);
  record.x1_size = static_cast<int>(split.x1.size());

  const HeavyPartReport heavy = ExtractHeavyParts(p);
  std::uint32_t kept = 0;
  for (int i : heavy.t_set) kept |= std::uint32_t{1} << i;
  for (Word v : split.x2) {
    const int part = p.PartOf(v);
    if (part >= 0 && ((kept >> part) & 1U)) ++record.x2_in_t;
  }
  record.removals = heavy.removals;
  record.bound_ok = record.opt_p <= record.x2_in_t + record.removals;
  return record;
}

TrialRecord RunTrivialGreedyTrial(int dim, Rng& rng) {
  const WeightAssignment w = SampleAdversarialWeights(dim, rng);
  std::vector<Word> order = w.Distinct();
  // Fisher-Yates; zero-weight elements are never accepted, so only the
  // relative order of the positive-weight ones matters.
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[rng.Below(i)]);
  }
  std::vector<WeightedElement> arrival;
  arrival.reserve(order.size());
  for (Word v : order) arrival.push_back({v, 1.0});
  TrialRecord record;
  record.opt_m = w.Opt();
  record.opt_p = static_cast<int>(TrivialGreedy(dim, arrival).size());
  return record;
}

std::string ToString(Algorithm algorithm) {
  return algorithm == Algorithm::kPartition ? "partition" : "trivial-greedy";
}

Algorithm ParseAlgorithm(const std::string& name) {
  if (name == "partition") return Algorithm::kPartition;
  if (name == "trivial-greedy") return Algorithm::kTrivialGreedy;
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

std::size_t ExperimentConfig::ResolvedSampleSize() const {
  const std::int64_t space = std::int64_t{1} << dim;
  std::int64_t size = 0;
  if (sample_size) {
    size = *sample_size;
  } else if (fraction) {
    if (!(*fraction >= 0.0 && *fraction <= 1.0)) {
      throw std::invalid_argument("fraction must lie in [0, 1]");
    }
    size = std::llround(*fraction * static_cast<double>(space));
  }
  if (size < 0 || size > space) {
    throw std::invalid_argument("sample_size must lie in [0, 2^d]");
  }
  return static_cast<std::size_t>(size);
}

ExperimentReport RunExperiment(const ExperimentConfig& config) {
  CheckDim(config.dim, kMaxSpaceDim);
  if (config.trials < 1) {
    throw std::invalid_argument("trials must be >= 1");
  }
  const std::size_t sample_size = config.ResolvedSampleSize();
  const PartitionMapping mapping = MakeMapping(config.mapping, config.dim);
  const TrialOptions options{config.validate_mapping};

  std::vector<TrialRecord> records(config.trials);
  auto run_range = [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t t = begin; t < end; ++t) {
      Rng rng(DeriveSeed(config.seed, static_cast<std::uint64_t>(t)));
      records[t] = config.algorithm == Algorithm::kPartition
                       ? RunTrial(config.dim, mapping, sample_size, rng,
                                  options)
                       : RunTrivialGreedyTrial(config.dim, rng);
      records[t].trial = t;
    }
  };
  const int jobs = std::max(1, config.jobs);
  if (jobs == 1) {
    run_range(0, config.trials);
  } else {
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(jobs);
    const std::int64_t chunk = (config.trials + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
      const std::int64_t begin = std::min(config.trials, j * chunk);
      const std::int64_t end = std::min(config.trials, begin + chunk);
      workers.emplace_back([&, j, begin, end] {
        try {
          run_range(begin, end);
        } catch (...) {
          errors[j] = std::current_exception();
        }
      });
    }
    for (auto& worker : workers) worker.join();
    for (auto& error : errors) {
      if (error) std::rethrow_exception(error);
    }
  }

  // Ordered reduction by trial index.
  double sum_p = 0, sum_m = 0, sum_pp = 0, sum_mm = 0, sum_pm = 0;
  ExperimentReport report;
  for (const TrialRecord& r : records) {
    sum_p += r.opt_p;
    sum_m += r.opt_m;
    sum_pp += static_cast<double>(r.opt_p) * r.opt_p;
    sum_mm += static_cast<double>(r.opt_m) * r.opt_m;
    sum_pm += static_cast<double>(r.opt_p) * r.opt_m;
    if (config.algorithm == Algorithm::kPartition) {
      ++report.bound_checks_total;
      if (r.bound_ok) ++report.bound_checks_passed;
    }
  }
  const double n = static_cast<double>(config.trials);
  report.dim = config.dim;
  report.trials = config.trials;
  report.sample_size = sample_size;
  report.mapping = config.algorithm == Algorithm::kPartition
                       ? config.mapping.name
                       : std::string("none");
  report.algorithm = ToString(config.algorithm);
  report.seed = config.seed;
  report.mean_opt_p = sum_p / n;
  report.mean_opt_m = sum_m / n;
  // Sample (co)variances, n - 1 denominators.
  const double denom = std::max(1.0, n - 1);
  const double var_p = std::max(0.0, (sum_pp - n * report.mean_opt_p *
                                                   report.mean_opt_p) / denom);
  const double var_m = std::max(0.0, (sum_mm - n * report.mean_opt_m *
                                                   report.mean_opt_m) / denom);
  const double cov_pm =
      (sum_pm - n * report.mean_opt_p * report.mean_opt_m) / denom;
  report.se_opt_p = std::sqrt(var_p / n);
  report.se_opt_m = std::sqrt(var_m / n);
  if (report.mean_opt_m > 0) {
    report.ratio = report.mean_opt_p / report.mean_opt_m;
    const double r = report.ratio;
    const double var_ratio =
        (var_p + r * r * var_m - 2 * r * cov_pm) /
        (n * report.mean_opt_m * report.mean_opt_m);
    report.std_error = std::sqrt(std::max(0.0, var_ratio));
  }
  report.exact_mean_opt_m =
      static_cast<double>(ExactExpectedRank(config.dim));
  const double d = config.dim;
  report.comparator_two_d_three_quarters = 2 * std::pow(d, 0.75);
  report.comparator_four_d_minus_quarter =
      4 * std::pow(d, -0.25) * report.mean_opt_m;
  report.per_trial = std::move(records);
  return report;
}

}  // namespace bmpart
