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

#include "cli.h"

#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "bmpart/reduction.h"
#include "bmpart/secretary.h"
#include "bmpart/selftest.h"
#include "bmpart/serialize.h"
#include "bmpart/structure.h"

namespace bmpart::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::optional<std::uint64_t> seed;
  int jobs = 1;
  std::string out_path;
  std::string format = "json";
};

std::string Timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

// Draws a seed from system entropy when none was given; the manifest
// records whichever was used.
std::uint64_t ResolveSeed(const std::optional<std::uint64_t>& seed) {
  if (seed) return *seed;
  std::random_device device;
  return (static_cast<std::uint64_t>(device()) << 32) | device();
}

void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << content;
  if (!file) throw UsageError("failed writing '" + path + "'");
}

std::string ReadFile(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot read '" + path + "'");
  std::ostringstream s;
  s << file.rdbuf();
  return s.str();
}

Json ParseJsonFile(const std::string& path) {
  try {
    return Json::parse(ReadFile(path));
  } catch (const Json::parse_error& e) {
    throw UsageError("malformed JSON in '" + path + "': " + e.what());
  }
}

class Manifest {
 public:
  Manifest(std::string command, std::uint64_t seed)
      : command_(std::move(command)), seed_(seed), start_(Timestamp()) {}

  void set_config(Json config) { config_ = std::move(config); }
  void AddOutput(const std::string& path) { outputs_.push_back(path); }

  // Written next to the primary --out file, if any.
  void Emit(const GlobalOptions& global) const {
    if (global.out_path.empty()) return;
    Json j{{"command", command_},
           {"config", config_},
           {"seed", seed_},
           {"tool_version", kToolVersion},
           {"start", start_},
           {"end", Timestamp()},
           {"outputs", outputs_}};
    WriteFile(global.out_path + ".manifest.json", j.dump(2) + "\n");
  }

 private:
  std::string command_;
  std::uint64_t seed_;
  std::string start_;
  Json config_ = Json::object();
  std::vector<std::string> outputs_;
};

struct ReductionSource {
  std::string file;
  std::string gen;
  int dim = 0;
  double density = 0.5;
};

void AddReductionOptions(CLI::App* cmd, ReductionSource& src) {
  cmd->add_option("reduction", src.file, "Reduction JSON file");
  cmd->add_option("--gen", src.gen,
                  "Generator: leading-bit, gl-image or random")
      ->check(CLI::IsMember({"leading-bit", "gl-image", "random"}));
  cmd->add_option("--d", src.dim, "Dimension for --gen");
  cmd->add_option("--density", src.density,
                  "Fraction of nonzero vectors placed by --gen random");
}

Json DescribeSource(const ReductionSource& src) {
  if (!src.file.empty()) return Json{{"file", src.file}};
  return Json{{"gen", src.gen}, {"d", src.dim}, {"density", src.density}};
}

PartitionReduction LoadReduction(const ReductionSource& src,
                                 std::uint64_t seed) {
  if (src.file.empty() == src.gen.empty()) {
    throw UsageError("give exactly one of a reduction file or --gen");
  }
  if (!src.file.empty()) {
    try {
      return ReductionFromJson(ParseJsonFile(src.file));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("bad reduction: ") + e.what());
    } catch (const Json::exception& e) {
      throw UsageError(std::string("bad reduction: ") + e.what());
    }
  }
  if (src.dim < 1 || src.dim > kMaxSpaceDim) {
    throw UsageError("--d must lie in [1, 24]");
  }
  Rng rng(seed);
  if (src.gen == "leading-bit") return LeadingBitReduction(src.dim);
  if (src.gen == "gl-image") {
    return TransformReduction(LeadingBitReduction(src.dim),
                              RandomGl2(src.dim, rng));
  }
  return RandomCandidateReduction(src.dim, src.density, rng);
}

std::string PartSizesText(const PartitionReduction& p) {
  std::ostringstream s;
  for (int i = 0; i < p.num_parts(); ++i) {
    s << (i ? " " : "") << p.part(i).size();
  }
  return s.str();
}

std::string WitnessText(const std::vector<TransversalEntry>& witness) {
  std::ostringstream s;
  for (std::size_t i = 0; i < witness.size(); ++i) {
    s << (i ? ", " : "") << witness[i].vector << "@P" << witness[i].part;
  }
  return s.str();
}

// verify ------------------------------------------------------------------

struct VerifyOptions {
  ReductionSource source;
  bool exact = false;
  std::int64_t trials = 0;
};

int CmdVerify(const VerifyOptions& opt, const GlobalOptions& global,
              std::ostream& out) {
  if (opt.exact && opt.trials > 0) {
    throw UsageError("--exact and --trials are mutually exclusive");
  }
  const std::uint64_t seed = ResolveSeed(global.seed);
  const PartitionReduction p = LoadReduction(opt.source, seed);
  Manifest manifest("verify", seed);
  Json config{{"source", DescribeSource(opt.source)},
              {"method", opt.trials > 0 ? "randomized" : "exact"},
              {"trials", opt.trials}};
  manifest.set_config(config);

  ValidityCertificate cert;
  if (opt.trials > 0) {
    Rng rng(DeriveSeed(seed, 1));
    cert = CheckReductionRandomized(p, opt.trials, rng);
  } else {
    try {
      cert = CheckReductionExact(p);
    } catch (const GuardExceeded& e) {
      out << "guard exceeded: " << e.what()
          << " (use --trials N for a randomized check)\n";
      return kExitGuard;
    }
  }
  out << "d=" << p.dim() << " parts=[" << PartSizesText(p)
      << "] method=" << ToString(cert.method) << "\n";
  if (cert.valid) {
    out << (cert.method == CheckMethod::kExact
                ? "VALID: every transversal is independent\n"
                : "NO DEPENDENCE FOUND in " + std::to_string(cert.trials) +
                      " sampled transversals\n");
  } else {
    out << "INVALID: dependent transversal {" << WitnessText(*cert.witness)
        << "}\n";
  }
  if (!global.out_path.empty()) {
    WriteFile(global.out_path, ToJson(cert).dump(2) + "\n");
    manifest.AddOutput(global.out_path);
    manifest.Emit(global);
  }
  return cert.valid ? kExitOk : kExitFailed;
}

// analyze -----------------------------------------------------------------

struct AnalyzeOptions {
  ReductionSource source;
  bool force = false;
};

int CmdAnalyze(const AnalyzeOptions& opt, const GlobalOptions& global,
               std::ostream& out, std::ostream& err) {
  const std::uint64_t seed = ResolveSeed(global.seed);
  PartitionReduction p = LoadReduction(opt.source, seed);
  Manifest manifest("analyze", seed);
  manifest.set_config(Json{{"source", DescribeSource(opt.source)},
                           {"force", opt.force}});

  ValidityCertificate cert;
  try {
    cert = CheckReductionExact(p);
  } catch (const GuardExceeded& e) {
    out << "guard exceeded: " << e.what() << "\n";
    return kExitGuard;
  }
  if (!cert.valid && !opt.force) {
    out << "INVALID: dependent transversal {" << WitnessText(*cert.witness)
        << "}; rerun with --force to analyze anyway\n";
    return kExitFailed;
  }
  p.set_validated(cert.valid);

  Json report{{"d", p.dim()},
              {"part_sizes", p.PartSizes()},
              {"validity", ToJson(cert)}};
  std::ostringstream table;
  table << "d=" << p.dim() << " n=" << p.TotalSize()
        << " |R|=" << p.ResidualSize() << " parts=[" << PartSizesText(p)
        << "]\n";

  bool all_hold = true;
  if (p.TotalSize() <= kMaxPairLoopElements) {
    const PairCountReport pairs = CountPairs(p);
    report["pair_count"] = ToJson(pairs);
    all_hold &= pairs.holds;
    table << "pair count    pairs_into_R=" << pairs.pairs_into_r
          << " <= 2*max|P_i|*|R|=" << pairs.bound << "  "
          << (pairs.holds ? "holds" : "FAILS") << "\n";
  } else {
    report["pair_count"] = nullptr;
    table << "pair count    skipped (more than 2^12 elements)\n";
  }
  const MaxPartReport max_part_report = CheckMaxPartBound(p);
  report["max_part"] = ToJson(max_part_report);
  all_hold &= max_part_report.holds;
  table << "max part      max|P_i|=" << max_part_report.max_part
        << " > c*n/8=" << max_part_report.bound.value() << "  "
        << (max_part_report.holds ? "holds" : "FAILS") << "\n";
  const HeavyPartReport heavy = ExtractHeavyParts(p);
  report["heavy_parts"] = ToJson(heavy);
  const bool heavy_ok = heavy.within_cap && heavy.final_below_threshold;
  all_hold &= heavy_ok;
  table << "heavy parts   removals=" << heavy.removals
        << " (cap " << heavy.removal_cap << ") |T|=" << heavy.t_set.size()
        << " union=" << heavy.union_size_final << " < 2^d/d^(1/4) (floor "
        << heavy.threshold << ")  " << (heavy_ok ? "holds" : "FAILS") << "\n";
  table << "removed parts [";
  for (std::size_t i = 0; i < heavy.removed.size(); ++i) {
    table << (i ? " " : "") << heavy.removed[i];
  }
  table << "]\n";
  report["holds"] = all_hold;

  out << table.str();
  if (!cert.valid) {
    err << "warning: reduction is NOT valid; reports carry no guarantee\n";
  }
  if (!global.out_path.empty()) {
    WriteFile(global.out_path, global.format == "table"
                                   ? table.str()
                                   : report.dump(2) + "\n");
    manifest.AddOutput(global.out_path);
    manifest.Emit(global);
  }
  if (!cert.valid) return kExitFailed;
  return all_hold ? kExitOk : kExitInternal;
}

// cover -------------------------------------------------------------------

struct CoverOptions {
  int dim = 0;
  bool refute = false;
  int gl_images = 2;
};

int CmdCover(const CoverOptions& opt, const GlobalOptions& global,
             std::ostream& out) {
  if (opt.dim < 1 || opt.dim > kMaxVectorDim) {
    throw UsageError("--d must lie in [1, 30]");
  }
  if (opt.refute && opt.dim > kMaxSpaceDim) {
    throw UsageError("--refute needs --d <= 24");
  }
  const std::uint64_t seed = ResolveSeed(global.seed);
  Manifest manifest("cover", seed);
  manifest.set_config(Json{{"d", opt.dim},
                           {"refute", opt.refute},
                           {"gl_images", opt.gl_images}});

  const CoverReport cover = CoveringNumber(opt.dim);
  Json report{{"cover", ToJson(cover)}};
  out << "d=" << opt.dim << " beta=" << cover.beta.num << "/"
      << cover.beta.den << " (flat rank " << cover.witness_flat_rank
      << ") covering number k=" << cover.covering_number << "\n";
  if (cover.cover) {
    for (std::size_t i = 0; i < cover.cover->size(); ++i) {
      out << "  I" << i << " = {";
      const auto& set = (*cover.cover)[i];
      for (std::size_t j = 0; j < set.size(); ++j) {
        out << (j ? ", " : "") << set[j];
      }
      out << "}\n";
    }
  } else if (cover.warning) {
    out << "warning: " << *cover.warning << "\n";
  }

  std::string csv;
  if (opt.refute) {
    std::vector<CorpusEntry> corpus;
    corpus.push_back({"leading-bit", LeadingBitReduction(opt.dim)});
    Rng rng(DeriveSeed(seed, 2));
    for (int g = 0; g < opt.gl_images; ++g) {
      corpus.push_back({"gl-image-" + std::to_string(g),
                        TransformReduction(corpus.front().reduction,
                                           RandomGl2(opt.dim, rng))});
    }
    const RefutationReport refutation = RefutationCertificate(opt.dim, corpus);
    report["refutation"] = ToJson(refutation);
    csv = RefutationCsv(refutation);
    out << "floor (2^d-1)/8 = " << refutation.floor_bound.num << "/8 = "
        << std::fixed << std::setprecision(3) << refutation.floor_bound.value()
        << std::defaultfloat << "  vs  2k = " << refutation.two_k << "  -> "
        << refutation.verdict() << "\n";
    out << std::left << std::setw(14) << "reduction" << std::setw(12)
        << "max|P_i|" << std::setw(8) << "2k" << "verdict\n";
    for (const RefutationRow& row : refutation.rows) {
      out << std::setw(14) << row.label << std::setw(12) << row.max_part
          << std::setw(8) << refutation.two_k
          << (row.violates ? "violated" : "inconclusive") << "\n";
    }
    out << std::right;
  }
  if (!global.out_path.empty()) {
    if (global.format == "csv") {
      if (!opt.refute) throw UsageError("--format csv needs --refute");
      WriteFile(global.out_path, csv);
    } else {
      WriteFile(global.out_path, report.dump(2) + "\n");
    }
    manifest.AddOutput(global.out_path);
    manifest.Emit(global);
  }
  return kExitOk;
}

// simulate ----------------------------------------------------------------

struct SimulateOptions {
  std::string config_path;
  std::optional<int> dim;
  std::optional<std::int64_t> trials;
  std::optional<std::int64_t> sample_size;
  std::optional<double> fraction;
  std::optional<std::string> mapping;
  std::optional<std::uint64_t> mapping_seed;
  std::optional<std::string> algorithm;
  bool validate = false;
  std::string per_trial_path;
};

std::string ReportTable(const ExperimentReport& r) {
  std::ostringstream s;
  s << std::setprecision(6);
  s << "d=" << r.dim << " trials=" << r.trials << " sample_size="
    << r.sample_size << " algorithm=" << r.algorithm << " mapping="
    << r.mapping << " seed=" << r.seed << "\n";
  s << "mean opt_P        " << r.mean_opt_p << " +- " << r.se_opt_p << "\n";
  s << "mean opt_M        " << r.mean_opt_m << " +- " << r.se_opt_m
    << "  (exact " << r.exact_mean_opt_m << ")\n";
  s << "ratio             " << r.ratio << " +- " << r.std_error << "\n";
  s << "2 d^(3/4)         " << r.comparator_two_d_three_quarters << "\n";
  s << "4 d^(-1/4) opt_M  " << r.comparator_four_d_minus_quarter << "\n";
  if (r.bound_checks_total > 0) {
    s << "per-trial bound   " << r.bound_checks_passed << "/"
      << r.bound_checks_total << " trials\n";
  }
  return s.str();
}

int CmdSimulate(const SimulateOptions& opt, const GlobalOptions& global,
                std::ostream& out) {
  ExperimentConfig config;
  try {
    config = ConfigFromJson(ParseJsonFile(opt.config_path));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad config: ") + e.what());
  } catch (const Json::exception& e) {
    throw UsageError(std::string("bad config: ") + e.what());
  }
  if (opt.dim) config.dim = *opt.dim;
  if (opt.trials) config.trials = *opt.trials;
  if (opt.sample_size) {
    config.sample_size = *opt.sample_size;
    config.fraction.reset();
  }
  if (opt.fraction) {
    config.fraction = *opt.fraction;
    config.sample_size.reset();
  }
  if (opt.mapping) config.mapping.name = *opt.mapping;
  if (opt.mapping_seed) config.mapping.seed = *opt.mapping_seed;
  try {
    if (opt.algorithm) config.algorithm = ParseAlgorithm(*opt.algorithm);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (opt.validate) config.validate_mapping = true;
  if (global.seed) {
    config.seed = *global.seed;
  } else if (!ParseJsonFile(opt.config_path).contains("seed")) {
    config.seed = ResolveSeed(std::nullopt);
  }
  config.jobs = global.jobs;
  if (config.dim < 1 || config.dim > kMaxSpaceDim) {
    throw UsageError("d must lie in [1, 24]");
  }
  if (config.trials < 1) throw UsageError("trials must be >= 1");

  Manifest manifest("simulate", config.seed);
  manifest.set_config(ToJson(config));
  ExperimentReport report;
  try {
    report = RunExperiment(config);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::string table = ReportTable(report);
  out << table;
  if (!opt.per_trial_path.empty()) {
    WriteFile(opt.per_trial_path, PerTrialCsv(report));
    manifest.AddOutput(opt.per_trial_path);
  }
  if (!global.out_path.empty()) {
    if (global.format == "csv") {
      WriteFile(global.out_path, PerTrialCsv(report));
    } else if (global.format == "table") {
      WriteFile(global.out_path, table);
    } else {
      WriteFile(global.out_path, ToJson(report).dump(2) + "\n");
    }
    manifest.AddOutput(global.out_path);
    manifest.Emit(global);
  }
  return report.bound_checks_passed == report.bound_checks_total
             ? kExitOk
             : kExitInternal;
}

// selftest ----------------------------------------------------------------

int CmdSelftest(const GlobalOptions& global, std::ostream& out) {
  const std::uint64_t seed = global.seed.value_or(1);
  bool all = true;
  Json results = Json::array();
  for (const SelfTestResult& r : RunSelfTest(seed)) {
    out << (r.passed ? "PASS  " : "FAIL  ") << r.name;
    if (!r.passed) out << "  -- " << r.detail;
    out << "\n";
    all &= r.passed;
    results.push_back(
        Json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  if (!global.out_path.empty()) {
    WriteFile(global.out_path, results.dump(2) + "\n");
    Manifest manifest("selftest", seed);
    manifest.AddOutput(global.out_path);
    manifest.Emit(global);
  }
  return all ? kExitOk : kExitFailed;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Partition reductions of the complete binary matroid"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--seed", global.seed, "Root seed for all randomness");
  app.add_option("--jobs", global.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", global.out_path, "Machine-readable output file");
  app.add_option("--format", global.format, "Format of the --out file")
      ->check(CLI::IsMember({"json", "csv", "table"}));

  VerifyOptions verify;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Certify or falsify a partition reduction");
  AddReductionOptions(verify_cmd, verify.source);
  verify_cmd->add_flag("--exact", verify.exact, "Exact check (default)");
  verify_cmd->add_option("--trials", verify.trials,
                         "Randomized check with N sampled transversals")
      ->check(CLI::PositiveNumber);

  AnalyzeOptions analyze;
  CLI::App* analyze_cmd = app.add_subcommand(
      "analyze", "Pair counts, max-part bound and heavy-part extraction");
  AddReductionOptions(analyze_cmd, analyze.source);
  analyze_cmd->add_flag("--force", analyze.force,
                        "Report even if the reduction is invalid");

  CoverOptions cover;
  CLI::App* cover_cmd = app.add_subcommand(
      "cover", "Covering number of B_d \\ {0} and the 2k refutation table");
  cover_cmd->add_option("--d", cover.dim, "Dimension")->required();
  cover_cmd->add_flag("--refute", cover.refute,
                      "Compare max part sizes of full-support reductions "
                      "against 2k");
  cover_cmd->add_option("--gl-images", cover.gl_images,
                        "Random images of the leading-bit reduction in the "
                        "refutation corpus")
      ->check(CLI::NonNegativeNumber);

  SimulateOptions simulate;
  CLI::App* simulate_cmd =
      app.add_subcommand("simulate", "Run the secretary experiment");
  simulate_cmd->add_option("config", simulate.config_path, "Config JSON")
      ->required();
  simulate_cmd->add_option("--d", simulate.dim);
  simulate_cmd->add_option("--trials", simulate.trials);
  auto* size_opt = simulate_cmd->add_option("--sample-size",
                                            simulate.sample_size);
  simulate_cmd->add_option("--fraction", simulate.fraction)
      ->excludes(size_opt);
  simulate_cmd->add_option("--mapping", simulate.mapping)
      ->check(CLI::IsMember({"leading-bit", "gl-image", "sample-adapted"}));
  simulate_cmd->add_option("--mapping-seed", simulate.mapping_seed);
  simulate_cmd->add_option("--algorithm", simulate.algorithm)
      ->check(CLI::IsMember({"partition", "trivial-greedy"}));
  simulate_cmd->add_flag("--validate", simulate.validate,
                         "Certify every mapping output");
  simulate_cmd->add_option("--per-trial", simulate.per_trial_path,
                           "Per-trial CSV output");

  CLI::App* selftest_cmd =
      app.add_subcommand("selftest", "Invariant suite at d <= 4");

  std::vector<const char*> argv{"bmpart"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (verify_cmd->parsed()) return CmdVerify(verify, global, out);
    if (analyze_cmd->parsed()) return CmdAnalyze(analyze, global, out, err);
    if (cover_cmd->parsed()) return CmdCover(cover, global, out);
    if (simulate_cmd->parsed()) return CmdSimulate(simulate, global, out);
    if (selftest_cmd->parsed()) return CmdSelftest(global, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace bmpart::cli
