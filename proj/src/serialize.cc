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

#include "bmpart/serialize.h"

#include <sstream>
#include <stdexcept>

namespace bmpart {
namespace {

Json FractionJson(const Fraction& f) {
  return Json{{"num", f.num}, {"den", f.den}, {"value", f.value()}};
}

const Json& Require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::int64_t RequireInt(const Json& j, const char* key) {
  const Json& v = Require(j, key);
  if (!v.is_number_integer()) {
    throw std::invalid_argument(std::string("field '") + key +
                                "' must be an integer");
  }
  return v.get<std::int64_t>();
}

}  // namespace

Json ToJson(const PartitionReduction& p) {
  Json parts = Json::array();
  for (const auto& part : p.parts()) parts.push_back(part);
  return Json{{"d", p.dim()}, {"parts", std::move(parts)}};
}

PartitionReduction ReductionFromJson(const Json& j) {
  const std::int64_t d = RequireInt(j, "d");
  if (d < 1 || d > kMaxSpaceDim) {
    throw std::invalid_argument("'d' must lie in [1, 24]");
  }
  const Json& parts_json = Require(j, "parts");
  if (!parts_json.is_array()) {
    throw std::invalid_argument("'parts' must be an array");
  }
  std::vector<std::vector<Word>> parts;
  for (const Json& part : parts_json) {
    if (!part.is_array()) {
      throw std::invalid_argument("each part must be an array");
    }
    std::vector<Word>& out = parts.emplace_back();
    for (const Json& v : part) {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0 ||
          v.get<std::int64_t>() >= (std::int64_t{1} << d)) {
        throw std::invalid_argument("part entries must be integers in [0, 2^d)");
      }
      out.push_back(v.get<Word>());
    }
  }
  return PartitionReduction(static_cast<int>(d), std::move(parts));
}

Json ToJson(const ValidityCertificate& cert) {
  Json witness = nullptr;
  if (cert.witness) {
    witness = Json::array();
    for (const TransversalEntry& e : *cert.witness) {
      witness.push_back(Json::array({e.part, e.vector}));
    }
  }
  return Json{{"valid", cert.valid},
              {"method", ToString(cert.method)},
              {"witness", std::move(witness)},
              {"trials", cert.trials}};
}

ValidityCertificate CertificateFromJson(const Json& j) {
  ValidityCertificate cert;
  cert.valid = Require(j, "valid").get<bool>();
  const std::string method = Require(j, "method").get<std::string>();
  if (method == "exact") {
    cert.method = CheckMethod::kExact;
  } else if (method == "randomized") {
    cert.method = CheckMethod::kRandomized;
  } else {
    throw std::invalid_argument("unknown method '" + method + "'");
  }
  const Json& witness = Require(j, "witness");
  if (!witness.is_null()) {
    cert.witness.emplace();
    for (const Json& e : witness) {
      cert.witness->push_back({e.at(0).get<int>(), e.at(1).get<Word>()});
    }
  }
  cert.trials = RequireInt(j, "trials");
  return cert;
}

Json ToJson(const PairCountReport& r) {
  return Json{{"cross_pairs_total", r.cross_pairs_total},
              {"pairs_into_R", r.pairs_into_r},
              {"pairs_into_parts", r.pairs_into_parts},
              {"bound", r.bound},
              {"max_part", r.max_part},
              {"r_size", r.r_size},
              {"holds", r.holds}};
}

Json ToJson(const MaxPartReport& r) {
  return Json{{"max_part", r.max_part}, {"n", r.n},
              {"c", FractionJson(r.c)}, {"bound", FractionJson(r.bound)},
              {"holds", r.holds}};
}

Json ToJson(const HeavyPartReport& r) {
  return Json{{"t_set", r.t_set},
              {"removed", r.removed},
              {"union_size_initial", r.union_size_initial},
              {"union_size_final", r.union_size_final},
              {"removals", r.removals},
              {"threshold", r.threshold},
              {"removal_cap", r.removal_cap},
              {"within_cap", r.within_cap},
              {"final_below_threshold", r.final_below_threshold},
              {"holds", r.within_cap && r.final_below_threshold}};
}

Json ToJson(const PairSumReport& r) {
  Json out{{"pairs", r.pairs},
           {"into_first_part", r.into_first_part},
           {"into_second_part", r.into_second_part},
           {"into_residual", r.into_residual},
           {"violations", r.violations}};
  if (r.first_violation) {
    const PairSumViolation& v = *r.first_violation;
    out["first_violation"] = Json{{"x", v.x},
                                  {"y", v.y},
                                  {"part_x", v.part_x},
                                  {"part_y", v.part_y},
                                  {"part_sum", v.part_sum}};
  } else {
    out["first_violation"] = nullptr;
  }
  return out;
}

Json ToJson(const CoverReport& r) {
  Json out{{"beta", FractionJson(r.beta)},
           {"witness_flat_rank", r.witness_flat_rank},
           {"covering_number", r.covering_number}};
  out["cover"] = r.cover ? Json(*r.cover) : Json(nullptr);
  out["warning"] = r.warning ? Json(*r.warning) : Json(nullptr);
  return out;
}

Json ToJson(const RefutationReport& r) {
  Json rows = Json::array();
  for (const RefutationRow& row : r.rows) {
    rows.push_back(Json{{"label", row.label},
                        {"max_part", row.max_part},
                        {"meets_floor", row.meets_floor},
                        {"violates", row.violates}});
  }
  return Json{{"d", r.dim},
              {"k", r.k},
              {"two_k", r.two_k},
              {"floor_bound", FractionJson(r.floor_bound)},
              {"refuted", r.refuted},
              {"verdict", r.verdict()},
              {"rows", std::move(rows)}};
}

ExperimentConfig ConfigFromJson(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("config must be an object");
  ExperimentConfig c;
  c.dim = static_cast<int>(RequireInt(j, "d"));
  c.trials = RequireInt(j, "trials");
  if (j.contains("sample_size") && j.contains("fraction")) {
    throw std::invalid_argument("give either 'sample_size' or 'fraction'");
  }
  if (j.contains("sample_size")) c.sample_size = RequireInt(j, "sample_size");
  if (j.contains("fraction")) {
    if (!j.at("fraction").is_number()) {
      throw std::invalid_argument("'fraction' must be a number");
    }
    c.fraction = j.at("fraction").get<double>();
  }
  if (j.contains("mapping")) {
    const Json& m = j.at("mapping");
    if (m.is_string()) {
      c.mapping.name = m.get<std::string>();
    } else if (m.is_object()) {
      c.mapping.name = Require(m, "name").get<std::string>();
      if (m.contains("seed")) c.mapping.seed = m.at("seed").get<std::uint64_t>();
    } else {
      throw std::invalid_argument("'mapping' must be a string or object");
    }
  }
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) {
      throw std::invalid_argument("'seed' must be a non-negative integer");
    }
    c.seed = j.at("seed").get<std::uint64_t>();
  }
  if (j.contains("algorithm")) {
    c.algorithm = ParseAlgorithm(j.at("algorithm").get<std::string>());
  }
  if (j.contains("validate_mapping")) {
    c.validate_mapping = j.at("validate_mapping").get<bool>();
  }
  return c;
}

Json ToJson(const ExperimentConfig& c) {
  Json out{{"d", c.dim}, {"trials", c.trials}};
  if (c.sample_size) out["sample_size"] = *c.sample_size;
  if (c.fraction) out["fraction"] = *c.fraction;
  Json mapping{{"name", c.mapping.name}};
  if (c.mapping.seed) mapping["seed"] = *c.mapping.seed;
  out["mapping"] = std::move(mapping);
  out["seed"] = c.seed;
  out["algorithm"] = ToString(c.algorithm);
  out["validate_mapping"] = c.validate_mapping;
  return out;
}

Json ToJson(const ExperimentReport& r) {
  return Json{{"d", r.dim},
              {"trials", r.trials},
              {"sample_size", r.sample_size},
              {"mapping", r.mapping},
              {"algorithm", r.algorithm},
              {"seed", r.seed},
              {"mean_opt_P", r.mean_opt_p},
              {"mean_opt_M", r.mean_opt_m},
              {"se_opt_P", r.se_opt_p},
              {"se_opt_M", r.se_opt_m},
              {"ratio", r.ratio},
              {"std_error", r.std_error},
              {"exact_mean_opt_M", r.exact_mean_opt_m},
              {"comparator_2d^(3/4)", r.comparator_two_d_three_quarters},
              {"comparator_4d^(-1/4)*mean_opt_M",
               r.comparator_four_d_minus_quarter},
              {"bound_checks_passed", r.bound_checks_passed},
              {"bound_checks_total", r.bound_checks_total}};
}

std::string PerTrialCsv(const ExperimentReport& r) {
  std::ostringstream out;
  out << "trial,opt_M,opt_P,x1_size,removals,bound_ok\n";
  for (const TrialRecord& t : r.per_trial) {
    out << t.trial << ',' << t.opt_m << ',' << t.opt_p << ',' << t.x1_size
        << ',' << t.removals << ',' << (t.bound_ok ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace bmpart
