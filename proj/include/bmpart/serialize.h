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

// JSON and CSV forms of the library types. Vectors are plain non-negative
// integers (their bit encoding).

#ifndef BMPART_SERIALIZE_H_
#define BMPART_SERIALIZE_H_

#include <string>

#include "json.hpp"

#include "bmpart/matroid.h"
#include "bmpart/reduction.h"
#include "bmpart/secretary.h"
#include "bmpart/structure.h"

namespace bmpart {

using Json = nlohmann::ordered_json;

// {"d": int, "parts": [[int, ...], ...]} with exactly d part arrays.
Json ToJson(const PartitionReduction& p);
// Throws std::invalid_argument on a schema or content error.
PartitionReduction ReductionFromJson(const Json& j);

// {"valid": bool, "method": str, "witness": [[part, int], ...] | null,
//  "trials": int}
Json ToJson(const ValidityCertificate& cert);
ValidityCertificate CertificateFromJson(const Json& j);

Json ToJson(const PairCountReport& r);
Json ToJson(const MaxPartReport& r);
Json ToJson(const HeavyPartReport& r);
Json ToJson(const PairSumReport& r);
Json ToJson(const CoverReport& r);
Json ToJson(const RefutationReport& r);

// {"d": int, "trials": int, "sample_size": int | "fraction": float,
//  "mapping": "name" | {"name": str, "seed": int}, "seed": int,
//  "algorithm": "partition" | "trivial-greedy", "validate_mapping": bool}
// Everything except "d" and "trials" is optional.
ExperimentConfig ConfigFromJson(const Json& j);
Json ToJson(const ExperimentConfig& c);

// Aggregates only; per-trial records go to PerTrialCsv.
Json ToJson(const ExperimentReport& r);
// Columns: trial,opt_M,opt_P,x1_size,removals,bound_ok.
std::string PerTrialCsv(const ExperimentReport& r);

}  // namespace bmpart

#endif  // BMPART_SERIALIZE_H_
