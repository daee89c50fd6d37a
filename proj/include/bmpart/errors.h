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

#ifndef BMPART_ERRORS_H_
#define BMPART_ERRORS_H_

#include <stdexcept>
#include <string>

namespace bmpart {

// Vectors of different dimensions were combined.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is larger than an exhaustive routine is allowed to handle.
class GuardExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A proven structural bound failed on certified input. Always a bug.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bmpart

#endif  // BMPART_ERRORS_H_
