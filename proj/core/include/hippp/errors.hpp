// Copyright 2026 The HiPPP Authors
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

#ifndef HIPPP_ERRORS_HPP_
#define HIPPP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace hippp {

// Invalid numeric parameters (negative sigma, k out of range, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Inconsistent object structure: bad edge indices, missing architecture
// fields, dimension mismatches.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The combinatorial search would exceed its configured size limit.
class EnumerationCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A metric is undefined for the given inputs (e.g. zero output power).
class UndefinedMetricError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A checked invariant failed. Never expected on valid input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hippp

#endif  // HIPPP_ERRORS_HPP_
