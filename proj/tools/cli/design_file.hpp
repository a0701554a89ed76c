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

#ifndef HIPPP_TOOLS_CLI_DESIGN_FILE_HPP_
#define HIPPP_TOOLS_CLI_DESIGN_FILE_HPP_

#include <istream>
#include <ostream>
#include <stdexcept>

#include "hippp/architecture.hpp"
#include "hippp/design.hpp"
#include "hippp/supply.hpp"

namespace hippp::cli {

class DesignFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Everything `design` produces and `flow` consumes.
struct DesignArtifact {
  double mean = 1.0;
  double sigma = 0.0;  // relative to the mean
  ExpectedSet expected;
  Layer1Design layer1;
  double budget = 0.0;
  Layer2Design layer2;
  Layer2Curve curve;

  // LS-HiPPP with the stored Layer 1 ratings and Layer 2 rating.
  Architecture architecture() const;
};

// INI text; reals are written with 17 significant digits so that reading
// the file back reproduces every value exactly.
void write_design(std::ostream& out, const DesignArtifact& design);
DesignArtifact read_design(std::istream& in);

}  // namespace hippp::cli

#endif  // HIPPP_TOOLS_CLI_DESIGN_FILE_HPP_
