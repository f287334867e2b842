// Copyright 2026 The hamca Authors
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

#pragma once

#include <iosfwd>

namespace hamca::cli {

// Process exit statuses. Each failure class has its own code.
enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kUsage = 2,
  kIoError = 3,
  kInvalidInput = 4,  // parse, validation, dimension, domain
  kRecursionViolation = 5,
  kConservationViolation = 6,
  kNonCommuting = 7,
  kBudgetExhausted = 8,
  kSingularity = 9,
  kOntologicalRegime = 10,
  kToleranceNotMet = 11,
  kNumericalFailure = 12,
};

/// Entry point of the `hamca` tool: subcommands run, check, cycle and
/// continuum. Reports and trajectories go to the paths given by flags;
/// summaries go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hamca::cli
