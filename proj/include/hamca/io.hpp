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

// File formats. Integers are always written as decimal strings so that
// files round-trip at any magnitude; floats use 17 significant digits.
// Schemas are described in docs/formats.md.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "hamca/dynamics.hpp"
#include "hamca/gauss.hpp"
#include "hamca/models.hpp"

namespace hamca {

std::string format_real(double v);

HamiltonianSpec parse_model(std::string_view json_text);
std::string serialize_model(const HamiltonianSpec& spec);
HamiltonianSpec load_model(const std::filesystem::path& path);
void save_model(const HamiltonianSpec& spec, const std::filesystem::path& path);

/// A built-in label ("H2", "Hm:7", ...) or a model file path.
HamiltonianSpec resolve_model(std::string_view label_or_path);

/// Comma-separated entries: "1,0", "1+i, -2i, 3".
GaussVector parse_gauss_vector(std::string_view text);
/// Comma-separated complex floats: "0.8,0.6", "0.5+0.25i,-1e-3i".
ComplexVector parse_complex_vector(std::string_view text);

/// "identity", "H", or a path to {"dim": m, "re": [...], "im": [...]}
/// with row-major integer entries.
GaussMatrix resolve_observable(std::string_view spec, const GaussMatrix& h);

/// Line-delimited trajectory: a header record with the model and l, then
/// one {"n", "re", "im"} record per state.
class TrajectoryWriter {
 public:
  TrajectoryWriter(std::ostream& out, const HamiltonianSpec& model, double l);

  void write(std::size_t n, const GaussVector& psi);

 private:
  std::ostream& out_;
  Eigen::Index dim_;
};

class TrajectoryReader {
 public:
  explicit TrajectoryReader(std::istream& in);

  const HamiltonianSpec& model() const { return model_; }
  double l() const { return l_; }

  /// The next (n, psi_n); records must be numbered 0, 1, 2, ...
  std::optional<std::pair<std::size_t, GaussVector>> next();

 private:
  std::istream& in_;
  HamiltonianSpec model_;
  double l_ = 1.0;
  std::size_t line_ = 1;
  std::size_t expected_ = 0;
};

void write_trajectory(std::ostream& out, const Trajectory& traj);
Trajectory read_trajectory(std::istream& in);

}  // namespace hamca
