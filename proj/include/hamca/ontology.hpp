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

// Orbits that permute single-component states. States that differ only by a
// phase are different states here, so periods compare pairs entry-exactly.

#include <cstddef>
#include <optional>
#include <vector>

#include "hamca/gauss.hpp"
#include "hamca/models.hpp"

namespace hamca {

struct SingleComponent {
  Eigen::Index index = 0;  // 1-based
  GaussInt phase;

  friend bool operator==(const SingleComponent&, const SingleComponent&) = default;
};

/// The lone nonzero entry, or nullopt for a superposition.
/// Throws DegenerateStateError for the zero vector.
std::optional<SingleComponent> classify_state(const GaussVector& psi);

struct Visit {
  std::size_t n = 0;
  std::optional<SingleComponent> component;  // nullopt: superposed or zero
};

struct CycleReport {
  // Minimal P with (psi_P, psi_{P+1}) == (psi_0, psi_1); nullopt if none
  // within budget.
  std::optional<std::size_t> period;
  // psi_0 .. psi_{P-1} when a period was found, otherwise every evolved state.
  std::vector<Visit> visits;
  bool ontological = false;
  BigInt link_number;
  // 4m for an m-state model; compared, never assumed.
  std::size_t claimed_period = 0;

  bool matches_claim() const { return period && *period == claimed_period; }
  // Every visited phase in {1, -1, i, -i}.
  bool unit_phases() const;
};

std::size_t default_cycle_budget(Eigen::Index m);

CycleReport find_period(const GaussVector& psi0, const GaussVector& psi1, const GaussMatrix& h,
                        std::size_t max_steps);

/// find_period for every neighbour pair (e_k, e_{k+1}), k = 1..m-1. The
/// budget defaults to default_cycle_budget(m).
std::vector<CycleReport> scan_ontological_pairs(const HamiltonianSpec& spec,
                                                std::optional<std::size_t> max_steps = {});

}  // namespace hamca
