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

#include "hamca/ontology.hpp"

#include "hamca/conservation.hpp"
#include "hamca/dynamics.hpp"

namespace hamca {

namespace {

Visit visit_of(std::size_t n, const GaussVector& psi) {
  if (is_zero(psi)) return {n, std::nullopt};
  return {n, classify_state(psi)};
}

}  // namespace

std::optional<SingleComponent> classify_state(const GaussVector& psi) {
  std::optional<SingleComponent> found;
  for (Eigen::Index a = 0; a < psi.size(); ++a) {
    if (psi[a].is_zero()) continue;
    if (found) return std::nullopt;
    found = SingleComponent{a + 1, psi[a]};
  }
  if (!found) throw DegenerateStateError("classify_state: zero vector is not a state");
  return found;
}

bool CycleReport::unit_phases() const {
  for (const Visit& v : visits) {
    if (!v.component) return false;
    if (norm(v.component->phase) != 1) return false;
  }
  return true;
}

std::size_t default_cycle_budget(Eigen::Index m) { return 8 * static_cast<std::size_t>(m) + 8; }

CycleReport find_period(const GaussVector& psi0, const GaussVector& psi1, const GaussMatrix& h,
                        std::size_t max_steps) {
  if (max_steps < 1) throw DomainError("find_period: max_steps must be >= 1");
  Stepper<GaussInt> stepper(h, psi0, psi1);

  CycleReport report;
  report.claimed_period = 4 * static_cast<std::size_t>(h.rows());
  report.link_number = link_counts(psi0, psi1).total;
  report.visits.push_back(visit_of(0, psi0));

  for (std::size_t p = 1; p <= max_steps; ++p) {
    // Holds (psi_{p-1}, psi_p) before, (psi_p, psi_{p+1}) after.
    stepper.advance();
    if (stepper.previous() == psi0 && stepper.current() == psi1) {
      report.period = p;
      break;
    }
    report.visits.push_back(visit_of(p, stepper.previous()));
  }
  if (!report.period) report.visits.push_back(visit_of(max_steps + 1, stepper.current()));

  report.ontological = true;
  for (const Visit& v : report.visits) report.ontological = report.ontological && v.component;
  return report;
}

std::vector<CycleReport> scan_ontological_pairs(const HamiltonianSpec& spec,
                                                std::optional<std::size_t> max_steps) {
  const GaussMatrix h = build_hamiltonian(spec);
  const std::size_t budget = max_steps.value_or(default_cycle_budget(spec.dim));
  std::vector<CycleReport> out;
  for (Eigen::Index k = 1; k < spec.dim; ++k) {
    const InitialPair pair = InitialPair::neighbours(spec.dim, k);
    out.push_back(find_period(pair.psi0, pair.psi1, h, budget));
  }
  return out;
}

}  // namespace hamca
