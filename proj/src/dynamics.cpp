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

#include "hamca/dynamics.hpp"

namespace hamca {

std::optional<std::size_t> find_recursion_violation(const std::vector<GaussVector>& states,
                                                    const GaussMatrix& h) {
  for (std::size_t k = 2; k < states.size(); ++k) {
    if (states[k] != step_forward(states[k - 2], states[k - 1], h)) return k;
  }
  return std::nullopt;
}

InitialPair InitialPair::coincident(GaussVector psi0) {
  GaussVector psi1 = psi0;
  return {std::move(psi0), std::move(psi1)};
}

InitialPair InitialPair::neighbours(Eigen::Index m, Eigen::Index k) {
  if (k < 1 || k > m || m < 2) {
    throw RangeError("neighbour pair index " + std::to_string(k) + " outside 1.." +
                     std::to_string(m));
  }
  return {basis_state(m, k), basis_state(m, k == m ? 1 : k + 1)};
}

Trajectory evolve(const HamiltonianSpec& model, const InitialPair& initial, std::size_t n_steps,
                  double l) {
  if (!(l > 0)) throw DomainError("discreteness scale l must be positive");
  const GaussMatrix h = build_hamiltonian(model);
  return {model, evolve(initial.psi0, initial.psi1, h, n_steps), l};
}

std::pair<IntVector, IntVector> step_xp(const IntVector& x_prev, const IntVector& p_prev,
                                        const IntVector& x_curr, const IntVector& p_curr,
                                        const HamiltonianSpec& spec) {
  validate(spec);
  const Eigen::Index m = spec.dim;
  for (const IntVector* v : {&x_prev, &p_prev, &x_curr, &p_curr}) {
    if (v->size() != m) detail::throw_dimension("step_xp", v->size(), m);
  }
  const IntMatrix& s = spec.symmetric;
  const IntMatrix& a = spec.antisymmetric;
  IntVector x_next = x_prev + s * p_curr + a * x_curr;
  IntVector p_next = p_prev - s * x_curr + a * p_curr;
  return {std::move(x_next), std::move(p_next)};
}

}  // namespace hamca
