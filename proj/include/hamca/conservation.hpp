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

// Exact conserved quantities of the finite-difference dynamics.
//
// For any G with [G, H] = 0 the two-time correlation
//
//   q_G = psi_{n+1}^† G psi_n + psi_n^† G psi_{n+1}
//
// is the same for every consecutive pair. With G = 1 it is twice the link
// number L = sum_a (x_{n+1}^a x_n^a + p_{n+1}^a p_n^a).

#include <cstddef>
#include <optional>
#include <vector>

#include "hamca/dynamics.hpp"
#include "hamca/gauss.hpp"

namespace hamca {

GaussInt q_G(const GaussVector& psi_n, const GaussVector& psi_next, const GaussMatrix& g);

/// psi_n^† G d + d^† G psi_n with d = psi_{n+1} - psi_{n-1}.
GaussInt conservation_residual(const GaussVector& psi_prev, const GaussVector& psi_n,
                               const GaussVector& psi_next, const GaussMatrix& g);

GaussMatrix commutator(const GaussMatrix& a, const GaussMatrix& b);
bool commutes(const GaussMatrix& g, const GaussMatrix& h);

struct LinkReport {
  std::vector<BigInt> per_alpha;
  BigInt total;
  // Absent when total == 0. Negative entries and entries above 1 are kept.
  std::optional<std::vector<Rational>> weights;

  // L = 0: no continuum limit exists for this pair.
  bool ontological_regime() const { return total.is_zero(); }
};

LinkReport link_counts(const GaussVector& psi_n, const GaussVector& psi_next);

struct ConservationStep {
  std::size_t n = 0;  // pair (psi_n, psi_{n+1})
  GaussInt q;
  LinkReport links;
};

/// Streaming checker. Construction rejects G that does not commute with H;
/// observe() throws ConservationViolation at the first pair whose q_G
/// differs from the first one, or where 2 L != q_1.
class ConservationMonitor {
 public:
  ConservationMonitor(GaussMatrix g, const GaussMatrix& h);

  ConservationStep observe(std::size_t n, const GaussVector& psi_n, const GaussVector& psi_next);

  const std::optional<GaussInt>& value() const { return value_; }
  std::size_t pairs_seen() const { return pairs_; }

 private:
  GaussMatrix g_;
  GaussMatrix identity_;
  std::optional<GaussInt> value_;
  std::size_t pairs_ = 0;
};

struct ConservationReport {
  GaussInt value;
  std::vector<ConservationStep> steps;
};

ConservationReport verify_trajectory(const Trajectory& traj, const GaussMatrix& g);

}  // namespace hamca
