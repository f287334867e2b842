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

#include <optional>
#include <string>
#include <string_view>

#include "hamca/gauss.hpp"

namespace hamca {

/// A Hamiltonian cellular automaton: integer symmetric S and antisymmetric A,
/// combined into the Hermitian H = S + iA.
struct HamiltonianSpec {
  Eigen::Index dim = 0;
  IntMatrix symmetric;      // S
  IntMatrix antisymmetric;  // A
  std::string label;

  friend bool operator==(const HamiltonianSpec& a, const HamiltonianSpec& b) {
    return a.dim == b.dim && a.label == b.label && equal(a.symmetric, b.symmetric) &&
           equal(a.antisymmetric, b.antisymmetric);
  }
};

/// Throws ValidationError naming the first offending (row, col) pair,
/// 1-based, if S != S^T, A != -A^T or the shapes disagree with dim.
void validate(const HamiltonianSpec& spec);

/// H with entries S_ab + i A_ab. Validates first.
GaussMatrix build_hamiltonian(const HamiltonianSpec& spec);

/// The cyclic family: H_{k,k+1} = -i, H_{k+1,k} = i, corners H_{1,m} = H_{m,1} = 1.
///
/// For m = 2 the band and the corners land on the same two slots. The
/// two-state model is defined separately as sigma_1 (S only, A = 0), and
/// that is what m = 2 returns. Throws DomainError for m < 2.
HamiltonianSpec make_cyclic_model(Eigen::Index m);

HamiltonianSpec make_zero_model(Eigen::Index m);

/// Built-in labels: "H2", "H3", "H4", "Hm:<m>". Returns nullopt otherwise.
std::optional<HamiltonianSpec> builtin_model(std::string_view label);

/// Unit vector with 1 at the 1-based position k.
GaussVector basis_state(Eigen::Index m, Eigen::Index k);

}  // namespace hamca
