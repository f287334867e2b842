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

#include "hamca/models.hpp"

#include <charconv>

namespace hamca {

namespace {

std::string pair_name(Eigen::Index r, Eigen::Index c) {
  return "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
}

}  // namespace

void validate(const HamiltonianSpec& spec) {
  const Eigen::Index m = spec.dim;
  if (m < 1) throw ValidationError("model '" + spec.label + "': dim must be >= 1");
  if (spec.symmetric.rows() != m || spec.symmetric.cols() != m) {
    throw ValidationError("model '" + spec.label + "': S is not " + std::to_string(m) + "x" +
                          std::to_string(m));
  }
  if (spec.antisymmetric.rows() != m || spec.antisymmetric.cols() != m) {
    throw ValidationError("model '" + spec.label + "': A is not " + std::to_string(m) + "x" +
                          std::to_string(m));
  }
  for (Eigen::Index r = 0; r < m; ++r) {
    for (Eigen::Index c = r; c < m; ++c) {
      if (spec.symmetric(r, c) != spec.symmetric(c, r)) {
        throw ValidationError("model '" + spec.label + "': S not symmetric at " +
                                  pair_name(r, c) + " / " + pair_name(c, r),
                              static_cast<std::size_t>(r + 1), static_cast<std::size_t>(c + 1));
      }
      if (spec.antisymmetric(r, c) != -spec.antisymmetric(c, r)) {
        throw ValidationError("model '" + spec.label + "': A not antisymmetric at " +
                                  pair_name(r, c) + " / " + pair_name(c, r),
                              static_cast<std::size_t>(r + 1), static_cast<std::size_t>(c + 1));
      }
    }
  }
}

GaussMatrix build_hamiltonian(const HamiltonianSpec& spec) {
  validate(spec);
  GaussMatrix h(spec.dim, spec.dim);
  for (Eigen::Index r = 0; r < spec.dim; ++r) {
    for (Eigen::Index c = 0; c < spec.dim; ++c) {
      h(r, c) = GaussInt(spec.symmetric(r, c), spec.antisymmetric(r, c));
    }
  }
  return h;
}

HamiltonianSpec make_zero_model(Eigen::Index m) {
  if (m < 1) throw DomainError("zero model needs m >= 1");
  return {m, IntMatrix::Zero(m, m), IntMatrix::Zero(m, m), "zero:" + std::to_string(m)};
}

HamiltonianSpec make_cyclic_model(Eigen::Index m) {
  if (m < 2) throw DomainError("cyclic model needs m >= 2, got " + std::to_string(m));
  HamiltonianSpec spec = make_zero_model(m);
  spec.label = m <= 4 ? "H" + std::to_string(m) : "Hm:" + std::to_string(m);
  if (m == 2) {
    spec.symmetric(0, 1) = 1;
    spec.symmetric(1, 0) = 1;
    return spec;
  }
  for (Eigen::Index k = 0; k + 1 < m; ++k) {
    spec.antisymmetric(k, k + 1) = -1;
    spec.antisymmetric(k + 1, k) = 1;
  }
  spec.symmetric(0, m - 1) = 1;
  spec.symmetric(m - 1, 0) = 1;
  return spec;
}

std::optional<HamiltonianSpec> builtin_model(std::string_view label) {
  if (label == "H2") return make_cyclic_model(2);
  if (label == "H3") return make_cyclic_model(3);
  if (label == "H4") return make_cyclic_model(4);
  if (label.starts_with("Hm:")) {
    std::string_view digits = label.substr(3);
    long m = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw ParseError("model", "bad cyclic model label '" + std::string(label) + "'");
    }
    return make_cyclic_model(m);
  }
  return std::nullopt;
}

GaussVector basis_state(Eigen::Index m, Eigen::Index k) {
  if (m < 1 || k < 1 || k > m) {
    throw RangeError("basis_state: index " + std::to_string(k) + " outside 1.." +
                     std::to_string(m));
  }
  GaussVector v = GaussVector::Zero(m);
  v[k - 1] = 1;
  return v;
}

}  // namespace hamca
