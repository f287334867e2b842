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

// Generators and independent reference implementations shared by the tests.
// The reference code deliberately avoids Eigen and GaussInt: plain vectors
// of BigInt and explicit index loops.

#include <complex>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "hamca/gauss.hpp"
#include "hamca/models.hpp"

namespace hamca::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline HamiltonianSpec random_spec(Rng& rng, Eigen::Index dim, long range) {
  HamiltonianSpec spec;
  spec.dim = dim;
  spec.label = "random";
  spec.symmetric = IntMatrix::Zero(dim, dim);
  spec.antisymmetric = IntMatrix::Zero(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    spec.symmetric(r, r) = uniform(rng, -range, range);
    for (Eigen::Index c = r + 1; c < dim; ++c) {
      const long s = uniform(rng, -range, range);
      const long a = uniform(rng, -range, range);
      spec.symmetric(r, c) = s;
      spec.symmetric(c, r) = s;
      spec.antisymmetric(r, c) = a;
      spec.antisymmetric(c, r) = -a;
    }
  }
  return spec;
}

inline GaussVector random_state(Rng& rng, Eigen::Index dim, long range) {
  GaussVector v(dim);
  for (Eigen::Index a = 0; a < dim; ++a) {
    const long re = uniform(rng, -range, range);
    const long im = uniform(rng, -range, range);
    v[a] = GaussInt(BigInt(re), BigInt(im));
  }
  return v;
}

inline IntVector random_ints(Rng& rng, Eigen::Index dim, long range) {
  IntVector v(dim);
  for (Eigen::Index a = 0; a < dim; ++a) v[a] = uniform(rng, -range, range);
  return v;
}

inline ComplexVector random_complex(Rng& rng, Eigen::Index dim) {
  ComplexVector v(dim);
  for (Eigen::Index a = 0; a < dim; ++a) {
    const double re = uniform_real(rng, -1, 1);
    const double im = uniform_real(rng, -1, 1);
    v[a] = {re, im};
  }
  return v;
}

inline GaussInt gi(long re, long im = 0) { return GaussInt(BigInt(re), BigInt(im)); }

inline GaussVector gvec(std::initializer_list<GaussInt> entries) {
  GaussVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index k = 0;
  for (const GaussInt& z : entries) v[k++] = z;
  return v;
}

// ---- reference recursion -------------------------------------------------

struct RefState {
  std::vector<BigInt> x;
  std::vector<BigInt> p;
  friend bool operator==(const RefState&, const RefState&) = default;
};

inline RefState to_ref(const GaussVector& v) {
  RefState s;
  for (Eigen::Index a = 0; a < v.size(); ++a) {
    s.x.push_back(v[a].real());
    s.p.push_back(v[a].imag());
  }
  return s;
}

inline GaussVector from_ref(const RefState& s) {
  GaussVector v(static_cast<Eigen::Index>(s.x.size()));
  for (std::size_t a = 0; a < s.x.size(); ++a) {
    v[static_cast<Eigen::Index>(a)] = GaussInt(s.x[a], s.p[a]);
  }
  return v;
}

// (S + iA)(x + ip) = (Sx - Ap) + i(Sp + Ax), so
// psi_prev - i H psi = (x_prev + Sp + Ax) + i(p_prev - Sx + Ap).
inline RefState reference_step(const HamiltonianSpec& spec, const RefState& prev,
                               const RefState& curr) {
  const auto m = static_cast<std::size_t>(spec.dim);
  RefState next{prev.x, prev.p};
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const BigInt& s = spec.symmetric(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
      const BigInt& an =
          spec.antisymmetric(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
      next.x[a] += s * curr.p[b] + an * curr.x[b];
      next.p[a] += an * curr.p[b] - s * curr.x[b];
    }
  }
  return next;
}

inline std::vector<RefState> reference_evolve(const HamiltonianSpec& spec, const RefState& psi0,
                                              const RefState& psi1, std::size_t steps) {
  std::vector<RefState> out{psi0, psi1};
  for (std::size_t i = 0; i < steps; ++i) {
    out.push_back(reference_step(spec, out[out.size() - 2], out[out.size() - 1]));
  }
  return out;
}

// 2 Re <psi_{n+1}, psi_n> by explicit sums.
inline BigInt reference_q1(const RefState& now, const RefState& next) {
  BigInt q = 0;
  for (std::size_t a = 0; a < now.x.size(); ++a) q += 2 * (next.x[a] * now.x[a] + next.p[a] * now.p[a]);
  return q;
}

// ---- misc ------------------------------------------------------------------

// A fresh path under the system temp directory.
inline std::filesystem::path temp_path(const std::string& stem) {
  static std::uint64_t counter = 0;
  std::random_device rd;
  return std::filesystem::temp_directory_path() /
         ("hamca_" + stem + "_" + std::to_string(rd()) + "_" + std::to_string(counter++));
}

}  // namespace hamca::testing
