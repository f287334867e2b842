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

// Second-order finite-difference evolution
//
//   psi_{n+1} = psi_{n-1} - i H psi_n
//
// forward and backward, in complex and (x, p) form, plus the transfer
// operators T(n) propagating any initial pair. The stepping templates work
// for any scalar with times_minus_i(); the float layer instantiates them with
// std::complex<double>.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hamca/gauss.hpp"
#include "hamca/models.hpp"

namespace hamca {

namespace detail {

template <typename Scalar>
void require_step_shapes(const char* op, const Vector<Scalar>& a, const Vector<Scalar>& b,
                         const Matrix<Scalar>& h) {
  if (h.rows() != h.cols()) throw_dimension(op, h.rows(), h.cols());
  if (a.size() != h.rows()) throw_dimension(op, a.size(), h.rows());
  if (b.size() != h.rows()) throw_dimension(op, b.size(), h.rows());
}

}  // namespace detail

/// psi_{n+1} = prev - i H curr.
template <typename Scalar>
Vector<Scalar> step_forward(const Vector<Scalar>& prev, const Vector<Scalar>& curr,
                            const Matrix<Scalar>& h) {
  detail::require_step_shapes("step_forward", prev, curr, h);
  Vector<Scalar> h_curr = h * curr;
  return prev + times_minus_i(h_curr);
}

/// psi_{n-1} = next + i H curr; inverts step_forward exactly.
template <typename Scalar>
Vector<Scalar> step_backward(const Vector<Scalar>& curr, const Vector<Scalar>& next,
                             const Matrix<Scalar>& h) {
  detail::require_step_shapes("step_backward", curr, next, h);
  Vector<Scalar> h_curr = h * curr;
  return next - times_minus_i(h_curr);
}

/// States psi_0 .. psi_{n_steps + 1}.
template <typename Scalar>
std::vector<Vector<Scalar>> evolve(const Vector<Scalar>& psi0, const Vector<Scalar>& psi1,
                                   const Matrix<Scalar>& h, std::size_t n_steps) {
  detail::require_step_shapes("evolve", psi0, psi1, h);
  std::vector<Vector<Scalar>> states;
  states.reserve(n_steps + 2);
  states.push_back(psi0);
  states.push_back(psi1);
  for (std::size_t i = 0; i < n_steps; ++i) {
    const std::size_t n = states.size();
    states.push_back(step_forward(states[n - 2], states[n - 1], h));
  }
  return states;
}

/// Sliding-pair evolution for long runs. Holds (psi_{n-1}, psi_n).
template <typename Scalar>
class Stepper {
 public:
  Stepper(Matrix<Scalar> h, Vector<Scalar> psi0, Vector<Scalar> psi1)
      : h_(std::move(h)), prev_(std::move(psi0)), curr_(std::move(psi1)) {
    detail::require_step_shapes("Stepper", prev_, curr_, h_);
  }

  // Index of current(): the held pair is (psi_{index-1}, psi_index).
  std::size_t index() const { return index_; }
  const Vector<Scalar>& previous() const { return prev_; }
  const Vector<Scalar>& current() const { return curr_; }
  const Matrix<Scalar>& hamiltonian() const { return h_; }

  void advance() {
    Vector<Scalar> next = step_forward(prev_, curr_, h_);
    prev_ = std::move(curr_);
    curr_ = std::move(next);
    ++index_;
  }

  void retreat() {
    Vector<Scalar> before = step_backward(prev_, curr_, h_);
    curr_ = std::move(prev_);
    prev_ = std::move(before);
    --index_;
  }

  // Calls probe(n, psi_n, psi_{n+1}) for the held pair, then after each step.
  template <typename Probe>
  void run(std::size_t n_steps, Probe&& probe) {
    probe(index_ - 1, prev_, curr_);
    for (std::size_t i = 0; i < n_steps; ++i) {
      advance();
      probe(index_ - 1, prev_, curr_);
    }
  }

 private:
  Matrix<Scalar> h_;
  Vector<Scalar> prev_;
  Vector<Scalar> curr_;
  std::size_t index_ = 1;
};

/// T(0) = 1, T(1) = 0, T(k+1) = T(k-1) - i H T(k), so that
///   psi_n = T(n-m+1) psi_{m+1} + T(n-m) psi_m.
/// Returns T(0) .. T(n_max).
template <typename Scalar>
std::vector<Matrix<Scalar>> transfer_operators(const Matrix<Scalar>& h, std::size_t n_max) {
  if (h.rows() != h.cols()) detail::throw_dimension("transfer_operators", h.rows(), h.cols());
  const Eigen::Index m = h.rows();
  std::vector<Matrix<Scalar>> t;
  t.reserve(n_max + 1);
  t.push_back(Matrix<Scalar>::Identity(m, m));
  if (n_max >= 1) t.push_back(Matrix<Scalar>::Zero(m, m));
  for (std::size_t k = 1; k < n_max; ++k) {
    Matrix<Scalar> h_t = h * t[k];
    t.push_back(t[k - 1] + times_minus_i(h_t));
  }
  return t;
}

template <typename Scalar>
Matrix<Scalar> transfer_operator(const Matrix<Scalar>& h, long n) {
  if (n < 0) throw DomainError("transfer_operator: negative index " + std::to_string(n));
  return transfer_operators(h, static_cast<std::size_t>(n)).back();
}

/// First state index k >= 2 where psi_k != psi_{k-2} - i H psi_{k-1}.
std::optional<std::size_t> find_recursion_violation(const std::vector<GaussVector>& states,
                                                    const GaussMatrix& h);

/// The two initial states of the second-order recursion.
struct InitialPair {
  GaussVector psi0;
  GaussVector psi1;

  /// psi_1 = psi_0, the choice that leads to the quantum-mechanical limit.
  static InitialPair coincident(GaussVector psi0);
  /// (e_k, e_{k+1}), 1-based k in 1..m; k = m wraps around to (e_m, e_1).
  static InitialPair neighbours(Eigen::Index m, Eigen::Index k);
};

/// An exact trajectory of a model. l is the discreteness scale; the exact
/// layer carries it as metadata only.
struct Trajectory {
  HamiltonianSpec model;
  std::vector<GaussVector> states;
  double l = 1.0;

  GaussMatrix hamiltonian() const { return build_hamiltonian(model); }
};

Trajectory evolve(const HamiltonianSpec& model, const InitialPair& initial, std::size_t n_steps,
                  double l = 1.0);

/// x_next = x_prev + S p_curr + A x_curr,  p_next = p_prev - S x_curr + A p_curr.
std::pair<IntVector, IntVector> step_xp(const IntVector& x_prev, const IntVector& p_prev,
                                        const IntVector& x_curr, const IntVector& p_curr,
                                        const HamiltonianSpec& spec);

}  // namespace hamca
