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

// Floating-point bridge between the integer automaton and its continuum
// description: the spectral closed-form solution, bandlimited (sinc)
// reconstruction of psi(t) from the samples psi_n = psi(n l), the shift-form
// continuum equation 2 sinh(l d/dt) psi = -i H psi, the constancy of q_1 in
// continuous time, and convergence of link weights to |psi^a|^2 / <psi|psi>.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "hamca/gauss.hpp"

namespace hamca {

/// H = V diag(lambda) V^†, eigenvalues ascending.
struct SpectralForm {
  Eigen::VectorXd eigenvalues;
  ComplexMatrix eigenvectors;
  double residual = 0;  // max_k |H v_k - lambda_k v_k|_inf
};

struct SpectralOptions {
  // Relative to max(1, |H|_inf).
  double residual_bound = 1e-10;
  double unitarity_tolerance = 1e-12;
};

SpectralForm spectral_decompose(const ComplexMatrix& h, const SpectralOptions& options = {});
SpectralForm spectral_decompose(const GaussMatrix& h, const SpectralOptions& options = {});

/// The recursion in double precision: psi_0 .. psi_{n_steps + 1}. Throws
/// InstabilityError at the first non-finite state.
std::vector<ComplexVector> evolve_float(const ComplexVector& psi0, const ComplexVector& psi1,
                                        const ComplexMatrix& h, std::size_t n_steps);
std::vector<ComplexVector> evolve_float(const ComplexVector& psi0, const ComplexVector& psi1,
                                        const GaussMatrix& h, std::size_t n_steps);

/// Modes with |lambda| within band_epsilon of 2 have cos(phi) = 0 and the
/// closed form has a 0/0 there.
enum class SingularModes {
  kReject,               // SingularityError naming the eigenvalue
  kContinuousExtension,  // evaluate the removable limit (Chebyshev form)
};

struct ClosedFormOptions {
  double band_epsilon = 1e-6;
  SingularModes singular = SingularModes::kReject;
};

/// psi_n = (2 cos phi)^-1 ( e^{-i n phi} [e^{i phi} psi_0 + psi_1]
///                         + (-1)^n e^{i n phi} [e^{-i phi} psi_0 - psi_1] )
/// with 2 sin phi = H, evaluated in the eigenbasis. Eigenvalues beyond
/// 2 + band_epsilon always throw SingularityError.
ComplexVector closed_form(const SpectralForm& spectral, const ComplexVector& psi0,
                          const ComplexVector& psi1, long n,
                          const ClosedFormOptions& options = {});
ComplexVector closed_form(const GaussMatrix& h, const ComplexVector& psi0,
                          const ComplexVector& psi1, long n,
                          const ClosedFormOptions& options = {});

/// The closed form continued to real s as a bandlimited signal: the
/// alternating (-1)^n e^{i n phi} mode is carried at the in-band frequency
/// phi - pi sgn(phi). Agrees with closed_form at integer s. Requires every
/// |lambda| < 2 - band_epsilon.
ComplexVector closed_form_at(const SpectralForm& spectral, const ComplexVector& psi0,
                             const ComplexVector& psi1, double s, double band_epsilon = 1e-6);

/// psi_1 = e^{-i phi} psi_0: the successor that lies entirely on the
/// non-alternating branch.
ComplexVector bounded_successor(const SpectralForm& spectral, const ComplexVector& psi0);

/// Samples psi_n taken at spacing l. Reconstruction at a point uses only
/// the samples within `window` of it.
struct BandlimitedSignal {
  std::vector<ComplexVector> samples;
  double l = 1.0;
  int window = 32;
};

void validate(const BandlimitedSignal& signal);

/// psi(t) = sum_{|n - t/l| <= W} psi_n sinc(pi (t/l - n)). Throws RangeError
/// when the window leaves the sampled range.
ComplexVector reconstruct(const BandlimitedSignal& signal, double t);

/// sum over excluded samples of |psi_n|_inf |sinc(pi (t/l - n))|.
double truncation_tail(const BandlimitedSignal& signal, double t);

/// |psi(t + l) - psi(t - l) + i H psi(t)|_inf, the shifts acting as
/// translations of the bandlimited function reconstructed around t.
double sinh_residual(const BandlimitedSignal& signal, const ComplexMatrix& h, double t);
double sinh_residual(const BandlimitedSignal& signal, const GaussMatrix& h, double t);

/// A priori bound on sinh_residual from the window edges and the
/// recursion defect of the samples.
double sinh_residual_bound(const BandlimitedSignal& signal, const ComplexMatrix& h, double t);

/// kPairwise: Re <psi(t), psi(t+l) + psi(t-l)>, equal to the exact
///   q_1 = 2 Re <psi_{n+1}, psi_n> at sample points.
/// kCosh: Re <psi(t), cosh(l d/dt) psi(t)>, half of the above.
enum class Q1Convention { kPairwise, kCosh };

struct Q1Evaluation {
  double value = 0;
  // <psi|psi> + (l^2/2) Re <psi, psi''> (doubled under kPairwise), psi''
  // from the five-point central stencil at spacing l.
  double two_term = 0;
  double remainder = 0;  // value - two_term, O(l^4)
  double tail_bound = 0;
};

Q1Evaluation q1_continuum(const BandlimitedSignal& signal, double t,
                          Q1Convention convention = Q1Convention::kPairwise);

struct Q1Constancy {
  double mean = 0;
  double max_deviation = 0;  // max |q1(t) - mean|
  double tail_bound = 0;     // max over t of the per-point estimate
};

Q1Constancy q1_constancy(const BandlimitedSignal& signal, std::span<const double> times,
                         Q1Convention convention = Q1Convention::kPairwise);

struct BornOptions {
  // Pairs (psi_n, psi_{n+1}) with n l <= horizon enter the error.
  double horizon = 1.0;
  // Explicit successor instead of bounded_successor(psi_init).
  std::optional<ComplexVector> psi1;
  // |L| below this is the ontological regime.
  double link_floor = 1e-9;
};

struct BornPoint {
  double l = 0;
  double max_error = 0;  // max over pairs and a of |w_a - p_a|
  double link_number = 0;
  std::size_t pairs = 0;
};

struct BornReport {
  std::vector<BornPoint> points;
  std::vector<double> ratios;  // error(l_i) / error(l_{i+1})
  bool strictly_decreasing = false;
};

/// For each l, evolves psi_{n+1} = psi_{n-1} - 2 i l H psi_n from
/// (psi_init, psi_1) and compares link weights w_a = L_a / L of each pair
/// with p_a of the continuum state at the pair midpoint.
BornReport born_convergence(const GaussMatrix& h, const ComplexVector& psi_init,
                            std::span<const double> l_values, const BornOptions& options = {});

}  // namespace hamca
