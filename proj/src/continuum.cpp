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

#include "hamca/continuum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include <Eigen/Eigenvalues>

#include "hamca/dynamics.hpp"

namespace hamca {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

double inf_norm(const ComplexVector& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

double inf_norm(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().rowwise().sum().maxCoeff();
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void require_pair_shapes(const char* op, const SpectralForm& spectral, const ComplexVector& psi0,
                         const ComplexVector& psi1) {
  const Eigen::Index m = spectral.eigenvalues.size();
  if (psi0.size() != m) detail::throw_dimension(op, psi0.size(), m);
  if (psi1.size() != m) detail::throw_dimension(op, psi1.size(), m);
}

// i^k for any integer k.
cd i_power(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

// sin(n b) / sin(b) for n >= -1, continuous through b = 0 and b = pi.
double chebyshev_ratio(long n, double b) {
  double sign = 1;
  double g = b;
  if (b > kPi / 2) {
    g = kPi - b;
    if ((n + 1) % 2 != 0) sign = -1;  // (-1)^{n+1}
  }
  const double nd = static_cast<double>(n);
  if (g < 1e-6) return sign * nd * (1 - (nd * nd - 1) * g * g / 6);
  return sign * std::sin(nd * g) / std::sin(g);
}

// Mode coefficient a_n of a_{n+1} = a_{n-1} - i lambda a_n with
// a_n = u(n) a_1 + u(n-1) a_0, u(n) = i^{n-1} sin(n b) / sin b and
// 2 cos b = -lambda. Well defined at |lambda| = 2.
cd chebyshev_mode(double lambda, cd a0, cd a1, long n) {
  const double b = std::acos(std::clamp(-lambda / 2, -1.0, 1.0));
  const cd u_n = i_power(n - 1) * chebyshev_ratio(n, b);
  const cd u_prev = i_power(n - 2) * chebyshev_ratio(n - 1, b);
  return u_n * a1 + u_prev * a0;
}

cd regular_mode(double lambda, cd a0, cd a1, long n) {
  const double phi = std::asin(lambda / 2);
  const double c = std::cos(phi);
  const cd e_plus = std::polar(1.0, phi);
  const cd e_minus = std::conj(e_plus);
  const cd forward = e_plus * a0 + a1;
  const cd alternating = e_minus * a0 - a1;
  const double n_phi = static_cast<double>(n) * phi;
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return (std::polar(1.0, -n_phi) * forward + sign * std::polar(1.0, n_phi) * alternating) /
         (2 * c);
}

void check_band(double lambda, double eps) {
  if (std::abs(lambda) > 2 + eps) {
    throw SingularityError("closed_form: eigenvalue " + format_double(lambda) +
                               " lies outside the band |lambda| <= 2; the recursion is unstable",
                           lambda);
  }
}

// sinc(pi (u - n)) with the sine taken from the fractional part of u, so that
// integer u gives exact zeros and ones.
struct SincTable {
  double u = 0;
  long floor_u = 0;
  double frac = 0;
  double sin_frac = 0;

  explicit SincTable(double u_in) : u(u_in) {
    const double f = std::floor(u);
    floor_u = static_cast<long>(f);
    frac = u - f;
    sin_frac = std::sin(kPi * frac);
  }

  double operator()(long n) const {
    if (frac == 0) return n == floor_u ? 1.0 : 0.0;
    const double sign = ((floor_u - n) % 2 == 0) ? 1.0 : -1.0;
    return sign * sin_frac / (kPi * (u - static_cast<double>(n)));
  }
};

struct Window {
  long first = 0;
  long last = 0;
};

Window window_at(const BandlimitedSignal& signal, double center, const char* op) {
  const double w = signal.window;
  const long first = static_cast<long>(std::ceil(center - w));
  const long last = static_cast<long>(std::floor(center + w));
  const long n = static_cast<long>(signal.samples.size());
  if (first < 0 || last > n - 1) {
    throw RangeError(std::string(op) + ": window [" + std::to_string(first) + ", " +
                     std::to_string(last) + "] leaves the sampled range [0, " +
                     std::to_string(n - 1) + "]");
  }
  return {first, last};
}

ComplexVector sum_window(const BandlimitedSignal& signal, Window win, double u) {
  const SincTable sinc(u);
  ComplexVector out = ComplexVector::Zero(signal.samples.front().size());
  for (long n = win.first; n <= win.last; ++n) {
    const double s = sinc(n);
    if (s != 0) out += s * signal.samples[static_cast<std::size_t>(n)];
  }
  return out;
}

double tail_outside(const BandlimitedSignal& signal, Window win, double u) {
  const SincTable sinc(u);
  double tail = 0;
  const long n_samples = static_cast<long>(signal.samples.size());
  for (long n = 0; n < n_samples; ++n) {
    if (n >= win.first && n <= win.last) continue;
    tail += inf_norm(signal.samples[static_cast<std::size_t>(n)]) * std::abs(sinc(n));
  }
  return tail;
}

}  // namespace

SpectralForm spectral_decompose(const ComplexMatrix& h, const SpectralOptions& options) {
  if (h.rows() != h.cols()) detail::throw_dimension("spectral_decompose", h.rows(), h.cols());
  if (h.rows() == 0) throw DimensionError("spectral_decompose: empty matrix");
  const double scale = std::max(1.0, inf_norm(h));
  const double asymmetry = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (asymmetry > 1e-12 * scale) {
    throw DomainError("spectral_decompose: matrix is not Hermitian (|H - H^+| = " +
                      format_double(asymmetry) + ")");
  }

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw NumericalFailure("spectral_decompose: eigensolver did not converge");
  }
  SpectralForm out{solver.eigenvalues(), solver.eigenvectors(), 0.0};

  for (Eigen::Index k = 0; k < out.eigenvalues.size(); ++k) {
    const ComplexVector v = out.eigenvectors.col(k);
    out.residual = std::max(out.residual, inf_norm(ComplexVector(h * v - out.eigenvalues[k] * v)));
  }
  if (out.residual > options.residual_bound * scale) {
    throw NumericalFailure("spectral_decompose: eigen-residual " + format_double(out.residual) +
                           " exceeds bound");
  }
  const Eigen::Index m = h.rows();
  const double unitarity =
      (out.eigenvectors.adjoint() * out.eigenvectors - ComplexMatrix::Identity(m, m))
          .cwiseAbs()
          .maxCoeff();
  if (unitarity > options.unitarity_tolerance) {
    throw NumericalFailure("spectral_decompose: eigenvectors not unitary (deviation " +
                           format_double(unitarity) + ")");
  }
  return out;
}

SpectralForm spectral_decompose(const GaussMatrix& h, const SpectralOptions& options) {
  return spectral_decompose(to_complex(h), options);
}

std::vector<ComplexVector> evolve_float(const ComplexVector& psi0, const ComplexVector& psi1,
                                        const ComplexMatrix& h, std::size_t n_steps) {
  detail::require_step_shapes("evolve_float", psi0, psi1, h);
  std::vector<ComplexVector> states;
  states.reserve(n_steps + 2);
  states.push_back(psi0);
  states.push_back(psi1);
  for (std::size_t i = 0; i < n_steps; ++i) {
    const std::size_t n = states.size();
    ComplexVector next = step_forward(states[n - 2], states[n - 1], h);
    if (!next.allFinite()) {
      throw InstabilityError("evolve_float: non-finite state at step " + std::to_string(n), n);
    }
    states.push_back(std::move(next));
  }
  return states;
}

std::vector<ComplexVector> evolve_float(const ComplexVector& psi0, const ComplexVector& psi1,
                                        const GaussMatrix& h, std::size_t n_steps) {
  return evolve_float(psi0, psi1, to_complex(h), n_steps);
}

ComplexVector closed_form(const SpectralForm& spectral, const ComplexVector& psi0,
                          const ComplexVector& psi1, long n, const ClosedFormOptions& options) {
  require_pair_shapes("closed_form", spectral, psi0, psi1);
  if (n < 0) throw DomainError("closed_form: negative index " + std::to_string(n));
  const ComplexMatrix& v = spectral.eigenvectors;
  const ComplexVector a0 = v.adjoint() * psi0;
  const ComplexVector a1 = v.adjoint() * psi1;

  ComplexVector modes(a0.size());
  for (Eigen::Index k = 0; k < a0.size(); ++k) {
    const double lambda = spectral.eigenvalues[k];
    check_band(lambda, options.band_epsilon);
    if (std::abs(lambda) >= 2 - options.band_epsilon) {
      if (options.singular == SingularModes::kReject) {
        throw SingularityError("closed_form: eigenvalue " + format_double(lambda) +
                                   " at the band edge makes cos(phi) vanish",
                               lambda);
      }
      modes[k] = chebyshev_mode(lambda, a0[k], a1[k], n);
    } else {
      modes[k] = regular_mode(lambda, a0[k], a1[k], n);
    }
  }
  return v * modes;
}

ComplexVector closed_form(const GaussMatrix& h, const ComplexVector& psi0,
                          const ComplexVector& psi1, long n, const ClosedFormOptions& options) {
  return closed_form(spectral_decompose(h), psi0, psi1, n, options);
}

ComplexVector closed_form_at(const SpectralForm& spectral, const ComplexVector& psi0,
                             const ComplexVector& psi1, double s, double band_epsilon) {
  require_pair_shapes("closed_form_at", spectral, psi0, psi1);
  const ComplexMatrix& v = spectral.eigenvectors;
  const ComplexVector a0 = v.adjoint() * psi0;
  const ComplexVector a1 = v.adjoint() * psi1;

  ComplexVector modes(a0.size());
  for (Eigen::Index k = 0; k < a0.size(); ++k) {
    const double lambda = spectral.eigenvalues[k];
    if (std::abs(lambda) >= 2 - band_epsilon) {
      throw SingularityError("closed_form_at: eigenvalue " + format_double(lambda) +
                                 " is not strictly inside the band",
                             lambda);
    }
    const double phi = std::asin(lambda / 2);
    const cd e_plus = std::polar(1.0, phi);
    const cd forward = (e_plus * a0[k] + a1[k]) / (2 * std::cos(phi));
    const cd alternating = (std::conj(e_plus) * a0[k] - a1[k]) / (2 * std::cos(phi));
    const double alias = phi - (phi >= 0 ? kPi : -kPi);
    modes[k] = std::polar(1.0, -s * phi) * forward + std::polar(1.0, s * alias) * alternating;
  }
  return v * modes;
}

ComplexVector bounded_successor(const SpectralForm& spectral, const ComplexVector& psi0) {
  const Eigen::Index m = spectral.eigenvalues.size();
  if (psi0.size() != m) detail::throw_dimension("bounded_successor", psi0.size(), m);
  ComplexVector modes = spectral.eigenvectors.adjoint() * psi0;
  for (Eigen::Index k = 0; k < m; ++k) {
    const double lambda = spectral.eigenvalues[k];
    if (std::abs(lambda) > 2) {
      throw SingularityError(
          "bounded_successor: eigenvalue " + format_double(lambda) + " outside the band", lambda);
    }
    modes[k] *= std::polar(1.0, -std::asin(lambda / 2));
  }
  return spectral.eigenvectors * modes;
}

void validate(const BandlimitedSignal& signal) {
  if (!(signal.l > 0) || !std::isfinite(signal.l)) {
    throw DomainError("bandlimited signal: spacing l must be positive");
  }
  if (signal.window < 8) {
    throw DomainError("bandlimited signal: window " + std::to_string(signal.window) +
                      " is below the minimum of 8");
  }
  if (signal.samples.empty()) throw DomainError("bandlimited signal: no samples");
  const Eigen::Index m = signal.samples.front().size();
  for (std::size_t n = 0; n < signal.samples.size(); ++n) {
    if (signal.samples[n].size() != m) {
      detail::throw_dimension("bandlimited signal", signal.samples[n].size(), m);
    }
    if (!signal.samples[n].allFinite()) {
      throw DomainError("bandlimited signal: sample " + std::to_string(n) + " is not finite");
    }
  }
}

ComplexVector reconstruct(const BandlimitedSignal& signal, double t) {
  validate(signal);
  const double u = t / signal.l;
  return sum_window(signal, window_at(signal, u, "reconstruct"), u);
}

double truncation_tail(const BandlimitedSignal& signal, double t) {
  validate(signal);
  const double u = t / signal.l;
  return tail_outside(signal, window_at(signal, u, "truncation_tail"), u);
}

double sinh_residual(const BandlimitedSignal& signal, const ComplexMatrix& h, double t) {
  validate(signal);
  const Eigen::Index m = signal.samples.front().size();
  if (h.rows() != m || h.cols() != m) detail::throw_dimension("sinh_residual", h.rows(), m);
  const double u = t / signal.l;
  const Window win = window_at(signal, u, "sinh_residual");
  const ComplexVector ahead = sum_window(signal, win, u + 1);
  const ComplexVector here = sum_window(signal, win, u);
  const ComplexVector behind = sum_window(signal, win, u - 1);
  const ComplexVector h_here = h * here;
  return inf_norm(ComplexVector(ahead - behind - times_minus_i(h_here)));
}

double sinh_residual(const BandlimitedSignal& signal, const GaussMatrix& h, double t) {
  return sinh_residual(signal, to_complex(h), t);
}

double sinh_residual_bound(const BandlimitedSignal& signal, const ComplexMatrix& h, double t) {
  validate(signal);
  const Eigen::Index m = signal.samples.front().size();
  if (h.rows() != m || h.cols() != m) detail::throw_dimension("sinh_residual_bound", h.rows(), m);
  const double u = t / signal.l;
  const Window win = window_at(signal, u, "sinh_residual_bound");
  const SincTable sinc(u);
  const double h_norm = inf_norm(h);
  auto sample_norm = [&](long n) { return inf_norm(signal.samples[static_cast<std::size_t>(n)]); };

  // Interior: recursion defect of the samples themselves.
  double bound = 0;
  double weight = 0;
  double largest = 0;
  for (long n = win.first; n <= win.last; ++n) {
    weight += std::abs(sinc(n));
    largest = std::max(largest, sample_norm(n));
  }
  for (long n = win.first + 1; n <= win.last - 1; ++n) {
    const auto k = static_cast<std::size_t>(n);
    const ComplexVector h_psi = h * signal.samples[k];
    const ComplexVector defect =
        signal.samples[k + 1] - signal.samples[k - 1] - times_minus_i(h_psi);
    bound += inf_norm(defect) * std::abs(sinc(n));
  }
  // Edges: terms the truncated window cannot cancel.
  bound += sample_norm(win.first) * std::abs(sinc(win.first - 1));
  bound += (sample_norm(win.first + 1) + h_norm * sample_norm(win.first)) *
           std::abs(sinc(win.first));
  bound += (sample_norm(win.last - 1) + h_norm * sample_norm(win.last)) * std::abs(sinc(win.last));
  bound += sample_norm(win.last) * std::abs(sinc(win.last + 1));
  // Rounding in the three window sums.
  bound += 64 * std::numeric_limits<double>::epsilon() * (2 + h_norm) * (weight + 2) * largest *
           static_cast<double>(m);
  return bound;
}

Q1Evaluation q1_continuum(const BandlimitedSignal& signal, double t, Q1Convention convention) {
  validate(signal);
  const double l = signal.l;
  const double u = t / l;
  const Window win = window_at(signal, u, "q1_continuum");
  const ComplexVector psi = sum_window(signal, win, u);
  const ComplexVector ahead = sum_window(signal, win, u + 1);
  const ComplexVector behind = sum_window(signal, win, u - 1);
  const ComplexVector ahead2 = sum_window(signal, win, u + 2);
  const ComplexVector behind2 = sum_window(signal, win, u - 2);
  const double factor = convention == Q1Convention::kPairwise ? 1.0 : 0.5;

  Q1Evaluation out;
  out.value = factor * psi.dot(ahead + behind).real();
  const ComplexVector second =
      (-ahead2 + 16 * ahead - 30 * psi + 16 * behind - behind2) / (12 * l * l);
  out.two_term = 2 * factor * (psi.squaredNorm() + 0.5 * l * l * psi.dot(second).real());
  out.remainder = out.value - out.two_term;

  const double tau = tail_outside(signal, win, u);
  const double tau_ahead = tail_outside(signal, win, u + 1);
  const double tau_behind = tail_outside(signal, win, u - 1);
  out.tail_bound =
      factor * static_cast<double>(psi.size()) *
      (tau * (inf_norm(ahead) + inf_norm(behind) + tau_ahead + tau_behind) +
       inf_norm(psi) * (tau_ahead + tau_behind));
  return out;
}

Q1Constancy q1_constancy(const BandlimitedSignal& signal, std::span<const double> times,
                         Q1Convention convention) {
  if (times.empty()) throw DomainError("q1_constancy: no evaluation times");
  std::vector<double> values;
  values.reserve(times.size());
  Q1Constancy out;
  for (double t : times) {
    const Q1Evaluation e = q1_continuum(signal, t, convention);
    values.push_back(e.value);
    out.tail_bound = std::max(out.tail_bound, e.tail_bound);
  }
  for (double v : values) out.mean += v;
  out.mean /= static_cast<double>(values.size());
  for (double v : values) out.max_deviation = std::max(out.max_deviation, std::abs(v - out.mean));
  return out;
}

BornReport born_convergence(const GaussMatrix& h, const ComplexVector& psi_init,
                            std::span<const double> l_values, const BornOptions& options) {
  if (l_values.empty()) throw DomainError("born_convergence: no l values");
  const SpectralForm base = spectral_decompose(h);
  if (psi_init.size() != base.eigenvalues.size()) {
    detail::throw_dimension("born_convergence", psi_init.size(), base.eigenvalues.size());
  }
  if (std::abs(psi_init.norm() - 1) > 1e-9) {
    throw DomainError("born_convergence: initial state is not normalised");
  }
  const double radius = base.eigenvalues.cwiseAbs().maxCoeff();
  for (std::size_t i = 0; i < l_values.size(); ++i) {
    const double l = l_values[i];
    if (!(l > 0)) throw DomainError("born_convergence: l must be positive");
    if (i > 0 && !(l < l_values[i - 1])) {
      throw DomainError("born_convergence: l values must be strictly decreasing");
    }
    if (radius * l >= 1) {
      throw DomainError("born_convergence: |H| l = " + format_double(radius * l) +
                        " is not below 1");
    }
  }

  const ComplexMatrix h_float = to_complex(h);
  BornReport report;
  for (double l : l_values) {
    const SpectralForm scaled{2 * l * base.eigenvalues, base.eigenvectors, base.residual};
    const ComplexVector psi1 = options.psi1.value_or(bounded_successor(scaled, psi_init));
    if (psi1.size() != psi_init.size()) {
      detail::throw_dimension("born_convergence", psi1.size(), psi_init.size());
    }
    const double link = psi1.dot(psi_init).real();
    if (std::abs(link) < options.link_floor) {
      throw OntologicalRegimeError(
          "born_convergence: link number " + format_double(link) +
              " vanishes; weights are undefined in the ontological regime",
          link);
    }

    const auto n_pairs = static_cast<std::size_t>(std::floor(options.horizon / l + 1e-9)) + 1;
    const ComplexMatrix k_matrix = 2 * l * h_float;
    const std::vector<ComplexVector> states = evolve_float(psi_init, psi1, k_matrix, n_pairs - 1);

    BornPoint point{l, 0.0, link, n_pairs};
    for (std::size_t n = 0; n < n_pairs; ++n) {
      const ComplexVector& now = states[n];
      const ComplexVector& next = states[n + 1];
      const Eigen::VectorXd links = (next.conjugate().cwiseProduct(now)).real();
      const double total = links.sum();
      const ComplexVector mid =
          closed_form_at(scaled, psi_init, psi1, static_cast<double>(n) + 0.5);
      const Eigen::VectorXd p = mid.cwiseAbs2() / mid.squaredNorm();
      point.max_error = std::max(point.max_error, (links / total - p).cwiseAbs().maxCoeff());
    }
    report.points.push_back(point);
  }
  report.strictly_decreasing = true;
  for (std::size_t i = 0; i + 1 < report.points.size(); ++i) {
    const double a = report.points[i].max_error;
    const double b = report.points[i + 1].max_error;
    report.ratios.push_back(a / b);
    report.strictly_decreasing = report.strictly_decreasing && b < a;
  }
  return report;
}

}  // namespace hamca
