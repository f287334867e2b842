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

#include "hamca/conservation.hpp"

namespace hamca {

namespace {

void require_square(const char* op, const GaussMatrix& g, Eigen::Index m) {
  if (g.rows() != g.cols()) detail::throw_dimension(op, g.rows(), g.cols());
  if (g.rows() != m) detail::throw_dimension(op, g.rows(), m);
}

}  // namespace

GaussInt q_G(const GaussVector& psi_n, const GaussVector& psi_next, const GaussMatrix& g) {
  if (psi_n.size() != psi_next.size()) {
    detail::throw_dimension("q_G", psi_n.size(), psi_next.size());
  }
  require_square("q_G", g, psi_n.size());
  GaussVector g_n = g * psi_n;
  GaussVector g_next = g * psi_next;
  return psi_next.dot(g_n) + psi_n.dot(g_next);
}

GaussInt conservation_residual(const GaussVector& psi_prev, const GaussVector& psi_n,
                               const GaussVector& psi_next, const GaussMatrix& g) {
  if (psi_prev.size() != psi_n.size()) {
    detail::throw_dimension("conservation_residual", psi_prev.size(), psi_n.size());
  }
  if (psi_next.size() != psi_n.size()) {
    detail::throw_dimension("conservation_residual", psi_next.size(), psi_n.size());
  }
  require_square("conservation_residual", g, psi_n.size());
  GaussVector d = psi_next - psi_prev;
  GaussVector g_d = g * d;
  GaussVector g_n = g * psi_n;
  return psi_n.dot(g_d) + d.dot(g_n);
}

GaussMatrix commutator(const GaussMatrix& a, const GaussMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    detail::throw_dimension("commutator", a.rows(), b.rows());
  }
  return a * b - b * a;
}

bool commutes(const GaussMatrix& g, const GaussMatrix& h) {
  const GaussMatrix c = commutator(g, h);
  return c.unaryExpr([](const GaussInt& z) { return z.is_zero(); }).all();
}

LinkReport link_counts(const GaussVector& psi_n, const GaussVector& psi_next) {
  if (psi_n.size() != psi_next.size()) {
    detail::throw_dimension("link_counts", psi_n.size(), psi_next.size());
  }
  LinkReport report;
  report.per_alpha.reserve(static_cast<std::size_t>(psi_n.size()));
  for (Eigen::Index a = 0; a < psi_n.size(); ++a) {
    BigInt link = psi_next[a].real() * psi_n[a].real() + psi_next[a].imag() * psi_n[a].imag();
    report.total += link;
    report.per_alpha.push_back(std::move(link));
  }
  if (!report.total.is_zero()) {
    std::vector<Rational> weights;
    weights.reserve(report.per_alpha.size());
    // Boost's rational rejects negative denominators for unbounded integers.
    const bool flip = report.total < 0;
    const BigInt den = flip ? BigInt(-report.total) : report.total;
    for (const BigInt& link : report.per_alpha) {
      weights.emplace_back(flip ? BigInt(-link) : link, den);
    }
    report.weights = std::move(weights);
  }
  return report;
}

ConservationMonitor::ConservationMonitor(GaussMatrix g, const GaussMatrix& h)
    : g_(std::move(g)), identity_(GaussMatrix::Identity(h.rows(), h.cols())) {
  const GaussMatrix c = commutator(g_, h);
  for (Eigen::Index r = 0; r < c.rows(); ++r) {
    for (Eigen::Index col = 0; col < c.cols(); ++col) {
      if (!c(r, col).is_zero()) {
        throw NonCommutingError("G does not commute with H: [G,H](" + std::to_string(r + 1) +
                                    "," + std::to_string(col + 1) + ") = " + to_string(c(r, col)),
                                static_cast<std::size_t>(r + 1), static_cast<std::size_t>(col + 1),
                                to_string(c(r, col)));
      }
    }
  }
}

ConservationStep ConservationMonitor::observe(std::size_t n, const GaussVector& psi_n,
                                              const GaussVector& psi_next) {
  ConservationStep step{n, q_G(psi_n, psi_next, g_), link_counts(psi_n, psi_next)};
  const GaussInt q1 = q_G(psi_n, psi_next, identity_);
  if (!q1.imag().is_zero() || q1.real() != 2 * step.links.total) {
    throw ConservationViolation("link identity 2L = q_1 fails at pair " + std::to_string(n) +
                                    ": L = " + step.links.total.str() + ", q_1 = " + to_string(q1),
                                n);
  }
  if (!value_) {
    value_ = step.q;
  } else if (step.q != *value_) {
    throw ConservationViolation("q_G changes at pair " + std::to_string(n) + ": " +
                                    to_string(step.q) + " != " + to_string(*value_),
                                n);
  }
  ++pairs_;
  return step;
}

ConservationReport verify_trajectory(const Trajectory& traj, const GaussMatrix& g) {
  const GaussMatrix h = traj.hamiltonian();
  ConservationMonitor monitor(g, h);
  if (auto bad = find_recursion_violation(traj.states, h)) {
    throw RecursionViolation("trajectory breaks the update rule at state " + std::to_string(*bad),
                             *bad);
  }
  ConservationReport report;
  for (std::size_t n = 0; n + 1 < traj.states.size(); ++n) {
    report.steps.push_back(monitor.observe(n, traj.states[n], traj.states[n + 1]));
  }
  if (monitor.value()) report.value = *monitor.value();
  return report;
}

}  // namespace hamca
