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

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "hamca/continuum.hpp"
#include "hamca/dynamics.hpp"
#include "hamca/models.hpp"
#include "support.hpp"

namespace hamca {
namespace {

using cd = std::complex<double>;
using testing::Rng;

const GaussMatrix& h2() {
  static const GaussMatrix h = build_hamiltonian(make_cyclic_model(2));
  return h;
}
const GaussMatrix& h3() {
  static const GaussMatrix h = build_hamiltonian(make_cyclic_model(3));
  return h;
}

double max_abs(const ComplexVector& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

// exp(-i theta sigma_x) e_1 = (cos theta, -i sin theta), written out so the
// samples do not pass through the eigensolver.
BandlimitedSignal two_state_tone(double omega, double l, double t_max, int window) {
  BandlimitedSignal s{{}, l, window};
  const auto n = static_cast<std::size_t>(std::ceil(t_max / l)) + 1;
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = omega * static_cast<double>(k) * l;
    ComplexVector psi(2);
    psi << cd(std::cos(theta), 0), cd(0, -std::sin(theta));
    s.samples.push_back(psi);
  }
  return s;
}

TEST(SpectralDecompose, CyclicModels) {
  const SpectralForm two = spectral_decompose(h2());
  EXPECT_NEAR(two.eigenvalues[0], -1, 1e-14);
  EXPECT_NEAR(two.eigenvalues[1], 1, 1e-14);

  const SpectralForm three = spectral_decompose(h3());
  EXPECT_NEAR(three.eigenvalues[0], -2, 1e-13);
  EXPECT_NEAR(three.eigenvalues[1], 1, 1e-13);
  EXPECT_NEAR(three.eigenvalues[2], 1, 1e-13);
  EXPECT_LT(three.residual, 1e-13);
  const ComplexMatrix gram = three.eigenvectors.adjoint() * three.eigenvectors;
  EXPECT_LT((gram - ComplexMatrix::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(SpectralDecompose, OddCyclicModelsReachBandEdge) {
  for (Eigen::Index m : {3, 5, 7, 9}) {
    const SpectralForm s = spectral_decompose(build_hamiltonian(make_cyclic_model(m)));
    EXPECT_NEAR(s.eigenvalues.cwiseAbs().maxCoeff(), 2, 1e-12) << m;
  }
}

TEST(SpectralDecompose, RejectsNonHermitian) {
  ComplexMatrix h(2, 2);
  h << cd(0), cd(0, 1), cd(0, 1), cd(0);
  EXPECT_THROW(spectral_decompose(h), DomainError);
  EXPECT_THROW(spectral_decompose(ComplexMatrix(2, 3)), DimensionError);
}

TEST(EvolveFloat, MatchesExactIteration) {
  Rng rng(71);
  const GaussVector a = testing::random_state(rng, 3, 5);
  const GaussVector b = testing::random_state(rng, 3, 5);
  const auto exact = evolve(a, b, h3(), 40);
  const auto approx = evolve_float(to_complex(a), to_complex(b), h3(), 40);
  ASSERT_EQ(approx.size(), exact.size());
  for (std::size_t n = 0; n < exact.size(); ++n) {
    EXPECT_LT(max_abs(approx[n] - to_complex(exact[n])), 1e-9 * (1 + max_abs(to_complex(exact[n]))));
  }
}

TEST(EvolveFloat, ReportsOverflow) {
  GaussMatrix big(1, 1);
  big(0, 0) = 100;
  ComplexVector one = ComplexVector::Ones(1);
  try {
    evolve_float(one, one, big, 400);
    FAIL() << "expected InstabilityError";
  } catch (const InstabilityError& e) {
    EXPECT_GT(e.step(), 100u);
  }
}

TEST(ClosedForm, TwoStateAgreesWithIteration) {
  Rng rng(73);
  const SpectralForm s = spectral_decompose(h2());
  for (int trial = 0; trial < 20; ++trial) {
    const GaussVector a = testing::random_state(rng, 2, 4);
    const GaussVector b = testing::random_state(rng, 2, 4);
    const auto exact = evolve(a, b, h2(), 60);
    for (long n = 0; n <= 61; ++n) {
      const ComplexVector c = closed_form(s, to_complex(a), to_complex(b), n);
      const ComplexVector ref = to_complex(exact[static_cast<std::size_t>(n)]);
      ASSERT_LT(max_abs(c - ref), 1e-10 * (1 + max_abs(ref))) << "n = " << n;
    }
  }
}

TEST(ClosedForm, BandEdgeRejectedByDefault) {
  const ComplexVector e1 = to_complex(basis_state(3, 1));
  try {
    closed_form(h3(), e1, e1, 5);
    FAIL() << "expected SingularityError";
  } catch (const SingularityError& e) {
    EXPECT_NEAR(e.eigenvalue(), -2, 1e-12);
    EXPECT_NE(std::string(e.what()).find("-2"), std::string::npos);
  }
}

// At lambda = -2 the mode grows linearly; the extension must still track the
// integer iteration.
TEST(ClosedForm, ContinuousExtensionAtBandEdge) {
  Rng rng(79);
  ClosedFormOptions opts;
  opts.singular = SingularModes::kContinuousExtension;
  const SpectralForm s = spectral_decompose(h3());
  for (int trial = 0; trial < 10; ++trial) {
    const GaussVector a = testing::random_state(rng, 3, 4);
    const GaussVector b = testing::random_state(rng, 3, 4);
    const auto exact = evolve(a, b, h3(), 99);
    for (long n = 0; n <= 100; ++n) {
      const ComplexVector ref = to_complex(exact[static_cast<std::size_t>(n)]);
      const ComplexVector c = closed_form(s, to_complex(a), to_complex(b), n, opts);
      ASSERT_LT(max_abs(c - ref), 1e-8 * std::max(1.0, max_abs(ref))) << "n = " << n;
    }
  }
}

TEST(ClosedForm, OutsideBandAlwaysRejected) {
  GaussMatrix big(1, 1);
  big(0, 0) = 3;
  ClosedFormOptions opts;
  opts.singular = SingularModes::kContinuousExtension;
  const ComplexVector one = ComplexVector::Ones(1);
  EXPECT_THROW(closed_form(big, one, one, 4, opts), SingularityError);
  EXPECT_THROW(closed_form(h2(), one, one, 4), DimensionError);
  EXPECT_THROW(closed_form(h2(), ComplexVector::Ones(2), ComplexVector::Ones(2), -1),
               DomainError);
}

TEST(ClosedFormAt, IntegerArgumentsMatch) {
  Rng rng(83);
  const SpectralForm s = spectral_decompose(h2());
  const ComplexVector a = testing::random_complex(rng, 2);
  const ComplexVector b = testing::random_complex(rng, 2);
  for (long n = 0; n < 20; ++n) {
    EXPECT_LT(max_abs(closed_form_at(s, a, b, static_cast<double>(n)) - closed_form(s, a, b, n)),
              1e-11);
  }
  EXPECT_THROW(closed_form_at(spectral_decompose(h3()), a.head(1).replicate(3, 1),
                              b.head(1).replicate(3, 1), 0.5),
               SingularityError);
}

// For an eigenvector with eigenvalue lambda the successor is exp(-i phi) psi
// with 2 sin(phi) = lambda, so the orbit keeps unit norm.
TEST(BoundedSuccessor, EigenvectorPhase) {
  const SpectralForm s = spectral_decompose(h2());
  ComplexVector plus(2);
  plus << cd(1 / std::sqrt(2.0)), cd(1 / std::sqrt(2.0));
  const ComplexVector next = bounded_successor(s, plus);
  const cd expected = std::polar(1.0, -std::asin(0.5));
  EXPECT_LT(max_abs(next - expected * plus), 1e-14);

  const auto orbit = evolve_float(plus, next, to_complex(h2()), 500);
  for (const ComplexVector& psi : orbit) EXPECT_NEAR(psi.norm(), 1.0, 1e-10);
}

TEST(BandlimitedSignal, Validation) {
  BandlimitedSignal s{{ComplexVector::Ones(2)}, 0.0, 32};
  EXPECT_THROW(validate(s), DomainError);
  s.l = 0.1;
  s.window = 0;
  EXPECT_THROW(validate(s), DomainError);
  s.window = 8;
  s.samples.push_back(ComplexVector::Ones(3));
  EXPECT_THROW(validate(s), DimensionError);
  s.samples.back() = ComplexVector::Constant(2, cd(NAN, 0));
  EXPECT_THROW(validate(s), DomainError);
  EXPECT_THROW(validate(BandlimitedSignal{{}, 0.1, 8}), DomainError);
  EXPECT_THROW(validate(BandlimitedSignal{{ComplexVector::Ones(2)}, 0.1, 4}), DomainError);
}

TEST(Reconstruct, ExactAtSamples) {
  const BandlimitedSignal s = two_state_tone(0.5, 0.125, 20, 32);
  for (std::size_t n = 40; n < 120; n += 7) {
    const double t = static_cast<double>(n) * s.l;
    EXPECT_LT(max_abs(reconstruct(s, t) - s.samples[n]), 1e-15);
  }
}

TEST(Reconstruct, ConvergesOffGrid) {
  BandlimitedSignal s = two_state_tone(0.5, 0.125, 40, 16);
  const double t = 20.0 + 0.37 * s.l;
  ComplexVector exact(2);
  exact << cd(std::cos(0.5 * t), 0), cd(0, -std::sin(0.5 * t));
  double previous = INFINITY;
  for (int w : {16, 32, 64}) {
    s.window = w;
    const double err = max_abs(reconstruct(s, t) - exact);
    EXPECT_LT(err, previous);
    EXPECT_LE(err, truncation_tail(s, t) * 2);
    previous = err;
  }
  EXPECT_LT(previous, 1e-2);
  s.window = 64;
  EXPECT_THROW(reconstruct(s, 0.5), RangeError);
}

TEST(SinhResidual, ConvergesOffGridAndVanishesOnGrid) {
  Rng rng(89);
  const ComplexVector a = to_complex(testing::random_state(rng, 2, 3));
  const ComplexVector b = to_complex(testing::random_state(rng, 2, 3));
  const ComplexMatrix hf = to_complex(h2());
  BandlimitedSignal s{evolve_float(a, b, hf, 400), 0.1, 16};
  for (double u : {100.3, 151.71, 200.5, 260.05}) {
    double previous = INFINITY;
    for (int w : {16, 32, 64}) {
      s.window = w;
      const double r = sinh_residual(s, hf, u * s.l);
      EXPECT_LT(r, previous) << "u = " << u << ", window " << w;
      EXPECT_LE(r, sinh_residual_bound(s, hf, u * s.l));
      previous = r;
    }
  }
  s.window = 32;
  for (int n : {80, 200, 300}) {
    EXPECT_LE(sinh_residual(s, h2(), n * s.l), 1e-10);
  }
}

TEST(Q1Continuum, MatchesAnalyticValueOnGrid) {
  const double omega = 0.5;
  for (double l : {0.25, 0.125, 0.0625}) {
    const BandlimitedSignal s = two_state_tone(omega, l, 16, 32);
    const Q1Evaluation pair = q1_continuum(s, 8.0, Q1Convention::kPairwise);
    const Q1Evaluation cosh = q1_continuum(s, 8.0, Q1Convention::kCosh);
    EXPECT_NEAR(pair.value, 2 * std::cos(omega * l), 1e-12);
    EXPECT_NEAR(cosh.value, std::cos(omega * l), 1e-12);
    EXPECT_NEAR(pair.remainder, 2 * cosh.remainder, 1e-14);
  }
}

// Leading remainder 2 x^4 / 24 at x = omega l, so halving l divides it by 16.
TEST(Q1Continuum, RemainderIsFourthOrder) {
  const double omega = 0.5;
  std::vector<double> remainders;
  for (double l : {0.25, 0.125, 0.0625}) {
    const BandlimitedSignal s = two_state_tone(omega, l, 16, 32);
    const Q1Evaluation e = q1_continuum(s, 8.0);
    const double x = omega * l;
    EXPECT_NEAR(e.remainder / (std::pow(x, 4) / 12), 1.0, 0.02) << "l = " << l;
    remainders.push_back(std::abs(e.remainder));
  }
  EXPECT_NEAR(remainders[0] / remainders[1], 16, 0.5);
  EXPECT_NEAR(remainders[1] / remainders[2], 16, 0.5);
}

TEST(Q1Constancy, DeviationWithinTail) {
  const BandlimitedSignal s = two_state_tone(0.5, 0.1, 16, 32);
  const std::vector<double> times{7.737, 7.863, 7.95, 8.0, 8.025, 8.15, 8.241};
  const Q1Constancy c = q1_constancy(s, times);
  EXPECT_LE(c.max_deviation, c.tail_bound);
  EXPECT_NEAR(c.mean, 2 * std::cos(0.05), 1e-2);
  EXPECT_THROW(q1_constancy(s, std::vector<double>{}), DomainError);
}

TEST(BornConvergence, SecondOrderForGenericState) {
  ComplexVector psi(2);
  psi << cd(0.8), cd(0.6);
  const std::vector<double> ls{0.2, 0.1, 0.05};
  const BornReport r = born_convergence(h2(), psi, ls);
  ASSERT_EQ(r.points.size(), 3u);
  ASSERT_EQ(r.ratios.size(), 2u);
  EXPECT_TRUE(r.strictly_decreasing);
  for (double ratio : r.ratios) {
    EXPECT_GE(ratio, 2.5);
    EXPECT_LE(ratio, 6.0);
  }
  EXPECT_EQ(r.points[2].pairs, 21u);
}

TEST(BornConvergence, EigenvectorIsExact) {
  ComplexVector plus(2);
  plus << cd(1 / std::sqrt(2.0)), cd(1 / std::sqrt(2.0));
  const std::vector<double> ls{0.2, 0.1};
  const BornReport r = born_convergence(h2(), plus, ls);
  for (const BornPoint& p : r.points) EXPECT_LE(p.max_error, 1e-10);
}

TEST(BornConvergence, Rejections) {
  ComplexVector psi(2);
  psi << cd(0.8), cd(0.6);
  const std::vector<double> ls{0.2, 0.1};

  BornOptions opts;
  ComplexVector e1 = ComplexVector::Zero(2);
  ComplexVector e2 = ComplexVector::Zero(2);
  e1[0] = 1;
  e2[1] = 1;
  opts.psi1 = e2;
  EXPECT_THROW(born_convergence(h2(), e1, ls, opts), OntologicalRegimeError);

  EXPECT_THROW(born_convergence(h2(), ComplexVector(2 * psi), ls), DomainError);
  EXPECT_THROW(born_convergence(h2(), psi, std::vector<double>{0.1, 0.2}), DomainError);
  EXPECT_THROW(born_convergence(h2(), psi, std::vector<double>{}), DomainError);
  EXPECT_THROW(born_convergence(h2(), psi, std::vector<double>{2.0}), DomainError);
}

}  // namespace
}  // namespace hamca
