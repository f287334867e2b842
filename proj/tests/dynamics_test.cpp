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

#include "hamca/dynamics.hpp"
#include "hamca/models.hpp"
#include "support.hpp"

namespace hamca {
namespace {

using testing::gi;
using testing::gvec;
using testing::Rng;

const GaussMatrix& h2() {
  static const GaussMatrix h = build_hamiltonian(make_cyclic_model(2));
  return h;
}

// The two-state sequence from (1,0), (0,1), written out by hand.
std::vector<GaussVector> two_state_sequence() {
  return {gvec({gi(1), gi(0)}),      gvec({gi(0), gi(1)}),       gvec({gi(1, -1), gi(0)}),
          gvec({gi(0), gi(0, -1)}),  gvec({gi(0, -1), gi(0)}),   gvec({gi(0), gi(-1, -1)}),
          gvec({gi(-1), gi(0)}),     gvec({gi(0), gi(-1)})};
}

TEST(StepForward, Examples) {
  EXPECT_TRUE(equal(step_forward(gvec({gi(1), gi(0)}), gvec({gi(0), gi(1)}), h2()),
                    gvec({gi(1, -1), gi(0)})));

  const GaussVector v = gvec({gi(2, 3), gi(-1)});
  const GaussMatrix zero = GaussMatrix::Zero(2, 2);
  EXPECT_TRUE(equal(step_forward(v, gvec({gi(7, 7), gi(-5)}), zero), v));

  const Eigen::Index m = 5;
  const GaussMatrix h5 = build_hamiltonian(make_cyclic_model(m));
  const GaussVector expected = gvec({gi(0, -1), gi(0), gi(0), gi(0), gi(0)});
  EXPECT_TRUE(equal(step_forward(basis_state(m, m - 1), basis_state(m, m), h5), expected));
}

TEST(StepBackward, Examples) {
  EXPECT_TRUE(equal(step_backward(gvec({gi(0), gi(1)}), gvec({gi(1, -1), gi(0)}), h2()),
                    gvec({gi(1), gi(0)})));

  const GaussVector v = gvec({gi(4), gi(0, -2)});
  EXPECT_TRUE(equal(step_backward(gvec({gi(9), gi(1)}), v, GaussMatrix(GaussMatrix::Zero(2, 2))), v));

  const Eigen::Index m = 5;
  const GaussMatrix h5 = build_hamiltonian(make_cyclic_model(m));
  const GaussVector next = gvec({gi(0, -1), gi(0), gi(0), gi(0), gi(0)});
  EXPECT_TRUE(equal(step_backward(basis_state(m, m), next, h5), basis_state(m, m - 1)));
}

TEST(StepForward, DimensionMismatch) {
  EXPECT_THROW(step_forward(gvec({gi(1)}), gvec({gi(1), gi(0)}), h2()), DimensionError);
  EXPECT_THROW(step_backward(gvec({gi(1), gi(0)}), gvec({gi(1)}), h2()), DimensionError);
}

TEST(Evolve, TwoStateSequence) {
  const auto states = evolve(gvec({gi(1), gi(0)}), gvec({gi(0), gi(1)}), h2(), 6);
  const auto expected = two_state_sequence();
  ASSERT_EQ(states.size(), 8u);
  for (std::size_t n = 0; n < 8; ++n) EXPECT_TRUE(equal(states[n], expected[n])) << "n = " << n;
  // psi_5 = -(1+i) psi_1, psi_6 = -psi_0, psi_7 = -psi_1.
  EXPECT_TRUE(equal(states[5], GaussVector(gi(-1, -1) * states[1])));
  EXPECT_TRUE(equal(states[6], GaussVector(-states[0])));
  EXPECT_TRUE(equal(states[7], GaussVector(-states[1])));
}

TEST(Evolve, FrozenDynamicsIsConstant) {
  const GaussVector v = gvec({gi(3, -4), gi(0, 1), gi(2)});
  const auto states = evolve(v, v, GaussMatrix(GaussMatrix::Zero(3, 3)), 9);
  ASSERT_EQ(states.size(), 11u);
  for (const GaussVector& s : states) EXPECT_TRUE(equal(s, v));
}

TEST(Evolve, ThreeStateReturnsWithSignAfterSix) {
  const GaussMatrix h3 = build_hamiltonian(make_cyclic_model(3));
  const auto states = evolve(basis_state(3, 2), basis_state(3, 3), h3, 10);
  ASSERT_EQ(states.size(), 12u);
  EXPECT_TRUE(equal(states[6], GaussVector(-states[0])));
  EXPECT_TRUE(equal(states[7], GaussVector(-states[1])));
}

TEST(Evolve, ZeroStepsKeepsInitialPair) {
  const auto states = evolve(gvec({gi(1), gi(0)}), gvec({gi(0), gi(1)}), h2(), 0);
  EXPECT_EQ(states.size(), 2u);
}

TEST(Evolve, ModelOverloadRecordsScale) {
  const Trajectory t = evolve(make_cyclic_model(2), InitialPair::neighbours(2, 1), 6, 0.25);
  EXPECT_EQ(t.l, 0.25);
  EXPECT_EQ(t.states.size(), 8u);
  EXPECT_FALSE(find_recursion_violation(t.states, t.hamiltonian()).has_value());
  EXPECT_THROW(evolve(make_cyclic_model(2), InitialPair::neighbours(2, 1), 1, 0.0), DomainError);
}

TEST(InitialPair, Constructors) {
  const InitialPair c = InitialPair::coincident(basis_state(3, 2));
  EXPECT_TRUE(equal(c.psi0, c.psi1));
  const InitialPair n = InitialPair::neighbours(4, 3);
  EXPECT_TRUE(equal(n.psi0, basis_state(4, 3)));
  EXPECT_TRUE(equal(n.psi1, basis_state(4, 4)));
  const InitialPair wrap = InitialPair::neighbours(4, 4);
  EXPECT_TRUE(equal(wrap.psi1, basis_state(4, 1)));
  EXPECT_THROW(InitialPair::neighbours(4, 0), RangeError);
  EXPECT_THROW(InitialPair::neighbours(4, 5), RangeError);
}

TEST(RecursionViolation, FindsCorruptedState) {
  auto states = evolve(gvec({gi(1), gi(0)}), gvec({gi(0), gi(1)}), h2(), 6);
  states[4][0] = -states[4][0];
  EXPECT_EQ(find_recursion_violation(states, h2()), 4u);
}

TEST(StepXp, TwoStateSecondState) {
  const HamiltonianSpec spec = make_cyclic_model(2);
  IntVector x0(2), p0(2), x1(2), p1(2);
  x0 << 1, 0;
  p0 << 0, 0;
  x1 << 0, 1;
  p1 << 0, 0;
  const auto [x2, p2] = step_xp(x0, p0, x1, p1, spec);
  IntVector ex(2), ep(2);
  ex << 1, 0;
  ep << -1, 0;
  EXPECT_TRUE(equal(x2, ex));
  EXPECT_TRUE(equal(p2, ep));
}

TEST(StepXp, FrozenModel) {
  Rng rng(3);
  const HamiltonianSpec spec = make_zero_model(3);
  const IntVector xp = testing::random_ints(rng, 3, 20);
  const IntVector pp = testing::random_ints(rng, 3, 20);
  const auto [x, p] =
      step_xp(xp, pp, testing::random_ints(rng, 3, 20), testing::random_ints(rng, 3, 20), spec);
  EXPECT_TRUE(equal(x, xp));
  EXPECT_TRUE(equal(p, pp));
}

TEST(StepXp, AgreesWithComplexStepProperty) {
  Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const Eigen::Index m = testing::uniform(rng, 1, 6);
    const HamiltonianSpec spec = testing::random_spec(rng, m, 5);
    const IntVector xp = testing::random_ints(rng, m, 100), pp = testing::random_ints(rng, m, 100);
    const IntVector xc = testing::random_ints(rng, m, 100), pc = testing::random_ints(rng, m, 100);
    const auto [x, p] = step_xp(xp, pp, xc, pc, spec);
    const GaussVector expected =
        step_forward(combine(xp, pp), combine(xc, pc), build_hamiltonian(spec));
    ASSERT_TRUE(equal(combine(x, p), expected)) << "trial " << trial;
  }
}

TEST(StepXp, DimensionMismatch) {
  const HamiltonianSpec spec = make_zero_model(2);
  EXPECT_THROW(step_xp(IntVector::Zero(3), IntVector::Zero(2), IntVector::Zero(2),
                       IntVector::Zero(2), spec),
               DimensionError);
}

// Cross-check against the loop-based reference recursion on long runs where
// entries leave the 64-bit range.
TEST(Evolve, MatchesReferenceRecursion) {
  Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::Index m = testing::uniform(rng, 1, 5);
    const HamiltonianSpec spec = testing::random_spec(rng, m, 3);
    const GaussVector psi0 = testing::random_state(rng, m, 9);
    const GaussVector psi1 = testing::random_state(rng, m, 9);
    const auto states = evolve(psi0, psi1, build_hamiltonian(spec), 120);
    const auto ref = testing::reference_evolve(spec, testing::to_ref(psi0), testing::to_ref(psi1), 120);
    for (std::size_t n = 0; n < states.size(); ++n) {
      ASSERT_TRUE(equal(states[n], testing::from_ref(ref[n]))) << "trial " << trial << " n " << n;
    }
  }
}

TEST(TransferOperator, LowOrders) {
  const GaussMatrix h3 = build_hamiltonian(make_cyclic_model(3));
  const auto t = transfer_operators(h3, 3);
  EXPECT_TRUE(equal(t[0], GaussMatrix(GaussMatrix::Identity(3, 3))));
  EXPECT_TRUE(is_zero(t[1]));
  EXPECT_TRUE(equal(t[2], GaussMatrix(GaussMatrix::Identity(3, 3))));
  EXPECT_TRUE(equal(t[3], GaussMatrix(times_minus_i(h3))));
  EXPECT_TRUE(equal(transfer_operator(h3, 3), t[3]));
  EXPECT_THROW(transfer_operator(h3, -1), DomainError);
}

TEST(TransferOperator, FrozenModelAlternates) {
  const GaussMatrix zero = GaussMatrix::Zero(2, 2);
  const auto t = transfer_operators(zero, 12);
  for (std::size_t k = 0; k <= 12; ++k) {
    if (k % 2 == 0) {
      EXPECT_TRUE(equal(t[k], GaussMatrix(GaussMatrix::Identity(2, 2)))) << k;
    } else {
      EXPECT_TRUE(is_zero(t[k])) << k;
    }
  }
}

TEST(TransferOperator, CoincidentStartTwoState) {
  const GaussVector psi0 = gvec({gi(2, 1), gi(-1, 3)});
  const auto states = evolve(psi0, psi0, h2(), 19);
  const auto t = transfer_operators(h2(), 21);
  for (std::size_t n = 0; n <= 20; ++n) {
    EXPECT_TRUE(equal(GaussVector((t[n + 1] + t[n]) * psi0), states[n])) << "n = " << n;
  }
}

TEST(TransferOperator, CompositionProperty) {
  Rng rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::Index m = testing::uniform(rng, 1, 6);
    const GaussMatrix h = build_hamiltonian(testing::random_spec(rng, m, 2));
    const auto states =
        evolve(testing::random_state(rng, m, 5), testing::random_state(rng, m, 5), h, 49);
    const auto t = transfer_operators(h, 51);
    for (std::size_t n = 1; n <= 50; ++n) {
      for (std::size_t j = 0; j + 1 <= n; ++j) {
        const GaussVector rhs = t[n - j + 1] * states[j + 1] + t[n - j] * states[j];
        ASSERT_TRUE(equal(rhs, states[n])) << "trial " << trial << " n " << n << " m " << j;
      }
    }
  }
}

TEST(Reversal, RoundTripProperty) {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index m = testing::uniform(rng, 1, 6);
    const GaussMatrix h = build_hamiltonian(testing::random_spec(rng, m, 4));
    const GaussVector psi0 = testing::random_state(rng, m, 9);
    const GaussVector psi1 = testing::random_state(rng, m, 9);
    const auto forward = evolve(psi0, psi1, h, 100);
    Stepper<GaussInt> stepper(h, psi0, psi1);
    for (int k = 0; k < 100; ++k) stepper.advance();
    ASSERT_TRUE(equal(stepper.current(), forward.back()));
    for (std::size_t n = forward.size() - 1; n >= 1; --n) {
      ASSERT_TRUE(equal(stepper.current(), forward[n]));
      ASSERT_TRUE(equal(stepper.previous(), forward[n - 1]));
      stepper.retreat();
      if (n == 1) break;
    }
  }
}

TEST(Evolve, LinearityProperty) {
  Rng rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index m = testing::uniform(rng, 1, 5);
    const GaussMatrix h = build_hamiltonian(testing::random_spec(rng, m, 3));
    const GaussInt a = gi(testing::uniform(rng, -5, 5), testing::uniform(rng, -5, 5));
    const GaussInt b = gi(testing::uniform(rng, -5, 5), testing::uniform(rng, -5, 5));
    const GaussVector p0 = testing::random_state(rng, m, 5), p1 = testing::random_state(rng, m, 5);
    const GaussVector f0 = testing::random_state(rng, m, 5), f1 = testing::random_state(rng, m, 5);
    const auto lhs = evolve(GaussVector(a * p0 + b * f0), GaussVector(a * p1 + b * f1), h, 40);
    const auto sp = evolve(p0, p1, h, 40);
    const auto sf = evolve(f0, f1, h, 40);
    for (std::size_t n = 0; n < lhs.size(); ++n) {
      ASSERT_TRUE(equal(lhs[n], GaussVector(a * sp[n] + b * sf[n])));
    }
  }
}

TEST(Stepper, ProbeSeesEveryPair) {
  const auto expected = two_state_sequence();
  Stepper<GaussInt> stepper(h2(), expected[0], expected[1]);
  std::size_t calls = 0;
  stepper.run(6, [&](std::size_t n, const GaussVector& now, const GaussVector& next) {
    EXPECT_EQ(n, calls);
    EXPECT_TRUE(equal(now, expected[n]));
    EXPECT_TRUE(equal(next, expected[n + 1]));
    ++calls;
  });
  EXPECT_EQ(calls, 7u);
  EXPECT_EQ(stepper.index(), 7u);
}

}  // namespace
}  // namespace hamca
