// Copyright 2026 The sqfa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace sqfa;

namespace {

constexpr double kPi = std::numbers::pi;

StateVector random_state(std::mt19937_64& rng, std::size_t dim) {
    std::normal_distribution<double> g;
    std::vector<Amplitude> v(dim);
    double norm = 0;
    for (auto& a : v) {
        a = {g(rng), g(rng)};
        norm += std::norm(a);
    }
    for (auto& a : v) a /= std::sqrt(norm);
    return StateVector(v);
}

}  // namespace

TEST(StateVector, RejectsUnnormalizedAndNonFinite) {
    EXPECT_THROW(StateVector({1.0, 1.0}), std::invalid_argument);
    EXPECT_THROW(StateVector({Amplitude(std::nan(""), 0), 0.0}), std::invalid_argument);
    EXPECT_THROW(StateVector(std::vector<Amplitude>{}), std::invalid_argument);
    EXPECT_NO_THROW(StateVector({std::sqrt(0.5), Amplitude(0, std::sqrt(0.5))}));
}

TEST(Rotation, ZeroIsIdentity) {
    EXPECT_TRUE(rotation(0).approx_equal(UnitaryOp::identity(2)));
}

TEST(Rotation, ThirdOfPiEntries) {
    auto r = rotation(kPi / 3);
    EXPECT_NEAR(r(0, 0).real(), 0.5, 1e-12);
    EXPECT_NEAR(r(0, 1).real(), -std::sqrt(3.0) / 2, 1e-12);
    EXPECT_NEAR(r(1, 0).real(), std::sqrt(3.0) / 2, 1e-12);
    EXPECT_NEAR(r(1, 1).real(), 0.5, 1e-12);
}

TEST(Rotation, NonFiniteAngleRejected) {
    EXPECT_THROW(rotation(std::numeric_limits<double>::infinity()), std::invalid_argument);
    EXPECT_THROW(rotation(std::nan("")), std::invalid_argument);
}

TEST(Rotation, PthPowerReturnsToPlusMinusQ0) {
    for (int p = 1; p <= 40; ++p) {
        auto u = rotation(kPi / p);
        auto q = StateVector::basis(2, 0);
        for (int i = 0; i < p; ++i) q = u.apply(q);
        EXPECT_NEAR(std::abs(q[0]), 1.0, 1e-9) << "p=" << p;
        EXPECT_NEAR(std::abs(q[1]), 0.0, 1e-9) << "p=" << p;
    }
}

TEST(Rotation, AnglesAddProperty) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-10, 10);
    for (int t = 0; t < 200; ++t) {
        double a = u(rng), b = u(rng);
        EXPECT_TRUE((rotation(a) * rotation(b)).approx_equal(rotation(a + b), kTolUnitary));
    }
}

TEST(UnitaryOp, RejectsNonUnitary) {
    EXPECT_THROW(UnitaryOp(2, {1.5, 0, 0, 1}), std::invalid_argument);
    EXPECT_THROW(UnitaryOp(2, {1, 0, 0}), std::invalid_argument);
}

TEST(UnitaryOp, PreservesNormProperty) {
    std::mt19937_64 rng(5);
    for (std::size_t dim : {2u, 3u, 5u, 8u}) {
        for (int t = 0; t < 30; ++t) {
            auto u = complete_unitary_from_first_column(random_state(rng, dim));
            auto psi = random_state(rng, dim);
            EXPECT_NEAR(u.apply(psi).norm_squared(), 1.0, kTolNorm);
        }
    }
}

TEST(Completion, BasisVectorGivesIdentity) {
    for (std::size_t n : {1u, 2u, 5u})
        EXPECT_TRUE(complete_unitary_from_first_column(StateVector::basis(n, 0)).approx_equal(UnitaryOp::identity(n)));
}

TEST(Completion, TwoDimensionalUniform) {
    const double h = std::sqrt(0.5);
    auto u = complete_unitary_from_first_column(StateVector({h, h}));
    EXPECT_NEAR(std::abs(u(0, 0) - h), 0, kTolNorm);
    EXPECT_NEAR(std::abs(u(1, 0) - h), 0, kTolNorm);
    EXPECT_LT(u.unitarity_defect(), kTolUnitary);
}

TEST(Completion, AgreesWithGramSchmidtOnFirstColumnAndSpan) {
    // Completions are not unique beyond the first column; both must be
    // unitary, share column 1, and columns 2..n must span the same space
    // (the orthogonal complement of v).
    StateVector v({0.5, 0.5, 0.5, 0.5});
    auto u = complete_unitary_from_first_column(v);
    auto gs = oracle::gram_schmidt_completion({0.5, 0.5, 0.5, 0.5});
    EXPECT_LT(u.unitarity_defect(), kTolUnitary);
    for (std::size_t r = 0; r < 4; ++r) EXPECT_NEAR(std::abs(u(r, 0) - gs[r][0]), 0.0, kTolNorm);
    // Projector onto span of columns 2..4 must agree: I - v v^dagger.
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            oracle::cplx pu = 0, pg = 0;
            for (std::size_t k = 1; k < 4; ++k) {
                pu += u(r, k) * std::conj(u(c, k));
                pg += gs[r][k] * std::conj(gs[c][k]);
            }
            EXPECT_NEAR(std::abs(pu - pg), 0.0, kTolNorm);
        }
}

TEST(Completion, DeterministicAndAdjointMapsBack) {
    std::mt19937_64 rng(17);
    for (std::size_t dim : {2u, 3u, 4u, 7u, 16u}) {
        for (int t = 0; t < 10; ++t) {
            auto v = random_state(rng, dim);
            auto u = complete_unitary_from_first_column(v);
            EXPECT_TRUE(u.approx_equal(complete_unitary_from_first_column(v), 0.0));
            EXPECT_LT(u.unitarity_defect(), kTolUnitary);
            for (std::size_t r = 0; r < dim; ++r) EXPECT_NEAR(std::abs(u(r, 0) - v[r]), 0.0, kTolNorm);
            auto back = u.adjoint().apply(v);
            EXPECT_NEAR(std::abs(back[0] - 1.0), 0.0, kTolNorm);
        }
    }
}

TEST(Completion, RejectsUnnormalizedInput) {
    // The StateVector constructor is the normalization gate.
    EXPECT_THROW(complete_unitary_from_first_column(StateVector({0.5, 0.5})), std::invalid_argument);
}

TEST(Measurement, BasisStateSingleOutcome) {
    auto m = ProjectiveMeasurement::computational(2);
    auto br = measure(m, StateVector::basis(2, 0));
    ASSERT_EQ(br.size(), 1u);
    EXPECT_EQ(br[0].label, 0);
    EXPECT_DOUBLE_EQ(br[0].probability, 1.0);
    EXPECT_NEAR(std::abs(br[0].post_state[0]), 1.0, kTolNorm);
}

TEST(Measurement, EqualSuperposition) {
    const double h = std::sqrt(0.5);
    auto br = measure(ProjectiveMeasurement::computational(2), StateVector({h, h}));
    ASSERT_EQ(br.size(), 2u);
    EXPECT_NEAR(br[0].probability, 0.5, 1e-12);
    EXPECT_NEAR(br[1].probability, 0.5, 1e-12);
    EXPECT_NEAR(std::abs(br[1].post_state[1]), 1.0, kTolNorm);
}

TEST(Measurement, RotatedStateGivesSineSquared) {
    auto q = rotation(2 * kPi / 3).apply(StateVector::basis(2, 0));
    auto br = measure(ProjectiveMeasurement::computational(2), q);
    ASSERT_EQ(br.size(), 2u);
    EXPECT_NEAR(br[1].probability, 0.75, 1e-12);
}

TEST(Measurement, DimensionMismatchAndBadPartitions) {
    EXPECT_THROW(measure(ProjectiveMeasurement::computational(3), StateVector::basis(2, 0)), std::invalid_argument);
    using O = ProjectiveMeasurement::Outcome;
    EXPECT_THROW(ProjectiveMeasurement(3, {O{0, {0, 1}}, O{1, {1, 2}}}), std::invalid_argument);  // overlap
    EXPECT_THROW(ProjectiveMeasurement(3, {O{0, {0}}, O{1, {1}}}), std::invalid_argument);        // incomplete
    EXPECT_THROW(ProjectiveMeasurement(2, {O{0, {0}}, O{0, {1}}}), std::invalid_argument);        // duplicate label
}

TEST(Measurement, ProbabilitiesSumToOneProperty) {
    std::mt19937_64 rng(23);
    using O = ProjectiveMeasurement::Outcome;
    for (int t = 0; t < 100; ++t) {
        auto psi = random_state(rng, 6);
        ProjectiveMeasurement m(6, {O{7, {0, 3}}, O{1, {1}}, O{2, {2, 4, 5}}});
        double s = 0;
        for (const auto& b : measure(m, psi)) {
            s += b.probability;
            EXPECT_NEAR(b.post_state.norm_squared(), 1.0, kTolNorm);
        }
        EXPECT_NEAR(s, 1.0, kTolNorm);
    }
}

TEST(Measurement, TinyBranchesPruned) {
    const double eps = 1e-7;  // probability 1e-14 < prune threshold
    StateVector q({std::sqrt(1 - eps * eps), eps});
    auto br = measure(ProjectiveMeasurement::computational(2), q);
    ASSERT_EQ(br.size(), 1u);
    EXPECT_EQ(br[0].label, 0);
}

TEST(ExactTrig, CosSquaredTableMatchesFloatingPoint) {
    // Every rational angle with denominator up to 12 whose cos^2 is rational.
    for (std::int64_t d = 1; d <= 12; ++d)
        for (std::int64_t k = -2 * d; k <= 2 * d; ++k) {
            Rational a(k, d);
            auto c2 = cos_squared_pi(a);
            if (!c2) continue;
            double ref = std::pow(std::cos(kPi * to_double(a)), 2);
            EXPECT_NEAR(to_double(*c2), ref, 1e-12) << to_string(a);
        }
    EXPECT_EQ(*cos_squared_pi(Rational(2, 3)), Rational(1, 4));
    EXPECT_EQ(*cos_squared_pi(Rational(1, 4)), Rational(1, 2));
    EXPECT_FALSE(cos_squared_pi(Rational(1, 5)).has_value());
}

TEST(Gates, SplitGateFirstColumnWeights) {
    for (Rational w : {Rational(1, 9), Rational(1, 144), Rational(1), Rational(0)}) {
        auto g = split_gate(w);
        EXPECT_NEAR(std::norm(g.op()(0, 0)), to_double(w), 1e-15);
        EXPECT_NEAR(std::norm(g.op()(1, 0)), to_double(1 - w), 1e-15);
    }
    EXPECT_THROW(split_gate(Rational(3, 2)), std::invalid_argument);
}

TEST(Gates, TensorMatchesKronecker) {
    auto a = rotation_gate(Rational(1, 3));
    auto b = Gate({PhaseFlipGate{3, 1}});
    Gate t({TensorGate{{a.spec(), b.spec()}}});
    ASSERT_EQ(t.dim(), 6u);
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 6; ++c)
            EXPECT_NEAR(std::abs(t.op()(r, c) - a.op()(r / 3, c / 3) * b.op()(r % 3, c % 3)), 0.0, 1e-15);
}

TEST(Gates, RationalRotationExactOnQuarterTurns) {
    auto g = rotation_gate(Rational(-1, 2));
    EXPECT_EQ(g.op()(0, 0), Amplitude(0.0));
    EXPECT_EQ(g.op()(0, 1), Amplitude(1.0));
    auto q = g.op().apply(StateVector::basis(2, 1));
    EXPECT_EQ(q[0], Amplitude(1.0));
}

TEST(RationalParse, DecimalAndFraction) {
    EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
    EXPECT_EQ(parse_rational("3/12"), Rational(1, 4));
    EXPECT_EQ(parse_rational("-2"), Rational(-2));
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}
