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

using namespace sqfa;

TEST(CounterRng, StreamsAreReproducibleAndDistinct) {
    CounterRng a(1, 0), b(1, 0), c(1, 1), d(2, 0);
    for (int i = 0; i < 100; ++i) {
        auto x = a();
        EXPECT_EQ(x, b());
        EXPECT_NE(x, c());
        EXPECT_NE(x, d());
    }
}

TEST(CounterRng, UniformLooksUniform) {
    CounterRng r(42, 7);
    double sum = 0, sq = 0;
    const int n = 200'000;
    for (int i = 0; i < n; ++i) {
        double u = r.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
        sq += u * u;
    }
    EXPECT_NEAR(sum / n, 0.5, 0.005);
    EXPECT_NEAR(sq / n - (sum / n) * (sum / n), 1.0 / 12, 0.002);
}

TEST(SimulateRun, SameSeedSameRun) {
    Machine m = mod_2qcfa(3, Rational(1, 4));
    for (std::uint64_t s = 0; s < 20; ++s) EXPECT_EQ(simulate_run(m, "aa", s), simulate_run(m, "aa", s));
    Sampler sm(m, "aaaa");
    EXPECT_EQ(sm.run(9, 3, 1'000'000), sm.run(9, 3, 1'000'000));
}

TEST(SimulateRun, DfaTakesOneStepPerSymbol) {
    auto r = simulate_run(Machine(dfa_mod(3)), "aaa", 1);
    EXPECT_EQ(r.outcome, RunOutcome::accept);
    EXPECT_EQ(r.steps, 3u);
    EXPECT_EQ(simulate_run(Machine(dfa_mod(3)), "aa", 1).outcome, RunOutcome::reject);
}

TEST(SimulateRun, MembersAreNeverRejected) {
    Machine m = mod_2qcfa(3, Rational(1, 2));
    Sampler s(m, "aaaaaa");
    for (std::uint64_t i = 0; i < 2000; ++i) EXPECT_NE(s.run(5, i, 10'000'000).outcome, RunOutcome::reject);
}

TEST(SimulateRun, TinyCapCensors) {
    Machine m = mod_2qcfa(5, Rational(1, 4));
    auto r = simulate_run(m, "aaaaa", 3, 4);
    EXPECT_EQ(r.outcome, RunOutcome::censored);
    EXPECT_GE(r.steps, 4u);
}

TEST(Estimate, AgreesWithAnalyticValues) {
    struct Case {
        Machine m;
        std::string w;
    };
    std::vector<Case> cases{{mod_2qcfa(3, Rational(1, 4)), "aa"},
                            {mod_2qcfa(5, Rational(1, 2)), "aaaaaaa"},
                            {len_2qcfa(2, Rational(1, 2)), "a"},
                            {len_2qcfa(2, Rational(1, 2)), "aab"},
                            {lift(moqfa_mod(5, Rational(1, 2))), "aaa"}};
    for (const auto& c : cases) {
        auto exact = acceptance(c.m, c.w);
        auto e = estimate(c.m, c.w, 20'000, 2026);
        ASSERT_TRUE(e.usable);
        EXPECT_EQ(e.censored, 0u);
        const double sigma3 = 3 * std::sqrt(std::max(exact.p_accept * (1 - exact.p_accept), 1e-12) / 20'000.0);
        EXPECT_NEAR(e.p_accept_hat, exact.p_accept, sigma3 + 1e-12) << machine_name(c.m) << " " << c.w;
        EXPECT_NEAR(e.p_accept_hat + e.p_reject_hat, 1.0, 1e-12);
    }
}

TEST(Estimate, ExactMachineNeverErrs) {
    Machine m = eq_1qcfa(4);
    auto yes = estimate(m, "0110#0110", 5000, 1);
    auto no = estimate(m, "0110#0101", 5000, 1);
    EXPECT_DOUBLE_EQ(yes.p_accept_hat, 1.0);
    EXPECT_DOUBLE_EQ(no.p_reject_hat, 1.0);
    EXPECT_DOUBLE_EQ(yes.ci_halfwidth, 0.0);
    EXPECT_DOUBLE_EQ(yes.mean_steps, 11.0);  // n + 2 cells, end-markers included
}

TEST(Estimate, MeanStepsTrackTheAnalyticExpectation) {
    Machine m = len_2qcfa(2, Rational(1, 2));
    auto exact = acceptance(m, "aa");
    auto e = estimate(m, "aa", 3000, 77);
    EXPECT_NEAR(e.mean_steps, exact.expected_steps, 0.1 * exact.expected_steps);
    Machine q = mod_2qcfa(3, Rational(1, 4));
    auto ex = acceptance(q, "aaa");
    auto eq = estimate(q, "aaa", 20'000, 77);
    EXPECT_NEAR(eq.mean_steps, ex.expected_steps, 0.05 * ex.expected_steps);
}

TEST(Estimate, HalfWidthFormula) {
    std::vector<RunResult> runs(100);
    for (int i = 0; i < 100; ++i) runs[i].outcome = i < 30 ? RunOutcome::accept : RunOutcome::reject;
    runs.push_back({RunOutcome::censored, 5, 1});
    auto e = summarize(runs);
    EXPECT_EQ(e.n_runs, 101u);
    EXPECT_EQ(e.censored, 1u);
    EXPECT_DOUBLE_EQ(e.p_accept_hat, 0.3);
    EXPECT_NEAR(e.ci_halfwidth, 3 * std::sqrt(0.3 * 0.7 / 100), 1e-15);
    EXPECT_FALSE(summarize({{RunOutcome::censored, 1, 0}}).usable);
    EXPECT_THROW(estimate(Machine(dfa_mod(2)), "aa", 0, 1), std::invalid_argument);
}

TEST(Estimate, DeterministicForAFixedSeed) {
    Machine m = mod_2qcfa(5, Rational(1, 4));
    EXPECT_EQ(estimate(m, "aaa", 500, 11), estimate(m, "aaa", 500, 11));
    EXPECT_NE(estimate(m, "aaa", 500, 11).mean_steps, estimate(m, "aaa", 500, 12).mean_steps);
}

TEST(Estimate, DefaultCapIsAHundredTimesTheExpectation) {
    Machine m = mod_2qcfa(3, Rational(1, 4));
    EXPECT_EQ(default_step_cap(m, "aaa"),
              static_cast<std::uint64_t>(std::ceil(100 * acceptance(m, "aaa").expected_steps)));
}
