#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "fracnabla/errors.hpp"
#include "fracnabla/verify.hpp"
#include "test_util.hpp"

using namespace fracnabla;
using fracnabla::testing::kAllKinds;
using fracnabla::testing::max_relative_difference;
using fracnabla::testing::random_problem;

namespace {

Solution with_values(const Solution& s, std::vector<double> values) {
    Solution out = s;
    out.values = GridFunction(std::move(values));
    return out;
}

}  // namespace

TEST(Residual, HandSolvedSystemsAreExact) {
    for (const auto& s : {eigen_rl(0.5, 0.5, 2), eigen_caputo(0.5, 0.5, 2),
                          eigen_rl(0.5, -0.5, 3), eigen_caputo(0.3, 0.2, 3)}) {
        const auto report = residual(s.problem, s);
        EXPECT_LE(report.max_abs, 1e-12);
        EXPECT_EQ(report.domain_start, 1u);
        EXPECT_EQ(report.per_point.size(), s.problem.horizon);
    }
}

TEST(Residual, DetectsPerturbation) {
    const auto s = eigen_rl(0.5, 0.5, 3);
    std::vector<double> v(s.values.values().begin(), s.values.values().end());
    v[2] += 1e-3;
    EXPECT_GT(residual(s.problem, with_values(s, v)).max_abs, 1e-6);
}

TEST(Residual, ZeroProblem) {
    ProblemSpec p = eigen_rl_problem(0.5, 0.2, 5);
    p.initial_c = 0.0;
    const auto s = solve(p);
    const auto report = residual(p, s);
    EXPECT_EQ(report.max_abs, 0.0);
}

TEST(Residual, TwoTermDomainStartsAtTwo) {
    const auto s = oscillation(1.5, 0.5, GridFunction::constant(0.0, 10), 1.0, 1.0, 10);
    const auto report = residual(s.problem, s);
    EXPECT_EQ(report.domain_start, 2u);
    ASSERT_EQ(report.per_point.size(), 9u);
    EXPECT_EQ(report.per_point.front().first, 2u);
    EXPECT_EQ(report.per_point.back().first, 10u);
    EXPECT_LE(report.max_abs, 1e-12);
}

TEST(Residual, HorizonMismatchIsDomainError) {
    const auto s = eigen_rl(0.5, 0.5, 4);
    const auto other = eigen_rl_problem(0.5, 0.5, 5);
    EXPECT_THROW(residual(other, s), DomainError);
}

TEST(Residual, IntegerOrderUsesBackwardDifference) {
    ProblemSpec p = eigen_rl_problem(0.5, 0.0, 20);
    p.alpha = 1.0;
    p.initial_c = 0.0;
    p.forcing = GridFunction::constant(1.0, 20);
    for (const auto kind : {ProblemKind::single_rl, ProblemKind::single_caputo}) {
        p.kind = kind;
        const auto s = solve(p);
        EXPECT_EQ(residual(p, s).max_abs, 0.0);
    }
}

TEST(Residual, RelativeScalesByRunningMagnitude) {
    const ProblemSpec p = eigen_rl_problem(0.5, -0.5, 100);
    const auto report = residual(p, solve(p));
    EXPECT_LE(report.max_relative, report.max_abs);
    EXPECT_LE(report.max_relative, 1e-14);

    const Solution small = eigen_rl(0.5, 0.5, 3);
    const auto exact = residual(small.problem, small);
    EXPECT_DOUBLE_EQ(exact.max_relative, exact.max_abs);
}

TEST(DirectStepSolve, HandExamples) {
    const auto rl = direct_step_solve(eigen_rl_problem(0.5, 0.5, 2));
    EXPECT_NEAR(rl.values(1), 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(rl.values(2), 7.0 / 36.0, 1e-15);
    const auto caputo = direct_step_solve(eigen_caputo_problem(0.5, 0.5, 2));
    EXPECT_NEAR(caputo.values(1), 2.0 / 3.0, 1e-15);
    EXPECT_NEAR(caputo.values(2), 5.0 / 9.0, 1e-15);

    ProblemSpec p = eigen_rl_problem(0.5, 0.0, 30);
    p.alpha = 1.0;
    p.initial_c = 0.0;
    p.forcing = GridFunction::constant(1.0, 30);
    const auto sum = direct_step_solve(p);
    for (std::size_t t = 0; t <= 30; ++t) {
        EXPECT_EQ(sum.values(t), static_cast<double>(t));
    }
}

TEST(VerifyProperty, OracleEquivalence) {
    std::mt19937_64 rng(101);
    for (const auto kind : kAllKinds) {
        for (int trial = 0; trial < 100; ++trial) {
            const auto p = random_problem(rng, kind);
            const auto matrix = solve(p);
            const auto direct = direct_step_solve(p);
            ASSERT_LE(max_relative_difference(matrix.values, direct.values), 1e-11)
                << to_string(kind) << " alpha=" << p.alpha << " horizon=" << p.horizon;
        }
    }
}

TEST(VerifyProperty, ResidualSoundnessOnRandomProblems) {
    std::mt19937_64 rng(202);
    for (const auto kind : kAllKinds) {
        for (int trial = 0; trial < 50; ++trial) {
            const auto p = random_problem(rng, kind);
            ASSERT_LE(residual(p, solve(p)).max_abs, 1e-9) << to_string(kind);
        }
    }
}

TEST(VerifyProperty, ResidualCompleteness) {
    std::mt19937_64 rng(303);
    for (const auto kind : kAllKinds) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto p = random_problem(rng, kind);
            const auto s = solve(p);
            for (std::size_t t = 0; t <= p.horizon; ++t) {
                for (const double delta : {1e-3, -1e-3}) {
                    std::vector<double> v(s.values.values().begin(), s.values.values().end());
                    v[t] += delta;
                    ASSERT_GT(residual(p, with_values(s, v)).max_abs, 1e-6)
                        << to_string(kind) << " t=" << t << " horizon=" << p.horizon;
                }
            }
        }
    }
}
