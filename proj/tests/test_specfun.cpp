#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "fracnabla/errors.hpp"
#include "fracnabla/specfun.hpp"
#include "test_util.hpp"

using namespace fracnabla;
using fracnabla::testing::gamma_ratio_weight;
using fracnabla::testing::uniform;

TEST(LogGammaSigned, SignAlternatesOnNegativeAxis) {
    EXPECT_EQ(log_gamma_signed(2.5).sign, 1);
    EXPECT_EQ(log_gamma_signed(-0.5).sign, -1);
    EXPECT_EQ(log_gamma_signed(-1.5).sign, 1);
    EXPECT_EQ(log_gamma_signed(-2.5).sign, -1);
    const auto g = log_gamma_signed(-0.5);
    EXPECT_NEAR(g.sign * std::exp(g.log_abs), -2.0 * std::sqrt(std::numbers::pi), 1e-14);
}

TEST(LogGammaSigned, PolesThrow) {
    EXPECT_THROW(log_gamma_signed(0.0), DomainError);
    EXPECT_THROW(log_gamma_signed(-3.0), DomainError);
    EXPECT_THROW(gamma_function(-1.0), DomainError);
}

TEST(RisingFactorial, Examples) {
    EXPECT_NEAR(rising_factorial(2.0, 3.0), 24.0, 24.0 * 1e-15);
    EXPECT_EQ(rising_factorial(0.0, 0.5), 0.0);
    EXPECT_NEAR(rising_factorial(1.0, 0.5), std::sqrt(std::numbers::pi) / 2.0, 1e-15);
}

TEST(RisingFactorial, PoleArgumentsThrow) {
    EXPECT_THROW(rising_factorial(-2.0, 0.5), DomainError);
    EXPECT_THROW(rising_factorial(1.5, -2.5), DomainError);
    EXPECT_THROW(rising_factorial(2.0, -2.0), DomainError);
}

TEST(RisingFactorial, LargeArgumentsUseLogRoute) {
    // 180^(2) = 180 * 181; both gamma values overflow.
    EXPECT_NEAR(rising_factorial(180.0, 2.0), 180.0 * 181.0, 180.0 * 181.0 * 1e-12);
    // Negative non-integer arguments well past the tgamma fast path.
    const double t = -175.5;
    const double expected = (t) * (t + 1.0) * (t + 2.0);
    EXPECT_NEAR(rising_factorial(t, 3.0), expected, std::abs(expected) * 1e-12);
}

TEST(RisingFactorial, AgreesWithProductForIntegerOrders) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const double t = uniform(rng, -30.0, 150.0);
        if (std::abs(t - std::round(t)) < 1e-3) {
            continue;
        }
        const int n = static_cast<int>(uniform(rng, 0.0, 6.0));
        double product = 1.0;
        for (int i = 0; i < n; ++i) {
            product *= t + i;
        }
        EXPECT_NEAR(rising_factorial(t, n), product, 1e-12 * std::max(1.0, std::abs(product)))
            << "t=" << t << " n=" << n;
    }
}

TEST(TaylorMonomial, Examples) {
    EXPECT_NEAR(taylor_monomial(0.7, 5.0, 4.0), 1.0, 1e-15);
    EXPECT_NEAR(taylor_monomial(-0.5, 1.0, 0.0), 1.0, 1e-15);
    EXPECT_NEAR(taylor_monomial(-1.5, 2.0, 0.0), -0.5, 1e-15);
}

TEST(TaylorMonomial, NegativeIntegerOrderThrows) {
    EXPECT_THROW(taylor_monomial(-1.0, 3.0, 0.0), DomainError);
    EXPECT_THROW(taylor_monomial(-2.0, 3.0, 0.0), DomainError);
}

TEST(WeightSequence, Examples) {
    const auto w = monomial_weight_sequence(-1.5, 4);
    ASSERT_EQ(w.size(), 4u);
    EXPECT_EQ(w.value(1), 1.0);
    EXPECT_DOUBLE_EQ(w.value(2), -0.5);
    EXPECT_DOUBLE_EQ(w.value(3), -0.125);
    EXPECT_DOUBLE_EQ(w.value(4), -0.0625);

    const auto v = monomial_weight_sequence(-0.5, 3);
    EXPECT_DOUBLE_EQ(v.value(2), 0.5);
    EXPECT_DOUBLE_EQ(v.value(3), 0.375);
}

TEST(WeightSequence, IntegerOrderDegeneratesExactly) {
    const auto w = monomial_weight_sequence(-2.0, 6);
    EXPECT_EQ(w.value(1), 1.0);
    EXPECT_EQ(w.value(2), -1.0);
    for (std::size_t k = 3; k <= 6; ++k) {
        EXPECT_EQ(w.value(k), 0.0);
    }
    EXPECT_TRUE(monomial_weight_sequence(0.3, 0).empty());
}

TEST(WeightSequence, ExtendKeepsPrefix) {
    auto w = monomial_weight_sequence(-1.3, 5);
    const std::vector<double> prefix(w.data().begin(), w.data().end());
    w.extend_to(40);
    ASSERT_EQ(w.size(), 40u);
    for (std::size_t k = 0; k < prefix.size(); ++k) {
        EXPECT_EQ(w.data()[k], prefix[k]);
    }
    EXPECT_EQ(w.data()[39], monomial_weight_sequence(-1.3, 40).value(40));
}

TEST(WeightCache, GrowsInPlace) {
    WeightCache cache;
    const auto& a = cache.get(-1.5, 4);
    const auto& b = cache.get(-1.5, 10);
    EXPECT_EQ(&a, &b);
    EXPECT_EQ(b.size(), 10u);
    EXPECT_EQ(cache.get(-1.5, 3).size(), 10u);
}

// Property: the recurrence reproduces the Γ-ratio definition.
TEST(WeightSequenceProperty, MatchesGammaRatio) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const double mu = fracnabla::testing::non_integer(rng, -1.999, -0.001, 1e-3);
        const auto w = monomial_weight_sequence(mu, 50);
        for (std::size_t k = 1; k <= 50; ++k) {
            const double oracle = gamma_ratio_weight(mu, k);
            ASSERT_NEAR(w.value(k), oracle, 1e-12 * std::max(1.0, std::abs(w.value(k))))
                << "mu=" << mu << " k=" << k;
        }
    }
}

// Property: h_mu(k+1) - h_{mu-1}(k+1) = h_mu(k) on weight sequences.
TEST(WeightSequenceProperty, Telescoping) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const double mu = uniform(rng, -3.0, 2.0);
        const auto w = monomial_weight_sequence(mu, 60);
        const auto v = monomial_weight_sequence(mu - 1.0, 60);
        for (std::size_t k = 1; k < 60; ++k) {
            const double scale =
                std::max({1.0, std::abs(w.value(k + 1)), std::abs(v.value(k + 1))});
            ASSERT_NEAR(w.value(k + 1) - v.value(k + 1), w.value(k), 1e-13 * scale)
                << "mu=" << mu << " k=" << k;
        }
    }
}

TEST(WeightSequenceProperty, RiemannLiouvilleSignPattern) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const double alpha = uniform(rng, 0.001, 0.999);
        const auto w = monomial_weight_sequence(-alpha - 1.0, 200);
        EXPECT_EQ(w.value(1), 1.0);
        for (std::size_t k = 2; k <= 200; ++k) {
            ASSERT_LT(w.value(k), 0.0) << "alpha=" << alpha << " k=" << k;
        }
    }
}

TEST(TaylorMonomialProperty, ShiftInvariance) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        const double mu = fracnabla::testing::non_integer(rng, -2.9, 2.9);
        const double a = uniform(rng, -10.0, 10.0);
        const double t = a + uniform(rng, 1.0, 40.0);
        EXPECT_EQ(taylor_monomial(mu, t, a), taylor_monomial(mu, t - a, 0.0));
    }
}
