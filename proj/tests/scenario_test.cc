// Copyright 2026 The bellwb Authors
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

#include "bellwb/scenario.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "bellwb/errors.h"
#include "support/oracles.h"

namespace bellwb {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(Scenario, EtaRule) {
    EXPECT_EQ(make_scenario(2, 2).eta(), 1);
    EXPECT_EQ(make_scenario(3, 2).eta(), 2);
    EXPECT_EQ(make_scenario(3, 3).eta(), 1);
    for (int n = 2; n <= 7; ++n) {
        for (int m = 2; m <= 7; ++m) {
            EXPECT_EQ(make_scenario(n, m).eta(), ((m + 1) % 2) * (n % 2) + 1);
        }
    }
}

TEST(Scenario, RejectsSmallSizes) {
    EXPECT_THROW(make_scenario(1, 2), std::invalid_argument);
    EXPECT_THROW(make_scenario(2, 1), std::invalid_argument);
}

TEST(Scenario, TupleCountOverflowIsReported) {
    EXPECT_THROW(BellScenario(64, 1 << 20).num_tuples(), std::overflow_error);
}

TEST(Angle, Values) {
    EXPECT_NEAR(angle(make_scenario(2, 2), 0, 0), kPi / 8, 1e-15);
    EXPECT_NEAR(angle(make_scenario(2, 2), 1, 1), 5 * kPi / 8, 1e-15);
    EXPECT_NEAR(angle(make_scenario(3, 2), 2, 0), kPi / 6, 1e-15);
    EXPECT_THROW(angle(make_scenario(2, 2), 2, 0), std::out_of_range);
    EXPECT_THROW(angle(make_scenario(2, 2), 0, 2), std::out_of_range);
}

TEST(Angle, SameForEveryParty) {
    const auto s = make_scenario(4, 5);
    for (int m = 0; m < 5; ++m) {
        for (int p = 1; p < 4; ++p) {
            EXPECT_EQ(angle(s, p, m), angle(s, 0, m));
        }
    }
}

TEST(Tuples, LexicographicWithPartyZeroMostSignificant) {
    const auto s = make_scenario(3, 4);
    const std::vector<int> m = {1, 2, 3};
    EXPECT_EQ(tuple_index(s, m), 1u * 16 + 2 * 4 + 3);
    EXPECT_EQ(tuple_from_index(s, 27), m);
    for (std::size_t k = 0; k < s.num_tuples(); ++k) {
        EXPECT_EQ(tuple_index(s, tuple_from_index(s, k)), k);
    }
}

TEST(Coefficients, ChshPattern) {
    const auto c = coefficient_tensor(make_scenario(2, 2));
    const double r = 1 / std::sqrt(2.0);
    const double expected[] = {r, -r, -r, -r};
    for (int k = 0; k < 4; ++k) {
        EXPECT_NEAR(c.values[k], expected[k], 1e-15);
    }
}

TEST(Coefficients, MerminPattern) {
    const auto s = make_scenario(3, 2);
    const auto c = coefficient_tensor(s);
    int zeros = 0;
    for (std::size_t k = 0; k < c.values.size(); ++k) {
        const auto m = tuple_from_index(s, k);
        const int sum = m[0] + m[1] + m[2];
        if (sum % 2 == 0) {
            EXPECT_NEAR(c.values[k], 0.0, 1e-15);
            ++zeros;
        } else {
            EXPECT_NEAR(std::abs(c.values[k]), 1.0, 1e-15);
        }
    }
    EXPECT_EQ(zeros, 4);
}

TEST(Coefficients, MatchDirectCosine) {
    for (int n = 2; n <= 4; ++n) {
        for (int m = 2; m <= 5; ++m) {
            const auto s = make_scenario(n, m);
            const auto c = coefficient_tensor(s);
            const int eta = ((m + 1) % 2) * (n % 2) + 1;
            for (std::size_t k = 0; k < c.values.size(); ++k) {
                const auto t = tuple_from_index(s, k);
                double total = 0;
                for (int v : t) {
                    total += kPi / m * v + kPi / (2.0 * m * n) * eta;
                }
                EXPECT_NEAR(c.values[k], std::cos(total), 1e-12);
            }
        }
    }
}

TEST(Coefficients, SquaredSumIsHalfTupleCount) {
    for (int n = 2; n <= 6; ++n) {
        for (int m = 2; m <= 6; ++m) {
            const auto c = coefficient_tensor(make_scenario(n, m));
            double sq = 0;
            for (double v : c.values) {
                sq += v * v;
            }
            EXPECT_NEAR(sq, 0.5 * static_cast<double>(c.values.size()), 1e-9) << n << "," << m;
        }
    }
}

TEST(LrBound, AnalyticValues) {
    EXPECT_NEAR(lr_bound_analytic(make_scenario(2, 2)), std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(lr_bound_analytic(make_scenario(3, 2)), 2.0, 1e-12);
    EXPECT_NEAR(lr_bound_analytic(make_scenario(7, 3)), 128 * std::cos(kPi / 6), 1e-9);
    EXPECT_NEAR(lr_bound_analytic(make_scenario(7, 3)), 110.851251684408, 1e-9);
}

TEST(BellValue, DotProductCases) {
    const auto s = make_scenario(3, 3);
    const auto c = coefficient_tensor(s);
    const double half = 0.5 * 27;
    EXPECT_NEAR(bell_value(c, CorrelationVector{s, c.values}), half, 1e-9);
    auto neg = c.values;
    for (auto &v : neg) {
        v = -v;
    }
    EXPECT_NEAR(bell_value(c, CorrelationVector{s, neg}), -half, 1e-9);
    EXPECT_EQ(bell_value(c, CorrelationVector{s, std::vector<double>(27, 0.0)}), 0.0);
    EXPECT_THROW(bell_value(c, CorrelationVector{make_scenario(3, 2), std::vector<double>(8, 0.0)}),
                 std::invalid_argument);
}

TEST(Strategy, CorrelationSignRules) {
    const auto s = make_scenario(3, 3);
    DeterministicStrategy d(3, 3);
    const auto ones = strategy_correlations(s, d);
    for (double v : ones.values) {
        EXPECT_EQ(v, 1.0);
    }
    d.set_outcome(1, 2, -1);
    d.set_outcome(2, 0, -1);
    const auto base = strategy_correlations(s, d);
    auto one_flip = d;
    one_flip.flip_party(0);
    auto two_flips = d;
    two_flips.flip_party(0);
    two_flips.flip_party(2);
    const auto a = strategy_correlations(s, one_flip);
    const auto b = strategy_correlations(s, two_flips);
    for (std::size_t k = 0; k < base.values.size(); ++k) {
        EXPECT_EQ(a.values[k], -base.values[k]);
        EXPECT_EQ(b.values[k], base.values[k]);
        const auto t = tuple_from_index(s, k);
        EXPECT_EQ(base.values[k], d.outcome(0, t[0]) * d.outcome(1, t[1]) * d.outcome(2, t[2]));
    }
    EXPECT_THROW(d.set_outcome(0, 0, 0), std::invalid_argument);
}

TEST(BruteForce, SmallCases) {
    EXPECT_NEAR(lhv_bound_bruteforce(make_scenario(2, 2)).value, std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(lhv_bound_bruteforce(make_scenario(3, 2)).value, 2.0, 1e-12);
    EXPECT_NEAR(lhv_bound_bruteforce(make_scenario(2, 5)).value, lr_bound_analytic(make_scenario(2, 5)), 1e-9);
}

TEST(BruteForce, MatchesAnalyticOnGrid) {
    for (int n = 2; n <= 4; ++n) {
        for (int m = 2; m <= 5; ++m) {
            if (m * (n - 1) > 16) {
                continue;
            }
            const auto s = make_scenario(n, m);
            EXPECT_NEAR(lhv_bound_bruteforce(s).value, lr_bound_analytic(s), 1e-9) << n << "," << m;
        }
    }
}

TEST(BruteForce, MatchesNaiveEnumerationOracle) {
    // Oracle searches every party, including the one eliminated analytically.
    for (auto [n, m] : {std::pair{2, 2}, {2, 3}, {3, 2}, {2, 4}, {3, 3}, {4, 2}, {2, 5}}) {
        const auto s = make_scenario(n, m);
        EXPECT_NEAR(lhv_bound_bruteforce(s).value, testing::naive_lhv_bound(n, m), 1e-12) << n << "," << m;
    }
}

TEST(BruteForce, ArgmaxAttainsValue) {
    for (auto [n, m] : {std::pair{2, 3}, {3, 3}, {4, 2}, {3, 4}}) {
        const auto s = make_scenario(n, m);
        const auto opt = lhv_bound_bruteforce(s);
        const double v = bell_value(coefficient_tensor(s), strategy_correlations(s, opt.strategy));
        EXPECT_NEAR(v, opt.value, 1e-12);
    }
}

TEST(BruteForce, NoStrategyExceedsBound) {
    testing::TestRng rng(31);
    const auto s = make_scenario(3, 4);
    const auto c = coefficient_tensor(s);
    const double bound = lr_bound_analytic(s);
    for (int trial = 0; trial < 2000; ++trial) {
        DeterministicStrategy d(3, 4);
        for (int p = 0; p < 3; ++p) {
            for (int k = 0; k < 4; ++k) {
                d.set_outcome(p, k, rng.uniform() < 0.5 ? -1 : 1);
            }
        }
        EXPECT_LE(std::abs(bell_value(c, strategy_correlations(s, d))), bound + 1e-12);
    }
}

TEST(BruteForce, PermutingPartiesKeepsValue) {
    const auto s = make_scenario(3, 3);
    const auto c = coefficient_tensor(s);
    const auto opt = lhv_bound_bruteforce(s);
    std::vector<int> perm = {0, 1, 2};
    do {
        const auto d = opt.strategy.permuted(perm);
        EXPECT_NEAR(bell_value(c, strategy_correlations(s, d)), opt.value, 1e-12);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(BruteForce, BudgetGuard) {
    EXPECT_THROW(lhv_bound_bruteforce(make_scenario(2, 27)), BudgetExceeded);
    EXPECT_THROW(lhv_bound_bruteforce(make_scenario(10, 3)), BudgetExceeded);
}

}  // namespace
}  // namespace bellwb
