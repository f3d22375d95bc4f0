// Copyright 2026 The ria Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include <gtest/gtest.h>

#include "ria/error.hpp"
#include "ria/kernel.hpp"
#include "support/oracles.hpp"

namespace ria {
namespace {

TEST(CircularDistance, Examples) {
    EXPECT_EQ(circular_distance(2, 7, 8), 3u);
    EXPECT_EQ(circular_distance(0, 5, 8), 3u);
    for (std::size_t k = 0; k < 8; ++k) EXPECT_EQ(circular_distance(k, k, 8), 0u);
    EXPECT_EQ(circular_distance(0, 0, 1), 0u);
}

TEST(CircularDistance, RangeAndErrors) {
    for (std::size_t m = 1; m < 12; ++m)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                EXPECT_LE(circular_distance(i, j, m), m / 2);
                EXPECT_EQ(circular_distance(i, j, m), circular_distance(j, i, m));
            }
    EXPECT_THROW(circular_distance(8, 0, 8), std::out_of_range);
    EXPECT_THROW(circular_distance(0, 9, 8), std::out_of_range);
    EXPECT_THROW(circular_distance(0, 0, 0), std::invalid_argument);
}

TEST(ValidateKernel, IdentityAndUniform) {
    const Kernel id = validate_kernel(DenseMatrix::identity(6));
    EXPECT_EQ(id.size(), 6u);
    EXPECT_EQ(std::vector<double>(id.half_sequence().begin(), id.half_sequence().end()),
              (std::vector<double>{1, 0, 0, 0}));

    const Kernel u = validate_kernel(DenseMatrix(5, 1.0 / 5));
    for (double c : u.half_sequence()) EXPECT_DOUBLE_EQ(c, 0.2);
}

TEST(ValidateKernel, MonotonicityViolation) {
    auto m = testing::circulant(4, {0.2, 0.5, 0.1});
    try {
        validate_kernel(m);
        FAIL() << "expected a validation error";
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.condition(), "not_decreasing");
        ASSERT_TRUE(e.witness().has_value());
        EXPECT_EQ(e.witness()->second, 1u);
    }
}

TEST(ValidateKernel, NegativeEntryReportedFirst) {
    auto m = testing::circulant(4, {0.2, 0.5, 0.1});
    m(2, 3) = -0.5;
    try {
        validate_kernel(m);
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.condition(), "negative_entry");
        EXPECT_EQ(*e.witness(), (std::pair<std::size_t, std::size_t>{2, 3}));
    }
}

TEST(ValidateKernel, UnequalAtEqualDistance) {
    auto m = testing::circulant(5, {0.6, 0.15, 0.05});
    m(3, 4) += 1e-6;
    try {
        validate_kernel(m);
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.condition(), "unequal_at_equal_distance");
        EXPECT_EQ(*e.witness(), (std::pair<std::size_t, std::size_t>{3, 4}));
    }
    // Noise below the equality tolerance is accepted.
    auto noisy = testing::circulant(5, {0.6, 0.15, 0.05});
    noisy(3, 4) += 1e-11;
    EXPECT_NO_THROW(validate_kernel(noisy));
}

TEST(ValidateKernel, AcceptsAllZeroKernel) {
    const Kernel z = validate_kernel(DenseMatrix(3, 0.0));
    EXPECT_EQ(z.half_sequence()[0], 0.0);
}

TEST(ValidateKernel, RejectsNonSquare) {
    DenseMatrix m(3);
    m.data.pop_back();
    EXPECT_THROW(validate_kernel(m), ValidationError);
}

TEST(Kernel, FromHalfSequenceChecks) {
    EXPECT_THROW(Kernel::from_half_sequence(4, {1.0, 0.5}), std::invalid_argument);
    EXPECT_THROW(Kernel::from_half_sequence(4, {1.0, -0.1, -0.2}), ValidationError);
    EXPECT_THROW(Kernel::from_half_sequence(4, {0.1, 0.5, 0.2}), ValidationError);
    // Within tolerance: projected to exactly non-increasing.
    const Kernel k = Kernel::from_half_sequence(4, {0.5, 0.3, 0.3 + 1e-12});
    EXPECT_EQ(k.half_sequence()[2], k.half_sequence()[1]);
}

TEST(Kernel, EntryIsEvenAndPeriodic) {
    testing::Rng rng(11);
    for (std::size_t m = 1; m <= 12; ++m) {
        const Kernel k = testing::random_kernel(m, rng);
        const auto mm = static_cast<long long>(m);
        for (long long t = -3 * mm; t <= 3 * mm; ++t) {
            EXPECT_EQ(k.entry(t), k.entry(-t));
            EXPECT_EQ(k.entry(t), k.entry(t + mm));
        }
    }
    const Kernel u = Kernel::uniform(7, 0.25);
    for (long long t = -20; t < 20; ++t) EXPECT_EQ(u.entry(t), 0.25);
}

TEST(Kernel, ValidateRoundTrip) {
    testing::Rng rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = 1 + trial % 16;
        const Kernel k = testing::random_kernel(m, rng);
        EXPECT_EQ(validate_kernel(k.dense()), k);
    }
}

TEST(KernelProduct, IdentityAndUniform) {
    EXPECT_EQ(kernel_product(Kernel::identity(6), Kernel::identity(6)), Kernel::identity(6));

    testing::Rng rng(3);
    for (std::size_t m = 2; m <= 9; ++m) {
        auto half = testing::random_half_sequence(m, rng);
        // Make it row-stochastic.
        const double sum = [&] {
            double s = 0.0;
            for (std::size_t j = 0; j < m; ++j) s += half[std::min(j, m - j)];
            return s;
        }();
        for (double& c : half) c /= sum;
        const Kernel stochastic = Kernel::from_half_sequence(m, half);
        const Kernel avg = Kernel::uniform(m, 1.0 / static_cast<double>(m));
        const Kernel h = kernel_product(avg, stochastic);
        for (double c : h.half_sequence()) EXPECT_NEAR(c, 1.0 / static_cast<double>(m), 1e-15);
    }
}

TEST(KernelProduct, MatchesDenseProductAndCloses) {
    testing::Rng rng(99);
    for (std::size_t m = 2; m <= 16; ++m) {
        for (int trial = 0; trial < 40; ++trial) {
            const auto qh = testing::random_half_sequence(m, rng);
            const auto rh = testing::random_half_sequence(m, rng);
            const DenseMatrix dense = testing::circulant(m, qh) * testing::circulant(m, rh).transposed();
            const Kernel oracle = validate_kernel(dense);
            const Kernel h = kernel_product(Kernel::from_half_sequence(m, qh), Kernel::from_half_sequence(m, rh));
            for (std::size_t t = 0; t <= m / 2; ++t) {
                EXPECT_NEAR(h.half_sequence()[t], oracle.half_sequence()[t],
                            1e-12 * std::max(1.0, oracle.half_sequence()[t]));
            }
            EXPECT_NO_THROW(validate_kernel(h.dense()));
        }
    }
}

TEST(KernelProduct, SizeMismatch) {
    EXPECT_THROW(kernel_product(Kernel::identity(3), Kernel::identity(4)), std::invalid_argument);
}

}  // namespace
}  // namespace ria
