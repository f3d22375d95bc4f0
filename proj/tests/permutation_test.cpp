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

#include <algorithm>
#include <set>

#include "ria/error.hpp"
#include "ria/permutation.hpp"

namespace ria {
namespace {

TEST(Permutation, RejectsNonBijections) {
    EXPECT_THROW(Permutation({0, 0, 1}), ValidationError);
    EXPECT_THROW(Permutation({0, 3, 1}), ValidationError);
    EXPECT_NO_THROW(Permutation({2, 0, 1}));
}

TEST(Permutation, InverseAndApply) {
    const Permutation p{2, 0, 1};
    EXPECT_EQ(p.inverse(), (Permutation{1, 2, 0}));
    EXPECT_EQ(p.apply(std::vector<double>{10, 20, 30}), (std::vector<double>{30, 10, 20}));
    EXPECT_THROW(p.apply(std::vector<double>{1, 2}), std::invalid_argument);
}

TEST(Factorial, SmallAndOverflow) {
    EXPECT_EQ(factorial(0), 1u);
    EXPECT_EQ(factorial(8), 40320u);
    EXPECT_EQ(factorial(20), 2432902008176640000ull);
    EXPECT_THROW(factorial(21), std::overflow_error);
}

TEST(NthPermutation, LexicographicOrderMatchesStd) {
    for (std::size_t m = 1; m <= 6; ++m) {
        std::vector<std::size_t> cur(m);
        for (std::size_t i = 0; i < m; ++i) cur[i] = i;
        std::uint64_t rank = 0;
        do {
            const Permutation p = nth_permutation(m, rank);
            EXPECT_EQ(std::vector<std::size_t>(p.map().begin(), p.map().end()), cur);
            EXPECT_EQ(permutation_rank(p), rank);
            ++rank;
        } while (std::next_permutation(cur.begin(), cur.end()));
        EXPECT_EQ(rank, factorial(m));
    }
    EXPECT_THROW(nth_permutation(3, 6), std::out_of_range);
}

TEST(AllPermutationsFlat, MatchesUnrank) {
    const auto flat = all_permutations_flat(4);
    ASSERT_EQ(flat.size(), 4u * 24u);
    for (std::uint64_t r = 0; r < 24; ++r) {
        const Permutation p = nth_permutation(4, r);
        for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(flat[r * 4 + i], p[i]);
    }
}

TEST(PartitionRange, CoversWithoutOverlap) {
    for (std::uint64_t total : {0ull, 1ull, 7ull, 720ull, 40320ull}) {
        for (std::size_t parts : {1u, 2u, 3u, 16u, 1000u}) {
            const auto ranges = partition_range(total, parts);
            std::uint64_t next = 0;
            for (const auto& [b, e] : ranges) {
                EXPECT_EQ(b, next);
                EXPECT_LE(b, e);
                next = e;
            }
            EXPECT_EQ(next, total);
        }
    }
}

TEST(DefaultThreadCount, Bounded) {
    const auto n = default_thread_count();
    EXPECT_GE(n, 1u);
    EXPECT_LE(n, 16u);
}

}  // namespace
}  // namespace ria
