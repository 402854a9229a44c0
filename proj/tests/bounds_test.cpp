// Copyright 2026 The magicpath Authors
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

#include "magicpath/bounds.hpp"
#include "magicpath/oracle.hpp"

namespace magicpath {
namespace {

TEST(Triangular, Values)
{
    EXPECT_EQ(triangular(0), 0);
    EXPECT_EQ(triangular(5), 15);
    EXPECT_EQ(triangular(27), 378);
    EXPECT_THROW(triangular(-1), std::invalid_argument);
    for (std::int64_t r = 1; r <= 200; ++r)
        EXPECT_EQ(triangular(r) - triangular(r - 1), r);
}

TEST(KBounds, Examples)
{
    EXPECT_EQ(k_bounds(1), (KRange{6, 6}));
    EXPECT_EQ(k_bounds(2), (KRange{8, 10}));
    EXPECT_EQ(k_bounds(5), (KRange{16, 20}));
    EXPECT_TRUE(k_bounds(5).contains(16));
    EXPECT_THROW(k_bounds(0), std::invalid_argument);
}

TEST(KBounds, RoundInward)
{
    // (45 + 6) / 4 = 12.75 and (90 - 21) / 4 = 17.25.
    EXPECT_EQ(k_bounds(4), (KRange{13, 17}));
    EXPECT_EQ(k_bounds(13), (KRange{36, 48}));
}

TEST(KBounds, EndsSumToComplementPivot)
{
    for (int n = 1; n <= 1000; ++n) {
        const KRange r = k_bounds(n);
        EXPECT_LE(r.k_min, r.k_max);
        EXPECT_EQ(r.k_min + r.k_max, 6 * n + 6) << "n=" << n;
    }
}

TEST(CycleKBounds, Examples)
{
    EXPECT_EQ(cycle_k_bounds(3), (KRange{9, 12}));
    EXPECT_EQ(cycle_k_bounds(4), (KRange{12, 15}));
    // (55 + 15) / 5 = 14 and (110 - 15) / 5 = 19.
    EXPECT_EQ(cycle_k_bounds(5), (KRange{14, 19}));
    EXPECT_THROW(cycle_k_bounds(2), std::invalid_argument);
    for (int n = 3; n <= 500; ++n) {
        const KRange r = cycle_k_bounds(n);
        EXPECT_EQ(r.k_min + r.k_max, 6 * n + 3) << "n=" << n;
    }
}

TEST(KBounds, SoundAgainstBruteForce)
{
    for (int n = 1; n <= 5; ++n) {
        const auto raw = count_path_bruteforce(n, Convention::raw);
        for (const auto &[k, count] : raw.per_k)
            EXPECT_TRUE(k_bounds(n).contains(k)) << "n=" << n << " k=" << k;
    }
    for (int n = 3; n <= 5; ++n)
        for (const auto &[k, count] : count_cycle_bruteforce(n, Convention::raw).per_k)
            EXPECT_TRUE(cycle_k_bounds(n).contains(k)) << "n=" << n << " k=" << k;
}

TEST(KBounds, EndpointsAttainedForSmallPaths)
{
    // Attainment is an observation, not a guarantee; at n = 4 the middle
    // constant 15 has no labeling at all.
    const auto two = count_path_bruteforce(2, Convention::raw);
    EXPECT_TRUE(two.per_k.contains(8));
    EXPECT_TRUE(two.per_k.contains(10));
    const auto four = count_path_bruteforce(4, Convention::raw);
    EXPECT_FALSE(four.per_k.contains(15));
}

} // namespace
} // namespace magicpath
