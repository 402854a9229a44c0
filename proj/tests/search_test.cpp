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


#include <set>

#include <gtest/gtest.h>

#include "magicpath/oracle.hpp"
#include "magicpath/search.hpp"

namespace magicpath {
namespace {

TEST(LabelSet, Basics)
{
    const LabelSet all = LabelSet::all(5);
    EXPECT_EQ(all.size(), 5);
    EXPECT_FALSE(all.contains(0));
    EXPECT_TRUE(all.contains(5));
    EXPECT_FALSE(all.contains(6));
    EXPECT_EQ(LabelSet{}.with(3).with(3).size(), 1);
    EXPECT_EQ(LabelSet::all(63).size(), 63);
}

TEST(SplitTasks, Examples)
{
    const auto one = split_tasks(1, 6);
    EXPECT_EQ(one.size(), 6u);
    for (const auto &t : one)
        EXPECT_EQ(std::set<MagicConstant>({t.a, t.b, t.forced()}), (std::set<MagicConstant>{1, 2, 3}));

    const auto eight = split_tasks(2, 8);
    EXPECT_NE(std::ranges::find(eight, SearchTask{8, 2, 5}), eight.end());
    EXPECT_EQ(std::ranges::find(eight, SearchTask{8, 4, 4}), eight.end());
}

TEST(SplitTasks, TasksAreDistinctAndValid)
{
    for (int n = 1; n <= 6; ++n) {
        const int elements = 2 * n + 1;
        for (MagicConstant k = k_bounds(n).k_min; k <= k_bounds(n).k_max; ++k) {
            const auto tasks = split_tasks(n, k);
            std::set<std::pair<int, int>> seen;
            for (const auto &t : tasks) {
                EXPECT_TRUE(seen.emplace(t.a, t.b).second);
                EXPECT_NE(t.a, t.b);
                EXPECT_GE(t.forced(), 1);
                EXPECT_LE(t.forced(), elements);
                EXPECT_NE(t.forced(), t.a);
                EXPECT_NE(t.forced(), t.b);
            }
        }
    }
}

TEST(CountForTask, Examples)
{
    EXPECT_EQ(count_for_task(2, {9, 1, 5}, Convention::canonical), 2u);
    EXPECT_EQ(count_for_task(2, {8, 5, 4}, Convention::canonical), 0u);
    EXPECT_EQ(count_for_task(1, {6, 1, 2}, Convention::canonical), 1u);
    EXPECT_EQ(count_for_task(1, {6, 3, 2}, Convention::canonical), 0u);
    EXPECT_EQ(count_for_task(1, {6, 3, 2}, Convention::raw), 1u);
    EXPECT_EQ(count_for_task(2, {8, 4, 4}, Convention::raw), 0u);
    EXPECT_EQ(count_for_task(2, {9, 0, 5}, Convention::raw), 0u);
}

TEST(CountForTask, SumsToTwelveAtLengthTwo)
{
    std::uint64_t total = 0;
    for (MagicConstant k = 8; k <= 10; ++k)
        for (const auto &t : split_tasks(2, k))
            total += count_for_task(2, t, Convention::canonical);
    EXPECT_EQ(total, 12u);
}

TEST(CountForK, Examples)
{
    EXPECT_EQ(count_for_k(2, 9, Convention::canonical), 4u);
    EXPECT_EQ(count_for_k(2, 8, Convention::canonical), 4u);
    EXPECT_EQ(count_for_k(5, 16, Convention::canonical), 40u);
    EXPECT_THROW(count_for_k(2, 11, Convention::canonical), std::out_of_range);
    EXPECT_THROW(count_for_k(2, 7, Convention::canonical), std::out_of_range);
}

TEST(CountForK, EqualsBruteForcePerK)
{
    for (int n = 1; n <= 5; ++n)
        for (auto convention : {Convention::canonical, Convention::raw}) {
            const auto brute = count_path_bruteforce(n, convention);
            for (MagicConstant k = k_bounds(n).k_min; k <= k_bounds(n).k_max; ++k) {
                const auto it = brute.per_k.find(k);
                EXPECT_EQ(count_for_k(n, k, convention), it == brute.per_k.end() ? 0 : it->second)
                    << "n=" << n << " k=" << k;
            }
        }
}

TEST(CountPathFast, MatchesBruteForce)
{
    for (int n = 0; n <= 5; ++n)
        for (auto convention : {Convention::canonical, Convention::raw}) {
            const auto fast = count_path_fast(n, {.convention = convention});
            const auto brute = count_path_bruteforce(n, convention);
            EXPECT_EQ(fast.per_k, brute.per_k) << "n=" << n;
            EXPECT_EQ(fast.total, brute.total) << "n=" << n;
            EXPECT_EQ(fast.mode, Mode::fast);
        }
}

TEST(CountPathFast, TableRows)
{
    const std::uint64_t expected[] = {1, 3, 12, 28, 48, 240, 944, 5344, 23408};
    for (int n = 0; n < 9; ++n)
        EXPECT_EQ(count_path_fast(n).total, expected[n]) << "n=" << n;
}

TEST(CountPathFast, FrozenPerKBeyondBruteForceReach)
{
    const std::map<MagicConstant, std::uint64_t> seven = {
        {21, 272}, {22, 480}, {23, 872}, {24, 2096}, {25, 872}, {26, 480}, {27, 272}};
    EXPECT_EQ(count_path_fast(7).per_k, seven);
    const std::map<MagicConstant, std::uint64_t> eight = {
        {23, 224},  {24, 1604}, {25, 2332}, {26, 5172}, {27, 4744},
        {28, 5172}, {29, 2332}, {30, 1604}, {31, 224}};
    EXPECT_EQ(count_path_fast(8).per_k, eight);
}

TEST(CountPathFast, HalvingWorkersAndMemoAgree)
{
    for (int n = 1; n <= 8; ++n)
        for (auto convention : {Convention::canonical, Convention::raw}) {
            const auto plain = count_path_fast(n, {.convention = convention, .memo_steps = 0});
            const auto halved = count_path_fast(
                n, {.convention = convention, .workers = 3, .complement_halving = true});
            const auto memo = count_path_fast(n, {.convention = convention, .memo_steps = 2});
            EXPECT_EQ(plain.per_k, halved.per_k) << "n=" << n;
            EXPECT_EQ(plain.per_k, memo.per_k) << "n=" << n;
            EXPECT_EQ(plain.total, halved.total);
        }
}

TEST(CountPathFast, TinyMemoTableStillExact)
{
    // A table that fills up almost at once drops entries but never miscounts.
    const auto full = count_path_fast(8, {.memo_steps = 4, .memo_log2 = 2});
    EXPECT_EQ(full.total, 23408u);
}

TEST(CountPathFast, Errors)
{
    EXPECT_THROW(count_path_fast(32), std::out_of_range);
    EXPECT_THROW(count_path_fast(-1), std::out_of_range);
    EXPECT_THROW(count_path_fast(3, {.convention = Convention::dihedral}), std::invalid_argument);
}

TEST(CountPathFast, ReportsProgress)
{
    std::size_t calls = 0;
    std::size_t last_total = 0;
    count_path_fast(6, {.progress = [&](std::size_t, std::size_t total) {
                            ++calls;
                            last_total = total;
                        }});
    // Throttled to once per second; a short run may not report at all.
    EXPECT_LE(calls, 2u);
    if (calls != 0) {
        EXPECT_GT(last_total, 0u);
    }
}

TEST(EnumeratePathSolutions, AgreesWithCountsAndIsMagic)
{
    for (int n = 0; n <= 4; ++n)
        for (auto convention : {Convention::canonical, Convention::raw}) {
            const auto solutions = enumerate_path_solutions(n, convention);
            EXPECT_EQ(solutions.size(), count_path_fast(n, {.convention = convention}).total);
            for (const auto &l : solutions) {
                EXPECT_TRUE(is_magic(l));
                if (n >= 1 && convention == Convention::canonical) {
                    EXPECT_TRUE(is_canonical(l));
                }
            }
        }
    EXPECT_THROW(enumerate_path_solutions(5, Convention::raw), std::out_of_range);
}

} // namespace
} // namespace magicpath
