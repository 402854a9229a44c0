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


// Expected per-constant counts below were produced by a separate throwaway
// enumerator and frozen here.

#include <map>

#include <gtest/gtest.h>

#include "magicpath/bounds.hpp"
#include "magicpath/oracle.hpp"

namespace magicpath {
namespace {

using PerK = std::map<MagicConstant, std::uint64_t>;

const std::map<int, PerK> kCanonicalPerK = {
    {1, {{6, 3}}},
    {2, {{8, 4}, {9, 4}, {10, 4}}},
    {3, {{11, 8}, {12, 12}, {13, 8}}},
    {4, {{13, 4}, {14, 20}, {16, 20}, {17, 4}}},
    {5, {{16, 40}, {17, 40}, {18, 80}, {19, 40}, {20, 40}}},
};

TEST(PathBruteforce, ReproducesSmallRows)
{
    EXPECT_EQ(count_path_bruteforce(0, Convention::canonical).total, 1u);
    EXPECT_EQ(count_path_bruteforce(1, Convention::canonical).total, 3u);
    EXPECT_EQ(count_path_bruteforce(1, Convention::raw).total, 6u);
    EXPECT_EQ(count_path_bruteforce(2, Convention::canonical).total, 12u);
    EXPECT_EQ(count_path_bruteforce(3, Convention::canonical).total, 28u);
    EXPECT_EQ(count_path_bruteforce(4, Convention::canonical).total, 48u);
    EXPECT_EQ(count_path_bruteforce(5, Convention::canonical).total, 240u);
}

TEST(PathBruteforce, PerKMatchesFrozenValues)
{
    for (const auto &[n, expected] : kCanonicalPerK) {
        const auto report = count_path_bruteforce(n, Convention::canonical);
        EXPECT_EQ(report.per_k, expected) << "n=" << n;
        EXPECT_EQ(report.mode, Mode::bruteforce);
        EXPECT_EQ(report.graph, Graph::path);
    }
}

TEST(PathBruteforce, SingleVertexHasEmptyPerK)
{
    const auto report = count_path_bruteforce(0, Convention::raw);
    EXPECT_TRUE(report.per_k.empty());
    EXPECT_EQ(report.total, 1u);
}

TEST(PathBruteforce, ReversalAndComplementPairing)
{
    for (int n = 1; n <= 5; ++n) {
        const auto canonical = count_path_bruteforce(n, Convention::canonical);
        const auto raw = count_path_bruteforce(n, Convention::raw);
        EXPECT_EQ(raw.total, 2 * canonical.total) << "n=" << n;
        for (const auto *report : {&canonical, &raw})
            for (const auto &[k, count] : report->per_k) {
                ASSERT_TRUE(report->per_k.contains(6 * n + 6 - k));
                EXPECT_EQ(report->per_k.at(6 * n + 6 - k), count);
                EXPECT_TRUE(k_bounds(n).contains(k));
            }
    }
}

TEST(PathBruteforce, WorkersDoNotChangeTheResult)
{
    const auto one = count_path_bruteforce(4, Convention::raw, {.workers = 1});
    const auto four = count_path_bruteforce(4, Convention::raw, {.workers = 4});
    EXPECT_EQ(one.per_k, four.per_k);
    EXPECT_EQ(one.total, four.total);
}

TEST(PathBruteforce, Guards)
{
    EXPECT_THROW(count_path_bruteforce(8, Convention::canonical), std::out_of_range);
    EXPECT_THROW(count_path_bruteforce(-1, Convention::canonical), std::out_of_range);
    EXPECT_THROW(count_path_bruteforce(2, Convention::dihedral), std::invalid_argument);
}

TEST(CycleBruteforce, FrozenCounts)
{
    const std::map<int, PerK> raw = {
        {3, {{9, 6}, {10, 6}, {11, 6}, {12, 6}}},
        {4, {{12, 8}, {13, 16}, {14, 16}, {15, 8}}},
        {5, {{14, 10}, {16, 20}, {17, 20}, {19, 10}}},
    };
    const std::map<int, std::uint64_t> classes = {{3, 4}, {4, 6}, {5, 6}};
    for (const auto &[n, expected] : raw) {
        const auto r = count_cycle_bruteforce(n, Convention::raw);
        EXPECT_EQ(r.per_k, expected) << "n=" << n;
        EXPECT_EQ(r.graph, Graph::cycle);
        const auto d = count_cycle_bruteforce(n, Convention::dihedral);
        EXPECT_EQ(d.total, classes.at(n)) << "n=" << n;
        EXPECT_EQ(r.total, 2u * n * d.total);
        for (const auto &[k, count] : d.per_k)
            EXPECT_EQ(r.per_k.at(k), 2u * n * count);
    }
}

TEST(CycleBruteforce, Guards)
{
    EXPECT_THROW(count_cycle_bruteforce(2, Convention::raw), std::out_of_range);
    EXPECT_THROW(count_cycle_bruteforce(6, Convention::raw), std::out_of_range);
    EXPECT_THROW(count_cycle_bruteforce(3, Convention::canonical), std::invalid_argument);
}

TEST(DihedralImages, RotationsAndReflections)
{
    const std::vector<int> seq{1, 2, 3, 4, 5, 6};
    const auto images = detail::dihedral_images(seq);
    ASSERT_EQ(images.size(), 6u);
    EXPECT_EQ(images[0], seq);
    EXPECT_EQ(images[1], (std::vector<int>{1, 6, 5, 4, 3, 2}));
    EXPECT_EQ(images[2], (std::vector<int>{3, 4, 5, 6, 1, 2}));
}

} // namespace
} // namespace magicpath
