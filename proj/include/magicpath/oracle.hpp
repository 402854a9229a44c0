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


#ifndef MAGICPATH_ORACLE_HPP
#define MAGICPATH_ORACLE_HPP

// Reference enumerators that try every permutation of the labels. They are
// slow on purpose and serve as ground truth for the search engines.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "core.hpp"
#include "parallel.hpp"

namespace magicpath {

inline constexpr int kBruteforcePathLimit = 7;
inline constexpr int kBruteforceCycleMin = 3;
inline constexpr int kBruteforceCycleLimit = 5;

struct BruteforceOptions {
    int workers = 1;
    /// Lifts the size guards. (2n+1)! grows quickly.
    bool unsafe_limits = false;
    ProgressFn progress;
};

namespace detail {

inline CountReport collect_report(int n, Graph graph, Convention convention,
                                  std::span<const std::uint64_t> per_k,
                                  std::chrono::steady_clock::time_point start)
{
    CountReport report;
    report.n = n;
    report.graph = graph;
    report.convention = convention;
    report.mode = Mode::bruteforce;
    for (std::size_t k = 0; k < per_k.size(); ++k)
        if (per_k[k] != 0)
            report.per_k[static_cast<MagicConstant>(k)] = per_k[k];
    report.seal();
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

/// 1..count with `first` moved to the front, the rest ascending.
inline std::vector<int> first_in_front(int count, int first)
{
    std::vector<int> x(count);
    std::iota(x.begin(), x.end(), 1);
    std::rotate(x.begin(), x.begin() + (first - 1), x.begin() + first);
    return x;
}

/// Every rotation (by whole vertex-edge steps) and reflection of a cycle
/// sequence v1, e1, ..., vn, en, including the identity.
inline std::vector<std::vector<int>> dihedral_images(std::span<const int> seq)
{
    const std::size_t size = seq.size();
    std::vector<std::vector<int>> images;
    images.reserve(size);
    for (std::size_t shift = 0; shift < size; shift += 2) {
        std::vector<int> turned(size);
        std::vector<int> mirrored(size);
        for (std::size_t i = 0; i < size; ++i) {
            turned[i] = seq[(i + shift) % size];
            // Reflection keeps vertex positions even: v1, en, vn, ...
            mirrored[i] = seq[(shift + size - i) % size];
        }
        images.push_back(std::move(turned));
        images.push_back(std::move(mirrored));
    }
    return images;
}

} // namespace detail

/// Tries all (2n+1)! orderings of 1..2n+1 along the path and keeps those
/// whose edge weights all agree. The canonical convention keeps an ordering
/// only if its first label is below its last.
inline CountReport count_path_bruteforce(int n, Convention convention,
                                         const BruteforceOptions &options = {})
{
    if (convention == Convention::dihedral)
        throw std::invalid_argument("paths are counted canonically or raw");
    if (n < 0 || n > kMaxEdges)
        throw std::out_of_range("path length out of range: " + std::to_string(n));
    if (n > kBruteforcePathLimit && !options.unsafe_limits)
        throw std::out_of_range("brute force is limited to n <= " +
                                std::to_string(kBruteforcePathLimit) + " without unsafe limits");
    const auto start = std::chrono::steady_clock::now();
    if (n == 0) {
        CountReport report = detail::collect_report(0, Graph::path, convention, {}, start);
        report.total = 1;
        return report;
    }

    const int elements = 2 * n + 1;
    const bool canonical = convention == Convention::canonical;
    // One block per label in the first position.
    const auto tally = parallel_histogram(
        static_cast<std::size_t>(elements), static_cast<std::size_t>(3 * elements), options.workers,
        [&] {
            return [&](std::size_t block, std::span<std::uint64_t> per_k) {
                auto x = detail::first_in_front(elements, static_cast<int>(block) + 1);
                do {
                    const int weight = x[0] + x[1] + x[2];
                    bool magic = true;
                    for (int i = 2; i + 2 < elements; i += 2)
                        if (x[i] + x[i + 1] + x[i + 2] != weight) {
                            magic = false;
                            break;
                        }
                    if (magic && (!canonical || x[0] < x[elements - 1]))
                        ++per_k[weight];
                } while (std::next_permutation(x.begin() + 1, x.end()));
            };
        },
        options.progress);
    return detail::collect_report(n, Graph::path, convention, tally, start);
}

/// Tries all (2n)! orderings of 1..2n around the cycle. The raw convention
/// counts every magic ordering; the dihedral one counts only the
/// lexicographically least member of each rotation/reflection class.
inline CountReport count_cycle_bruteforce(int n, Convention convention,
                                          const BruteforceOptions &options = {})
{
    if (convention == Convention::canonical)
        throw std::invalid_argument("cycles are counted raw or up to dihedral symmetry");
    if (n < kBruteforceCycleMin || n > kMaxEdges)
        throw std::out_of_range("cycle length out of range: " + std::to_string(n));
    if (n > kBruteforceCycleLimit && !options.unsafe_limits)
        throw std::out_of_range("cycle brute force is limited to n <= " +
                                std::to_string(kBruteforceCycleLimit) +
                                " without unsafe limits");
    const auto start = std::chrono::steady_clock::now();

    const int elements = 2 * n;
    const bool dihedral = convention == Convention::dihedral;
    const auto tally = parallel_histogram(
        static_cast<std::size_t>(elements), static_cast<std::size_t>(3 * elements), options.workers,
        [&] {
            return [&](std::size_t block, std::span<std::uint64_t> per_k) {
                auto x = detail::first_in_front(elements, static_cast<int>(block) + 1);
                do {
                    const int weight = x[0] + x[1] + x[2];
                    bool magic = true;
                    for (int i = 2; i < elements; i += 2)
                        if (x[i] + x[i + 1] + x[(i + 2) % elements] != weight) {
                            magic = false;
                            break;
                        }
                    if (!magic)
                        continue;
                    if (dihedral) {
                        const auto images = detail::dihedral_images(x);
                        if (std::ranges::min(images) != x)
                            continue;
                    }
                    ++per_k[weight];
                } while (std::next_permutation(x.begin() + 1, x.end()));
            };
        },
        options.progress);
    return detail::collect_report(n, Graph::cycle, convention, tally, start);
}

} // namespace magicpath

#endif
