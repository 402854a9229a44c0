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


#ifndef MAGICPATH_CYCLES_HPP
#define MAGICPATH_CYCLES_HPP

#include <bit>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "core.hpp"
#include "parallel.hpp"
#include "search.hpp"

namespace magicpath {

struct CycleOptions {
    Convention convention = Convention::raw;
    int workers = 1;
    ProgressFn progress;
};

namespace detail {

inline void require_cycle_length(int n)
{
    if (n < 3 || n > kMaxEdges)
        throw std::out_of_range("cycle length must lie in [3, " + std::to_string(kMaxEdges) +
                                "], got " + std::to_string(n));
}

inline void require_cycle_convention(Convention c)
{
    if (c == Convention::canonical)
        throw std::invalid_argument("cycles are counted raw or up to dihedral symmetry");
}

/// Same propagation as the path search; the closing edge back to v1 must
/// take the one label left over.
class CycleExtender {
public:
    CycleExtender(int elements, MagicConstant k, int first)
        : elements_(elements), k_(k), first_(first), all_(LabelSet::all(elements).mask())
    {
    }

    /// Completions after `vertex` with `steps` (edge, vertex) pairs still to
    /// place before the closing edge.
    std::uint64_t extend(std::int64_t vertex, std::uint64_t used, int steps) const
    {
        const std::uint64_t free = all_ & ~used;
        const std::int64_t rest = k_ - vertex;
        if (steps == 0)
            return std::uint64_t{std::countr_zero(free) == rest - first_};

        std::uint64_t candidates =
            free & label_range(std::max<std::int64_t>(1, rest - elements_),
                               std::min<std::int64_t>(elements_, rest - 1));
        std::uint64_t count = 0;
        while (candidates) {
            const int edge = std::countr_zero(candidates);
            candidates &= candidates - 1;
            const std::int64_t next = rest - edge;
            if (next == edge || !((free >> next) & 1u))
                continue;
            count += extend(next, used | (std::uint64_t{1} << edge) | (std::uint64_t{1} << next),
                            steps - 1);
        }
        return count;
    }

private:
    int elements_;
    MagicConstant k_;
    int first_;
    std::uint64_t all_;
};

inline std::vector<SearchTask> split_cycle_tasks(int n, MagicConstant k)
{
    const int elements = 2 * n;
    std::vector<SearchTask> tasks;
    for (int a = 1; a <= elements; ++a)
        for (int b = 1; b <= elements; ++b) {
            const SearchTask t{k, a, b};
            const auto c = t.forced();
            if (a != b && c >= 1 && c <= elements && c != a && c != b)
                tasks.push_back(t);
        }
    return tasks;
}

inline std::uint64_t count_cycle_task(int n, const SearchTask &t)
{
    const auto c = t.forced();
    const std::uint64_t used = LabelSet{}.with(t.a).with(t.b).with(static_cast<int>(c)).mask();
    return CycleExtender(2 * n, t.k, t.a).extend(c, used, n - 2);
}

} // namespace detail

/// Counts edge-magic total labelings of C_n over 1..2n by the same
/// propagating search as for paths, one task per (k, v1, e1).
inline CountReport count_cycle_fast(int n, const CycleOptions &options = {})
{
    detail::require_cycle_length(n);
    detail::require_cycle_convention(options.convention);
    const auto start = std::chrono::steady_clock::now();

    const KRange range = cycle_k_bounds(n);
    std::vector<SearchTask> tasks;
    for (MagicConstant k = range.k_min; k <= range.k_max; ++k) {
        auto more = detail::split_cycle_tasks(n, k);
        tasks.insert(tasks.end(), more.begin(), more.end());
    }
    const auto buckets = static_cast<std::size_t>(range.k_max - range.k_min + 1);
    const auto tally = parallel_tally<SearchTask>(
        tasks, buckets, options.workers,
        [&] { return [&](const SearchTask &t) { return detail::count_cycle_task(n, t); }; },
        [&](const SearchTask &t) { return static_cast<std::size_t>(t.k - range.k_min); },
        options.progress);

    CountReport report;
    report.n = n;
    report.graph = Graph::cycle;
    report.convention = options.convention;
    report.mode = Mode::fast;
    // Distinct labels leave no labeling fixed by a non-trivial rotation or
    // reflection, so every class has exactly 2n members.
    const std::uint64_t orbit = options.convention == Convention::dihedral ? 2u * n : 1u;
    for (std::size_t i = 0; i < buckets; ++i) {
        if (tally[i] == 0)
            continue;
        if (tally[i] % orbit != 0)
            throw std::logic_error("cycle count not divisible by the dihedral group order");
        report.per_k[range.k_min + static_cast<MagicConstant>(i)] = tally[i] / orbit;
    }
    report.seal();
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

/// Materializes raw cycle solutions v1, e1, ..., vn, en for small n.
inline std::vector<std::vector<int>> enumerate_cycle_solutions(int n, bool unsafe_limits = false)
{
    detail::require_cycle_length(n);
    if (n > 5 && !unsafe_limits)
        throw std::out_of_range("cycle solution listing is limited to n <= 5");
    const int elements = 2 * n;
    std::vector<std::vector<int>> out;
    std::vector<int> seq;
    const auto walk = [&](auto &&self, MagicConstant k, LabelSet used) -> void {
        if (static_cast<int>(seq.size()) == elements - 1) {
            const auto closing = k - seq.back() - seq.front();
            if (closing >= 1 && closing <= elements && !used.contains(static_cast<int>(closing))) {
                seq.push_back(static_cast<int>(closing));
                out.push_back(seq);
                seq.pop_back();
            }
            return;
        }
        const int vertex = seq.back();
        for (int edge = 1; edge <= elements; ++edge) {
            const auto next = k - vertex - edge;
            if (used.contains(edge) || next < 1 || next > elements || next == edge ||
                used.contains(static_cast<int>(next)))
                continue;
            seq.push_back(edge);
            seq.push_back(static_cast<int>(next));
            self(self, k, used.with(edge).with(static_cast<int>(next)));
            seq.resize(seq.size() - 2);
        }
    };
    const KRange range = cycle_k_bounds(n);
    for (MagicConstant k = range.k_min; k <= range.k_max; ++k)
        for (int a = 1; a <= elements; ++a) {
            seq.assign(1, a);
            walk(walk, k, LabelSet{}.with(a));
        }
    return out;
}

/// Path and cycle counts at the same edge count n.
struct PathCycleBound {
    int n = 0;
    std::uint64_t path_raw = 0;
    std::uint64_t cycle_raw = 0;
    std::uint64_t path_canonical = 0;
    std::uint64_t cycle_dihedral = 0;

    /// Raw against raw.
    [[nodiscard]] bool holds() const noexcept { return path_raw >= cycle_raw; }
    [[nodiscard]] bool strict() const noexcept { return path_raw > cycle_raw; }
    /// Canonical paths against dihedral classes of cycles.
    [[nodiscard]] bool holds_reduced() const noexcept { return path_canonical >= cycle_dihedral; }
    [[nodiscard]] bool strict_reduced() const noexcept { return path_canonical > cycle_dihedral; }
};

inline PathCycleBound check_path_cycle_bound(int n, int workers = 1)
{
    detail::require_cycle_length(n);
    PathCycleBound bound;
    bound.n = n;
    bound.path_raw = count_path_fast(n, {.convention = Convention::raw, .workers = workers}).total;
    bound.path_canonical =
        count_path_fast(n, {.convention = Convention::canonical, .workers = workers}).total;
    const auto cycle = count_cycle_fast(n, {.convention = Convention::raw, .workers = workers});
    bound.cycle_raw = cycle.total;
    bound.cycle_dihedral = cycle.total / (2u * n);
    return bound;
}

} // namespace magicpath

#endif
