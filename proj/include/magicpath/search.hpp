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


#ifndef MAGICPATH_SEARCH_HPP
#define MAGICPATH_SEARCH_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "core.hpp"
#include "parallel.hpp"

namespace magicpath {

/// Used labels as a bit set; bit i stands for label i.
class LabelSet {
public:
    constexpr LabelSet() = default;
    constexpr explicit LabelSet(std::uint64_t mask) : mask_(mask) {}

    /// Every label in 1..count.
    static constexpr LabelSet all(int count)
    {
        return LabelSet{count >= 63 ? ~std::uint64_t{1} : ((std::uint64_t{1} << (count + 1)) - 2)};
    }

    [[nodiscard]] constexpr bool contains(int label) const noexcept
    {
        return (mask_ >> label) & 1u;
    }
    [[nodiscard]] constexpr LabelSet with(int label) const noexcept
    {
        return LabelSet{mask_ | (std::uint64_t{1} << label)};
    }
    [[nodiscard]] constexpr int size() const noexcept { return std::popcount(mask_); }
    [[nodiscard]] constexpr std::uint64_t mask() const noexcept { return mask_; }

    friend constexpr bool operator==(LabelSet, LabelSet) = default;

private:
    std::uint64_t mask_ = 0;
};

/// Independent unit of work: the magic constant plus the labels of v1 and
/// e1. The label of v2 follows as k - a - b.
struct SearchTask {
    MagicConstant k = 0;
    int a = 0;
    int b = 0;

    [[nodiscard]] constexpr MagicConstant forced() const noexcept { return k - a - b; }
    friend constexpr bool operator==(const SearchTask &, const SearchTask &) = default;
};

struct SearchOptions {
    Convention convention = Convention::canonical;
    int workers = 1;
    bool complement_halving = false;
    ProgressFn progress;
    /// Edges left at which subproblems are memoized; 0 disables memoization
    /// and a negative value picks a depth from n.
    int memo_steps = -1;
    /// Per-worker memo size as a power of two slot count; 0 picks one from n.
    std::size_t memo_log2 = 0;
};

namespace detail {

inline void require_path_convention(Convention c)
{
    if (c == Convention::dihedral)
        throw std::invalid_argument("paths are counted canonically or raw");
}

/// Bits lo..hi inclusive, for 1 <= lo and hi <= 63.
constexpr std::uint64_t label_range(std::int64_t lo, std::int64_t hi) noexcept
{
    if (lo > hi)
        return 0;
    const std::uint64_t upto_hi = hi >= 63 ? ~std::uint64_t{0} : (std::uint64_t{2} << hi) - 1;
    return upto_hi & ~((std::uint64_t{1} << lo) - 1);
}

/// Sum of the `count` smallest labels in `mask`.
constexpr std::int64_t smallest_sum(std::uint64_t mask, int count) noexcept
{
    std::int64_t sum = 0;
    for (; count > 0; --count) {
        sum += std::countr_zero(mask);
        mask &= mask - 1;
    }
    return sum;
}

/// Sum of the `count` largest labels in `mask`.
constexpr std::int64_t largest_sum(std::uint64_t mask, int count) noexcept
{
    std::int64_t sum = 0;
    for (; count > 0; --count) {
        const int top = 63 - std::countl_zero(mask);
        sum += top;
        mask &= ~(std::uint64_t{1} << top);
    }
    return sum;
}

/// Largest memoized subproblem, in edges still to place.
inline constexpr int kMaxMemoSteps = 10;

/// Completion counts of a subproblem, indexed by the rank of the final
/// vertex label among the free labels (ascending). Each step picks one of
/// at most 2 * steps free edges, so 32 bits cannot overflow.
using EndpointHistogram = std::array<std::uint32_t, 2 * kMaxMemoSteps>;

/// Fixed-capacity open-addressing table from (used labels, current vertex)
/// to an endpoint histogram, valid for one magic constant at a time. Once
/// the table is half full new entries are dropped, which only costs time.
class MemoTable {
public:
    explicit MemoTable(std::size_t capacity_log2 = 10)
        : slots_(std::size_t{1} << capacity_log2), limit_(slots_.size() / 2)
    {
    }

    void reset(MagicConstant k)
    {
        if (k == k_)
            return;
        k_ = k;
        if (filled_ != 0)
            std::ranges::fill(slots_, Slot{});
        filled_ = 0;
    }

    [[nodiscard]] const EndpointHistogram *find(std::uint64_t used, int vertex) const noexcept
    {
        for (std::size_t i = index(used, vertex);; i = (i + 1) & (slots_.size() - 1)) {
            const Slot &slot = slots_[i];
            if (slot.vertex == 0)
                return nullptr;
            if (slot.used == used && slot.vertex == vertex)
                return &slot.counts;
        }
    }

    void insert(std::uint64_t used, int vertex, const EndpointHistogram &counts) noexcept
    {
        if (filled_ >= limit_)
            return;
        std::size_t i = index(used, vertex);
        while (slots_[i].vertex != 0)
            i = (i + 1) & (slots_.size() - 1);
        slots_[i] = Slot{used, static_cast<std::uint8_t>(vertex), counts};
        ++filled_;
    }

private:
    struct Slot {
        std::uint64_t used = 0;
        std::uint8_t vertex = 0; // 0 marks an empty slot; labels start at 1
        EndpointHistogram counts{};
    };

    [[nodiscard]] std::size_t index(std::uint64_t used, int vertex) const noexcept
    {
        std::uint64_t h = (used ^ (std::uint64_t(vertex) << 58)) * 0x9E3779B97F4A7C15ull;
        h ^= h >> 29;
        return static_cast<std::size_t>(h) & (slots_.size() - 1);
    }

    std::vector<Slot> slots_;
    std::size_t limit_;
    std::size_t filled_ = 0;
    MagicConstant k_ = std::numeric_limits<MagicConstant>::min();
};

/// Backtracking over the remaining edges of a path. The vertex after every
/// edge is forced by k, so each level only branches on the edge label.
///
/// Subproblems with exactly memo_steps edges left recur across tasks that
/// share k, so they are solved once into an endpoint histogram. Keeping the
/// final vertex lets the orientation filter still judge every completion.
template <bool Canonical>
class PathExtender {
public:
    PathExtender(int elements, MagicConstant k, int first, int memo_steps, MemoTable &memo)
        : elements_(elements), k_(k), first_(first), memo_steps_(memo_steps),
          all_(LabelSet::all(elements).mask()), memo_(memo)
    {
        memo_.reset(k);
    }

    /// Completions after `vertex` with `steps` edges still to place. The
    /// free labels number exactly 2 * steps and sum to `free_sum`.
    std::uint64_t extend(std::int64_t vertex, std::uint64_t used, std::int64_t free_sum,
                         int steps) const
    {
        const std::uint64_t free = all_ & ~used;
        if (steps == memo_steps_) {
            const EndpointHistogram counts = solve(static_cast<int>(vertex), used, free_sum, steps);
            // Final vertices above the first label occupy the upper ranks.
            const int skip =
                Canonical ? std::popcount(free & ((std::uint64_t{1} << first_) - 1)) : 0;
            std::uint64_t total = 0;
            for (int i = skip; i < 2 * steps; ++i)
                total += counts[i];
            return total;
        }

        const std::int64_t rest = k_ - vertex;
        if (steps == 1) {
            // Two labels remain; they must fill (edge, last vertex) in some order.
            const int x = std::countr_zero(free);
            const int y = std::countr_zero(free & (free - 1));
            if (x + y != rest)
                return 0;
            if constexpr (Canonical)
                return std::uint64_t{x > first_} + std::uint64_t{y > first_};
            else
                return 2;
        }
        if (!feasible(vertex, free, free_sum, steps))
            return 0;

        std::uint64_t candidates = free & edge_candidates(rest);
        std::uint64_t count = 0;
        while (candidates) {
            const int edge = std::countr_zero(candidates);
            candidates &= candidates - 1;
            const std::int64_t next = rest - edge;
            if (next == edge || !((free >> next) & 1u))
                continue;
            count += extend(next, used | (std::uint64_t{1} << edge) | (std::uint64_t{1} << next),
                            free_sum - rest, steps - 1);
        }
        return count;
    }

private:
    [[nodiscard]] std::uint64_t edge_candidates(std::int64_t rest) const noexcept
    {
        return label_range(std::max<std::int64_t>(1, rest - elements_),
                           std::min<std::int64_t>(elements_, rest - 1));
    }

    /// Summing the remaining edge weights, the steps - 1 interior vertices
    /// still to come must add up to exactly steps * k - free_sum - vertex.
    [[nodiscard]] bool feasible(std::int64_t vertex, std::uint64_t free, std::int64_t free_sum,
                                int steps) const noexcept
    {
        const std::int64_t interior = steps * k_ - free_sum - vertex;
        return interior >= smallest_sum(free, steps - 1) &&
               interior <= largest_sum(free, steps - 1);
    }

    EndpointHistogram solve(int vertex, std::uint64_t used, std::int64_t free_sum, int steps) const
    {
        if (const auto *hit = memo_.find(used, vertex))
            return *hit;
        EndpointHistogram counts{};
        const std::uint64_t free = all_ & ~used;
        collect(vertex, used, free_sum, steps, free, counts);
        memo_.insert(used, vertex, counts);
        return counts;
    }

    void collect(std::int64_t vertex, std::uint64_t used, std::int64_t free_sum, int steps,
                 std::uint64_t base, EndpointHistogram &counts) const
    {
        const std::uint64_t free = all_ & ~used;
        const std::int64_t rest = k_ - vertex;
        if (steps == 1) {
            const int x = std::countr_zero(free);
            const int y = std::countr_zero(free & (free - 1));
            if (x + y == rest) {
                ++counts[std::popcount(base & ((std::uint64_t{1} << x) - 1))];
                ++counts[std::popcount(base & ((std::uint64_t{1} << y) - 1))];
            }
            return;
        }
        if (!feasible(vertex, free, free_sum, steps))
            return;
        std::uint64_t candidates = free & edge_candidates(rest);
        while (candidates) {
            const int edge = std::countr_zero(candidates);
            candidates &= candidates - 1;
            const std::int64_t next = rest - edge;
            if (next == edge || !((free >> next) & 1u))
                continue;
            collect(next, used | (std::uint64_t{1} << edge) | (std::uint64_t{1} << next),
                    free_sum - rest, steps - 1, base, counts);
        }
    }

    int elements_;
    MagicConstant k_;
    int first_;
    int memo_steps_;
    std::uint64_t all_;
    MemoTable &memo_;
};

inline void require_fast_path_length(int n)
{
    if (n < 0 || n > kMaxEdges)
        throw std::out_of_range("path length must lie in [0, " + std::to_string(kMaxEdges) +
                                "], got " + std::to_string(n));
}

} // namespace detail

/// Every (k, a, b) whose forced third label is valid and distinct.
inline std::vector<SearchTask> split_tasks(int n, MagicConstant k)
{
    const int elements = PathInstance{n}.element_count();
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

namespace detail {

/// Memo depth used when the caller does not choose one. Measured on P_10 and P_11: memoizing three edges below the first triple
/// roughly halves the run time, deeper levels recur too rarely to pay for
/// the table lookups. Small paths are faster without a table.
constexpr int default_memo_steps(int n) noexcept
{
    return n < 7 ? 0 : std::min(n - 3, kMaxMemoSteps);
}

/// Table size for the automatic setting: about 100 MB per worker at most.
constexpr std::size_t default_memo_log2(int n) noexcept
{
    return static_cast<std::size_t>(std::clamp(n + 9, 1, 20));
}

inline std::uint64_t count_task_with(int n, const SearchTask &t, Convention convention,
                                     int memo_steps, MemoTable &memo)
{
    require_path_convention(convention);
    if (n < 1 || n > kMaxEdges)
        return 0;
    const int elements = 2 * n + 1;
    const auto c = t.forced();
    const auto valid = [&](std::int64_t label) { return label >= 1 && label <= elements; };
    if (!valid(t.a) || !valid(t.b) || !valid(c) || t.a == t.b || c == t.a || c == t.b)
        return 0;
    const bool canonical = convention == Convention::canonical;
    if (n == 1)
        return canonical ? std::uint64_t{t.a < c} : 1;

    const std::uint64_t used = LabelSet{}.with(t.a).with(t.b).with(static_cast<int>(c)).mask();
    const std::int64_t free_sum = triangular(elements) - t.k;
    if (memo_steps < 2 || memo_steps > std::min(n - 1, kMaxMemoSteps))
        memo_steps = 0;
    if (canonical)
        return PathExtender<true>(elements, t.k, t.a, memo_steps, memo)
            .extend(c, used, free_sum, n - 1);
    return PathExtender<false>(elements, t.k, t.a, memo_steps, memo)
        .extend(c, used, free_sum, n - 1);
}

} // namespace detail

/// Number of magic labelings of P_n that start with the task's triple.
inline std::uint64_t count_for_task(int n, const SearchTask &t, Convention convention)
{
    detail::MemoTable memo;
    return detail::count_task_with(n, t, convention, 0, memo);
}

inline std::uint64_t count_for_k(int n, MagicConstant k, Convention convention)
{
    detail::require_path_convention(convention);
    if (!k_bounds(n).contains(k))
        throw std::out_of_range("magic constant " + std::to_string(k) +
                                " lies outside the feasible range for n = " + std::to_string(n));
    detail::MemoTable memo(detail::default_memo_log2(n));
    const int memo_steps = detail::default_memo_steps(n);
    std::uint64_t total = 0;
    for (const auto &t : split_tasks(n, k))
        total += detail::count_task_with(n, t, convention, memo_steps, memo);
    return total;
}

/// Counts every edge-magic total labeling of P_n by constraint-propagating
/// backtracking over each feasible magic constant.
inline CountReport count_path_fast(int n, const SearchOptions &options = {})
{
    detail::require_path_convention(options.convention);
    detail::require_fast_path_length(n);
    const auto start = std::chrono::steady_clock::now();

    CountReport report;
    report.n = n;
    report.graph = Graph::path;
    report.convention = options.convention;
    report.mode = Mode::fast;
    if (n == 0) {
        report.total = 1;
        report.elapsed = std::chrono::steady_clock::now() - start;
        return report;
    }

    const KRange range = k_bounds(n);
    const MagicConstant middle = 3 * MagicConstant{n} + 3;
    const MagicConstant last = options.complement_halving ? middle : range.k_max;

    std::vector<SearchTask> tasks;
    for (MagicConstant k = range.k_min; k <= last; ++k) {
        auto more = split_tasks(n, k);
        tasks.insert(tasks.end(), more.begin(), more.end());
    }

    const auto buckets = static_cast<std::size_t>(range.k_max - range.k_min + 1);
    const int memo_steps =
        options.memo_steps < 0 ? detail::default_memo_steps(n) : options.memo_steps;
    const std::size_t memo_log2 = memo_steps == 0          ? 1
                                  : options.memo_log2 == 0 ? detail::default_memo_log2(n)
                                                           : options.memo_log2;
    const auto tally = parallel_tally<SearchTask>(
        tasks, buckets, options.workers,
        [&] {
            return [&, memo = std::make_shared<detail::MemoTable>(memo_log2)](
                       const SearchTask &t) {
                return detail::count_task_with(n, t, options.convention, memo_steps, *memo);
            };
        },
        [&](const SearchTask &t) { return static_cast<std::size_t>(t.k - range.k_min); },
        options.progress);

    for (std::size_t i = 0; i < buckets; ++i) {
        const MagicConstant k = range.k_min + static_cast<MagicConstant>(i);
        if (k > last || tally[i] == 0)
            continue;
        report.per_k[k] += tally[i];
        if (options.complement_halving && k < middle)
            report.per_k[6 * MagicConstant{n} + 6 - k] += tally[i];
    }
    report.seal();
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

/// Materializes solutions for small paths, for debugging and spot checks.
inline std::vector<Labeling> enumerate_path_solutions(int n, Convention convention,
                                                      bool unsafe_limits = false)
{
    detail::require_path_convention(convention);
    if (n < 0 || (n > 4 && !unsafe_limits))
        throw std::out_of_range("solution listing is limited to n <= 4");
    if (n == 0)
        return {Labeling{{1}}};

    const int elements = 2 * n + 1;
    std::vector<Labeling> out;
    std::vector<int> seq;
    const auto walk = [&](auto &&self, MagicConstant k, LabelSet used) -> void {
        if (static_cast<int>(seq.size()) == elements) {
            if (convention == Convention::raw || seq.front() < seq.back())
                out.emplace_back(seq);
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
    const KRange range = k_bounds(n);
    for (MagicConstant k = range.k_min; k <= range.k_max; ++k)
        for (int a = 1; a <= elements; ++a) {
            seq.assign(1, a);
            walk(walk, k, LabelSet{}.with(a));
        }
    return out;
}

} // namespace magicpath

#endif
