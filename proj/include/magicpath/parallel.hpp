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


#ifndef MAGICPATH_PARALLEL_HPP
#define MAGICPATH_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <span>
#include <thread>
#include <vector>

namespace magicpath {

/// Receives (completed, total) task counts.
using ProgressFn = std::function<void(std::size_t, std::size_t)>;

inline int default_workers() noexcept
{
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

namespace detail {

/// Forwards progress at most once per interval, from whichever worker
/// notices first.
class ProgressThrottle {
public:
    ProgressThrottle(ProgressFn sink, std::size_t total,
                     std::chrono::milliseconds interval = std::chrono::seconds(1))
        : sink_(std::move(sink)), total_(total), interval_(interval),
          last_(std::chrono::steady_clock::now())
    {
    }

    void completed_one()
    {
        const auto done = done_.fetch_add(1, std::memory_order_relaxed) + 1;
        if (!sink_)
            return;
        std::unique_lock lock(mutex_, std::try_to_lock);
        if (!lock.owns_lock())
            return;
        const auto now = std::chrono::steady_clock::now();
        if (now - last_ < interval_)
            return;
        last_ = now;
        sink_(done, total_);
    }

private:
    ProgressFn sink_;
    std::size_t total_;
    std::chrono::milliseconds interval_;
    std::chrono::steady_clock::time_point last_;
    std::atomic<std::size_t> done_{0};
    std::mutex mutex_;
};

} // namespace detail

/// Runs visit(i, buckets) for every task index i < tasks on `workers`
/// threads. make_visitor() is called once per worker, so a visitor may keep
/// private scratch state. Each worker adds into its own buckets and the
/// buckets are summed at the end, so the outcome does not depend on
/// scheduling.
template <class MakeVisitor>
std::vector<std::uint64_t> parallel_histogram(std::size_t tasks, std::size_t buckets, int workers,
                                              MakeVisitor make_visitor, ProgressFn progress = {})
{
    workers = std::clamp(workers, 1, static_cast<int>(std::max<std::size_t>(1, tasks)));
    detail::ProgressThrottle throttle(std::move(progress), tasks);
    std::atomic<std::size_t> next{0};
    std::vector<std::vector<std::uint64_t>> partial(workers,
                                                    std::vector<std::uint64_t>(buckets, 0));

    auto work = [&](std::vector<std::uint64_t> &mine) {
        auto visit = make_visitor();
        for (std::size_t i = next.fetch_add(1, std::memory_order_relaxed); i < tasks;
             i = next.fetch_add(1, std::memory_order_relaxed)) {
            visit(i, std::span<std::uint64_t>(mine));
            throttle.completed_one();
        }
    };

    if (workers == 1) {
        work(partial[0]);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] { work(partial[w]); });
    }

    std::vector<std::uint64_t> sum(buckets, 0);
    for (const auto &mine : partial)
        for (std::size_t b = 0; b < buckets; ++b)
            sum[b] += mine[b];
    return sum;
}

/// Counts every task with a per-worker counter and sums the counts into the
/// bucket chosen by bucket(task).
template <class Task, class MakeCounter, class BucketFn>
std::vector<std::uint64_t> parallel_tally(std::span<const Task> tasks, std::size_t buckets,
                                          int workers, MakeCounter make_counter, BucketFn bucket,
                                          ProgressFn progress = {})
{
    return parallel_histogram(
        tasks.size(), buckets, workers,
        [&] {
            return [&, count = make_counter()](std::size_t i,
                                               std::span<std::uint64_t> out) mutable {
                out[bucket(tasks[i])] += count(tasks[i]);
            };
        },
        std::move(progress));
}

} // namespace magicpath

#endif
