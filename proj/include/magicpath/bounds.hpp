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


#ifndef MAGICPATH_BOUNDS_HPP
#define MAGICPATH_BOUNDS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "core.hpp"

namespace magicpath {

/// Inclusive interval of candidate magic constants.
struct KRange {
    MagicConstant k_min = 0;
    MagicConstant k_max = -1;

    [[nodiscard]] bool contains(MagicConstant k) const noexcept { return k_min <= k && k <= k_max; }
    [[nodiscard]] bool empty() const noexcept { return k_max < k_min; }
    friend bool operator==(const KRange &, const KRange &) = default;
};

/// 1 + 2 + ... + r.
constexpr std::int64_t triangular(std::int64_t r)
{
    if (r < 0)
        throw std::invalid_argument("triangular is defined for r >= 0");
    return r * (r + 1) / 2;
}

namespace detail {

// Both helpers assume a positive divisor.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    return a >= 0 ? a / b : -((-a + b - 1) / b);
}

constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

} // namespace detail

/// Feasible magic constants for P_n.
///
/// Summing the n edge weights counts every label once and each of the n-1
/// interior vertices a second time, so n*k = f(2n+1) + (interior sum). The
/// interior sum lies between f(n-1) (smallest labels) and
/// f(2n+1) - f(n+2) (largest labels). The rational ends are rounded inward.
constexpr KRange k_bounds(int n)
{
    if (n < 1)
        throw std::invalid_argument("k_bounds requires n >= 1");
    const std::int64_t elements = triangular(2 * std::int64_t{n} + 1);
    return {detail::ceil_div(elements + triangular(n - 1), n),
            detail::floor_div(2 * elements - triangular(n + 2), n)};
}

/// Feasible magic constants for C_n, where every one of the n vertices has
/// degree two: n*k = f(2n) + (vertex sum).
constexpr KRange cycle_k_bounds(int n)
{
    if (n < 3)
        throw std::invalid_argument("cycle_k_bounds requires n >= 3");
    const std::int64_t elements = triangular(2 * std::int64_t{n});
    return {detail::ceil_div(elements + triangular(n), n),
            detail::floor_div(2 * elements - triangular(n), n)};
}

} // namespace magicpath

#endif
