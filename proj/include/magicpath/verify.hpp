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


#ifndef MAGICPATH_VERIFY_HPP
#define MAGICPATH_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <set>

#include "core.hpp"

namespace magicpath {

/// Where two reports first disagree. k is empty when every per-constant
/// count matches but the totals differ.
struct Divergence {
    std::optional<MagicConstant> k;
    std::uint64_t left = 0;
    std::uint64_t right = 0;
};

inline std::optional<Divergence> first_divergence(const CountReport &left,
                                                  const CountReport &right)
{
    std::set<MagicConstant> keys;
    for (const auto &[k, count] : left.per_k)
        keys.insert(k);
    for (const auto &[k, count] : right.per_k)
        keys.insert(k);
    for (MagicConstant k : keys) {
        const auto l = left.per_k.find(k);
        const auto r = right.per_k.find(k);
        const std::uint64_t lc = l == left.per_k.end() ? 0 : l->second;
        const std::uint64_t rc = r == right.per_k.end() ? 0 : r->second;
        if (lc != rc)
            return Divergence{k, lc, rc};
    }
    if (left.total != right.total)
        return Divergence{std::nullopt, left.total, right.total};
    return std::nullopt;
}

} // namespace magicpath

#endif
