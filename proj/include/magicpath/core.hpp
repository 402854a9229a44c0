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

#ifndef MAGICPATH_CORE_HPP
#define MAGICPATH_CORE_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace magicpath {

/// Largest supported edge count. Labels 1..2n+1 must fit in a 64-bit mask.
inline constexpr int kMaxEdges = 31;

/// Common edge weight of an edge-magic total labeling.
using MagicConstant = std::int64_t;

/// A path P_n: n edges, n+1 vertices, 2n+1 labelled elements.
class PathInstance {
public:
    explicit PathInstance(int n) : n_(n)
    {
        if (n < 0 || n > kMaxEdges)
            throw std::out_of_range("path length must lie in [0, " + std::to_string(kMaxEdges) +
                                    "], got " + std::to_string(n));
    }

    [[nodiscard]] int edges() const noexcept { return n_; }
    [[nodiscard]] int element_count() const noexcept { return 2 * n_ + 1; }

    friend bool operator==(const PathInstance &, const PathInstance &) = default;

private:
    int n_;
};

/// Labels of a path in interleaved order v1, e1, v2, e2, ..., v_{n+1}.
/// Even positions hold vertices, odd positions hold edges.
class Labeling {
public:
    explicit Labeling(std::vector<int> labels) : labels_(std::move(labels))
    {
        const auto size = labels_.size();
        if (size % 2 == 0)
            throw std::invalid_argument("a path labeling has an odd number of elements");
        if (size > static_cast<std::size_t>(2 * kMaxEdges + 1))
            throw std::invalid_argument("labeling exceeds the supported path length");
        std::vector<bool> seen(size + 1, false);
        for (int label : labels_) {
            if (label < 1 || static_cast<std::size_t>(label) > size || seen[label])
                throw std::invalid_argument("labels must be a permutation of 1.." +
                                            std::to_string(size));
            seen[label] = true;
        }
    }

    [[nodiscard]] int edges() const noexcept { return static_cast<int>(labels_.size() / 2); }
    [[nodiscard]] std::span<const int> labels() const noexcept { return labels_; }
    [[nodiscard]] int operator[](std::size_t i) const { return labels_[i]; }
    [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }

    friend bool operator==(const Labeling &, const Labeling &) = default;

private:
    std::vector<int> labels_;
};

/// Result of a magic check. An absent constant means the labeling has no
/// edges and is magic vacuously.
struct MagicWeight {
    std::optional<MagicConstant> k;

    [[nodiscard]] bool vacuous() const noexcept { return !k.has_value(); }
    friend bool operator==(const MagicWeight &, const MagicWeight &) = default;
};

inline std::vector<MagicConstant> edge_weights(const Labeling &l)
{
    std::vector<MagicConstant> weights;
    weights.reserve(l.edges());
    for (std::size_t i = 0; i + 2 < l.size(); i += 2)
        weights.push_back(MagicConstant{l[i]} + l[i + 1] + l[i + 2]);
    return weights;
}

inline std::optional<MagicWeight> is_magic(const Labeling &l)
{
    const auto weights = edge_weights(l);
    if (weights.empty())
        return MagicWeight{};
    if (std::ranges::any_of(weights, [&](MagicConstant w) { return w != weights.front(); }))
        return std::nullopt;
    return MagicWeight{weights.front()};
}

inline Labeling reverse(const Labeling &l)
{
    std::vector<int> out(l.labels().rbegin(), l.labels().rend());
    return Labeling{std::move(out)};
}

/// First vertex label below the last one. Exactly one of l and reverse(l)
/// qualifies when n >= 1.
inline bool is_canonical(const Labeling &l)
{
    if (l.edges() == 0)
        throw std::invalid_argument("canonical orientation is undefined for a single vertex");
    return l[0] < l[l.size() - 1];
}

/// Maps every label x to (2n+2) - x. A magic constant k becomes (6n+6) - k.
inline Labeling complement(const Labeling &l)
{
    const int top = static_cast<int>(l.size()) + 1;
    std::vector<int> out;
    out.reserve(l.size());
    for (int label : l.labels())
        out.push_back(top - label);
    return Labeling{std::move(out)};
}

enum class Convention { canonical, raw, dihedral };
enum class Mode { bruteforce, fast };
enum class Graph { path, cycle };

inline constexpr std::string_view to_string(Convention c) noexcept
{
    switch (c) {
    case Convention::canonical: return "canonical";
    case Convention::raw: return "raw";
    case Convention::dihedral: return "dihedral";
    }
    return "?";
}

inline constexpr std::string_view to_string(Mode m) noexcept
{
    return m == Mode::fast ? "fast" : "bruteforce";
}

inline constexpr std::string_view to_string(Graph g) noexcept
{
    return g == Graph::path ? "path" : "cycle";
}

/// Counts of labelings grouped by magic constant.
struct CountReport {
    int n = 0;
    Graph graph = Graph::path;
    Convention convention = Convention::canonical;
    Mode mode = Mode::fast;
    std::map<MagicConstant, std::uint64_t> per_k;
    std::uint64_t total = 0;
    std::chrono::nanoseconds elapsed{0};

    /// Recomputes total from per_k.
    void seal()
    {
        total = 0;
        for (const auto &[k, count] : per_k)
            total += count;
    }
};

} // namespace magicpath

#endif
