#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "uccone/core.hpp"

namespace uccone {

/// A multiset of nonempty parts of `ground` covering every element exactly k times.
/// Parts are kept sorted canonically so equal multisets compare equal.
struct UniformCover {
    SubsetMask ground;
    std::vector<SubsetMask> parts;
    int k = 1;

    /// Sorts parts and validates the exact-k coverage invariant.
    static UniformCover make(SubsetMask ground, std::vector<SubsetMask> parts, int k);

    /// The cover {ground} with k = 1; its inequality is a tautology.
    bool trivial() const { return k == 1 && parts.size() == 1 && parts.front() == ground; }

    std::string to_string() const;

    friend bool operator==(const UniformCover&, const UniformCover&) = default;
};

/// Ordering used for every list of covers: k, then number of parts, then parts lexicographically.
bool cover_less(const UniformCover& a, const UniformCover& b);

/// True when every element of `ground` lies in exactly k of `parts` and all parts are nonempty subsets of it.
bool is_uniform_cover(SubsetMask ground, const std::vector<SubsetMask>& parts, int k);

struct EnumerationLimits {
    std::size_t max_covers = 2'000'000;
};

/// All k-uniform covers of `ground` for 1 <= k <= k_max, duplicate-free, sorted by cover_less.
std::vector<UniformCover> enumerate_covers(SubsetMask ground, int k_max, const EnumerationLimits& limits = {});

/// Splits `cover` into two uniform covers of the same ground whose parts partition it, if possible.
/// The first member of the pair has the smaller multiplicity.
std::optional<std::pair<UniformCover, UniformCover>> decompose(const UniformCover& cover);

/// The irreducible covers among enumerate_covers(ground, k_max), trivial cover included.
std::vector<UniformCover> irreducible_covers(SubsetMask ground, int k_max, const EnumerationLimits& limits = {});

}  // namespace uccone
