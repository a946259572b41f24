#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "wreath/params.hpp"
#include "wreath/perm.hpp"

namespace wreath {

// Subsets of {1..n} are bitmasks: element e <-> bit e-1.
using SubsetMask = std::uint32_t;

SubsetMask mask_from_elements(const std::vector<int>& elems);
std::vector<int> elements_from_mask(SubsetMask mask);

// Canonical form: the n/g blocks sorted ascending by mask value. Equality of
// wreaths is equality of canonical encodings; enumeration order is
// lexicographic on the block sequence.
struct Wreath {
    std::vector<SubsetMask> blocks;

    auto operator<=>(const Wreath&) const = default;
    int size() const { return static_cast<int>(blocks.size()); }
    bool contains_block(SubsetMask m) const;
};

struct WreathHash {
    std::size_t operator()(const Wreath& w) const;
};

Wreath canonicalize(std::vector<SubsetMask> blocks);

// The wreath of a permutation: consecutive length-k windows of the circular
// arrangement pi(1),...,pi(n), iterated until the first window repeats.
Wreath wreath_of_perm(const WreathParams& params, const Perm& pi);

// Elementwise action of sigma; satisfies
// apply_perm(s, wreath_of_perm(p)) == wreath_of_perm(s.compose(p)).
Wreath apply_perm(const Perm& sigma, const Wreath& w);

// Replace every block by its complement in {1..n}; an involutive bijection
// onto the (n, n-k)-wreaths.
Wreath complement_wreath(const WreathParams& params, const Wreath& w);

// Every element of {1..n} lies in exactly k/g blocks.
bool has_uniform_coverage(const WreathParams& params, const Wreath& w);

bool wreaths_intersect(const Wreath& a, const Wreath& b);

}  // namespace wreath
