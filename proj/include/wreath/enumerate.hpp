#pragma once

#include <vector>

#include "wreath/numeric.hpp"
#include "wreath/params.hpp"
#include "wreath/wreath.hpp"

namespace wreath {

// Orbit-stabiliser closed forms.
Int stabilizer_order(const WreathParams& params);
// |W_{n,k}| = g(n-1)!/(2(g!)^{n/g}) for k not dividing n,
//             n!/((k!)^{n/k}(n/k)!) otherwise.
Int wreath_count(const WreathParams& params);
// Number of wreaths containing a fixed k-subset.
Int containing_count(const WreathParams& params);

// All distinct wreaths in canonical (lexicographic) order, by deduplicated
// permutation enumeration. jobs > 1 partitions on the first position; the
// final sort keeps the result deterministic.
std::vector<Wreath> enumerate_wreaths(const WreathParams& params,
                                      const Caps& caps, int jobs = 1);

// Distinct-wreath count by enumeration. When gcd(n,k) = 1 every wreath has a
// representative with 1 in the first position, so only (n-1)! permutations
// are scanned.
Int count_wreaths_enumerated(const WreathParams& params, const Caps& caps,
                             int jobs = 1);

// All wreaths having the given k-subset as a block, canonical order. Scans
// only the k!(n-k)! permutations placing the subset in the first window.
std::vector<Wreath> wreaths_containing(const WreathParams& params,
                                       SubsetMask subset, const Caps& caps);

// Ascending list of all k-subset masks of {1..n}.
std::vector<SubsetMask> all_k_subsets(int n, int k);

// Index of a canonical wreath in a sorted enumeration, or -1.
long wreath_index(const std::vector<Wreath>& sorted, const Wreath& w);

}  // namespace wreath
