#include "wreath/wreath.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "wreath/errors.hpp"

namespace wreath {

WreathParams WreathParams::create(int n, int k) {
    if (n < 2 || n > kMaxGroundSet)
        throw HypothesisViolated("n must lie in [2, 32], got " +
                                 std::to_string(n));
    if (k < 1 || k >= n)
        throw HypothesisViolated("k must satisfy 1 <= k < n, got k=" +
                                 std::to_string(k));
    WreathParams p;
    p.n = n;
    p.k = k;
    p.g = std::gcd(n, k);
    p.wreath_len = n / p.g;
    p.k_divides_n = (n % k == 0);
    p.target_count = divexact(Int(p.g) * binomial(n, k), Int(n));
    return p;
}

SubsetMask mask_from_elements(const std::vector<int>& elems) {
    SubsetMask m = 0;
    for (int e : elems) {
        if (e < 1 || e > kMaxGroundSet)
            throw IndexOutOfRange("element out of range: " + std::to_string(e));
        m |= SubsetMask{1} << (e - 1);
    }
    return m;
}

std::vector<int> elements_from_mask(SubsetMask mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask) + 1);
        mask &= mask - 1;
    }
    return out;
}

bool Wreath::contains_block(SubsetMask m) const {
    return std::binary_search(blocks.begin(), blocks.end(), m);
}

std::size_t WreathHash::operator()(const Wreath& w) const {
    // FNV-1a over the block masks.
    std::size_t h = 1469598103934665603ull;
    for (SubsetMask m : w.blocks) {
        h ^= m;
        h *= 1099511628211ull;
    }
    return h;
}

Wreath canonicalize(std::vector<SubsetMask> blocks) {
    std::sort(blocks.begin(), blocks.end());
    return Wreath{std::move(blocks)};
}

Wreath wreath_of_perm(const WreathParams& params, const Perm& pi) {
    if (pi.size() != params.n || !pi.is_valid())
        throw HypothesisViolated("permutation does not match ground set");
    const int n = params.n;
    const int k = params.k;
    std::vector<SubsetMask> blocks;
    SubsetMask first = 0;
    for (long start = 0;; start += k) {
        SubsetMask block = 0;
        for (int t = 0; t < k; ++t)
            block |= SubsetMask{1} << (pi.img[(start + t) % n] - 1);
        if (!blocks.empty() && block == first) break;
        if (blocks.empty()) first = block;
        blocks.push_back(block);
    }
    if (static_cast<int>(blocks.size()) != params.wreath_len)
        throw Error("window iteration did not close after n/g blocks");
    return canonicalize(std::move(blocks));
}

Wreath apply_perm(const Perm& sigma, const Wreath& w) {
    std::vector<SubsetMask> blocks;
    blocks.reserve(w.blocks.size());
    for (SubsetMask m : w.blocks) blocks.push_back(sigma.apply_mask(m));
    return canonicalize(std::move(blocks));
}

Wreath complement_wreath(const WreathParams& params, const Wreath& w) {
    const SubsetMask full = (params.n == 32)
                                ? ~SubsetMask{0}
                                : ((SubsetMask{1} << params.n) - 1);
    std::vector<SubsetMask> blocks;
    blocks.reserve(w.blocks.size());
    for (SubsetMask m : w.blocks) blocks.push_back(full & ~m);
    return canonicalize(std::move(blocks));
}

bool has_uniform_coverage(const WreathParams& params, const Wreath& w) {
    const int expected = params.k / params.g;
    for (int e = 1; e <= params.n; ++e) {
        int cnt = 0;
        for (SubsetMask m : w.blocks)
            if (m & (SubsetMask{1} << (e - 1))) ++cnt;
        if (cnt != expected) return false;
    }
    return true;
}

bool wreaths_intersect(const Wreath& a, const Wreath& b) {
    // Both block lists are sorted.
    std::size_t i = 0, j = 0;
    while (i < a.blocks.size() && j < b.blocks.size()) {
        if (a.blocks[i] == b.blocks[j]) return true;
        if (a.blocks[i] < b.blocks[j])
            ++i;
        else
            ++j;
    }
    return false;
}

}  // namespace wreath
