#include "wreath/enumerate.hpp"

#include <algorithm>
#include <thread>
#include <unordered_set>

#include "wreath/errors.hpp"

namespace wreath {

namespace {

using WreathSet = std::unordered_set<Wreath, WreathHash>;

void check_enum_cap(const WreathParams& params, const Caps& caps) {
    if (params.n > caps.enum_cap)
        throw CapExceeded("n=" + std::to_string(params.n) +
                          " exceeds the enumeration cap " +
                          std::to_string(caps.enum_cap));
}

// Runs fn over all permutations with img[0] fixed to each value in firsts;
// the remaining n-1 positions run through next_permutation order.
template <typename Fn>
void scan_perms_with_firsts(int n, const std::vector<int>& firsts, Fn&& fn) {
    for (int first : firsts) {
        Perm p;
        p.img.reserve(n);
        p.img.push_back(static_cast<std::uint8_t>(first));
        for (int v = 1; v <= n; ++v)
            if (v != first) p.img.push_back(static_cast<std::uint8_t>(v));
        do {
            fn(p);
        } while (std::next_permutation(p.img.begin() + 1, p.img.end()));
    }
}

std::vector<std::vector<int>> split_firsts(const std::vector<int>& firsts,
                                           int jobs) {
    std::vector<std::vector<int>> parts(jobs);
    for (std::size_t i = 0; i < firsts.size(); ++i)
        parts[i % jobs].push_back(firsts[i]);
    return parts;
}

WreathSet collect_wreaths(const WreathParams& params,
                          const std::vector<int>& firsts, int jobs) {
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(firsts.size())));
    if (jobs == 1) {
        WreathSet seen;
        scan_perms_with_firsts(params.n, firsts, [&](const Perm& p) {
            seen.insert(wreath_of_perm(params, p));
        });
        return seen;
    }
    auto parts = split_firsts(firsts, jobs);
    std::vector<WreathSet> sets(jobs);
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w)
        workers.emplace_back([&, w] {
            scan_perms_with_firsts(params.n, parts[w], [&](const Perm& p) {
                sets[w].insert(wreath_of_perm(params, p));
            });
        });
    for (auto& t : workers) t.join();
    WreathSet merged = std::move(sets[0]);
    for (int w = 1; w < jobs; ++w)
        merged.insert(sets[w].begin(), sets[w].end());
    return merged;
}

std::vector<int> all_firsts(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return v;
}

}  // namespace

Int stabilizer_order(const WreathParams& params) {
    const long n = params.n, k = params.k, g = params.g;
    if (params.k_divides_n)
        return pow_int(factorial(k), n / k) * factorial(n / k);
    return divexact(Int(2 * n) * pow_int(factorial(g), n / g), Int(g));
}

Int wreath_count(const WreathParams& params) {
    // Orbit-stabiliser: |W| * |stab| = n!.
    return divexact(factorial(params.n), stabilizer_order(params));
}

Int containing_count(const WreathParams& params) {
    const long n = params.n, k = params.k, g = params.g;
    if (params.k_divides_n)
        return divexact(Int(n) * factorial(n - k),
                        Int(k) * pow_int(factorial(k), n / k - 1) *
                            factorial(n / k));
    return divexact(factorial(n - k) * factorial(k),
                    2 * pow_int(factorial(g), n / g));
}

std::vector<Wreath> enumerate_wreaths(const WreathParams& params,
                                      const Caps& caps, int jobs) {
    check_enum_cap(params, caps);
    WreathSet seen = collect_wreaths(params, all_firsts(params.n), jobs);
    std::vector<Wreath> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

Int count_wreaths_enumerated(const WreathParams& params, const Caps& caps,
                             int jobs) {
    check_enum_cap(params, caps);
    // For g = 1 the block set is rotation-invariant, so every wreath has a
    // representative with 1 in the first position.
    const std::vector<int> firsts =
        (params.g == 1) ? std::vector<int>{1} : all_firsts(params.n);
    return Int(static_cast<unsigned long>(
        collect_wreaths(params, firsts, jobs).size()));
}

std::vector<Wreath> wreaths_containing(const WreathParams& params,
                                       SubsetMask subset, const Caps& caps) {
    check_enum_cap(params, caps);
    if (__builtin_popcount(subset) != params.k ||
        (subset >> params.n) != 0)
        throw BadSubsetSize("subset is not a k-element subset of the ground set");

    std::vector<int> in = elements_from_mask(subset);
    std::vector<int> out;
    for (int e = 1; e <= params.n; ++e)
        if (!(subset & (SubsetMask{1} << (e - 1)))) out.push_back(e);

    // Only permutations with the subset occupying the first window can yield
    // a wreath containing it: k!(n-k)! candidates instead of n!.
    WreathSet seen;
    Perm p;
    p.img.resize(params.n);
    std::sort(in.begin(), in.end());
    do {
        for (int i = 0; i < params.k; ++i)
            p.img[i] = static_cast<std::uint8_t>(in[i]);
        do {
            for (std::size_t i = 0; i < out.size(); ++i)
                p.img[params.k + i] = static_cast<std::uint8_t>(out[i]);
            seen.insert(wreath_of_perm(params, p));
        } while (std::next_permutation(out.begin(), out.end()));
    } while (std::next_permutation(in.begin(), in.end()));

    std::vector<Wreath> result(seen.begin(), seen.end());
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<SubsetMask> all_k_subsets(int n, int k) {
    std::vector<SubsetMask> out;
    if (k < 0 || k > n) return out;
    if (k == 0) return {0};
    // Gosper's hack walks k-bit masks in increasing order.
    SubsetMask v = (SubsetMask{1} << k) - 1;
    const SubsetMask limit =
        (n == 32) ? ~SubsetMask{0} : ((SubsetMask{1} << n) - 1);
    while (v <= limit) {
        out.push_back(v);
        SubsetMask c = v & -v;
        SubsetMask r = v + c;
        if (r == 0) break;
        v = (((r ^ v) >> 2) / c) | r;
    }
    return out;
}

long wreath_index(const std::vector<Wreath>& sorted, const Wreath& w) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), w);
    if (it == sorted.end() || *it != w) return -1;
    return it - sorted.begin();
}

}  // namespace wreath
