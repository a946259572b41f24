#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "wreath/enumerate.hpp"
#include "wreath/errors.hpp"
#include "wreath/matrix.hpp"
#include "wreath/wreath.hpp"

using namespace wreath;

namespace {

const Caps kCaps;

Perm perm_of(std::vector<int> images) {
    Perm p;
    for (int v : images) p.img.push_back(static_cast<std::uint8_t>(v));
    return p;
}

Wreath wreath_of_blocks(const std::vector<std::vector<int>>& blocks) {
    std::vector<SubsetMask> masks;
    for (const auto& b : blocks) masks.push_back(mask_from_elements(b));
    return canonicalize(std::move(masks));
}

// Independent oracle: scan all n! permutations in lexicographic order with
// std::next_permutation and deduplicate into an ordered set. Shares no code
// with the library's enumeration.
std::set<Wreath> brute_force_wreaths(const WreathParams& params) {
    std::vector<std::uint8_t> img(params.n);
    for (int i = 0; i < params.n; ++i) img[i] = static_cast<std::uint8_t>(i + 1);
    std::set<Wreath> seen;
    do {
        Perm p{img};
        seen.insert(wreath_of_perm(params, p));
    } while (std::next_permutation(img.begin(), img.end()));
    return seen;
}

Perm random_perm(int n, std::mt19937_64& rng) {
    Perm p = Perm::identity(n);
    std::shuffle(p.img.begin(), p.img.end(), rng);
    return p;
}

}  // namespace

TEST_CASE("wreath of a permutation matches the published pictures") {
    // n=10 with pi = (10 5 3 9 1 6 2 7 4 8)
    const Perm pi = perm_of({10, 5, 3, 9, 1, 6, 2, 7, 4, 8});

    const auto w2 = wreath_of_perm(WreathParams::create(10, 2), pi);
    CHECK(w2 == wreath_of_blocks({{10, 5}, {3, 9}, {1, 6}, {2, 7}, {4, 8}}));

    const auto w4 = wreath_of_perm(WreathParams::create(10, 4), pi);
    CHECK(w4 == wreath_of_blocks({{10, 5, 3, 9},
                                  {1, 6, 2, 7},
                                  {4, 8, 10, 5},
                                  {3, 9, 1, 6},
                                  {2, 7, 4, 8}}));

    const auto w3 = wreath_of_perm(WreathParams::create(10, 3), pi);
    CHECK(w3.size() == 10);

    const auto id7 = wreath_of_perm(WreathParams::create(7, 3),
                                    Perm::identity(7));
    CHECK(id7 == wreath_of_blocks({{1, 2, 3},
                                   {4, 5, 6},
                                   {7, 1, 2},
                                   {3, 4, 5},
                                   {6, 7, 1},
                                   {2, 3, 4},
                                   {5, 6, 7}}));
}

TEST_CASE("derived parameters") {
    const auto p = WreathParams::create(10, 4);
    CHECK(p.g == 2);
    CHECK(p.wreath_len == 5);
    CHECK_FALSE(p.k_divides_n);
    CHECK(p.target_count == 42);  // 2*C(10,4)/10

    const auto q = WreathParams::create(9, 3);
    CHECK(q.k_divides_n);
    CHECK(q.target_count == 28);

    // c * (n/g) = C(n,k): a decomposition's blocks exhaust the subsets
    for (auto [n, k] : {std::pair{7, 3}, std::pair{10, 4}, std::pair{9, 3}}) {
        const auto r = WreathParams::create(n, k);
        CHECK(r.target_count * r.wreath_len == binomial(n, k));
    }
    CHECK_THROWS_AS(WreathParams::create(7, 7), HypothesisViolated);
    CHECK_THROWS_AS(WreathParams::create(33, 3), HypothesisViolated);
}

TEST_CASE("enumeration counts match the orbit-stabiliser formulas") {
    struct Case {
        int n, k;
        long count;
    };
    // 6!/((3!)^2 2!) = 10, 6!/2 = 360, 10!/((5!)^2 2!) = 126
    for (const Case c : {Case{6, 3, 10}, Case{7, 3, 360}, Case{10, 5, 126}}) {
        const auto params = WreathParams::create(c.n, c.k);
        CHECK(wreath_count(params) == c.count);
        if (c.n <= 7) {
            const auto brute = brute_force_wreaths(params);
            const auto fast = enumerate_wreaths(params, kCaps);
            CHECK(Int(static_cast<long>(brute.size())) == c.count);
            REQUIRE(fast.size() == brute.size());
            CHECK(std::equal(fast.begin(), fast.end(), brute.begin()));
        } else {
            CHECK(count_wreaths_enumerated(params, kCaps) == c.count);
        }
    }
}

TEST_CASE("count law holds for every shape with n <= 9") {
    for (int n = 4; n <= 9; ++n)
        for (int k = 2; 2 * k < n; ++k) {
            const auto params = WreathParams::create(n, k);
            CHECK(count_wreaths_enumerated(params, kCaps) ==
                  wreath_count(params));
        }
    // multi-threaded path agrees
    const auto params = WreathParams::create(8, 3);
    CHECK(enumerate_wreaths(params, kCaps, 4) ==
          enumerate_wreaths(params, kCaps, 1));
}

TEST_CASE("enumeration cap") {
    CHECK_THROWS_AS(enumerate_wreaths(WreathParams::create(13, 3), kCaps),
                    CapExceeded);
}

TEST_CASE("wreaths containing a fixed subset") {
    const auto p73 = WreathParams::create(7, 3);
    const auto t73 = mask_from_elements({1, 2, 3});
    const auto through = wreaths_containing(p73, t73, kCaps);
    CHECK(through.size() == 72);  // 4!3!/2
    CHECK(containing_count(p73) == 72);

    const auto p93 = WreathParams::create(9, 3);
    CHECK(wreaths_containing(p93, mask_from_elements({1, 2, 3}), kCaps).size() ==
          10);
    CHECK(containing_count(p93) == 10);

    const auto p104 = WreathParams::create(10, 4);
    CHECK(wreaths_containing(p104, mask_from_elements({1, 2, 3, 4}), kCaps)
              .size() == 270);
    CHECK(containing_count(p104) == 270);

    CHECK_THROWS_AS(wreaths_containing(p73, mask_from_elements({1, 2}), kCaps),
                    BadSubsetSize);
}

TEST_CASE("containment is consistent with filtering the full enumeration") {
    for (auto [n, k] : {std::pair{7, 3}, std::pair{9, 3}}) {
        const auto params = WreathParams::create(n, k);
        const auto all = enumerate_wreaths(params, kCaps);
        for (SubsetMask t : all_k_subsets(n, k)) {
            std::vector<Wreath> filtered;
            for (const Wreath& w : all)
                if (w.contains_block(t)) filtered.push_back(w);
            CHECK(wreaths_containing(params, t, kCaps) == filtered);
        }
    }
}

TEST_CASE("group action") {
    const auto params = WreathParams::create(7, 3);
    const Wreath base = wreath_of_perm(params, Perm::identity(7));

    CHECK(apply_perm(Perm::identity(7), base) == base);
    const Perm swap12 = Perm::adjacent_transposition(7, 1);
    CHECK(apply_perm(swap12, base) == wreath_of_perm(params, swap12));

    // tau W_pi = W_{tau pi} on random pairs
    std::mt19937_64 rng(20240811);
    for (auto [n, k] : {std::pair{7, 3}, std::pair{9, 3}}) {
        const auto p = WreathParams::create(n, k);
        for (int trial = 0; trial < 1000; ++trial) {
            const Perm sigma = random_perm(n, rng);
            const Perm pi = random_perm(n, rng);
            CHECK(apply_perm(sigma, wreath_of_perm(p, pi)) ==
                  wreath_of_perm(p, sigma.compose(pi)));
        }
    }

    // The action is transitive: one orbit is the whole wreath set.
    std::set<Wreath> orbit;
    std::vector<std::uint8_t> img{1, 2, 3, 4, 5, 6, 7};
    do {
        orbit.insert(apply_perm(Perm{img}, base));
    } while (std::next_permutation(img.begin(), img.end()));
    CHECK(orbit.size() == 360);
}

TEST_CASE("uniform coverage and canonical idempotence") {
    std::mt19937_64 rng(7);
    for (auto [n, k] : {std::pair{7, 3}, std::pair{10, 4}, std::pair{9, 3}}) {
        const auto params = WreathParams::create(n, k);
        for (int trial = 0; trial < 50; ++trial) {
            const Wreath w = wreath_of_perm(params, random_perm(n, rng));
            CHECK(has_uniform_coverage(params, w));
            auto shuffled = w.blocks;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            const Wreath once = canonicalize(shuffled);
            CHECK(once == w);
            CHECK(canonicalize(once.blocks) == once);
        }
    }
}

TEST_CASE("complementation") {
    const auto p104 = WreathParams::create(10, 4);
    const Perm pi = perm_of({10, 5, 3, 9, 1, 6, 2, 7, 4, 8});
    const Wreath w = wreath_of_perm(p104, pi);
    const Wreath comp = complement_wreath(p104, w);

    const auto p106 = WreathParams::create(10, 6);
    CHECK(comp.size() == p106.wreath_len);
    CHECK(has_uniform_coverage(p106, comp));
    CHECK(complement_wreath(p106, comp) == w);

    // M(7,3) equals M(7,4) after relabeling columns by complementation.
    const auto p73 = WreathParams::create(7, 3);
    const auto p74 = WreathParams::create(7, 4);
    const auto w73 = enumerate_wreaths(p73, kCaps);
    const auto w74 = enumerate_wreaths(p74, kCaps);
    REQUIRE(w73.size() == w74.size());
    std::vector<long> to74(w73.size());
    for (std::size_t i = 0; i < w73.size(); ++i) {
        to74[i] = wreath_index(w74, complement_wreath(p73, w73[i]));
        REQUIRE(to74[i] >= 0);
    }
    const auto m73 = build_wreath_matrix(w73, kCaps);
    const auto m74 = build_wreath_matrix(w74, kCaps);
    for (std::size_t i = 0; i < w73.size(); ++i)
        for (std::size_t j = 0; j < w73.size(); ++j)
            CHECK(m73.at(i, j) == m74.at(to74[i], to74[j]));
}

TEST_CASE("stabilizer orders") {
    CHECK(stabilizer_order(WreathParams::create(7, 3)) == 14);
    CHECK(stabilizer_order(WreathParams::create(9, 3)) == 1296);
    CHECK(stabilizer_order(WreathParams::create(10, 4)) == 320);
    for (auto [n, k] : {std::pair{7, 3}, std::pair{9, 3}, std::pair{10, 4},
                        std::pair{8, 4}, std::pair{5, 2}}) {
        const auto params = WreathParams::create(n, k);
        CHECK(stabilizer_order(params) * wreath_count(params) == factorial(n));
    }
}
