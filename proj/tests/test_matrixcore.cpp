#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <utility>

#include "doctest.h"
#include "wreath/enumerate.hpp"
#include "wreath/errors.hpp"
#include "wreath/kernel.hpp"
#include "wreath/matrix.hpp"

using namespace wreath;

namespace {

const Caps kCaps;

bool is_scalar_matrix(const ExactMatrix& m, const Int& s) {
    for (long i = 0; i < m.rows; ++i)
        for (long j = 0; j < m.cols; ++j)
            if (m.at(i, j) != ((i == j) ? s : Int(0))) return false;
    return true;
}

}  // namespace

TEST_CASE("degenerate k = n/2 wreath matrices are twice the identity") {
    for (auto [n, k] : {std::pair{8, 4}, std::pair{6, 3}}) {
        const auto params = WreathParams::create(n, k);
        const auto wreaths = enumerate_wreaths(params, kCaps);
        CHECK(Int(static_cast<long>(wreaths.size())) == wreath_count(params));
        const auto m = build_wreath_matrix(wreaths, kCaps);
        CHECK(is_scalar_matrix(m, 2));
    }
    CHECK(wreath_count(WreathParams::create(8, 4)) == 35);
}

TEST_CASE("wreath matrix structure at (7,3)") {
    const auto params = WreathParams::create(7, 3);
    const auto wreaths = enumerate_wreaths(params, kCaps);
    const auto m = build_wreath_matrix(wreaths, kCaps);

    CHECK(m.is_symmetric());
    for (long i = 0; i < m.rows; ++i) {
        CHECK(m.at(i, i) == 7);
        CHECK(m.row_sum(i) == 504);
    }
    CHECK(m.trace() == Int(360) * 7);

    // threaded build agrees
    const auto m4 = build_wreath_matrix(wreaths, kCaps, 4);
    CHECK(m4.a == m.a);
}

TEST_CASE("incidence vectors") {
    const auto p73 = WreathParams::create(7, 3);
    const auto w73 = enumerate_wreaths(p73, kCaps);
    const auto v = build_incidence(p73, mask_from_elements({1, 2, 3}), w73);
    Int support = 0;
    for (const Int& x : v) support += x;
    CHECK(support == 72);

    const auto p93 = WreathParams::create(9, 3);
    const auto w93 = enumerate_wreaths(p93, kCaps);
    const auto v93 = build_incidence(p93, mask_from_elements({1, 2, 3}), w93);
    Int support93 = 0;
    for (const Int& x : v93) support93 += x;
    CHECK(support93 == 10);

    // Summing over all subsets gives (n/g) at every wreath.
    std::vector<Int> total(w73.size());
    for (SubsetMask t : all_k_subsets(7, 3)) {
        const auto inc = build_incidence(p73, t, w73);
        for (std::size_t i = 0; i < total.size(); ++i) total[i] += inc[i];
    }
    for (const Int& x : total) CHECK(x == 7);

    CHECK_THROWS_AS(build_incidence(p73, mask_from_elements({1, 2}), w73),
                    BadSubsetSize);
}

TEST_CASE("rank-one decomposition and PSD certificate") {
    for (auto [n, k] : {std::pair{6, 3}, std::pair{7, 3}}) {
        const auto params = WreathParams::create(n, k);
        const auto wreaths = enumerate_wreaths(params, kCaps);
        const auto m = build_wreath_matrix(wreaths, kCaps);
        CHECK(verify_rank_one_decomposition(m, params, wreaths));
    }
    // A perturbed matrix must fail the sum check.
    const auto params = WreathParams::create(6, 3);
    const auto wreaths = enumerate_wreaths(params, kCaps);
    auto m = build_wreath_matrix(wreaths, kCaps);
    m.at(0, 1) += 1;
    CHECK_FALSE(verify_rank_one_decomposition(m, params, wreaths));
}

TEST_CASE("exact rank and nullspace") {
    const auto params = WreathParams::create(7, 3);
    const auto wreaths = enumerate_wreaths(params, kCaps);
    const auto m = build_wreath_matrix(wreaths, kCaps);

    CHECK(exact_rank(m) == 29);  // C(7,3) - 7 + 1
    const auto basis = exact_nullspace(m);
    CHECK(basis.size() == 331);

    // Every sampled basis vector annihilates against the incidence vectors.
    for (std::size_t b = 0; b < basis.size(); b += 37) {
        SparseKernelVector sparse;
        for (std::size_t i = 0; i < wreaths.size(); ++i)
            sparse.add(wreaths[i], basis[b][i]);
        CHECK(is_in_kernel(params, sparse));
    }
    // ... and M v = 0 exactly, for the ends of the basis.
    for (std::size_t b : {std::size_t{0}, basis.size() - 1}) {
        for (long i = 0; i < m.rows; ++i) {
            Rat dot(0);
            for (long j = 0; j < m.cols; ++j) {
                if (m.at(i, j) == 0 || basis[b][j] == 0) continue;
                dot += Rat(m.at(i, j)) * basis[b][j];
            }
            dot.canonicalize();
            CHECK(dot == 0);
        }
    }

    ExactMatrix zero(5, 5);
    CHECK(exact_rank(zero) == 0);
    CHECK(exact_nullspace(zero).size() == 5);

    // Rectangular sanity: a single row [1 2 3] has a 2-dimensional nullspace.
    ExactMatrix row(1, 3);
    row.at(0, 0) = 1;
    row.at(0, 1) = 2;
    row.at(0, 2) = 3;
    const auto ns = exact_nullspace(row);
    REQUIRE(ns.size() == 2);
    for (const auto& v : ns)
        CHECK(Rat(row.at(0, 0)) * v[0] + Rat(row.at(0, 1)) * v[1] +
                  Rat(row.at(0, 2)) * v[2] ==
              0);
}

TEST_CASE("eigen certification on small cases") {
    const auto p63 = WreathParams::create(6, 3);
    const auto w63 = enumerate_wreaths(p63, kCaps);
    const auto m63 = build_wreath_matrix(w63, kCaps);
    CHECK(eigen_certify(m63, {{Int(2), Int(10)}}));
    CHECK_FALSE(eigen_certify(m63, {{Int(3), Int(10)}}));
    // Collided claimed values merge multiplicities.
    CHECK(eigen_certify(m63, {{Int(2), Int(4)}, {Int(2), Int(6)}}));
    CHECK_THROWS_AS(eigen_certify(m63, {{Int(2), Int(9)}}),
                    DimensionMismatch);

    const auto p52 = WreathParams::create(5, 2);
    const auto w52 = enumerate_wreaths(p52, kCaps);
    REQUIRE(w52.size() == 12);
    const auto m52 = build_wreath_matrix(w52, kCaps);
    // lambda_1 = 30, lambda_2 = 6 with multiplicity C(5,2)-C(5,1) = 5.
    CHECK(eigen_certify(m52, {{Int(30), Int(1)},
                              {Int(6), Int(5)},
                              {Int(0), Int(6)}}));
    CHECK_FALSE(eigen_certify(m52, {{Int(30), Int(1)},
                                    {Int(6), Int(6)},
                                    {Int(0), Int(5)}}));
}

TEST_CASE("matrix cap") {
    const auto params = WreathParams::create(7, 3);
    const auto wreaths = enumerate_wreaths(params, kCaps);
    Caps tight;
    tight.matrix_cap = 100;
    CHECK_THROWS_AS(build_wreath_matrix(wreaths, tight), CapExceeded);
}
