#pragma once

#include <utility>
#include <vector>

#include "wreath/numeric.hpp"
#include "wreath/params.hpp"
#include "wreath/wreath.hpp"

namespace wreath {

// Dense arbitrary-precision integer matrix, row-major.
struct ExactMatrix {
    long rows = 0;
    long cols = 0;
    std::vector<Int> a;

    ExactMatrix() = default;
    ExactMatrix(long r, long c) : rows(r), cols(c), a(r * c) {}

    Int& at(long r, long c) { return a[r * cols + c]; }
    const Int& at(long r, long c) const { return a[r * cols + c]; }

    static ExactMatrix identity(long n);
    bool is_symmetric() const;
    bool is_zero() const;
    Int trace() const;
    Int row_sum(long r) const;
};

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b);
// a - s*I
ExactMatrix shift_diagonal(const ExactMatrix& a, const Int& s);

// M[i][j] = number of common blocks of wreaths i and j. Symmetric with
// constant diagonal n/g. jobs > 1 splits the row range.
ExactMatrix build_wreath_matrix(const std::vector<Wreath>& wreaths,
                                const Caps& caps, int jobs = 1);

// 0/1 vector indexed by wreaths: 1 where the wreath contains the subset.
std::vector<Int> build_incidence(const WreathParams& params, SubsetMask subset,
                                 const std::vector<Wreath>& wreaths);

// Checks M = sum over all k-subsets T of w_T w_T^t, then certifies positive
// semidefiniteness constructively: v^t M v = sum_T <w_T, v>^2 >= 0 on
// psd_samples deterministic pseudorandom integer vectors.
bool verify_rank_one_decomposition(const ExactMatrix& m,
                                   const WreathParams& params,
                                   const std::vector<Wreath>& wreaths,
                                   int psd_samples = 100);

// Rank by fraction-free (Bareiss) elimination over the integers.
long exact_rank(ExactMatrix m);

// Rational basis of the right nullspace; size = cols - rank.
std::vector<std::vector<Rat>> exact_nullspace(const ExactMatrix& m);

// Certifies a claimed spectrum (value, multiplicity) by exact rank drops:
// rank(M - lambda*I) = dim - mult for every distinct claimed value (equal
// values get their multiplicities merged), and the product of all
// (M - lambda*I) annihilates the image of M.
bool eigen_certify(const ExactMatrix& m,
                   const std::vector<std::pair<Int, Int>>& claimed);

}  // namespace wreath
