#pragma once

#include <map>
#include <vector>

#include "wreath/numeric.hpp"
#include "wreath/params.hpp"
#include "wreath/perm.hpp"
#include "wreath/wreath.hpp"

namespace wreath {

// Signed rational combination of canonical wreaths. Coincident wreaths merge
// by coefficient addition; zero coefficients are never stored. A construction
// whose terms all cancel returns the empty vector with all_cancelled set.
struct SparseKernelVector {
    std::map<Wreath, Rat> terms;
    bool all_cancelled = false;

    void add(const Wreath& w, const Rat& c);
    bool is_zero() const { return terms.empty(); }
};

// x_a = e_{W_id} - e_{W_{t1}} - e_{W_{t_{a+1}}} + e_{W_{t1 t_{a+1}}} with
// t_i the transposition (i i+1). Requires 2 <= a <= n/2 and a != k.
// Orthogonality against every w_T is verified before returning.
SparseKernelVector build_x_a(const WreathParams& params, int a);

// y_{a,W} = sum over sigma in S_a of sgn(sigma) e_{sigma W}. Requires
// 3 <= a <= n and a! within the term cap.
SparseKernelVector build_y_a(const WreathParams& params, int a,
                             const Wreath& w, const Caps& caps);

// A subgroup of S_n by explicit element list together with a {+1,-1}-valued
// linear character.
struct CharacterSpec {
    std::vector<Perm> elements;
    std::vector<int> values;

    // Symmetric group on {1..a} inside S_n, with the sign character.
    static CharacterSpec sign_character(int n, int a);
};

// sum_{h in H} rho(h) e_{h W}. Validates the subgroup/character data and the
// hypothesis that rho is nontrivial on every block stabilizer (equivalently
// sum_{h fixing T} rho(h) = 0 for every k-subset T); a failing T is reported
// as HypothesisFailed with that witness.
SparseKernelVector build_char_vector(const WreathParams& params,
                                     const CharacterSpec& spec,
                                     const Wreath& w);

// True iff <v, w_T> = 0 for every k-subset T. Works on the support only;
// never materializes the matrix.
bool is_in_kernel(const WreathParams& params, const SparseKernelVector& v);

// Same test for a dense vector indexed by canonical wreath order.
bool is_in_kernel_dense(const WreathParams& params, const std::vector<Rat>& v,
                        const std::vector<Wreath>& wreaths);

// |W_{n,k}| - (C(n,k) - n + 1). Requires k < n/2.
Int kernel_dimension(const WreathParams& params);

}  // namespace wreath
