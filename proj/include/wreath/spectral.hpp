#pragma once

#include <map>
#include <utility>
#include <vector>

#include "wreath/numeric.hpp"
#include "wreath/params.hpp"
#include "wreath/polynomial.hpp"

namespace wreath {

struct LevelEig {
    int l = 0;
    Int value;
    Int mult;
};

// Eigenvalues of the wreath matrix, kept per level without merging collided
// values; certification merges multiplicities of equal values.
struct Spectrum {
    int n = 0, k = 0, g = 0;
    Int lambda1;
    std::vector<LevelEig> levels;  // l = 2..k
    Int zero_multiplicity;
    Int wreath_count;

    // (value, multiplicity) pairs, as fed to eigen_certify.
    std::vector<std::pair<Int, Int>> claimed() const;
    bool trace_identity_holds() const;
};

// b[l][j] for 2 <= l <= k, 0 <= j <= l.
struct BTable {
    int k = 0;
    std::vector<std::vector<Int>> rows;  // rows[l-2][j]

    const Int& at(int l, int j) const;
};

// Largest eigenvalue, n(n-k)!k!/(2g(g!)^{n/g}) resp.
// n^2(n-k)!/(k^2(k!)^{n/k-1}(n/k)!). Requires k < n/2.
Int lambda1(const WreathParams& params);

// <w_A, w_T> with A = {1..l}, T = {l-j+1,...,l-j+k}, counted directly as
// pairs (wreath containing T, block containing A) over the restricted
// permutation enumeration. Independent of every closed formula.
Int b_oracle(const WreathParams& params, int l, int j, const Caps& caps);

// Closed form per regime: k | n, coprime, or the general-gcd sums.
Int b_formula(const WreathParams& params, int l, int j);

BTable b_table_formula(const WreathParams& params);
BTable b_table_oracle(const WreathParams& params, const Caps& caps);

// lambda_l = sum_{j=0}^{l} (-1)^{l-j} C(l,j) b_{l,j}
Int lambda_from_b(const WreathParams& params, int l, const BTable& table);

// Closed forms: the k | n expression or the coprime expression. Throws
// UnsupportedRegime for 1 < g < k with k not dividing n.
Int lambda_closed(const WreathParams& params, int l);

// Explicit l = 2 and l = 3 forms for coprime n, k.
Int example_lambda2(const WreathParams& params);
Int example_lambda3(const WreathParams& params);

// Assembles lambda_1, lambda_l and multiplicities via the best closed path
// per regime and validates the trace identity. Requires k < n/2.
Spectrum full_spectrum(const WreathParams& params);

// Multiplicity of lambda_l: C(n,l) - C(n,l-1).
Int level_multiplicity(int n, int l);

// sum_{x+y=gamma} C(x,alpha) C(y,beta) == C(gamma+1, alpha+beta+1)
bool binomial_identity_check(long alpha, long beta, long gamma);

// For coprime n, k: lambda_l = (n-k-l)! * P_{k,l}(n). Degree l, leading
// coefficient (2k-l+1) k! / (2(l+1)).
struct EigPolynomial {
    int k = 0, l = 0;
    Poly p;
};
EigPolynomial eig_polynomial(int k, int l);

// Empirical collision scan over lambda_1..lambda_k; asserts nothing.
struct ScanEntry {
    int n = 0, k = 0;
    std::vector<Int> values;  // lambda_1..lambda_k
    bool all_distinct = false;
    std::vector<std::pair<int, int>> collisions;  // level pairs, 1-based

    bool operator==(const ScanEntry&) const = default;
};
struct ScanReport {
    std::vector<ScanEntry> entries;
    bool operator==(const ScanReport&) const = default;
};
ScanReport distinctness_scan(int n_lo, int n_hi, int k_lo, int k_hi);

}  // namespace wreath
