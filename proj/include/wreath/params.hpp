#pragma once

#include <cstdint>

#include "wreath/numeric.hpp"

namespace wreath {

// Ground-set elements are 1..n, mapped to bit positions 0..n-1 of a 32-bit
// mask, so n is capped at 32.
inline constexpr int kMaxGroundSet = 32;

// Resource limits shared across operations. Overridable from the CLI via
// flags, a config file or the WREATHLAB_CAPS environment variable.
struct Caps {
    int enum_cap = 12;        // max n for permutation enumeration
    long matrix_cap = 20000;  // max rows of a dense exact matrix
    long term_cap = 40320;    // max a! terms of an alternating-sum vector
};

struct WreathParams {
    int n = 0;
    int k = 0;
    int g = 0;           // gcd(n, k)
    int wreath_len = 0;  // blocks per wreath, n/g
    bool k_divides_n = false;
    Int target_count;  // c = g*C(n,k)/n, wreaths per decomposition

    static WreathParams create(int n, int k);
};

}  // namespace wreath
