#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace wreath {

// A bijection on {1..n}. img[i-1] is the image of i.
struct Perm {
    std::vector<std::uint8_t> img;

    auto operator<=>(const Perm&) const = default;

    int size() const { return static_cast<int>(img.size()); }
    int apply(int e) const { return img[e - 1]; }

    static Perm identity(int n);
    // The transposition (i i+1).
    static Perm adjacent_transposition(int n, int i);
    static Perm transposition(int n, int i, int j);

    bool is_valid() const;
    // (a.compose(b))(x) = a(b(x))
    Perm compose(const Perm& other) const;
    Perm inverse() const;
    // Image of a subset given as a bitmask over positions 0..n-1.
    std::uint32_t apply_mask(std::uint32_t mask) const;
    int sign() const;
};

}  // namespace wreath
