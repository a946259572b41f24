#include "wreath/perm.hpp"

#include <numeric>

#include "wreath/errors.hpp"

namespace wreath {

Perm Perm::identity(int n) {
    Perm p;
    p.img.resize(n);
    std::iota(p.img.begin(), p.img.end(), std::uint8_t{1});
    return p;
}

Perm Perm::adjacent_transposition(int n, int i) {
    return transposition(n, i, i + 1);
}

Perm Perm::transposition(int n, int i, int j) {
    if (i < 1 || j < 1 || i > n || j > n || i == j)
        throw IndexOutOfRange("transposition indices out of range");
    Perm p = identity(n);
    std::swap(p.img[i - 1], p.img[j - 1]);
    return p;
}

bool Perm::is_valid() const {
    const int n = size();
    if (n == 0 || n > 255) return false;
    std::uint64_t seen = 0;
    for (std::uint8_t v : img) {
        if (v < 1 || v > n) return false;
        if (seen & (1ull << v)) return false;
        seen |= 1ull << v;
    }
    return true;
}

Perm Perm::compose(const Perm& other) const {
    Perm r;
    r.img.resize(img.size());
    for (std::size_t i = 0; i < img.size(); ++i)
        r.img[i] = img[other.img[i] - 1];
    return r;
}

Perm Perm::inverse() const {
    Perm r;
    r.img.resize(img.size());
    for (std::size_t i = 0; i < img.size(); ++i)
        r.img[img[i] - 1] = static_cast<std::uint8_t>(i + 1);
    return r;
}

std::uint32_t Perm::apply_mask(std::uint32_t mask) const {
    std::uint32_t out = 0;
    while (mask) {
        const int bit = __builtin_ctz(mask);
        mask &= mask - 1;
        out |= 1u << (img[bit] - 1);
    }
    return out;
}

int Perm::sign() const {
    // Cycle decomposition: sign = (-1)^(n - #cycles).
    const int n = size();
    std::uint64_t seen = 0;
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
        if (seen & (1ull << i)) continue;
        ++cycles;
        int j = i;
        while (!(seen & (1ull << j))) {
            seen |= 1ull << j;
            j = img[j] - 1;
        }
    }
    return ((n - cycles) % 2 == 0) ? 1 : -1;
}

}  // namespace wreath
