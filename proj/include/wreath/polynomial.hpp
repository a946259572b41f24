#pragma once

#include <vector>

#include "wreath/numeric.hpp"

namespace wreath {

// Dense univariate polynomial over the rationals; coeffs[i] multiplies x^i.
struct Poly {
    std::vector<Rat> coeffs;

    static Poly zero() { return {}; }
    static Poly constant(const Rat& c);
    // a0 + a1*x
    static Poly linear(const Rat& a0, const Rat& a1);

    int degree() const;  // -1 for the zero polynomial
    void trim();
    Rat eval(const Rat& x) const;
    Rat leading() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Rat& c) const;
    bool operator==(const Poly& o) const = default;
};

}  // namespace wreath
