#include "wreath/polynomial.hpp"

#include <algorithm>

namespace wreath {

Poly Poly::constant(const Rat& c) {
    Poly p;
    if (c != 0) p.coeffs = {c};
    return p;
}

Poly Poly::linear(const Rat& a0, const Rat& a1) {
    Poly p;
    p.coeffs = {a0, a1};
    p.trim();
    return p;
}

int Poly::degree() const { return static_cast<int>(coeffs.size()) - 1; }

void Poly::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc *= x;
        acc += *it;
        acc.canonicalize();
    }
    return acc;
}

Rat Poly::leading() const { return coeffs.empty() ? Rat(0) : coeffs.back(); }

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.coeffs.resize(std::max(coeffs.size(), o.coeffs.size()), Rat(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += coeffs[i];
    for (std::size_t i = 0; i < o.coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
    for (auto& c : r.coeffs) c.canonicalize();
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + o.scaled(Rat(-1)); }

Poly Poly::operator*(const Poly& o) const {
    if (coeffs.empty() || o.coeffs.empty()) return {};
    Poly r;
    r.coeffs.assign(coeffs.size() + o.coeffs.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs.size(); ++j)
            r.coeffs[i + j] += coeffs[i] * o.coeffs[j];
    for (auto& c : r.coeffs) c.canonicalize();
    r.trim();
    return r;
}

Poly Poly::scaled(const Rat& c) const {
    if (c == 0) return {};
    Poly r = *this;
    for (auto& v : r.coeffs) {
        v *= c;
        v.canonicalize();
    }
    return r;
}

}  // namespace wreath
