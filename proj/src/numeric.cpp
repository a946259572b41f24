#include "wreath/numeric.hpp"

#include "wreath/errors.hpp"

namespace wreath {

Int factorial(long n) {
    if (n < 0) throw Error("factorial of negative argument");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

Int binomial(const Int& n, long k) {
    if (k < 0 || n < 0 || n < k) return 0;
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Int divexact(const Int& a, const Int& b) {
    if (b == 0) throw Error("division by zero");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0)
        throw Error("inexact division: " + a.get_str() + " / " + b.get_str());
    return q;
}

Int rat_to_int(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    if (c.get_den() != 1)
        throw Error("expected an integer, got " + rat_str(q));
    return c.get_num();
}

std::string int_str(const Int& v) { return v.get_str(); }

std::string rat_str(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    return c.get_str();
}

Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw Error("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

}  // namespace wreath
