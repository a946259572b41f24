#include "wreath/spectral.hpp"

#include <algorithm>

#include "wreath/enumerate.hpp"
#include "wreath/errors.hpp"

namespace wreath {

namespace {

void require_half_range(const WreathParams& params) {
    if (2 * params.k >= params.n)
        throw HypothesisViolated("requires k < n/2, got (" +
                                 std::to_string(params.n) + "," +
                                 std::to_string(params.k) + ")");
}

void require_level(const WreathParams& params, int l) {
    if (l < 2 || l > params.k)
        throw IndexOutOfRange("level l must satisfy 2 <= l <= k");
}

void require_level_and_offset(const WreathParams& params, int l, int j) {
    require_level(params, l);
    if (j < 0 || j > l)
        throw IndexOutOfRange("offset j must satisfy 0 <= j <= l");
}

// Second difference of binomials in the general-gcd sums.
Int window_diff2(long top, long step, long l) {
    return binomial(top, l) - 2 * binomial(top - step, l) +
           binomial(top - 2 * step, l);
}

Int b_formula_k_divides(const WreathParams& params, int l, int j) {
    const long n = params.n, k = params.k;
    const long q = n / k;
    if (j == 0)
        return divexact(factorial(n - 2 * k),
                        pow_int(factorial(k), q - 2) * factorial(q - 2)) *
               binomial(n - k - l, k - l);
    if (j < l) return 0;
    return divexact(factorial(n - k),
                    pow_int(factorial(k), q - 1) * factorial(q - 1));
}

Int b_formula_coprime(const WreathParams& params, int l, int j) {
    const long n = params.n, k = params.k;
    if (j == 0) {
        Rat v = Rat(factorial(l) * factorial(k) * factorial(n - k - l)) / 2;
        v *= Rat(2 * binomial(k, l + 1) + Int(n - 2 * k + 1) * binomial(k, l));
        return rat_to_int(v);
    }
    if (j < l)
        return factorial(j) * factorial(l - j) * factorial(k - j) *
               factorial(n - k - l + j) * binomial(k + 1, l + 1);
    Rat v = Rat(factorial(l) * factorial(k - l) * factorial(n - k)) / 2;
    v *= Rat(2 * binomial(k, l + 1) + binomial(k, l));
    return rat_to_int(v);
}

Int b_formula_general(const WreathParams& params, int l, int j) {
    const long n = params.n, k = params.k, g = params.g;
    const long kg = k / g;
    const Int stab_core = pow_int(factorial(g), n / g);

    if (j == 0 || j == l) {
        Int sum = 0;
        for (long d = 1; d <= kg; ++d) {
            const Int diff = window_diff2(d * g, g, l);
            if (diff == 0) continue;
            if (j == 0)
                sum += Int((n - k) / g - d + 1) * Int(kg - d + 1) * diff;
            else
                sum += Int(kg - d + 1) * Int(kg - d + 1) * diff;
        }
        const Int fac = (j == 0)
                            ? factorial(k) * factorial(n - k - l) * factorial(l)
                            : factorial(n - k) * factorial(k - l) * factorial(l);
        return rat_to_int(Rat(fac * sum) / Rat(2 * stab_core));
    }

    Int sum = 0;
    for (long d = 1; d <= kg; ++d)
        for (long delta = 1; delta < d; ++delta) {
            const Int left =
                binomial(delta * g, j) - binomial(delta * g - g, j);
            const Int right = binomial((d - delta) * g, l - j) -
                              binomial((d - delta) * g - g, l - j);
            sum += Int(kg - d + 1) * left * right;
        }
    const Int fac = factorial(j) * factorial(l - j) * factorial(k - j) *
                    factorial(n - k - l + j);
    return rat_to_int(Rat(fac * sum) / Rat(stab_core));
}

}  // namespace

std::vector<std::pair<Int, Int>> Spectrum::claimed() const {
    std::vector<std::pair<Int, Int>> out;
    out.emplace_back(lambda1, 1);
    for (const LevelEig& le : levels) out.emplace_back(le.value, le.mult);
    out.emplace_back(0, zero_multiplicity);
    return out;
}

bool Spectrum::trace_identity_holds() const {
    Int sum = lambda1;
    for (const LevelEig& le : levels) sum += le.value * le.mult;
    return sum == wreath_count * Int(n / g);
}

const Int& BTable::at(int l, int j) const {
    if (l < 2 || l > k || j < 0 || j > l)
        throw IndexOutOfRange("b-table index (l,j) out of range");
    return rows[l - 2][j];
}

Int lambda1(const WreathParams& params) {
    require_half_range(params);
    // (n/g) times the number of wreaths through a fixed subset: the constant
    // row sum of the wreath matrix.
    return Int(params.wreath_len) * containing_count(params);
}

Int b_oracle(const WreathParams& params, int l, int j, const Caps& caps) {
    require_level_and_offset(params, l, j);
    SubsetMask a_mask = 0;
    for (int e = 1; e <= l; ++e) a_mask |= SubsetMask{1} << (e - 1);
    SubsetMask t_mask = 0;
    for (int e = l - j + 1; e <= l - j + params.k; ++e)
        t_mask |= SubsetMask{1} << (e - 1);

    // Pairs (wreath containing T, block of it containing A).
    Int pairs = 0;
    for (const Wreath& w : wreaths_containing(params, t_mask, caps))
        for (SubsetMask block : w.blocks)
            if ((block & a_mask) == a_mask) pairs += 1;
    return pairs;
}

Int b_formula(const WreathParams& params, int l, int j) {
    require_level_and_offset(params, l, j);
    require_half_range(params);
    if (params.k_divides_n) return b_formula_k_divides(params, l, j);
    if (params.g == 1) return b_formula_coprime(params, l, j);
    return b_formula_general(params, l, j);
}

BTable b_table_formula(const WreathParams& params) {
    BTable t;
    t.k = params.k;
    for (int l = 2; l <= params.k; ++l) {
        std::vector<Int> row;
        for (int j = 0; j <= l; ++j) row.push_back(b_formula(params, l, j));
        t.rows.push_back(std::move(row));
    }
    return t;
}

BTable b_table_oracle(const WreathParams& params, const Caps& caps) {
    BTable t;
    t.k = params.k;
    for (int l = 2; l <= params.k; ++l) {
        std::vector<Int> row;
        for (int j = 0; j <= l; ++j)
            row.push_back(b_oracle(params, l, j, caps));
        t.rows.push_back(std::move(row));
    }
    return t;
}

Int lambda_from_b(const WreathParams& params, int l, const BTable& table) {
    require_level(params, l);
    Int sum = 0;
    for (int j = 0; j <= l; ++j) {
        const Int term = binomial(l, j) * table.at(l, j);
        if ((l - j) % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

Int lambda_closed(const WreathParams& params, int l) {
    require_level(params, l);
    require_half_range(params);
    const long n = params.n, k = params.k;
    if (params.k_divides_n) {
        const long q = n / k;
        Int value = divexact(factorial(n - k),
                             pow_int(factorial(k), q - 1) * factorial(q - 1));
        Int second = divexact(factorial(n - 2 * k),
                              pow_int(factorial(k), q - 2) * factorial(q - 2)) *
                     binomial(n - k - l, k - l);
        return (l % 2 == 0) ? Int(value + second) : Int(value - second);
    }
    if (params.g != 1)
        throw UnsupportedRegime(
            "no closed form for 1 < gcd(n,k) < k; use lambda_from_b with the "
            "general-gcd coefficient table");

    // Coprime case.
    Rat total(0);
    Rat first = Rat(factorial(l) * factorial(k) * factorial(n - k - l) *
                    Int(n - 2 * k - 1) * binomial(k, l)) /
                2;
    total += (l % 2 == 0) ? first : -first;
    total -= Rat(factorial(k) * factorial(n - k)) / 2;
    Int alt = 0;
    for (int j = 0; j <= l; ++j) {
        const Int term = factorial(k - j) * factorial(n - k - l + j);
        if ((l - j) % 2 == 0)
            alt += term;
        else
            alt -= term;
    }
    total += Rat(factorial(l) * binomial(k + 1, l + 1) * alt);
    return rat_to_int(total);
}

Int example_lambda2(const WreathParams& params) {
    require_half_range(params);
    if (params.g != 1 || params.k < 2)
        throw HypothesisViolated("lambda_2 form needs coprime n,k and k >= 2");
    const long n = params.n, k = params.k;
    Rat v = Rat(factorial(k) * factorial(n - k - 2) * Int(n - 2)) / 6;
    v *= Rat(Int(2 * k - 1) * n - Int(3 * k * k - k - 1));
    return rat_to_int(v);
}

Int example_lambda3(const WreathParams& params) {
    require_half_range(params);
    if (params.g != 1 || params.k < 3)
        throw HypothesisViolated("lambda_3 form needs coprime n,k and k >= 3");
    const long n = params.n, k = params.k;
    Rat v = Rat(factorial(k) * factorial(n - k - 3) * Int(n - 3) *
                Int(n - 2 * k)) /
            4;
    v *= Rat(Int(k - 1) * n - Int(2 * k * k - 2 * k - 2));
    return rat_to_int(v);
}

Int level_multiplicity(int n, int l) {
    return binomial(n, l) - binomial(n, l - 1);
}

Spectrum full_spectrum(const WreathParams& params) {
    require_half_range(params);
    Spectrum s;
    s.n = params.n;
    s.k = params.k;
    s.g = params.g;
    s.lambda1 = lambda1(params);
    s.wreath_count = wreath_count(params);

    const bool general_gcd = !params.k_divides_n && params.g != 1;
    BTable table;
    if (general_gcd) table = b_table_formula(params);
    for (int l = 2; l <= params.k; ++l) {
        LevelEig le;
        le.l = l;
        le.value = general_gcd ? lambda_from_b(params, l, table)
                               : lambda_closed(params, l);
        le.mult = level_multiplicity(params.n, l);
        if (le.value <= 0)
            throw Error("nonpositive level eigenvalue; formula bug");
        s.levels.push_back(std::move(le));
    }
    const Int rank = binomial(params.n, params.k) - params.n + 1;
    s.zero_multiplicity = s.wreath_count - rank;
    if (!s.trace_identity_holds())
        throw Error("trace identity failed; formula bug");
    return s;
}

bool binomial_identity_check(long alpha, long beta, long gamma) {
    if (alpha < 0 || beta < 0 || gamma < 0)
        throw HypothesisViolated("identity needs non-negative arguments");
    Int lhs = 0;
    for (long x = 0; x <= gamma; ++x)
        lhs += binomial(x, alpha) * binomial(gamma - x, beta);
    return lhs == binomial(gamma + 1, alpha + beta + 1);
}

EigPolynomial eig_polynomial(int k, int l) {
    if (l < 2 || l > k) throw IndexOutOfRange("need 2 <= l <= k");

    // lambda_l / (n-k-l)! with every (n-k-l+j)! expanded as
    // (n-k-l)! * prod_{i=1..j} (n-k-l+i), treated as a polynomial identity
    // in n.
    auto rising = [&](int j) {
        Poly p = Poly::constant(1);
        for (int i = 1; i <= j; ++i)
            p = p * Poly::linear(Rat(i - k - l), Rat(1));
        return p;
    };

    Rat half_lkc = Rat(factorial(l) * factorial(k) * binomial(k, l)) / 2;
    if (l % 2 != 0) half_lkc = -half_lkc;
    Poly p = Poly::linear(-Rat(2 * k + 1), Rat(1)).scaled(half_lkc);

    p = p - rising(l).scaled(Rat(factorial(k)) / 2);

    Poly alt = Poly::zero();
    for (int j = 0; j <= l; ++j) {
        Poly term = rising(j).scaled(Rat(factorial(k - j)));
        alt = ((l - j) % 2 == 0) ? alt + term : alt - term;
    }
    p = p + alt.scaled(Rat(factorial(l) * binomial(k + 1, l + 1)));

    return EigPolynomial{k, l, std::move(p)};
}

ScanReport distinctness_scan(int n_lo, int n_hi, int k_lo, int k_hi) {
    ScanReport report;
    for (int n = n_lo; n <= n_hi; ++n)
        for (int k = std::max(1, k_lo); k <= k_hi; ++k) {
            if (2 * k >= n) continue;
            const WreathParams params = WreathParams::create(n, k);
            ScanEntry e;
            e.n = n;
            e.k = k;
            e.values.push_back(lambda1(params));
            if (k >= 2) {
                const bool general = !params.k_divides_n && params.g != 1;
                BTable table;
                if (general) table = b_table_formula(params);
                for (int l = 2; l <= k; ++l)
                    e.values.push_back(general
                                           ? lambda_from_b(params, l, table)
                                           : lambda_closed(params, l));
            }
            e.all_distinct = true;
            for (std::size_t i = 0; i < e.values.size(); ++i)
                for (std::size_t j = i + 1; j < e.values.size(); ++j)
                    if (e.values[i] == e.values[j]) {
                        e.all_distinct = false;
                        e.collisions.emplace_back(static_cast<int>(i + 1),
                                                  static_cast<int>(j + 1));
                    }
            report.entries.push_back(std::move(e));
        }
    return report;
}

}  // namespace wreath
