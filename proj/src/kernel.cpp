#include "wreath/kernel.hpp"

#include <algorithm>
#include <map>

#include "wreath/enumerate.hpp"
#include "wreath/errors.hpp"

namespace wreath {

namespace {

constexpr long kSubgroupCap = 5040;

void require_kernel_check(const WreathParams& params,
                          const SparseKernelVector& v, const char* what) {
    if (!is_in_kernel(params, v))
        throw KernelCheckFailed(std::string(what) +
                                " failed its own orthogonality check");
}

}  // namespace

void SparseKernelVector::add(const Wreath& w, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(w, c);
    if (!inserted) {
        it->second += c;
        it->second.canonicalize();
        if (it->second == 0) terms.erase(it);
    }
}

SparseKernelVector build_x_a(const WreathParams& params, int a) {
    const int n = params.n;
    if (a < 2 || 2 * a > n)
        throw HypothesisViolated("x_a needs 2 <= a <= n/2");
    if (a == params.k)
        throw HypothesisViolated("x_a needs a distinct from k");

    const Perm id = Perm::identity(n);
    const Perm t1 = Perm::adjacent_transposition(n, 1);
    const Perm ta = Perm::adjacent_transposition(n, a + 1);

    SparseKernelVector v;
    v.add(wreath_of_perm(params, id), Rat(1));
    v.add(wreath_of_perm(params, t1), Rat(-1));
    v.add(wreath_of_perm(params, ta), Rat(-1));
    v.add(wreath_of_perm(params, t1.compose(ta)), Rat(1));
    require_kernel_check(params, v, "x_a");
    return v;
}

SparseKernelVector build_y_a(const WreathParams& params, int a,
                             const Wreath& w, const Caps& caps) {
    if (a < 3 || a > params.n)
        throw HypothesisViolated("y_a needs 3 <= a <= n");
    if (factorial(a) > caps.term_cap)
        throw CapExceeded("a! exceeds the term cap");

    SparseKernelVector v;
    Perm p = Perm::identity(params.n);
    std::sort(p.img.begin(), p.img.begin() + a);
    bool added = false;
    do {
        v.add(apply_perm(p, w), Rat(p.sign()));
        added = true;
    } while (std::next_permutation(p.img.begin(), p.img.begin() + a));
    v.all_cancelled = added && v.terms.empty();
    require_kernel_check(params, v, "y_a");
    return v;
}

CharacterSpec CharacterSpec::sign_character(int n, int a) {
    CharacterSpec spec;
    Perm p = Perm::identity(n);
    do {
        spec.elements.push_back(p);
        spec.values.push_back(p.sign());
    } while (std::next_permutation(p.img.begin(), p.img.begin() + a));
    return spec;
}

namespace {

void validate_character(const CharacterSpec& spec, int n) {
    const auto size = spec.elements.size();
    if (size == 0 || size != spec.values.size())
        throw InvalidCharacter("empty or ragged character table");
    if (static_cast<long>(size) > kSubgroupCap)
        throw CapExceeded("subgroup larger than the element-list cap");

    std::map<Perm, std::size_t> index;
    for (std::size_t i = 0; i < size; ++i) {
        if (spec.elements[i].size() != n || !spec.elements[i].is_valid())
            throw InvalidCharacter("element is not a permutation of {1..n}");
        if (spec.values[i] != 1 && spec.values[i] != -1)
            throw InvalidCharacter("character values must be +1 or -1");
        if (!index.emplace(spec.elements[i], i).second)
            throw InvalidCharacter("duplicate group element");
    }
    if (!index.count(Perm::identity(n)))
        throw InvalidCharacter("identity element missing");
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) {
            auto it = index.find(spec.elements[i].compose(spec.elements[j]));
            if (it == index.end())
                throw InvalidCharacter("element list is not closed");
            if (spec.values[it->second] != spec.values[i] * spec.values[j])
                throw InvalidCharacter("values are not a homomorphism");
        }
}

}  // namespace

SparseKernelVector build_char_vector(const WreathParams& params,
                                     const CharacterSpec& spec,
                                     const Wreath& w) {
    validate_character(spec, params.n);

    // Hypothesis of the character construction: the restriction to every
    // block stabilizer is nontrivial, i.e. the +/-1 values over the
    // stabilizer of each subset T sum to zero.
    for (SubsetMask t : all_k_subsets(params.n, params.k)) {
        long sum = 0;
        for (std::size_t i = 0; i < spec.elements.size(); ++i)
            if (spec.elements[i].apply_mask(t) == t) sum += spec.values[i];
        if (sum != 0)
            throw HypothesisFailed(
                "character restricts trivially on the stabilizer of a subset",
                t);
    }

    SparseKernelVector v;
    for (std::size_t i = 0; i < spec.elements.size(); ++i)
        v.add(apply_perm(spec.elements[i], w), Rat(spec.values[i]));
    v.all_cancelled = v.terms.empty();
    require_kernel_check(params, v, "character vector");
    return v;
}

bool is_in_kernel(const WreathParams&, const SparseKernelVector& v) {
    // <v, w_T> accumulated per block over the support; subsets outside the
    // support contribute zero trivially.
    std::map<SubsetMask, Rat> sums;
    for (const auto& [w, c] : v.terms)
        for (SubsetMask m : w.blocks) {
            auto [it, inserted] = sums.emplace(m, c);
            if (!inserted) it->second += c;
        }
    for (auto& [m, s] : sums) {
        s.canonicalize();
        if (s != 0) return false;
    }
    return true;
}

bool is_in_kernel_dense(const WreathParams&, const std::vector<Rat>& v,
                        const std::vector<Wreath>& wreaths) {
    if (v.size() != wreaths.size())
        throw DimensionMismatch("vector does not match wreath list");
    std::map<SubsetMask, Rat> sums;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (SubsetMask m : wreaths[i].blocks) {
            auto [it, inserted] = sums.emplace(m, v[i]);
            if (!inserted) it->second += v[i];
        }
    }
    for (auto& [m, s] : sums) {
        s.canonicalize();
        if (s != 0) return false;
    }
    return true;
}

Int kernel_dimension(const WreathParams& params) {
    if (2 * params.k >= params.n)
        throw HypothesisViolated("kernel dimension formula needs k < n/2");
    return wreath_count(params) -
           (binomial(params.n, params.k) - params.n + 1);
}

}  // namespace wreath
