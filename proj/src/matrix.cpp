#include "wreath/matrix.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <thread>

#include "wreath/enumerate.hpp"
#include "wreath/errors.hpp"

namespace wreath {

namespace {

int common_blocks(const Wreath& a, const Wreath& b) {
    int count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.blocks.size() && j < b.blocks.size()) {
        if (a.blocks[i] == b.blocks[j]) {
            ++count;
            ++i;
            ++j;
        } else if (a.blocks[i] < b.blocks[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return count;
}

// Rows of the incidence structure: for each subset mask, the wreath indices
// containing it.
std::map<SubsetMask, std::vector<long>> subset_supports(
    const std::vector<Wreath>& wreaths) {
    std::map<SubsetMask, std::vector<long>> supports;
    for (long i = 0; i < static_cast<long>(wreaths.size()); ++i)
        for (SubsetMask m : wreaths[i].blocks) supports[m].push_back(i);
    return supports;
}

}  // namespace

ExactMatrix ExactMatrix::identity(long n) {
    ExactMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool ExactMatrix::is_symmetric() const {
    if (rows != cols) return false;
    for (long i = 0; i < rows; ++i)
        for (long j = i + 1; j < cols; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool ExactMatrix::is_zero() const {
    for (const Int& v : a)
        if (v != 0) return false;
    return true;
}

Int ExactMatrix::trace() const {
    Int t = 0;
    for (long i = 0; i < std::min(rows, cols); ++i) t += at(i, i);
    return t;
}

Int ExactMatrix::row_sum(long r) const {
    Int s = 0;
    for (long j = 0; j < cols; ++j) s += at(r, j);
    return s;
}

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols != b.rows) throw DimensionMismatch("matrix product shapes");
    ExactMatrix out(a.rows, b.cols);
    for (long i = 0; i < a.rows; ++i)
        for (long l = 0; l < a.cols; ++l) {
            const Int& av = a.at(i, l);
            if (av == 0) continue;
            for (long j = 0; j < b.cols; ++j)
                mpz_addmul(out.at(i, j).get_mpz_t(), av.get_mpz_t(),
                           b.at(l, j).get_mpz_t());
        }
    return out;
}

ExactMatrix shift_diagonal(const ExactMatrix& a, const Int& s) {
    ExactMatrix out = a;
    for (long i = 0; i < std::min(a.rows, a.cols); ++i) out.at(i, i) -= s;
    return out;
}

ExactMatrix build_wreath_matrix(const std::vector<Wreath>& wreaths,
                                const Caps& caps, int jobs) {
    const long n = static_cast<long>(wreaths.size());
    if (n > caps.matrix_cap)
        throw CapExceeded("wreath count " + std::to_string(n) +
                          " exceeds the matrix cap " +
                          std::to_string(caps.matrix_cap));
    ExactMatrix m(n, n);
    auto fill_rows = [&](long lo, long hi) {
        for (long i = lo; i < hi; ++i)
            for (long j = i; j < n; ++j)
                m.at(i, j) = common_blocks(wreaths[i], wreaths[j]);
    };
    jobs = std::max(1, jobs);
    if (jobs == 1 || n < 64) {
        fill_rows(0, n);
    } else {
        std::vector<std::thread> workers;
        const long chunk = (n + jobs - 1) / jobs;
        for (int w = 0; w < jobs; ++w) {
            const long lo = w * chunk;
            if (lo >= n) break;
            workers.emplace_back(fill_rows, lo, std::min(n, lo + chunk));
        }
        for (auto& t : workers) t.join();
    }
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < i; ++j) m.at(i, j) = m.at(j, i);
    return m;
}

std::vector<Int> build_incidence(const WreathParams& params, SubsetMask subset,
                                 const std::vector<Wreath>& wreaths) {
    if (__builtin_popcount(subset) != params.k || (subset >> params.n) != 0)
        throw BadSubsetSize("incidence subset is not a k-subset");
    std::vector<Int> v(wreaths.size());
    for (std::size_t i = 0; i < wreaths.size(); ++i)
        if (wreaths[i].contains_block(subset)) v[i] = 1;
    return v;
}

bool verify_rank_one_decomposition(const ExactMatrix& m,
                                   const WreathParams& params,
                                   const std::vector<Wreath>& wreaths,
                                   int psd_samples) {
    const long n = static_cast<long>(wreaths.size());
    if (m.rows != n || m.cols != n)
        throw DimensionMismatch("matrix does not match wreath list");

    auto supports = subset_supports(wreaths);
    if (supports.size() != all_k_subsets(params.n, params.k).size())
        return false;  // some subset lies in no wreath; cannot match M

    ExactMatrix sum(n, n);
    for (const auto& [mask, rows] : supports)
        for (long i : rows)
            for (long j : rows) sum.at(i, j) += 1;
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            if (sum.at(i, j) != m.at(i, j)) return false;

    // v^t M v computed two ways: directly, and as sum_T <w_T,v>^2. Equality
    // plus nonnegativity certifies the quadratic form on these samples.
    std::mt19937_64 rng(0x77AE5EED);
    std::uniform_int_distribution<int> dist(-9, 9);
    for (int s = 0; s < psd_samples; ++s) {
        std::vector<Int> v(n);
        for (long i = 0; i < n; ++i) v[i] = dist(rng);
        Int direct = 0;
        for (long i = 0; i < n; ++i) {
            if (v[i] == 0) continue;
            Int row = 0;
            for (long j = 0; j < n; ++j)
                mpz_addmul(row.get_mpz_t(), m.at(i, j).get_mpz_t(),
                           v[j].get_mpz_t());
            direct += v[i] * row;
        }
        Int by_squares = 0;
        for (const auto& [mask, rows] : supports) {
            Int dot = 0;
            for (long i : rows) dot += v[i];
            by_squares += dot * dot;
        }
        if (direct != by_squares || direct < 0) return false;
    }
    return true;
}

namespace {

// Fraction-free elimination; returns the row-echelon form and pivot columns.
// Intermediate entries stay integral (each step divides exactly by the
// previous pivot). Pivot rows are chosen by least absolute value to slow
// coefficient growth.
struct EchelonResult {
    ExactMatrix m;
    std::vector<std::pair<long, long>> pivots;  // (row, col)
};

EchelonResult bareiss_echelon(ExactMatrix m) {
    EchelonResult res;
    long r = 0;
    Int prev = 1;
    Int num, tmp;
    for (long c = 0; c < m.cols && r < m.rows; ++c) {
        long pivot = -1;
        for (long i = r; i < m.rows; ++i) {
            if (m.at(i, c) == 0) continue;
            if (pivot < 0 ||
                mpz_cmpabs(m.at(i, c).get_mpz_t(),
                           m.at(pivot, c).get_mpz_t()) < 0)
                pivot = i;
        }
        if (pivot < 0) continue;
        if (pivot != r)
            for (long j = 0; j < m.cols; ++j)
                std::swap(m.at(r, j), m.at(pivot, j));
        const Int& p = m.at(r, c);
        for (long i = r + 1; i < m.rows; ++i) {
            const Int& f = m.at(i, c);
            if (f == 0) {
                if (prev != 1)
                    for (long j = c + 1; j < m.cols; ++j) {
                        mpz_mul(num.get_mpz_t(), p.get_mpz_t(),
                                m.at(i, j).get_mpz_t());
                        mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(),
                                     prev.get_mpz_t());
                    }
                else
                    for (long j = c + 1; j < m.cols; ++j)
                        m.at(i, j) *= p;
                continue;
            }
            for (long j = c + 1; j < m.cols; ++j) {
                mpz_mul(num.get_mpz_t(), p.get_mpz_t(), m.at(i, j).get_mpz_t());
                mpz_mul(tmp.get_mpz_t(), f.get_mpz_t(), m.at(r, j).get_mpz_t());
                mpz_sub(num.get_mpz_t(), num.get_mpz_t(), tmp.get_mpz_t());
                if (prev != 1)
                    mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(),
                                 prev.get_mpz_t());
                else
                    mpz_swap(m.at(i, j).get_mpz_t(), num.get_mpz_t());
            }
            m.at(i, c) = 0;
        }
        prev = p;
        res.pivots.emplace_back(r, c);
        ++r;
    }
    res.m = std::move(m);
    return res;
}

}  // namespace

long exact_rank(ExactMatrix m) {
    return static_cast<long>(bareiss_echelon(std::move(m)).pivots.size());
}

std::vector<std::vector<Rat>> exact_nullspace(const ExactMatrix& m) {
    EchelonResult ech = bareiss_echelon(m);
    const long cols = m.cols;
    std::vector<bool> is_pivot_col(cols, false);
    for (auto [r, c] : ech.pivots) is_pivot_col[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (long f = 0; f < cols; ++f) {
        if (is_pivot_col[f]) continue;
        std::vector<Rat> x(cols, Rat(0));
        x[f] = 1;
        // Back-substitute through the echelon rows above the free column.
        for (long t = static_cast<long>(ech.pivots.size()) - 1; t >= 0; --t) {
            auto [pr, pc] = ech.pivots[t];
            if (pc > f) continue;
            Rat acc(0);
            for (long j = pc + 1; j <= f; ++j) {
                if (ech.m.at(pr, j) == 0 || x[j] == 0) continue;
                acc += Rat(ech.m.at(pr, j)) * x[j];
            }
            x[pc] = -acc / Rat(ech.m.at(pr, pc));
            x[pc].canonicalize();
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

bool eigen_certify(const ExactMatrix& m,
                   const std::vector<std::pair<Int, Int>>& claimed) {
    if (m.rows != m.cols) throw DimensionMismatch("certification needs square");
    // Merge multiplicities of equal claimed values.
    std::map<Int, Int> merged;
    Int total = 0;
    for (const auto& [value, mult] : claimed) {
        merged[value] += mult;
        total += mult;
    }
    if (total != m.rows)
        throw DimensionMismatch("multiplicities must sum to the dimension");

    for (const auto& [value, mult] : merged) {
        const Int expected_rank = Int(m.rows) - mult;
        if (exact_rank(shift_diagonal(m, value)) != expected_rank.get_si())
            return false;
    }

    // Product of all (M - lambda I) must annihilate the image of M.
    ExactMatrix prod = ExactMatrix::identity(m.rows);
    for (const auto& [value, mult] : merged)
        prod = mat_mul(prod, shift_diagonal(m, value));
    return mat_mul(prod, m).is_zero();
}

}  // namespace wreath
