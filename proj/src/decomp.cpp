#include "wreath/decomp.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "wreath/enumerate.hpp"
#include "wreath/errors.hpp"
#include "wreath/kernel.hpp"
#include "wreath/spectral.hpp"

namespace wreath {

namespace {

// Dancing-links structure for Algorithm X. Column 0 is the root; columns
// 1..m are the k-subsets in ascending mask order, so the min-size tie-break
// on the leftmost column is the lowest subset rank.
struct Dlx {
    std::vector<int> left, right, up, down, col, row;
    std::vector<long> size;
    int root = 0;

    Dlx(long num_cols, const std::vector<std::vector<int>>& rows) {
        const int headers = static_cast<int>(num_cols) + 1;
        long num_nodes = headers;
        for (const auto& r : rows) num_nodes += static_cast<long>(r.size());
        left.resize(num_nodes);
        right.resize(num_nodes);
        up.resize(num_nodes);
        down.resize(num_nodes);
        col.resize(num_nodes);
        row.assign(num_nodes, -1);
        size.assign(headers, 0);

        for (int c = 0; c < headers; ++c) {
            left[c] = (c + headers - 1) % headers;
            right[c] = (c + 1) % headers;
            up[c] = c;
            down[c] = c;
            col[c] = c;
        }
        int next = headers;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            int first = -1;
            for (int c1 : rows[r]) {
                const int node = next++;
                col[node] = c1;
                row[node] = static_cast<int>(r);
                // append at the bottom of column c1
                up[node] = up[c1];
                down[node] = c1;
                down[up[c1]] = node;
                up[c1] = node;
                ++size[c1];
                if (first < 0) {
                    first = node;
                    left[node] = right[node] = node;
                } else {
                    left[node] = left[first];
                    right[node] = first;
                    right[left[first]] = node;
                    left[first] = node;
                }
            }
        }
    }

    void cover(int c) {
        right[left[c]] = right[c];
        left[right[c]] = left[c];
        for (int i = down[c]; i != c; i = down[i])
            for (int j = right[i]; j != i; j = right[j]) {
                down[up[j]] = down[j];
                up[down[j]] = up[j];
                --size[col[j]];
            }
    }

    void uncover(int c) {
        for (int i = up[c]; i != c; i = up[i])
            for (int j = left[i]; j != i; j = left[j]) {
                ++size[col[j]];
                down[up[j]] = j;
                up[down[j]] = j;
            }
        right[left[c]] = c;
        left[right[c]] = c;
    }

    int choose_column() const {
        int best = -1;
        for (int c = right[root]; c != root; c = right[c])
            if (best < 0 || size[c] < size[best]) best = c;
        return best;
    }

    void cover_row(int node) {
        for (int j = right[node]; j != node; j = right[j]) cover(col[j]);
    }

    void uncover_row(int node) {
        for (int j = left[node]; j != node; j = left[j]) uncover(col[j]);
    }

    // Node of the given row inside column c, or -1.
    int find_row_in_column(int c, int r) const {
        for (int i = down[c]; i != c; i = down[i])
            if (row[i] == r) return i;
        return -1;
    }
};

struct Frame {
    int col;
    int node;
};

void write_checkpoint(const std::string& path, const WreathParams& params,
                      const Dlx& dlx, const std::vector<Frame>& stack) {
    nlohmann::json j;
    j["n"] = params.n;
    j["k"] = params.k;
    std::vector<int> rows;
    rows.reserve(stack.size());
    for (const Frame& f : stack) rows.push_back(dlx.row[f.node]);
    j["rows"] = rows;
    std::ofstream out(path);
    if (!out) throw Error("cannot write checkpoint file " + path);
    out << j.dump() << "\n";
}

std::vector<int> read_checkpoint(const std::string& path,
                                 const WreathParams& params) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read checkpoint file " + path);
    nlohmann::json j;
    in >> j;
    if (j.value("n", -1) != params.n || j.value("k", -1) != params.k)
        throw Error("checkpoint was written for different (n,k)");
    return j.at("rows").get<std::vector<int>>();
}

}  // namespace

SearchResult find_decomposition(const WreathParams& params,
                                const std::vector<Wreath>& candidates,
                                const SearchBudget& budget) {
    const std::vector<SubsetMask> universe =
        all_k_subsets(params.n, params.k);
    std::unordered_map<SubsetMask, int> col_of;
    for (std::size_t i = 0; i < universe.size(); ++i)
        col_of[universe[i]] = static_cast<int>(i) + 1;

    std::vector<std::vector<int>> rows;
    rows.reserve(candidates.size());
    for (const Wreath& w : candidates) {
        std::vector<int> r;
        r.reserve(w.blocks.size());
        for (SubsetMask m : w.blocks) r.push_back(col_of.at(m));
        rows.push_back(std::move(r));
    }

    Dlx dlx(static_cast<long>(universe.size()), rows);
    std::vector<Frame> stack;

    if (!budget.resume_path.empty()) {
        for (int rid : read_checkpoint(budget.resume_path, params)) {
            if (rid < 0 || rid >= static_cast<int>(candidates.size()))
                throw Error("checkpoint row index out of range");
            const int c = dlx.choose_column();
            if (c < 0) throw Error("checkpoint deeper than the search tree");
            dlx.cover(c);
            const int node = dlx.find_row_in_column(c, rid);
            if (node < 0)
                throw Error("checkpoint row is not a candidate of the "
                            "deterministic column choice");
            stack.push_back({c, node});
            dlx.cover_row(node);
        }
    }

    const auto start = std::chrono::steady_clock::now();
    auto out_of_time = [&] {
        if (budget.max_seconds <= 0) return false;
        const std::chrono::duration<double> elapsed =
            std::chrono::steady_clock::now() - start;
        return elapsed.count() > budget.max_seconds;
    };

    SearchResult result;
    std::uint64_t& nodes = result.nodes;

    auto budget_exhausted = [&](const std::vector<Frame>& st) {
        if (!budget.checkpoint_path.empty())
            write_checkpoint(budget.checkpoint_path, params, dlx, st);
        result.status = SearchStatus::Budget;
        return result;
    };

    while (true) {
        if (dlx.right[dlx.root] == dlx.root) {
            Decomposition d;
            for (const Frame& f : stack)
                d.wreaths.push_back(candidates[dlx.row[f.node]]);
            std::sort(d.wreaths.begin(), d.wreaths.end());
            if (!verify_decomposition(params, d))
                throw Error("solver produced an unverifiable cover");
            result.status = SearchStatus::Found;
            result.decomposition = std::move(d);
            return result;
        }
        int c = dlx.choose_column();
        dlx.cover(c);
        int node = dlx.down[c];
        while (node == c) {
            dlx.uncover(c);
            if (stack.empty()) {
                result.status = SearchStatus::Exhausted;
                return result;
            }
            c = stack.back().col;
            node = stack.back().node;
            stack.pop_back();
            dlx.uncover_row(node);
            node = dlx.down[node];
        }
        ++nodes;
        if ((budget.max_nodes > 0 && nodes > budget.max_nodes) ||
            ((nodes & 1023) == 0 && out_of_time())) {
            dlx.uncover(c);
            return budget_exhausted(stack);
        }
        stack.push_back({c, node});
        dlx.cover_row(node);
    }
}

bool verify_decomposition(const WreathParams& params, const Decomposition& d) {
    if (Int(static_cast<long>(d.wreaths.size())) != params.target_count)
        return false;
    std::unordered_set<SubsetMask> blocks;
    long total = 0;
    for (const Wreath& w : d.wreaths)
        for (SubsetMask m : w.blocks) {
            ++total;
            if (!blocks.insert(m).second) return false;  // duplicate block
        }
    return Int(total) == binomial(params.n, params.k);
}

std::vector<Rat> condition_b_vector(const WreathParams& params,
                                    const Decomposition& d,
                                    const std::vector<Wreath>& wreaths) {
    if (!verify_decomposition(params, d))
        throw NotADecomposition("condition (b) vector needs a decomposition");
    const Int n_total = Int(static_cast<long>(wreaths.size()));
    const Int& c = params.target_count;

    std::vector<Rat> v(wreaths.size(), Rat(-c));
    for (const Wreath& w : d.wreaths) {
        const long idx = wreath_index(wreaths, w);
        if (idx < 0)
            throw NotADecomposition(
                "decomposition wreath missing from the canonical enumeration");
        v[idx] = Rat(n_total - c);
    }

    if (!is_in_kernel_dense(params, v, wreaths))
        throw Error("condition (b) vector escaped the kernel; counting bug");
    long hits = 0;
    for (const Rat& x : v)
        if (x == Rat(n_total - c)) ++hits;
    if (Int(hits) != c)
        throw Error("condition (b) vector has the wrong value pattern");
    return v;
}

bool check_condition_c(const WreathParams& params, const std::vector<Rat>& v,
                       const std::vector<Wreath>& wreaths) {
    if (!is_in_kernel_dense(params, v, wreaths))
        throw NotInKernel("condition (c) input is not a kernel vector");
    Int positives = 0, zeros = 0;
    for (const Rat& x : v) {
        if (x > 0) ++positives;
        if (x == 0) ++zeros;
    }
    const Int pos_threshold = params.k_divides_n
                                  ? binomial(params.n - 1, params.k - 1)
                                  : params.target_count;
    return positives <= pos_threshold && zeros < containing_count(params);
}

bool check_condition_d(const WreathParams& params, const std::vector<Rat>& v,
                       const std::vector<Wreath>& wreaths) {
    if (!is_in_kernel_dense(params, v, wreaths))
        throw NotInKernel("condition (d) input is not a kernel vector");
    if (v.size() != wreaths.size())
        throw DimensionMismatch("vector does not match wreath list");
    std::unordered_set<SubsetMask> negative_cover;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] < 0)
            negative_cover.insert(wreaths[i].blocks.begin(),
                                  wreaths[i].blocks.end());
    return Int(static_cast<long>(negative_cover.size())) ==
           binomial(params.n, params.k);
}

Decomposition decomposition_from_d(const WreathParams& params,
                                   const std::vector<Rat>& v,
                                   const std::vector<Wreath>& wreaths) {
    if (v.size() != wreaths.size())
        throw DimensionMismatch("vector does not match wreath list");
    Decomposition d;
    std::unordered_set<SubsetMask> covered;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] > 0) {
            d.wreaths.push_back(wreaths[i]);
            covered.insert(wreaths[i].blocks.begin(),
                           wreaths[i].blocks.end());
        }
    for (SubsetMask m : all_k_subsets(params.n, params.k))
        if (!covered.count(m))
            throw ExtractionFailed(
                "a subset is covered by no positive-entry wreath", m);
    if (!verify_decomposition(params, d))
        throw ExtractionFailed(
            "positive-entry wreaths do not form a decomposition", 0);
    return d;
}

DHBoundReport dh_bound(const WreathParams& params) {
    if (2 * params.k >= params.n)
        throw HypothesisViolated("the ratio bound setup needs k < n/2");
    DHBoundReport r;
    r.wreath_count = wreath_count(params);
    const Int l1 = lambda1(params);
    r.lambda1_tilde = l1 - params.wreath_len;
    r.lambda_min = Rat(-params.wreath_len);
    // -lambda_min / (lambda1_tilde - lambda_min) * N = (n/g) N / lambda_1(M)
    r.bound = Rat(Int(params.wreath_len) * r.wreath_count) / Rat(l1);
    r.bound.canonicalize();
    r.c = params.target_count;
    if (r.bound != Rat(r.c))
        throw Error("ratio bound disagrees with g*C(n,k)/n; formula bug");
    return r;
}

}  // namespace wreath
