#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wreath/numeric.hpp"
#include "wreath/params.hpp"
#include "wreath/wreath.hpp"

namespace wreath {

// Exactly c wreaths whose blocks partition all k-subsets.
struct Decomposition {
    std::vector<Wreath> wreaths;
};

enum class SearchStatus { Found, Exhausted, Budget };

struct SearchBudget {
    std::uint64_t max_nodes = 10'000'000;  // row trials
    double max_seconds = 0;                // 0 = unlimited
    std::string checkpoint_path;           // written when the budget runs out
    std::string resume_path;               // replayed before searching
};

struct SearchResult {
    SearchStatus status = SearchStatus::Exhausted;
    Decomposition decomposition;
    std::uint64_t nodes = 0;
};

// Exact-cover search (Algorithm X on dancing links) over the universe of
// k-subsets with the given wreaths as candidate rows. Deterministic: columns
// are chosen by minimum remaining candidates with ties to the lowest subset
// rank, rows tried in canonical order. A returned decomposition is always
// verified.
SearchResult find_decomposition(const WreathParams& params,
                                const std::vector<Wreath>& candidates,
                                const SearchBudget& budget);

// |D| = c, all blocks pairwise distinct, total block count C(n,k).
bool verify_decomposition(const WreathParams& params, const Decomposition& d);

// The Delsarte-Hoffman equality vector scaled by N: entries N-c on the
// decomposition's wreaths and -c elsewhere. Checked to lie in the kernel
// with exactly c entries equal to N-c.
std::vector<Rat> condition_b_vector(const WreathParams& params,
                                    const Decomposition& d,
                                    const std::vector<Wreath>& wreaths);

// Kernel vector with at most c positive entries and fewer zeros than the
// number of wreaths through a fixed subset (regime-correct thresholds). The
// vector is evaluated exactly as supplied; no sign normalization.
bool check_condition_c(const WreathParams& params, const std::vector<Rat>& v,
                       const std::vector<Wreath>& wreaths);

// Every k-subset lies in some wreath labelling a negative entry.
bool check_condition_d(const WreathParams& params, const std::vector<Rat>& v,
                       const std::vector<Wreath>& wreaths);

// Extracts the wreaths labelling positive entries and verifies they form a
// decomposition; an uncovered subset is reported as ExtractionFailed.
Decomposition decomposition_from_d(const WreathParams& params,
                                   const std::vector<Rat>& v,
                                   const std::vector<Wreath>& wreaths);

struct DHBoundReport {
    Int wreath_count;   // N
    Int lambda1_tilde;  // lambda_1(M) - n/g
    Rat lambda_min;     // -n/g
    Rat bound;          // -lambda_min / (lambda1_tilde - lambda_min) * N
    Int c;              // g*C(n,k)/n
};

// Evaluates the ratio bound for the non-disjointness graph and checks it
// equals c exactly. Requires k < n/2.
DHBoundReport dh_bound(const WreathParams& params);

}  // namespace wreath
