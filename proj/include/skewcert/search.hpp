#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewcert/bounds.hpp"
#include "skewcert/families.hpp"
#include "skewcert/rng.hpp"

namespace skewcert {

enum class GridKind { sets, subspaces };
enum class ConditionMode { weak_disjoint, direct_sum, threshold };

std::string to_string(GridKind kind);
std::string to_string(ConditionMode mode);

struct SearchConfig {
    GridKind kind = GridKind::sets;
    std::vector<int> ell;
    int ground_size = 0;               // sets
    int ambient_dim = 0;               // subspaces
    std::uint64_t prime = kDefaultPrime;
    ConditionMode mode = ConditionMode::weak_disjoint;
    int t = 0;                         // threshold mode only
    std::uint64_t node_budget = 50'000'000;
    double time_budget_seconds = 0.0;  // 0 = unlimited; a timed-out run is never "exhausted"
    int parallel_width = 1;
    std::uint64_t seed = 1;            // randomized searches only
};

struct SearchOutcome {
    int max_m_found = 0;
    std::optional<SetGrid> witness_sets;
    std::optional<SubspaceGrid> witness_subspaces;
    bool exhausted = false;  // true only when max_m_found is provably the maximum
    std::uint64_t nodes_visited = 0;
    BigInt proved_bound;       // theorem-backed cap for the configured mode
    BigInt conjectured_bound;  // open-conjecture cap (equals proved when none is open)
    bool exceeds_conjectured = false;
};

/// Exhaustive depth-first search for the largest family valid under the
/// configured mode. Rows are enumerated in a documented lexicographic order
/// (cells compared as sorted element sequences; subspace cells by dimension,
/// then basis entries), candidates are pruned through precomputed pairwise
/// compatibility bitsets, and in set mode the first row is restricted to
/// canonical representatives under ground-element relabeling. Reaching the
/// proved bound ends the search early with exhausted = true; running out of
/// node budget returns the best family found with exhausted = false.
SearchOutcome max_family_search(const SearchConfig& cfg);

/// A permutation pi such that rows pi[0], pi[1], ... satisfy the cross
/// condition, or nullopt when no order works. Backtracking over positions
/// with memoized pairwise compatibility. Rows must individually satisfy the
/// size bounds and the within-row condition for the mode.
std::optional<std::vector<int>> order_rows(const SetGrid& g,
                                           ConditionMode mode = ConditionMode::weak_disjoint,
                                           int t = 0);
std::optional<std::vector<int>> order_rows(const SubspaceGrid& g,
                                           ConditionMode mode = ConditionMode::weak_disjoint,
                                           int t = 0);

/// All ordered partitions of [sum ell] into blocks of sizes ell_1..ell_k,
/// ordered by order_rows. When an order exists the returned family meets the
/// multinomial bound with equality; nullopt when no order works.
std::optional<SetGrid> ordered_partition_family(const std::vector<int>& ell);

/// Randomized hunt for subspace families that would exceed the conjectured
/// (multinomial-form) bound: seeded greedy row addition with local drops and
/// restarts until the node budget is spent. Any returned family is re-checked
/// against the full condition suite, and exceeding the *proved* bound is
/// reported as an internal error rather than a discovery.
SearchOutcome counterexample_hunt(const SearchConfig& cfg, RandomStream& rng);

/// Every dim-d subspace of F_p^n exactly once, in a deterministic order
/// (RREF pivot-column choice, then free entries). Sizes grow like Gaussian
/// binomials; intended for tiny p and n.
std::vector<Subspace> enumerate_subspaces(PrimeField field, int n, int d);

}  // namespace skewcert
