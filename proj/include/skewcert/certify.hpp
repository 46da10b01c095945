#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "skewcert/bounds.hpp"
#include "skewcert/exterior.hpp"
#include "skewcert/families.hpp"

namespace skewcert {

inline constexpr int kDefaultRetryBudget = 32;

/// One verified generic map per column pair (a, b), a < b: a random matrix
/// from the grid's ambient space onto a block of dimension ell_a + ell_b,
/// redrawn until it provably preserves the dimensions of the column-a and
/// column-b cells and all of their pairwise meets. Blocks sit side by side
/// (lexicographic pair order) inside a direct sum of dimension dim_v.
struct GenericMapBundle {
    std::vector<std::pair<int, int>> pairs;  // 0-based column pairs, lex order
    std::vector<Matrix> maps;                // maps[i]: (ell_a+ell_b) x ambient
    std::vector<int> block_offsets;
    int dim_v = 0;
    std::uint64_t seed = 0;
    std::vector<int> retries;  // redraws per map (0 = first draw verified)
};

enum class Verdict { certified, refuted_input, sampling_failed };

std::string to_string(Verdict v);

/// Replayable proof object: (family, seed) fully determine every field. The
/// verdict is `certified` exactly when the pairing matrix has zero entries at
/// every (i, i') with i < i' and a nonzero diagonal, which witnesses linear
/// independence of the m wedge vectors and hence m <= bound.
struct Certificate {
    std::string family_fingerprint;
    std::uint64_t seed = 0;
    std::uint64_t prime = 0;
    BigInt bound;  // bound_pairwise(ell)
    std::vector<std::vector<Scalar>> pairing;  // m x m, row i column i'
    Verdict verdict = Verdict::refuted_input;
    int m = 0;
    std::vector<ConditionReport> reports;  // precondition reports when refuted
    std::string failure_reason;            // set when sampling failed
};

/// Draw and verify the per-pair generic maps. Precondition: g passes
/// check_dim_bounds (throws std::invalid_argument otherwise). Throws
/// SamplingExhausted when some map fails verification retry_budget times;
/// the exception names the property that failed last.
GenericMapBundle sample_generic_maps(const SubspaceGrid& g, RandomStream& rng,
                                     int retry_budget = kDefaultRetryBudget);

/// The two witness families: v_i wedges the embedded images of row i's
/// column-a cells over all pairs (a, b); w_i those of the column-b cells.
std::pair<std::vector<ExteriorVector>, std::vector<ExteriorVector>> build_witness_vectors(
    const SubspaceGrid& g, const GenericMapBundle& bundle);

/// pairing[i][i'] = top-grade scalar of v_i wedge w_{i'}.
std::vector<std::vector<Scalar>> pairing_matrix(const std::vector<ExteriorVector>& v,
                                                const std::vector<ExteriorVector>& w);

/// Extend every cell with seeded random vectors until dim = ell_j (enlarging
/// the ambient to max(ambient, sum ell) first), re-verifying disjointness and
/// the cross condition after each attempt. Grids already at full dimension
/// are returned unchanged without consuming randomness.
SubspaceGrid pad_to_full_dims(const SubspaceGrid& g, RandomStream& rng,
                              int retry_budget = kDefaultRetryBudget);

/// Full pipeline: precondition checks, padding, generic maps, witnesses,
/// pairing, verdict. Never throws for invalid input or exhausted sampling;
/// those become the refuted_input / sampling_failed verdicts.
Certificate certify_second_remedy(const SubspaceGrid& g, std::uint64_t seed,
                                  int retry_budget = kDefaultRetryBudget);

/// The three facts of the rank-2 example that defeats the naive wedge claim:
/// a row of pairwise disjoint lines whose sum still collapses, annihilating
/// the triple wedge.
struct MistakeReport {
    bool pairwise_disjoint = false;
    int sum_dim = 0;
    bool triple_wedge_zero = false;
};

MistakeReport demo_mistake();

/// Intersect every cell with one shared generic subspace of codimension t,
/// verified to shave exactly t off every cell dimension and every pairwise
/// meet (floored at 0). Output ell is ell - t, so threshold-form conditions
/// on the input become the plain conditions on the output. t = 0 returns the
/// input untouched.
SubspaceGrid threshold_reduce(const SubspaceGrid& g, int t, RandomStream& rng,
                              int retry_budget = kDefaultRetryBudget);

/// The naive per-column construction: one verified map T_j per column j < k,
/// v_i wedging T_j(U_ij) and w_i wedging T_j(U_ir) for r > j. Kept for
/// experiments; its diagonal can vanish when a row is disjoint but not a
/// direct sum, which is exactly what demo_mistake exhibits. Codomain
/// dimensions default to sum_{r>=j} ell_r and can be overridden (no canonical
/// choice exists).
std::pair<std::vector<ExteriorVector>, std::vector<ExteriorVector>> per_column_witnesses(
    const SubspaceGrid& g, std::vector<int> codomain_dims, RandomStream& rng,
    int retry_budget = kDefaultRetryBudget);

}  // namespace skewcert
