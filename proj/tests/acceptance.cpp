// Acceptance suite: eight end-to-end criteria, one pass/fail line each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "skewcert/certify.hpp"
#include "skewcert/errors.hpp"
#include "skewcert/search.hpp"
#include "skewcert/serialize.hpp"
#include "test_util.hpp"

using namespace skewcert;
using testutil::coplanar_lines_grid;
using testutil::fatten_for_threshold;
using testutil::random_partition_grid;
using testutil::seeded_intersection_grid;

namespace {

struct Criterion {
    int number;
    std::string name;
    double time_limit_seconds;
    std::function<bool(std::ostream&)> run;
};

bool run_criterion(const Criterion& c) {
    std::ostringstream detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        ok = c.run(detail);
    } catch (const std::exception& e) {
        detail << "exception: " << e.what();
        ok = false;
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    const bool in_time = elapsed.count() < c.time_limit_seconds;
    std::printf("[%s] criterion %d: %s (%s; %.2fs / limit %.0fs)\n",
                ok && in_time ? "PASS" : "FAIL", c.number, c.name.c_str(),
                detail.str().c_str(), elapsed.count(), c.time_limit_seconds);
    return ok && in_time;
}

const PrimeField kF(1009);

// 1. The rank-2 counterexample row: disjoint, sum collapses, wedge dies.
bool criterion_mistake(std::ostream& detail) {
    const MistakeReport rep = demo_mistake();
    detail << "pairwise_disjoint=" << rep.pairwise_disjoint << " sum_dim=" << rep.sum_dim
           << " triple_wedge_zero=" << rep.triple_wedge_zero;
    return rep.pairwise_disjoint && rep.sum_dim == 2 && rep.triple_wedge_zero;
}

// 2. is_zero(wedge(A)^wedge(B)) <=> meet(A,B) nontrivial, on 500 random pairs.
bool criterion_duality(std::ostream& detail) {
    RandomStream rng(2024);
    int checked = 0, exceptions = 0, intersecting = 0;
    for (int round = 0; round < 500; ++round) {
        const int n = 2 + static_cast<int>(rng.uniform_below(7));  // ambient <= 8
        const int da = 1 + static_cast<int>(rng.uniform_below(std::min(4, n)));
        const int db = 1 + static_cast<int>(rng.uniform_below(std::min(4, n)));
        Subspace a = random_subspace(kF, n, da, rng);
        Subspace b = random_subspace(kF, n, db, rng);
        if (round % 2 == 0 && da + db <= n) {
            const Subspace common = random_subspace(kF, n, 1, rng);
            a = subspace_sum(a, common);
            b = subspace_sum(b, common);
        }
        const bool annihilates = is_zero(wedge(wedge_of_subspace(a), wedge_of_subspace(b)));
        const bool meets = intersection_dim(a, b) > 0;
        if (meets) ++intersecting;
        if (annihilates != meets) ++exceptions;
        ++checked;
    }
    detail << "pairs=" << checked << " intersecting=" << intersecting
           << " exceptions=" << exceptions;
    return checked == 500 && exceptions == 0 && intersecting > 0 && intersecting < 500;
}

// 3. Certificates on 50 constructed valid grids plus the full ordered-partition
// family: certified, strictly triangular pairing, both bound routes agree.
bool criterion_triangularity(std::ostream& detail) {
    const std::vector<std::vector<int>> shapes{{1, 1},    {1, 2},    {2, 2},    {1, 1, 1},
                                               {1, 1, 2}, {1, 2, 2}, {2, 2, 2}};
    RandomStream rng(777);
    int certified = 0;
    for (int i = 0; i < 50; ++i) {
        const std::vector<int>& ell = shapes[i % shapes.size()];
        SubspaceGrid grid = [&] {
            if (ell.size() == 3 && i % 5 == 0)
                return coplanar_lines_grid(kF, 1 + static_cast<int>(rng.uniform_below(6)), rng,
                                           i % 2 == 0);
            const BigInt cap = bound_multinomial(ell);
            const int max_m = cap < 6 ? static_cast<int>(cap) : 6;
            return random_partition_grid(ell, 1 + static_cast<int>(rng.uniform_below(max_m)), kF,
                                         rng, i % 2 == 0);
        }();

        const Certificate cert = certify_second_remedy(grid, 5000 + i);
        if (cert.verdict != Verdict::certified) {
            detail << "grid " << i << " not certified";
            return false;
        }
        for (int r = 0; r < cert.m; ++r) {
            if (cert.pairing[r][r] == 0) {
                detail << "grid " << i << " has a zero diagonal entry";
                return false;
            }
            for (int c = r + 1; c < cert.m; ++c)
                if (cert.pairing[r][c] != 0) {
                    detail << "grid " << i << " breaks triangularity";
                    return false;
                }
        }
        BigInt dim_product = 1;
        for (std::size_t a = 0; a < grid.ell().size(); ++a)
            for (std::size_t b = a + 1; b < grid.ell().size(); ++b)
                dim_product *= binomial_pascal(grid.ell()[a] + grid.ell()[b], grid.ell()[a]);
        if (cert.bound != bound_pairwise(grid.ell()) || cert.bound != dim_product) {
            detail << "grid " << i << " bound routes disagree";
            return false;
        }
        ++certified;
    }

    // The lifted ordered-partition family at ell = (1,1,1).
    const auto partitions = ordered_partition_family({1, 1, 1});
    if (!partitions || partitions->m() != 6) {
        detail << "partition family missing";
        return false;
    }
    const Certificate cert = certify_second_remedy(lift_sets(*partitions, kF), 4242);
    if (cert.verdict != Verdict::certified || cert.m != 6 || cert.bound != 8) {
        detail << "partition family certificate wrong";
        return false;
    }
    detail << "grids_certified=" << certified << " partition_family_m=" << cert.m
           << " bound=" << cert.bound.str();
    return certified == 50;
}

// 4. Bound formula cross-checks over the stated enumerations.
bool criterion_bounds(std::ostream& detail) {
    int checked_k2 = 0;
    for (int a = 1; a <= 11; ++a)
        for (int b = 1; a + b <= 12; ++b) {
            const std::vector<int> ell{a, b};
            const BigInt binom = binomial_pascal(a + b, a);
            if (bound_pairwise(ell) != binom || bound_multinomial(ell) != binom) {
                detail << "k=2 mismatch at (" << a << "," << b << ")";
                return false;
            }
            ++checked_k2;
        }

    int checked = 0;
    bool ok = true;
    std::function<void(std::vector<int>&, int)> sweep = [&](std::vector<int>& ell, int left) {
        if (!ok) return;
        if (ell.size() >= 2) {
            ok = ok && bound_multinomial_threshold(ell, 0) == bound_multinomial(ell);
            ok = ok && bound_pairwise_threshold(ell, 0) == bound_pairwise(ell);
            ok = ok && bound_pairwise(ell) >= bound_multinomial(ell);
            ++checked;
        }
        if (ell.size() == 4) return;
        for (int next = 1; next <= left; ++next) {
            ell.push_back(next);
            sweep(ell, left - next);
            ell.pop_back();
        }
    };
    std::vector<int> ell;
    sweep(ell, 12);
    detail << "k2_pairs=" << checked_k2 << " compositions=" << checked;
    return ok && checked_k2 == 66 && checked > 0;
}

// 5. Exhaustive searches reproduce the small extremal values.
bool criterion_search(std::ostream& detail) {
    auto run = [&](std::vector<int> ell, int ground) {
        SearchConfig cfg;
        cfg.kind = GridKind::sets;
        cfg.ell = std::move(ell);
        cfg.ground_size = ground;
        return max_family_search(cfg);
    };
    const SearchOutcome a = run({1, 1}, 4);
    const SearchOutcome b = run({1, 2}, 6);
    const SearchOutcome c = run({1, 1, 1}, 5);
    detail << "m(1,1;g4)=" << a.max_m_found << " m(1,2;g6)=" << b.max_m_found
           << " m(1,1,1;g5)=" << c.max_m_found << " exhausted=" << a.exhausted << b.exhausted
           << c.exhausted;
    const bool values = a.max_m_found == 2 && b.max_m_found == 3 && c.max_m_found <= 6 &&
                        c.max_m_found == 6;
    const bool exhausted = a.exhausted && b.exhausted && c.exhausted;
    const bool bounded = BigInt(a.max_m_found) <= bound_multinomial({1, 1}) &&
                         BigInt(b.max_m_found) <= bound_multinomial({1, 2}) &&
                         BigInt(c.max_m_found) <= bound_multinomial({1, 1, 1});
    return values && exhausted && bounded;
}

// 6. Threshold reduction: exact dimension bookkeeping on 100 seeded grids,
// then certification of reduced threshold-valid families.
bool criterion_threshold(std::ostream& detail) {
    RandomStream rng(6006);
    for (int round = 0; round < 100; ++round) {
        const int t = 1 + static_cast<int>(rng.uniform_below(2));
        const int m = 2 + static_cast<int>(rng.uniform_below(2));
        const int k = 2 + static_cast<int>(rng.uniform_below(2));
        const int max_dim = t + 1 + static_cast<int>(rng.uniform_below(3 - t + 1));
        const SubspaceGrid g = seeded_intersection_grid(kF, m, k, 8, max_dim, rng);

        std::vector<int> old_dims;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < k; ++j) old_dims.push_back(g.cell(i, j).dim());
        std::vector<int> old_meets;
        for (int a = 0; a < m * k; ++a)
            for (int b = a + 1; b < m * k; ++b)
                old_meets.push_back(
                    intersection_dim(g.cell(a / k, a % k), g.cell(b / k, b % k)));

        const SubspaceGrid red = threshold_reduce(g, t, rng);
        int q = 0;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < k; ++j)
                if (red.cell(i, j).dim() != std::max(0, old_dims[q++] - t)) {
                    detail << "cell dimension off at round " << round;
                    return false;
                }
        q = 0;
        for (int a = 0; a < m * k; ++a)
            for (int b = a + 1; b < m * k; ++b)
                if (intersection_dim(red.cell(a / k, a % k), red.cell(b / k, b % k)) !=
                    std::max(0, old_meets[q++] - t)) {
                    detail << "pair meet off at round " << round;
                    return false;
                }
    }

    // Threshold-valid families: fatten a valid plain family by t, reduce, certify.
    for (int t : {1, 2}) {
        RandomStream grng(7000 + t);
        const SubspaceGrid base = random_partition_grid({1, 1, 1}, 4, kF, grng, true);
        const SubspaceGrid fat = fatten_for_threshold(base, t);
        if (!check_threshold_row(fat, t).holds || !check_threshold_skew(fat, t).holds) {
            detail << "fattened family not threshold-valid at t=" << t;
            return false;
        }
        const SubspaceGrid red = threshold_reduce(fat, t, grng);
        const Certificate cert = certify_second_remedy(red, 9000 + t);
        if (cert.verdict != Verdict::certified ||
            BigInt(cert.m) > bound_pairwise_threshold(fat.ell(), t)) {
            detail << "reduced family failed certification at t=" << t;
            return false;
        }
    }
    detail << "grids=100 certified_thresholds={1,2}";
    return true;
}

// 7. Sampler robustness at p = 1009, detectable failure at p = 2.
bool criterion_sampler(std::ostream& detail) {
    int quick = 0;
    for (int trial = 0; trial < 200; ++trial) {
        RandomStream grng(31000 + trial);
        const SubspaceGrid g = random_partition_grid({1, 1, 2}, 8, kF, grng);
        RandomStream srng(32000 + trial);
        try {
            const GenericMapBundle bundle = sample_generic_maps(g, srng, 32);
            bool within = true;
            for (int r : bundle.retries) within = within && r <= 3;
            if (within) ++quick;
        } catch (const SamplingExhausted&) {
            // counts as not-quick
        }
    }

    const PrimeField f2(2);
    int exhausted = 0;
    for (int trial = 0; trial < 200; ++trial) {
        RandomStream grng(31000 + trial);
        const SubspaceGrid g = random_partition_grid({1, 1, 2}, 8, f2, grng);
        RandomStream srng(33000 + trial);
        try {
            (void)sample_generic_maps(g, srng, 32);
        } catch (const SamplingExhausted&) {
            ++exhausted;
        }
    }
    detail << "quick=" << quick << "/200 exhausted_at_p2=" << exhausted << "/200";
    return quick >= 198 && exhausted >= 1;
}

// 8. Byte-identical replays of every randomized pipeline.
bool criterion_determinism(std::ostream& detail) {
    RandomStream grng(880);
    const SubspaceGrid grid = random_partition_grid({1, 1, 2}, 5, kF, grng, true);
    const std::string cert1 = dump_json(certificate_to_json(certify_second_remedy(grid, 314)));
    const std::string cert2 = dump_json(certificate_to_json(certify_second_remedy(grid, 314)));
    if (cert1 != cert2) {
        detail << "certificate replay differs";
        return false;
    }

    SearchConfig cfg;
    cfg.kind = GridKind::sets;
    cfg.ell = {1, 1, 1};
    cfg.ground_size = 4;
    const std::string s1 =
        dump_json(search_outcome_to_json(cfg, max_family_search(cfg), "max-family"));
    const std::string s2 =
        dump_json(search_outcome_to_json(cfg, max_family_search(cfg), "max-family"));
    if (s1 != s2) {
        detail << "search replay differs";
        return false;
    }

    SearchConfig hunt;
    hunt.kind = GridKind::subspaces;
    hunt.ell = {1, 1, 1};
    hunt.ambient_dim = 3;
    hunt.prime = 2;
    hunt.node_budget = 500;
    hunt.seed = 9;
    RandomStream h1(hunt.seed), h2(hunt.seed);
    const std::string hs1 = dump_json(search_outcome_to_json(hunt, counterexample_hunt(hunt, h1), "hunt"));
    const std::string hs2 = dump_json(search_outcome_to_json(hunt, counterexample_hunt(hunt, h2), "hunt"));
    if (hs1 != hs2) {
        detail << "hunt replay differs";
        return false;
    }
    detail << "certificate, max-family and hunt replays identical";
    return true;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "mistake reproduction", 1.0, criterion_mistake},
        {2, "wedge-intersection duality", 10.0, criterion_duality},
        {3, "certificate triangularity", 60.0, criterion_triangularity},
        {4, "bound formula cross-checks", 5.0, criterion_bounds},
        {5, "exhaustive bound confirmation", 300.0, criterion_search},
        {6, "threshold reduction soundness", 60.0, criterion_threshold},
        {7, "sampler robustness", 120.0, criterion_sampler},
        {8, "determinism", 60.0, criterion_determinism},
    };
    int failures = 0;
    for (const auto& c : criteria)
        if (!run_criterion(c)) ++failures;
    return failures;
}
