#include "skewcert/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <climits>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "skewcert/errors.hpp"

namespace skewcert {

std::string to_string(GridKind kind) {
    return kind == GridKind::sets ? "sets" : "subspaces";
}

std::string to_string(ConditionMode mode) {
    switch (mode) {
        case ConditionMode::weak_disjoint: return "weak-disjoint";
        case ConditionMode::direct_sum: return "direct-sum";
        case ConditionMode::threshold: return "threshold";
    }
    return "unknown";
}

namespace {

constexpr int kMaxUniverseRows = 8192;
constexpr int kMaxSubspacePool = 2048;

struct BoundPair {
    BigInt proved;
    BigInt conjectured;
};

/// Which bound is theorem-backed and which is the open conjecture for the
/// given grid kind and condition mode.
BoundPair applicable_bounds(GridKind kind, ConditionMode mode, int t, const std::vector<int>& ell) {
    switch (mode) {
        case ConditionMode::weak_disjoint:
            if (kind == GridKind::sets) {
                const BigInt b = bound_multinomial(ell);
                return {b, b};
            }
            return {bound_pairwise(ell), bound_multinomial(ell)};
        case ConditionMode::direct_sum: {
            const BigInt b = bound_multinomial(ell);
            return {b, b};
        }
        case ConditionMode::threshold:
            return {bound_pairwise_threshold(ell, t), bound_multinomial_threshold(ell, t)};
    }
    throw std::logic_error("unreachable mode");
}

class DynBitset {
public:
    explicit DynBitset(int n) : words_((n + 63) / 64, 0) {}

    void set(int i) { words_[i >> 6] |= 1ull << (i & 63); }
    void and_with(const DynBitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    }
    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }
    /// Visit set bits ascending while the callback returns true.
    template <typename F>
    void for_each_while(F f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w != 0) {
                const int b = std::countr_zero(w);
                w &= w - 1;
                if (!f(static_cast<int>(wi * 64) + b)) return;
            }
        }
    }

private:
    std::vector<std::uint64_t> words_;
};

/// Row universe shared by both grid kinds: rows indexed 0..nrows-1 in the
/// documented lexicographic order, comp[r] = rows that may follow r.
struct Universe {
    int nrows = 0;
    std::vector<DynBitset> comp;
    std::vector<int> roots;

    std::vector<std::vector<std::uint64_t>> set_rows;  // set mode: cell masks
    std::vector<Subspace> pool;                        // subspace mode
    std::vector<std::vector<int>> sub_rows;            // subspace mode: pool indices
};

/// All subsets of [1..ground] of size <= max_size as bitmasks, ordered by
/// their sorted element sequences (shorter prefixes first).
std::vector<std::uint64_t> enumerate_cells(int ground, int max_size) {
    std::vector<std::uint64_t> out;
    std::function<void(int, std::uint64_t, int)> rec = [&](int start, std::uint64_t mask, int size) {
        out.push_back(mask);
        if (size == max_size) return;
        for (int x = start; x < ground; ++x) rec(x + 1, mask | (1ull << x), size + 1);
    };
    rec(0, 0, 0);
    return out;
}

int mask_meet(std::uint64_t a, std::uint64_t b) { return std::popcount(a & b); }

/// -1 / 0 / +1 comparison of cells as sorted element sequences.
int compare_mask_cells(std::uint64_t a, std::uint64_t b) {
    while (a != 0 && b != 0) {
        const int xa = std::countr_zero(a);
        const int xb = std::countr_zero(b);
        if (xa != xb) return xa < xb ? -1 : 1;
        a &= a - 1;
        b &= b - 1;
    }
    if (a == 0 && b == 0) return 0;
    return a == 0 ? -1 : 1;
}

int compare_mask_rows(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    for (std::size_t j = 0; j < a.size(); ++j) {
        const int c = compare_mask_cells(a[j], b[j]);
        if (c != 0) return c;
    }
    return 0;
}

Universe build_set_universe(const SearchConfig& cfg) {
    const int k = static_cast<int>(cfg.ell.size());
    const int t0 = cfg.mode == ConditionMode::threshold ? cfg.t : 0;
    if (cfg.ground_size < 0 || cfg.ground_size > 24)
        throw std::invalid_argument("set search supports ground sizes up to 24");

    std::vector<std::vector<std::uint64_t>> cells(k);
    for (int j = 0; j < k; ++j) cells[j] = enumerate_cells(cfg.ground_size, cfg.ell[j]);

    Universe u;
    std::vector<std::uint64_t> row(k);
    std::function<void(int)> rec = [&](int col) {
        if (col == k) {
            if (static_cast<int>(u.set_rows.size()) >= kMaxUniverseRows)
                throw std::invalid_argument(
                    "row universe exceeds the exhaustive-search cap; shrink ground_size or ell");
            u.set_rows.push_back(row);
            return;
        }
        for (std::uint64_t c : cells[col]) {
            bool ok = true;
            for (int q = 0; q < col && ok; ++q) ok = mask_meet(row[q], c) <= t0;
            if (!ok) continue;
            row[col] = c;
            rec(col + 1);
        }
    };
    rec(0);
    u.nrows = static_cast<int>(u.set_rows.size());

    u.comp.assign(u.nrows, DynBitset(u.nrows));
    for (int r = 0; r < u.nrows; ++r)
        for (int s = 0; s < u.nrows; ++s) {
            bool cross = false;
            for (int j = 0; j < k && !cross; ++j)
                for (int j2 = j + 1; j2 < k && !cross; ++j2)
                    cross = mask_meet(u.set_rows[r][j], u.set_rows[s][j2]) > t0;
            if (cross) u.comp[r].set(s);
        }

    // First-row symmetry reduction by ground relabeling: any valid family can
    // be relabeled so its first row is the orbit representative, so roots may
    // be restricted to rows that are lexicographically minimal in their orbit.
    double perm_count = 1;
    for (int i = 2; i <= cfg.ground_size; ++i) perm_count *= i;
    if (cfg.ground_size <= 8 && perm_count * u.nrows <= 2e8) {
        std::vector<int> perm(cfg.ground_size);
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<std::vector<int>> perms;
        do {
            perms.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));

        for (int r = 0; r < u.nrows; ++r) {
            bool canonical = true;
            std::vector<std::uint64_t> mapped(k);
            for (const auto& p : perms) {
                for (int j = 0; j < k; ++j) {
                    std::uint64_t m = 0;
                    std::uint64_t src = u.set_rows[r][j];
                    while (src != 0) {
                        const int x = std::countr_zero(src);
                        src &= src - 1;
                        m |= 1ull << p[x];
                    }
                    mapped[j] = m;
                }
                if (compare_mask_rows(mapped, u.set_rows[r]) < 0) {
                    canonical = false;
                    break;
                }
            }
            if (canonical) u.roots.push_back(r);
        }
    } else {
        u.roots.resize(u.nrows);
        std::iota(u.roots.begin(), u.roots.end(), 0);
    }
    return u;
}

Universe build_subspace_universe(const SearchConfig& cfg) {
    const int k = static_cast<int>(cfg.ell.size());
    const int t0 = cfg.mode == ConditionMode::threshold ? cfg.t : 0;
    const PrimeField field(cfg.prime);
    const int max_ell = *std::max_element(cfg.ell.begin(), cfg.ell.end());

    Universe u;
    for (int d = 0; d <= std::min(max_ell, cfg.ambient_dim); ++d) {
        const auto level = enumerate_subspaces(field, cfg.ambient_dim, d);
        u.pool.insert(u.pool.end(), level.begin(), level.end());
        if (static_cast<int>(u.pool.size()) > kMaxSubspacePool)
            throw std::invalid_argument(
                "subspace pool exceeds the exhaustive-search cap; shrink p, ambient_dim or ell");
    }
    const int pool_n = static_cast<int>(u.pool.size());

    std::vector<std::vector<std::int8_t>> meet(pool_n, std::vector<std::int8_t>(pool_n));
    for (int a = 0; a < pool_n; ++a)
        for (int b = a; b < pool_n; ++b)
            meet[a][b] = meet[b][a] =
                static_cast<std::int8_t>(intersection_dim(u.pool[a], u.pool[b]));

    std::vector<int> row(k);
    std::function<void(int, const Subspace&, int)> rec = [&](int col, const Subspace& sum,
                                                             int dim_total) {
        if (col == k) {
            if (static_cast<int>(u.sub_rows.size()) >= kMaxUniverseRows)
                throw std::invalid_argument(
                    "row universe exceeds the exhaustive-search cap; shrink p, ambient_dim or ell");
            u.sub_rows.push_back(row);
            return;
        }
        for (int c = 0; c < pool_n; ++c) {
            if (u.pool[c].dim() > cfg.ell[col]) continue;
            bool ok = true;
            for (int q = 0; q < col && ok; ++q) ok = meet[row[q]][c] <= t0;
            if (!ok) continue;
            if (cfg.mode == ConditionMode::direct_sum) {
                const Subspace wider = subspace_sum(sum, u.pool[c]);
                if (wider.dim() != dim_total + u.pool[c].dim()) continue;
                row[col] = c;
                rec(col + 1, wider, dim_total + u.pool[c].dim());
            } else {
                row[col] = c;
                rec(col + 1, sum, dim_total);
            }
        }
    };
    rec(0, Subspace::zero(field, cfg.ambient_dim), 0);
    u.nrows = static_cast<int>(u.sub_rows.size());

    u.comp.assign(u.nrows, DynBitset(u.nrows));
    for (int r = 0; r < u.nrows; ++r)
        for (int s = 0; s < u.nrows; ++s) {
            bool cross = false;
            for (int j = 0; j < k && !cross; ++j)
                for (int j2 = j + 1; j2 < k && !cross; ++j2)
                    cross = meet[u.sub_rows[r][j]][u.sub_rows[s][j2]] > t0;
            if (cross) u.comp[r].set(s);
        }

    u.roots.resize(u.nrows);
    std::iota(u.roots.begin(), u.roots.end(), 0);
    return u;
}

struct DfsWorker {
    const Universe* u = nullptr;
    std::uint64_t node_budget = 0;
    double time_budget = 0;
    std::chrono::steady_clock::time_point start_time;
    long long cutoff = LLONG_MAX;

    std::uint64_t nodes = 0;
    bool budget_hit = false;
    int best = 0;
    std::vector<int> best_seq;
    std::vector<int> seq;

    bool stopped() const { return budget_hit || best >= cutoff; }

    void go(const DynBitset& cand) {
        if (stopped()) return;
        ++nodes;
        if (nodes > node_budget) {
            budget_hit = true;
            return;
        }
        if (time_budget > 0 && (nodes & 0xFFF) == 0) {
            const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_time;
            if (dt.count() > time_budget) {
                budget_hit = true;
                return;
            }
        }
        if (static_cast<int>(seq.size()) > best) {
            best = static_cast<int>(seq.size());
            best_seq = seq;
        }
        if (stopped()) return;
        if (static_cast<int>(seq.size()) + cand.count() <= best) return;
        cand.for_each_while([&](int r) {
            seq.push_back(r);
            DynBitset next = cand;
            next.and_with(u->comp[r]);
            go(next);
            seq.pop_back();
            return !stopped();
        });
    }

    void run(const std::vector<int>& roots) {
        start_time = std::chrono::steady_clock::now();
        for (int root : roots) {
            if (stopped()) break;
            seq.assign(1, root);
            go(u->comp[root]);
        }
        seq.clear();
    }
};

long long clamp_cutoff(const BigInt& bound) {
    return bound > BigInt(1) << 62 ? LLONG_MAX : static_cast<long long>(bound);
}

}  // namespace

std::vector<Subspace> enumerate_subspaces(PrimeField field, int n, int d) {
    if (d < 0 || d > n) throw DimensionMismatch("subspace dimension outside [0, ambient]");
    std::vector<Subspace> out;
    if (d == 0) {
        out.push_back(Subspace::zero(field, n));
        return out;
    }

    std::vector<int> pivots(d);
    std::function<void(int, int)> choose = [&](int pos, int start) {
        if (pos == d) {
            // Free entries sit right of their pivot on non-pivot columns.
            std::vector<std::pair<int, int>> free_cells;
            std::vector<bool> is_pivot(n, false);
            for (int p : pivots) is_pivot[p] = true;
            for (int r = 0; r < d; ++r)
                for (int c = pivots[r] + 1; c < n; ++c)
                    if (!is_pivot[c]) free_cells.emplace_back(r, c);

            std::vector<Scalar> values(free_cells.size(), 0);
            while (true) {
                Matrix basis(field, d, n);
                for (int r = 0; r < d; ++r) basis.at(r, pivots[r]) = 1;
                for (std::size_t i = 0; i < free_cells.size(); ++i)
                    basis.at(free_cells[i].first, free_cells[i].second) = values[i];
                out.push_back(subspace_from_rows(basis, n));

                // Odometer over free entries (last cell fastest).
                int i = static_cast<int>(values.size()) - 1;
                while (i >= 0 && values[i] == field.p() - 1) values[i--] = 0;
                if (i < 0) break;
                ++values[i];
            }
            return;
        }
        for (int c = start; c <= n - (d - pos); ++c) {
            pivots[pos] = c;
            choose(pos + 1, c + 1);
        }
    };
    choose(0, 0);
    return out;
}

SearchOutcome max_family_search(const SearchConfig& cfg) {
    if (cfg.ell.size() < 2) throw std::invalid_argument("search needs k >= 2 columns");
    for (int l : cfg.ell)
        if (l < 0) throw std::invalid_argument("negative ell entry");
    if (cfg.mode == ConditionMode::threshold) validate_threshold(cfg.ell, cfg.t);
    if (cfg.node_budget == 0) throw std::invalid_argument("node budget must be positive");

    const BoundPair bounds = applicable_bounds(cfg.kind, cfg.mode, cfg.t, cfg.ell);
    const Universe u = cfg.kind == GridKind::sets ? build_set_universe(cfg)
                                                  : build_subspace_universe(cfg);

    const int width = std::max(1, cfg.parallel_width);
    std::vector<DfsWorker> workers(width);
    std::vector<std::vector<int>> chunks(width);
    for (std::size_t i = 0; i < u.roots.size(); ++i)
        chunks[i % width].push_back(u.roots[i]);

    const long long cutoff = clamp_cutoff(bounds.proved);
    for (int wi = 0; wi < width; ++wi) {
        workers[wi].u = &u;
        workers[wi].node_budget = std::max<std::uint64_t>(1, cfg.node_budget / width);
        workers[wi].time_budget = cfg.time_budget_seconds;
        workers[wi].cutoff = cutoff;
    }

    if (width == 1) {
        workers[0].run(chunks[0]);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(width);
        for (int wi = 0; wi < width; ++wi)
            threads.emplace_back([&workers, &chunks, wi] { workers[wi].run(chunks[wi]); });
        for (auto& th : threads) th.join();
    }

    // Deterministic merge: largest family, ties by lexicographically least
    // row-index sequence (row indices follow the documented row order).
    int best = 0;
    const std::vector<int>* best_seq = nullptr;
    bool any_budget_hit = false;
    std::uint64_t nodes = 0;
    bool cutoff_reached = false;
    for (const auto& w : workers) {
        nodes += w.nodes;
        any_budget_hit = any_budget_hit || w.budget_hit;
        cutoff_reached = cutoff_reached || w.best >= w.cutoff;
        if (w.best > best || (w.best == best && best > 0 &&
                              (best_seq == nullptr ||
                               std::lexicographical_compare(w.best_seq.begin(), w.best_seq.end(),
                                                            best_seq->begin(), best_seq->end())))) {
            best = w.best;
            best_seq = &w.best_seq;
        }
    }

    SearchOutcome out;
    out.max_m_found = best;
    out.nodes_visited = nodes;
    out.exhausted = cutoff_reached || !any_budget_hit;
    out.proved_bound = bounds.proved;
    out.conjectured_bound = bounds.conjectured;
    out.exceeds_conjectured = BigInt(best) > bounds.conjectured;

    const std::vector<int> seq = best_seq == nullptr ? std::vector<int>{} : *best_seq;
    if (cfg.kind == GridKind::sets) {
        std::vector<std::vector<SetCell>> rows;
        for (int r : seq) {
            std::vector<SetCell> grow;
            for (std::uint64_t mask : u.set_rows[r]) {
                SetCell cell;
                while (mask != 0) {
                    cell.push_back(std::countr_zero(mask) + 1);
                    mask &= mask - 1;
                }
                grow.push_back(std::move(cell));
            }
            rows.push_back(std::move(grow));
        }
        SetGrid witness(cfg.ell, cfg.ground_size, std::move(rows));
        const bool valid = check_dim_bounds(witness).holds &&
                           (cfg.mode == ConditionMode::threshold
                                ? check_threshold_row(witness, cfg.t).holds &&
                                      check_threshold_skew(witness, cfg.t).holds
                                : check_pairwise_disjoint(witness).holds &&
                                      check_skew_cross(witness).holds);
        if (!valid) throw std::logic_error("search emitted an invalid set witness");
        out.witness_sets = std::move(witness);
    } else {
        const PrimeField field(cfg.prime);
        std::vector<std::vector<Subspace>> rows;
        for (int r : seq) {
            std::vector<Subspace> grow;
            for (int c : u.sub_rows[r]) grow.push_back(u.pool[c]);
            rows.push_back(std::move(grow));
        }
        SubspaceGrid witness(cfg.ell, field, cfg.ambient_dim, std::move(rows));
        bool valid = check_dim_bounds(witness).holds;
        if (cfg.mode == ConditionMode::threshold)
            valid = valid && check_threshold_row(witness, cfg.t).holds &&
                    check_threshold_skew(witness, cfg.t).holds;
        else if (cfg.mode == ConditionMode::direct_sum)
            valid = valid && check_direct_sum(witness).holds && check_skew_cross(witness).holds;
        else
            valid = valid && check_pairwise_disjoint(witness).holds &&
                    check_skew_cross(witness).holds;
        if (!valid) throw std::logic_error("search emitted an invalid subspace witness");
        out.witness_subspaces = std::move(witness);
    }

    if (BigInt(out.max_m_found) > bounds.proved)
        throw std::logic_error("search exceeded a proved bound; this is an implementation bug");
    return out;
}

namespace {

template <typename MeetFn>
std::optional<std::vector<int>> order_rows_generic(int m, int k, int t0, MeetFn&& meet) {
    const bool use_memo = m <= 4096;
    std::vector<std::int8_t> memo;
    if (use_memo) memo.assign(static_cast<std::size_t>(m) * m, -1);

    auto comp = [&](int a, int b) -> bool {  // a placed earlier than b
        if (use_memo) {
            const std::int8_t v = memo[static_cast<std::size_t>(a) * m + b];
            if (v >= 0) return v == 1;
        }
        bool ok = false;
        for (int j = 0; j < k && !ok; ++j)
            for (int j2 = j + 1; j2 < k && !ok; ++j2) ok = meet(a, j, b, j2) > t0;
        if (use_memo) memo[static_cast<std::size_t>(a) * m + b] = ok ? 1 : 0;
        return ok;
    };

    std::vector<int> perm;
    perm.reserve(m);
    std::vector<bool> used(m, false);
    std::function<bool()> place = [&]() -> bool {
        if (static_cast<int>(perm.size()) == m) return true;
        for (int c = 0; c < m; ++c) {
            if (used[c]) continue;
            bool ok = true;
            for (int q : perm)
                if (!comp(q, c)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            used[c] = true;
            perm.push_back(c);
            if (place()) return true;
            perm.pop_back();
            used[c] = false;
        }
        return false;
    };
    if (place()) return perm;
    return std::nullopt;
}

template <typename Grid>
void require_orderable_rows(const Grid& g, ConditionMode mode, int t) {
    if (!check_dim_bounds(g).holds)
        throw std::invalid_argument("order_rows requires rows passing the size bounds");
    bool rows_ok = true;
    if (mode == ConditionMode::threshold)
        rows_ok = check_threshold_row(g, t).holds;
    else if constexpr (std::is_same_v<Grid, SubspaceGrid>) {
        rows_ok = mode == ConditionMode::direct_sum ? check_direct_sum(g).holds
                                                    : check_pairwise_disjoint(g).holds;
    } else {
        rows_ok = check_pairwise_disjoint(g).holds;
    }
    if (!rows_ok)
        throw std::invalid_argument("order_rows requires rows passing the within-row condition");
}

}  // namespace

std::optional<std::vector<int>> order_rows(const SetGrid& g, ConditionMode mode, int t) {
    require_orderable_rows(g, mode, t);
    const int t0 = mode == ConditionMode::threshold ? t : 0;
    return order_rows_generic(g.m(), g.k(), t0, [&](int a, int j, int b, int j2) {
        return set_meet_size(g.cell(a, j), g.cell(b, j2));
    });
}

std::optional<std::vector<int>> order_rows(const SubspaceGrid& g, ConditionMode mode, int t) {
    require_orderable_rows(g, mode, t);
    const int t0 = mode == ConditionMode::threshold ? t : 0;
    return order_rows_generic(g.m(), g.k(), t0, [&](int a, int j, int b, int j2) {
        return intersection_dim(g.cell(a, j), g.cell(b, j2));
    });
}

std::optional<SetGrid> ordered_partition_family(const std::vector<int>& ell) {
    if (ell.size() < 2) throw std::invalid_argument("ordered partitions need k >= 2 blocks");
    for (int l : ell)
        if (l < 1) throw std::invalid_argument("block sizes must be positive");
    const int n = std::accumulate(ell.begin(), ell.end(), 0);
    if (bound_multinomial(ell) > 50'000)
        throw std::invalid_argument("ordered-partition family too large to materialize");

    const int k = static_cast<int>(ell.size());
    std::vector<std::vector<SetCell>> rows;
    std::vector<SetCell> current(k);
    std::vector<int> remaining(n);
    std::iota(remaining.begin(), remaining.end(), 1);

    std::function<void(int, std::vector<int>)> rec = [&](int col, std::vector<int> rest) {
        if (col == k) {
            rows.push_back(current);
            return;
        }
        const int want = ell[col];
        const int avail = static_cast<int>(rest.size());
        std::vector<int> idx(want);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            SetCell cell(want);
            std::vector<int> next;
            next.reserve(avail - want);
            for (int i = 0, q = 0; i < avail; ++i) {
                if (q < want && idx[q] == i) {
                    cell[q] = rest[i];
                    ++q;
                } else {
                    next.push_back(rest[i]);
                }
            }
            current[col] = std::move(cell);
            rec(col + 1, std::move(next));

            int i = want - 1;
            while (i >= 0 && idx[i] == avail - want + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int q = i + 1; q < want; ++q) idx[q] = idx[q - 1] + 1;
        }
    };
    rec(0, remaining);

    SetGrid all(ell, n, std::move(rows));
    const auto perm = order_rows(all, ConditionMode::weak_disjoint, 0);
    if (!perm) return std::nullopt;

    std::vector<std::vector<SetCell>> ordered;
    ordered.reserve(all.m());
    for (int r : *perm) ordered.push_back(all.rows()[r]);
    return SetGrid(ell, n, std::move(ordered));
}

SearchOutcome counterexample_hunt(const SearchConfig& cfg, RandomStream& rng) {
    if (cfg.kind != GridKind::subspaces)
        throw std::invalid_argument("counterexample_hunt runs in subspace mode");
    if (cfg.ell.size() < 2) throw std::invalid_argument("hunt needs k >= 2 columns");
    if (cfg.mode == ConditionMode::threshold) validate_threshold(cfg.ell, cfg.t);

    const PrimeField field(cfg.prime);
    const int k = static_cast<int>(cfg.ell.size());
    const int t0 = cfg.mode == ConditionMode::threshold ? cfg.t : 0;
    const BoundPair bounds = applicable_bounds(cfg.kind, cfg.mode, cfg.t, cfg.ell);

    auto row_ok = [&](const std::vector<Subspace>& row) {
        int dim_total = 0;
        for (const auto& c : row) dim_total += c.dim();
        for (int j = 0; j < k; ++j)
            for (int j2 = j + 1; j2 < k; ++j2)
                if (intersection_dim(row[j], row[j2]) > t0) return false;
        if (cfg.mode == ConditionMode::direct_sum) {
            Subspace sum = Subspace::zero(field, cfg.ambient_dim);
            for (const auto& c : row) sum = subspace_sum(sum, c);
            if (sum.dim() != dim_total) return false;
        }
        return true;
    };
    auto cross_ok = [&](const std::vector<Subspace>& earlier, const std::vector<Subspace>& later) {
        for (int j = 0; j < k; ++j)
            for (int j2 = j + 1; j2 < k; ++j2)
                if (intersection_dim(earlier[j], later[j2]) > t0) return true;
        return false;
    };

    std::vector<std::vector<Subspace>> current, best;
    std::uint64_t nodes = 0;
    int fail_streak = 0;
    bool found_violation = false;
    while (nodes < cfg.node_budget && !found_violation) {
        ++nodes;
        // Propose a row: cells usually at full size; occasionally smaller, so
        // ragged families stay reachable.
        std::vector<Subspace> row;
        row.reserve(k);
        bool proposal_ok = true;
        for (int j = 0; j < k && proposal_ok; ++j) {
            const int full = std::min(cfg.ell[j], cfg.ambient_dim);
            const int d = rng.uniform_below(4) < 3
                              ? full
                              : static_cast<int>(rng.uniform_below(full + 1));
            try {
                row.push_back(random_subspace(field, cfg.ambient_dim, d, rng));
            } catch (const SamplingExhausted&) {
                proposal_ok = false;
            }
        }
        if (proposal_ok && row_ok(row)) {
            bool extends = true;
            for (const auto& e : current)
                if (!cross_ok(e, row)) {
                    extends = false;
                    break;
                }
            if (extends) {
                current.push_back(std::move(row));
                fail_streak = 0;
                if (current.size() > best.size()) {
                    best = current;
                    if (BigInt(static_cast<int>(best.size())) > bounds.conjectured)
                        found_violation = true;
                }
                continue;
            }
        }
        if (++fail_streak > 64) {
            // Stuck: drop one row or restart.
            if (!current.empty() && rng.uniform_below(2) == 0)
                current.erase(current.begin() +
                              static_cast<long>(rng.uniform_below(current.size())));
            else
                current.clear();
            fail_streak = 0;
        }
    }

    SubspaceGrid witness(cfg.ell, field, cfg.ambient_dim, std::move(best));
    bool valid = check_dim_bounds(witness).holds;
    if (cfg.mode == ConditionMode::threshold)
        valid = valid && check_threshold_row(witness, cfg.t).holds &&
                check_threshold_skew(witness, cfg.t).holds;
    else if (cfg.mode == ConditionMode::direct_sum)
        valid = valid && check_direct_sum(witness).holds && check_skew_cross(witness).holds;
    else
        valid = valid && check_pairwise_disjoint(witness).holds && check_skew_cross(witness).holds;
    if (!valid) throw std::logic_error("hunt emitted an invalid witness");

    SearchOutcome out;
    out.max_m_found = witness.m();
    out.nodes_visited = nodes;
    out.exhausted = false;  // a randomized hunt never proves a maximum
    out.proved_bound = bounds.proved;
    out.conjectured_bound = bounds.conjectured;
    out.exceeds_conjectured = BigInt(out.max_m_found) > bounds.conjectured;
    if (BigInt(out.max_m_found) > bounds.proved)
        throw std::logic_error("hunt exceeded a proved bound; this is an implementation bug");
    out.witness_subspaces = std::move(witness);
    return out;
}

}  // namespace skewcert
