#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skewcert/certify.hpp"
#include "skewcert/errors.hpp"
#include "skewcert/search.hpp"
#include "skewcert/serialize.hpp"
#include "skewcert/version.hpp"

namespace {

using namespace skewcert;

// Exit code contract: 0 ok, 1 condition failure, 2 input error,
// 3 sampling failure, 4 budget exceeded.
constexpr int kExitOk = 0;
constexpr int kExitConditionFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitSamplingFailure = 3;
constexpr int kExitBudgetExceeded = 4;

struct ModeArg {
    ConditionMode mode = ConditionMode::weak_disjoint;
    int t = 0;
};

ModeArg parse_mode(const std::string& text) {
    if (text == "weak") return {ConditionMode::weak_disjoint, 0};
    if (text == "strong") return {ConditionMode::direct_sum, 0};
    if (text.rfind("threshold:", 0) == 0) {
        ModeArg out{ConditionMode::threshold, 0};
        try {
            out.t = std::stoi(text.substr(10));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad threshold in mode \"" + text + "\"");
        }
        if (out.t < 0) throw std::invalid_argument("threshold must be nonnegative");
        return out;
    }
    throw std::invalid_argument("mode must be weak, strong or threshold:<t>, got \"" + text + "\"");
}

void print_report(const ConditionReport& rep) {
    std::cout << "condition " << rep.condition << ": " << (rep.holds ? "PASS" : "FAIL") << "\n";
    for (const auto& v : rep.violations) {
        std::cout << "  violation (";
        for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? "," : "") << v[i];
        std::cout << ")\n";
    }
    for (const auto& w : rep.skew_witnesses)
        std::cout << "  pair (" << w[0] << "," << w[1] << ") met at columns (" << w[2] << ","
                  << w[3] << ")\n";
}

void emit_result(const Json& j, const std::string& out_path) {
    const std::string text = dump_json(j);
    if (out_path.empty())
        std::cout << text;
    else {
        write_text_file(out_path, text);
        std::cout << "wrote " << out_path << "\n";
    }
}

int cmd_verify(const std::string& path, const std::string& mode_text) {
    const FamilyFile fam = load_family_file(path);
    const ModeArg mode = parse_mode(mode_text);

    std::vector<ConditionReport> reports;
    int m = 0;
    std::vector<int> ell;
    if (fam.is_sets()) {
        const SetGrid& g = *fam.sets;
        m = g.m();
        ell = g.ell();
        reports.push_back(check_dim_bounds(g));
        if (mode.mode == ConditionMode::threshold) {
            reports.push_back(check_threshold_row(g, mode.t));
            reports.push_back(check_threshold_skew(g, mode.t));
        } else {
            // For sets the strengthened row condition coincides with
            // pairwise disjointness.
            reports.push_back(check_pairwise_disjoint(g));
            reports.push_back(check_skew_cross(g));
        }
    } else {
        const SubspaceGrid& g = *fam.subspaces;
        m = g.m();
        ell = g.ell();
        reports.push_back(check_dim_bounds(g));
        if (mode.mode == ConditionMode::threshold) {
            reports.push_back(check_threshold_row(g, mode.t));
            reports.push_back(check_threshold_skew(g, mode.t));
        } else {
            reports.push_back(mode.mode == ConditionMode::direct_sum ? check_direct_sum(g)
                                                                     : check_pairwise_disjoint(g));
            reports.push_back(check_skew_cross(g));
        }
    }

    bool all_hold = true;
    for (const auto& rep : reports) {
        print_report(rep);
        all_hold = all_hold && rep.holds;
    }

    std::cout << "m = " << m << "\n";
    const BigInt mm(m);
    auto show_bound = [&](const char* name, const BigInt& b) {
        std::cout << name << " = " << b.str() << "  (m <= bound: " << (mm <= b ? "yes" : "no")
                  << ")\n";
    };
    if (mode.mode == ConditionMode::threshold) {
        show_bound("bound_multinomial_threshold", bound_multinomial_threshold(ell, mode.t));
        show_bound("bound_pairwise_threshold", bound_pairwise_threshold(ell, mode.t));
    } else {
        show_bound("bound_multinomial", bound_multinomial(ell));
        show_bound("bound_pairwise", bound_pairwise(ell));
    }
    return all_hold ? kExitOk : kExitConditionFailure;
}

int cmd_bounds(const std::vector<int>& ell, int t) {
    if (ell.size() < 2) throw std::invalid_argument("--ell needs at least two entries");
    for (int l : ell)
        if (l < 1) throw std::invalid_argument("--ell entries must be positive");
    validate_threshold(ell, t);
    std::cout << "ell =";
    for (int l : ell) std::cout << " " << l;
    std::cout << "  t = " << t << "\n";
    std::cout << "bound_multinomial = " << bound_multinomial(ell).str() << "\n";
    std::cout << "bound_pairwise = " << bound_pairwise(ell).str() << "\n";
    std::cout << "bound_multinomial_threshold = " << bound_multinomial_threshold(ell, t).str()
              << "\n";
    std::cout << "bound_pairwise_threshold = " << bound_pairwise_threshold(ell, t).str() << "\n";
    return kExitOk;
}

int cmd_certify(const std::string& path, std::uint64_t seed, std::uint64_t prime_flag,
                int retry_budget, const std::string& out_path) {
    const FamilyFile fam = load_family_file(path);
    std::optional<SubspaceGrid> grid;
    if (fam.is_sets()) {
        const std::uint64_t p = prime_flag == 0 ? kDefaultPrime : prime_flag;
        std::cout << "note: set family lifted to coordinate subspaces over F_" << p << "\n";
        grid.emplace(lift_sets(*fam.sets, PrimeField(p)));
    } else {
        if (prime_flag != 0 && prime_flag != fam.subspaces->field().p())
            throw std::invalid_argument(
                "--prime differs from the family's prime; a subspace family is tied to its "
                "field (rebuild the family over the larger prime instead)");
        grid.emplace(*fam.subspaces);
    }

    const Certificate cert = certify_second_remedy(*grid, seed, retry_budget);
    const Json j = certificate_to_json(cert);
    if (out_path.empty()) {
        std::cout << dump_json(j);
    } else {
        write_text_file(out_path, dump_json(j));
        std::cout << "wrote " << out_path << "\n";
    }
    std::cout << "seed = " << cert.seed << "\n";
    std::cout << "verdict = " << to_string(cert.verdict) << "\n";
    switch (cert.verdict) {
        case Verdict::certified:
            std::cout << "m = " << cert.m << " <= bound = " << cert.bound.str() << "\n";
            return kExitOk;
        case Verdict::refuted_input:
            std::cout << "input fails the certificate preconditions:\n";
            for (const auto& rep : cert.reports)
                if (!rep.holds) print_report(rep);
            return kExitConditionFailure;
        case Verdict::sampling_failed:
            std::cout << cert.failure_reason << "\n";
            std::cout << "hint: rerun with a larger --prime (sets are re-lifted; subspace "
                         "families must be rebuilt over the larger field)\n";
            return kExitSamplingFailure;
    }
    return kExitOk;
}

int cmd_demo_mistake() {
    const MistakeReport rep = demo_mistake();
    std::cout << "pairwise_disjoint=" << (rep.pairwise_disjoint ? "true" : "false") << "\n";
    std::cout << "sum_dim=" << rep.sum_dim << "\n";
    std::cout << "triple_wedge_zero=" << (rep.triple_wedge_zero ? "true" : "false") << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certificates, condition checks and searches for skew cross-intersecting "
                 "families of sets and subspaces"};
    app.set_version_flag("--version", skewcert::kToolVersion);
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "check the condition system of a family file");
    std::string verify_path, verify_mode = "weak";
    verify->add_option("file", verify_path, "family JSON file")->required();
    verify->add_option("--mode", verify_mode, "weak | strong | threshold:<t>")
        ->capture_default_str();

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "evaluate all four bound formulas");
    std::vector<int> bounds_ell;
    int bounds_t = 0;
    bounds_cmd->add_option("--ell", bounds_ell, "comma-separated ell_1,..,ell_k")
        ->required()
        ->delimiter(',');
    bounds_cmd->add_option("--t", bounds_t, "threshold")->capture_default_str();

    // certify
    auto* certify = app.add_subcommand("certify", "produce a pairing certificate for a family");
    std::string certify_path, certify_out;
    std::uint64_t certify_seed = 1, certify_prime = 0;
    int certify_budget = kDefaultRetryBudget;
    certify->add_option("file", certify_path, "family JSON file")->required();
    certify->add_option("--seed", certify_seed, "RNG seed (echoed in output)")
        ->capture_default_str();
    certify->add_option("--prime", certify_prime, "prime for lifting set families");
    certify->add_option("--retry-budget", certify_budget, "redraws allowed per generic map")
        ->capture_default_str();
    certify->add_option("--out", certify_out, "write the certificate JSON here");

    // search + subcommands
    auto* search = app.add_subcommand("search", "exhaustive and randomized family searches");
    search->require_subcommand(1);

    auto* maxfam = search->add_subcommand("max-family", "exhaustive maximum-family search");
    std::string maxfam_kind = "sets", maxfam_mode = "weak", maxfam_out;
    std::vector<int> maxfam_ell;
    int maxfam_ground = 0, maxfam_ambient = 0, maxfam_width = 1;
    std::uint64_t maxfam_prime = kDefaultPrime, maxfam_budget = 50'000'000;
    double maxfam_time = 0.0;
    maxfam->add_option("--kind", maxfam_kind, "sets | subspaces")->capture_default_str();
    maxfam->add_option("--ell", maxfam_ell, "ell_1,..,ell_k")->required()->delimiter(',');
    maxfam->add_option("--ground", maxfam_ground, "ground size (sets)");
    maxfam->add_option("--ambient", maxfam_ambient, "ambient dimension (subspaces)");
    maxfam->add_option("--prime", maxfam_prime, "prime (subspaces)")->capture_default_str();
    maxfam->add_option("--mode", maxfam_mode, "weak | strong | threshold:<t>")
        ->capture_default_str();
    maxfam->add_option("--node-budget", maxfam_budget, "search node budget")
        ->capture_default_str();
    maxfam->add_option("--time-budget", maxfam_time, "seconds (0 = unlimited)")
        ->capture_default_str();
    maxfam->add_option("--width", maxfam_width, "parallel workers")->capture_default_str();
    maxfam->add_option("--out", maxfam_out, "write the result JSON here");

    auto* orderrows = search->add_subcommand("order-rows", "find a row order satisfying the "
                                                           "cross condition");
    std::string orderrows_path, orderrows_mode = "weak", orderrows_out;
    orderrows->add_option("file", orderrows_path, "family JSON file")->required();
    orderrows->add_option("--mode", orderrows_mode, "weak | strong | threshold:<t>")
        ->capture_default_str();
    orderrows->add_option("--out", orderrows_out, "write the result JSON here");

    auto* partitions = search->add_subcommand("partitions", "materialize the ordered-partition "
                                                            "family for ell");
    std::vector<int> partitions_ell;
    std::string partitions_out;
    partitions->add_option("--ell", partitions_ell, "ell_1,..,ell_k")->required()->delimiter(',');
    partitions->add_option("--out", partitions_out, "write the family JSON here");

    auto* hunt = search->add_subcommand("hunt", "randomized hunt for conjecture counterexamples");
    std::vector<int> hunt_ell;
    std::string hunt_mode = "weak", hunt_out;
    int hunt_ambient = 0;
    std::uint64_t hunt_prime = 2, hunt_budget = 100'000, hunt_seed = 1;
    hunt->add_option("--ell", hunt_ell, "ell_1,..,ell_k")->required()->delimiter(',');
    hunt->add_option("--ambient", hunt_ambient, "ambient dimension")->required();
    hunt->add_option("--prime", hunt_prime, "prime")->capture_default_str();
    hunt->add_option("--mode", hunt_mode, "weak | threshold:<t>")->capture_default_str();
    hunt->add_option("--node-budget", hunt_budget, "row proposals allowed")->capture_default_str();
    hunt->add_option("--seed", hunt_seed, "RNG seed (echoed in output)")->capture_default_str();
    hunt->add_option("--out", hunt_out, "write the result JSON here");

    // demo-mistake
    auto* demo = app.add_subcommand("demo-mistake", "reproduce the rank-2 row that defeats the "
                                                    "naive wedge claim");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*verify) return cmd_verify(verify_path, verify_mode);
        if (*bounds_cmd) return cmd_bounds(bounds_ell, bounds_t);
        if (*certify)
            return cmd_certify(certify_path, certify_seed, certify_prime, certify_budget,
                               certify_out);
        if (*demo) return cmd_demo_mistake();

        if (*maxfam) {
            SearchConfig cfg;
            cfg.kind = maxfam_kind == "subspaces" ? GridKind::subspaces : GridKind::sets;
            if (maxfam_kind != "sets" && maxfam_kind != "subspaces")
                throw std::invalid_argument("--kind must be sets or subspaces");
            cfg.ell = maxfam_ell;
            cfg.ground_size = maxfam_ground;
            cfg.ambient_dim = maxfam_ambient;
            cfg.prime = maxfam_prime;
            const ModeArg mode = parse_mode(maxfam_mode);
            cfg.mode = mode.mode;
            cfg.t = mode.t;
            cfg.node_budget = maxfam_budget;
            cfg.time_budget_seconds = maxfam_time;
            cfg.parallel_width = maxfam_width;
            const SearchOutcome outcome = max_family_search(cfg);
            emit_result(search_outcome_to_json(cfg, outcome, "max-family"), maxfam_out);
            std::cout << "max_m_found = " << outcome.max_m_found
                      << "  exhausted = " << (outcome.exhausted ? "true" : "false") << "\n";
            return outcome.exhausted ? kExitOk : kExitBudgetExceeded;
        }

        if (*orderrows) {
            const FamilyFile fam = load_family_file(orderrows_path);
            const ModeArg mode = parse_mode(orderrows_mode);
            std::optional<std::vector<int>> perm;
            Json ordered_family;
            if (fam.is_sets()) {
                perm = order_rows(*fam.sets, mode.mode, mode.t);
                if (perm) {
                    std::vector<std::vector<SetCell>> rows;
                    for (int r : *perm) rows.push_back(fam.sets->rows()[r]);
                    ordered_family = family_to_json(
                        SetGrid(fam.sets->ell(), fam.sets->ground_size(), std::move(rows)));
                }
            } else {
                perm = order_rows(*fam.subspaces, mode.mode, mode.t);
                if (perm) {
                    std::vector<std::vector<Subspace>> rows;
                    for (int r : *perm) rows.push_back(fam.subspaces->rows()[r]);
                    ordered_family = family_to_json(
                        SubspaceGrid(fam.subspaces->ell(), fam.subspaces->field(),
                                     fam.subspaces->ambient_dim(), std::move(rows)));
                }
            }
            Json j;
            j["command"] = "order-rows";
            if (perm) {
                Json p = Json::array();
                for (int r : *perm) p.push_back(r + 1);
                j["permutation"] = std::move(p);
                j["ordered"] = std::move(ordered_family);
            } else {
                j["permutation"] = nullptr;
                j["ordered"] = nullptr;
            }
            emit_result(j, orderrows_out);
            return perm ? kExitOk : kExitConditionFailure;
        }

        if (*partitions) {
            const auto fam = ordered_partition_family(partitions_ell);
            if (!fam) {
                Json j;
                j["command"] = "partitions";
                j["family"] = nullptr;
                emit_result(j, partitions_out);
                std::cout << "no row order satisfies the cross condition\n";
                return kExitConditionFailure;
            }
            emit_result(family_to_json(*fam), partitions_out);
            std::cout << "rows = " << fam->m() << "\n";
            return kExitOk;
        }

        if (*hunt) {
            SearchConfig cfg;
            cfg.kind = GridKind::subspaces;
            cfg.ell = hunt_ell;
            cfg.ambient_dim = hunt_ambient;
            cfg.prime = hunt_prime;
            const ModeArg mode = parse_mode(hunt_mode);
            if (mode.mode == ConditionMode::direct_sum)
                throw std::invalid_argument("hunt targets the weak or threshold conjectures");
            cfg.mode = mode.mode;
            cfg.t = mode.t;
            cfg.node_budget = hunt_budget;
            cfg.seed = hunt_seed;
            RandomStream rng(cfg.seed);
            const SearchOutcome outcome = counterexample_hunt(cfg, rng);
            emit_result(search_outcome_to_json(cfg, outcome, "hunt"), hunt_out);
            std::cout << "seed = " << cfg.seed << "\n";
            std::cout << "max_m_found = " << outcome.max_m_found << "  exceeds_conjectured = "
                      << (outcome.exceeds_conjectured ? "true" : "false") << "\n";
            return outcome.exceeds_conjectured ? kExitOk : kExitBudgetExceeded;
        }
    } catch (const skewcert::ParseError& e) {
        std::cerr << "input error: " << e.what();
        if (e.row > 0) {
            std::cerr << " (row " << e.row;
            if (e.col > 0) std::cerr << ", column " << e.col;
            std::cerr << ")";
        }
        std::cerr << "\n";
        return kExitInputError;
    } catch (const skewcert::InvalidThreshold& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const skewcert::SamplingExhausted& e) {
        std::cerr << "sampling failure: " << e.what() << "\n";
        return kExitSamplingFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return kExitInputError;
}
