#include "skewcert/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "skewcert/errors.hpp"
#include "skewcert/version.hpp"

namespace skewcert {

namespace {

Json cells_to_json(const SetGrid& g) {
    Json rows = Json::array();
    for (int i = 0; i < g.m(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < g.k(); ++j) row.push_back(g.cell(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json basis_to_json(const Subspace& s) {
    Json rows = Json::array();
    for (int r = 0; r < s.dim(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < s.ambient_dim(); ++c) row.push_back(s.basis().at(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

int require_int(const Json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw ParseError(std::string("missing or non-integer field \"") + field + "\"");
    return j[field].get<int>();
}

std::vector<int> require_int_array(const Json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_array())
        throw ParseError(std::string("missing or non-array field \"") + field + "\"");
    std::vector<int> out;
    for (const auto& v : j[field]) {
        if (!v.is_number_integer())
            throw ParseError(std::string("non-integer entry in \"") + field + "\"");
        out.push_back(v.get<int>());
    }
    return out;
}

}  // namespace

Json family_to_json(const SetGrid& g) {
    Json j;
    j["kind"] = "sets";
    j["k"] = g.k();
    j["ell"] = g.ell();
    j["ground_size"] = g.ground_size();
    j["rows"] = cells_to_json(g);
    return j;
}

Json family_to_json(const SubspaceGrid& g) {
    Json j;
    j["kind"] = "subspaces";
    j["k"] = g.k();
    j["ell"] = g.ell();
    j["ambient_dim"] = g.ambient_dim();
    j["prime"] = g.field().p();
    Json rows = Json::array();
    for (int i = 0; i < g.m(); ++i) {
        Json row = Json::array();
        for (int jj = 0; jj < g.k(); ++jj) row.push_back(basis_to_json(g.cell(i, jj)));
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

Json family_to_json(const FamilyFile& f) {
    return f.is_sets() ? family_to_json(*f.sets) : family_to_json(*f.subspaces);
}

FamilyFile parse_family(const Json& j) {
    if (!j.is_object()) throw ParseError("family file must be a JSON object");
    if (!j.contains("kind") || !j["kind"].is_string())
        throw ParseError("missing or non-string field \"kind\"");
    const std::string kind = j["kind"].get<std::string>();
    if (kind != "sets" && kind != "subspaces")
        throw ParseError("field \"kind\" must be \"sets\" or \"subspaces\"");

    const int k = require_int(j, "k");
    const std::vector<int> ell = require_int_array(j, "ell");
    if (static_cast<int>(ell.size()) != k)
        throw ParseError("field \"ell\" must list exactly k entries");
    if (k < 2) throw ParseError("k must be at least 2");
    for (int l : ell)
        if (l < 1) throw ParseError("every ell entry must be positive");

    if (!j.contains("rows") || !j["rows"].is_array())
        throw ParseError("missing or non-array field \"rows\"");

    FamilyFile out;
    if (kind == "sets") {
        const int ground = require_int(j, "ground_size");
        std::vector<std::vector<SetCell>> rows;
        int ri = 0;
        for (const auto& row : j["rows"]) {
            ++ri;
            if (!row.is_array() || static_cast<int>(row.size()) != k)
                throw ParseError("row " + std::to_string(ri) + " does not have k cells", ri);
            std::vector<SetCell> cells;
            int ci = 0;
            for (const auto& cell : row) {
                ++ci;
                if (!cell.is_array())
                    throw ParseError("cell is not an array of elements", ri, ci);
                SetCell c;
                for (const auto& x : cell) {
                    if (!x.is_number_integer())
                        throw ParseError("set element is not an integer", ri, ci);
                    c.push_back(x.get<int>());
                }
                cells.push_back(std::move(c));
            }
            rows.push_back(std::move(cells));
        }
        try {
            out.sets.emplace(ell, ground, std::move(rows));
        } catch (const std::exception& e) {
            throw ParseError(std::string("invalid set family: ") + e.what());
        }
    } else {
        const int ambient = require_int(j, "ambient_dim");
        if (!j.contains("prime") || !j["prime"].is_number_integer() ||
            j["prime"].get<long long>() < 2)
            throw ParseError("missing or invalid field \"prime\"");
        const std::uint64_t p = j["prime"].get<std::uint64_t>();
        std::optional<PrimeField> field;
        try {
            field.emplace(p);
        } catch (const std::exception& e) {
            throw ParseError(std::string("invalid prime: ") + e.what());
        }

        std::vector<std::vector<Subspace>> rows;
        int ri = 0;
        for (const auto& row : j["rows"]) {
            ++ri;
            if (!row.is_array() || static_cast<int>(row.size()) != k)
                throw ParseError("row " + std::to_string(ri) + " does not have k cells", ri);
            std::vector<Subspace> cells;
            int ci = 0;
            for (const auto& cell : row) {
                ++ci;
                if (!cell.is_array())
                    throw ParseError("cell is not an array of basis vectors", ri, ci);
                std::vector<std::vector<long long>> basis_rows;
                for (const auto& vec : cell) {
                    if (!vec.is_array() || static_cast<int>(vec.size()) != ambient)
                        throw ParseError("basis vector length differs from ambient_dim", ri, ci);
                    std::vector<long long> v;
                    for (const auto& x : vec) {
                        if (!x.is_number_integer())
                            throw ParseError("basis entry is not an integer", ri, ci);
                        v.push_back(x.get<long long>());
                    }
                    basis_rows.push_back(std::move(v));
                }
                try {
                    if (basis_rows.empty())
                        cells.push_back(Subspace::zero(*field, ambient));
                    else
                        cells.push_back(
                            subspace_from_rows(Matrix::from_rows(*field, basis_rows), ambient));
                } catch (const std::exception& e) {
                    throw ParseError(std::string("invalid subspace cell: ") + e.what(), ri, ci);
                }
            }
            rows.push_back(std::move(cells));
        }
        try {
            out.subspaces.emplace(ell, *field, ambient, std::move(rows));
        } catch (const std::exception& e) {
            throw ParseError(std::string("invalid subspace family: ") + e.what());
        }
    }
    return out;
}

FamilyFile load_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError(std::string("JSON parse failure: ") + e.what());
    }
    return parse_family(j);
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

std::string fingerprint_of(const Json& canonical) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(canonical.dump())));
    return std::string("fnv1a64:") + buf;
}

}  // namespace

std::string family_fingerprint(const SetGrid& g) { return fingerprint_of(family_to_json(g)); }
std::string family_fingerprint(const SubspaceGrid& g) { return fingerprint_of(family_to_json(g)); }

Json report_to_json(const ConditionReport& rep) {
    Json j;
    j["condition"] = rep.condition;
    j["holds"] = rep.holds;
    j["violations"] = rep.violations;
    Json sw = Json::array();
    for (const auto& w : rep.skew_witnesses) sw.push_back({w[0], w[1], w[2], w[3]});
    j["skew_witnesses"] = std::move(sw);
    return j;
}

Json certificate_to_json(const Certificate& cert) {
    Json j;
    j["family_fingerprint"] = cert.family_fingerprint;
    j["seed"] = cert.seed;
    j["prime"] = cert.prime;
    j["bound"] = cert.bound.str();
    j["pairing"] = cert.pairing;
    j["verdict"] = to_string(cert.verdict);
    if (cert.verdict == Verdict::refuted_input) {
        Json reports = Json::array();
        for (const auto& rep : cert.reports) reports.push_back(report_to_json(rep));
        j["reports"] = std::move(reports);
    }
    if (cert.verdict == Verdict::sampling_failed) j["failure_reason"] = cert.failure_reason;
    j["tool_version"] = kToolVersion;
    return j;
}

Json search_config_to_json(const SearchConfig& cfg) {
    Json j;
    j["kind"] = to_string(cfg.kind);
    j["ell"] = cfg.ell;
    if (cfg.kind == GridKind::sets) {
        j["ground_size"] = cfg.ground_size;
    } else {
        j["ambient_dim"] = cfg.ambient_dim;
        j["prime"] = cfg.prime;
    }
    j["mode"] = to_string(cfg.mode);
    if (cfg.mode == ConditionMode::threshold) j["t"] = cfg.t;
    j["node_budget"] = cfg.node_budget;
    j["time_budget_seconds"] = cfg.time_budget_seconds;
    j["parallel_width"] = cfg.parallel_width;
    j["seed"] = cfg.seed;
    return j;
}

Json search_outcome_to_json(const SearchConfig& cfg, const SearchOutcome& outcome,
                            const std::string& command) {
    Json j;
    j["command"] = command;
    j["config"] = search_config_to_json(cfg);
    Json o;
    o["max_m_found"] = outcome.max_m_found;
    o["exhausted"] = outcome.exhausted;
    o["nodes_visited"] = outcome.nodes_visited;
    o["proved_bound"] = outcome.proved_bound.str();
    o["conjectured_bound"] = outcome.conjectured_bound.str();
    o["exceeds_conjectured"] = outcome.exceeds_conjectured;
    if (outcome.witness_sets)
        o["witness"] = family_to_json(*outcome.witness_sets);
    else if (outcome.witness_subspaces)
        o["witness"] = family_to_json(*outcome.witness_subspaces);
    else
        o["witness"] = nullptr;
    j["outcome"] = std::move(o);
    return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

}  // namespace skewcert
