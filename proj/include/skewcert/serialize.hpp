#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "skewcert/certify.hpp"
#include "skewcert/families.hpp"
#include "skewcert/search.hpp"

namespace skewcert {

/// All files use insertion-ordered JSON so serialization is byte-stable.
using Json = nlohmann::ordered_json;

/// A parsed family file: exactly one of the two grids is engaged.
struct FamilyFile {
    std::optional<SetGrid> sets;
    std::optional<SubspaceGrid> subspaces;

    bool is_sets() const { return sets.has_value(); }
};

Json family_to_json(const SetGrid& g);
Json family_to_json(const SubspaceGrid& g);
Json family_to_json(const FamilyFile& f);

/// Parse and canonicalize (cells sorted / bases row-reduced). Throws
/// ParseError naming the offending row and column where possible.
FamilyFile parse_family(const Json& j);
FamilyFile load_family_file(const std::string& path);

/// FNV-1a 64 over the canonical serialization, rendered as
/// "fnv1a64:<16 hex digits>".
std::string family_fingerprint(const SetGrid& g);
std::string family_fingerprint(const SubspaceGrid& g);
std::uint64_t fnv1a64(const std::string& bytes);

Json report_to_json(const ConditionReport& rep);
Json certificate_to_json(const Certificate& cert);

Json search_config_to_json(const SearchConfig& cfg);
Json search_outcome_to_json(const SearchConfig& cfg, const SearchOutcome& outcome,
                            const std::string& command);

/// dump(2) with a trailing newline — the one rendering used for every file.
std::string dump_json(const Json& j);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace skewcert
