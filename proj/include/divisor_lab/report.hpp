#pragma once

#include <string>

#include <json.hpp>

#include "divisor_lab/constructions.hpp"
#include "divisor_lab/core.hpp"
#include "divisor_lab/enumeration.hpp"
#include "divisor_lab/search.hpp"
#include "divisor_lab/zero_sum.hpp"

namespace divisor_lab {

/// All structured output uses insertion-ordered JSON so a document dumps
/// identically after any number of parse/dump round trips.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kLibraryVersion = "0.1.0";

Json task_json(const SearchTask& task);
SearchTask task_from_json(const Json& j);

Json task_json(const MuSearchTask& task);
MuSearchTask mu_task_from_json(const Json& j);

Json census_json(const SeparationCensus& census);

/// Divisor statistics; the explicit divisor list is optional since it can
/// be exponentially large.
Json divisor_report_json(const DivisorReport& report, bool include_divisors);

Json divisor_counts_json(const IntSet& set, const DivisorCounts& counts);

/// Search results. Timing lives in the enclosing document, not here, so
/// replaying a command reproduces the outputs object bit-for-bit.
Json record_json(const SearchRecord& record);
Json record_json(const MuSearchRecord& record);
Json bound_check_json(const BoundCheck& check);
Json characterization_json(const CharacterizationReport& report);
Json dkn_probe_json(const DknProbe& probe);

/// The canonical envelope every CLI command emits with --json.
Json result_document(const std::string& command, Json inputs, Json outputs, double seconds);

/// CSV export of an extremal-witness table: one row per set.
std::string witness_csv(const std::vector<std::vector<std::int64_t>>& sets,
                        std::uint64_t value);

}  // namespace divisor_lab
