#pragma once

#include <json.hpp>

#include "ringlab/theorems.hpp"

namespace ringlab {

using Json = nlohmann::json;

// Report documents have two top-level keys: "payload" carries everything
// deterministic ({schema_version, command, inputs, results[], summary}) and
// is byte-stable across runs; "timing" carries elapsed times and is excluded
// from golden comparisons.
struct ReportDocument {
    Json payload;
    Json timing;

    Json full() const { return Json{{"payload", payload}, {"timing", timing}}; }
};

Json sets_result_json(const RingTable& r, const StructuralSets& s,
                      const ClosureAudit& audit);
Json classify_result_json(const RingTable& r, const ClassVerdict& v);
Json theorem_report_json(const TheoremReport& rep);
Json decompose_result_json(const RingTable& r, int element, DecompositionKind kind,
                           const std::optional<Decomposition>& dec, bool verified);

ReportDocument make_report(const std::string& command, Json inputs,
                           std::vector<Json> results, const VerifySummary& summary,
                           std::vector<long long> result_times_us,
                           long long total_time_us);

// Stable serialization: sorted keys (nlohmann objects are ordered maps),
// two-space indent, trailing newline.
std::string dump_document(const Json& j);

// Plain-text rendering for --format table.
std::string render_table(const ReportDocument& doc);

}  // namespace ringlab
