#include "ringlab/report.hpp"

#include <sstream>

namespace ringlab {

namespace {

Json set_json(const ElementSet& s) { return Json(s.indices()); }

}  // namespace

Json sets_result_json(const RingTable& r, const StructuralSets& s,
                      const ClosureAudit& audit) {
    Json j;
    j["label"] = r.label;
    j["order"] = r.order;
    j["element_names"] = r.names;
    j["units"] = set_json(s.units);
    j["idempotents"] = set_json(s.idempotents);
    j["tripotents"] = set_json(s.tripotents);
    j["nilpotents"] = set_json(s.nilpotents);
    j["jacobson"] = set_json(s.jacobson);
    j["delta"] = set_json(s.delta);
    Json nil = Json::object();
    for (const auto& [x, k] : s.nilpotency_index) nil[std::to_string(x)] = k;
    j["nilpotency_index"] = nil;
    Json a;
    a["ok"] = audit.ok;
    if (!audit.ok) {
        a["property"] = audit.property;
        a["witness"] = Json::array();
        for (int w : audit.witness)
            if (w >= 0) a["witness"].push_back(w);
    }
    j["closure_audit"] = a;
    return j;
}

Json classify_result_json(const RingTable& r, const ClassVerdict& v) {
    Json j;
    j["label"] = v.ring;
    j["order"] = r.order;
    j["dt"] = v.dt;
    j["semi_tripotent"] = v.semi_tripotent;
    j["clean"] = v.clean;
    j["uniquely_clean"] = v.uniquely_clean;
    j["delta_u"] = v.delta_u;
    j["di"] = v.di;
    j["boolean"] = v.boolean_ring;
    j["yaqub"] = v.yaqub;
    j["two_uj"] = v.two_uj;
    j["reduced_mod_j"] = v.reduced_mod_j;
    Json w = Json::object();
    for (const auto& [cls, wit] : v.witnesses)
        w[cls] = Json{{"index", wit.first}, {"name", wit.second}};
    j["witnesses"] = w;
    return j;
}

Json theorem_report_json(const TheoremReport& rep) {
    Json j;
    j["theorem"] = rep.theorem_id;
    j["subject"] = rep.subject;
    j["verdict"] = to_string(rep.verdict);
    j["witness"] = rep.witness;
    j["witness_names"] = rep.witness_names;
    j["note"] = rep.note;
    return j;
}

Json decompose_result_json(const RingTable& r, int element, DecompositionKind kind,
                           const std::optional<Decomposition>& dec, bool verified) {
    Json j;
    j["label"] = r.label;
    j["kind"] = to_string(kind);
    j["element"] = Json{{"index", element},
                        {"name", r.names[static_cast<std::size_t>(element)]}};
    j["found"] = dec.has_value();
    if (dec) {
        Json names = Json::array();
        for (int p : dec->parts) names.push_back(r.names[static_cast<std::size_t>(p)]);
        j["parts"] = Json{{"indices", dec->parts}, {"names", names}};
        j["verified"] = verified;
    }
    return j;
}

ReportDocument make_report(const std::string& command, Json inputs,
                           std::vector<Json> results, const VerifySummary& summary,
                           std::vector<long long> result_times_us,
                           long long total_time_us) {
    ReportDocument doc;
    doc.payload["schema_version"] = 1;
    doc.payload["command"] = command;
    doc.payload["inputs"] = std::move(inputs);
    doc.payload["results"] = Json(std::move(results));
    doc.payload["summary"] = Json{{"pass", summary.pass},
                                  {"fail", summary.fail},
                                  {"hypothesis_not_met", summary.hypothesis_not_met},
                                  {"skipped", summary.skipped}};
    doc.timing["total_us"] = total_time_us;
    doc.timing["results_us"] = Json(std::move(result_times_us));
    return doc;
}

std::string dump_document(const Json& j) { return j.dump(2) + "\n"; }

std::string render_table(const ReportDocument& doc) {
    std::ostringstream out;
    const Json& p = doc.payload;
    out << "command: " << p.at("command").get<std::string>() << "\n";
    for (const auto& res : p.at("results")) {
        if (res.contains("verdict")) {
            out << "  " << res.at("verdict").get<std::string>() << "  "
                << res.at("theorem").get<std::string>() << "  "
                << res.at("subject").get<std::string>();
            auto note = res.at("note").get<std::string>();
            if (!note.empty()) out << "  -- " << note;
            out << "\n";
        } else {
            out << "  " << res.dump() << "\n";
        }
    }
    const Json& s = p.at("summary");
    out << "summary: pass=" << s.at("pass") << " fail=" << s.at("fail")
        << " hypothesis_not_met=" << s.at("hypothesis_not_met")
        << " skipped=" << s.at("skipped") << "\n";
    return out.str();
}

}  // namespace ringlab
