#include "ringlab/cache.hpp"

#include <atomic>
#include <fstream>
#include <iostream>

#include <json.hpp>

namespace ringlab {

namespace {

using Json = nlohmann::json;

Json mask_to_json(const ElementSet& s) { return Json(s.indices()); }

ElementSet mask_from_json(const Json& j, int order) {
    ElementSet s(order);
    for (const auto& v : j) {
        int x = v.get<int>();
        if (x < 0 || x >= order) throw Error("cache entry has out-of-range index");
        s.insert(x);
    }
    return s;
}

}  // namespace

bool cache_store(const std::filesystem::path& dir, const RingTable& r,
                 const StructuralSets& s) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) return false;

    Json j;
    j["schema_version"] = 1;
    j["fingerprint"] = r.fingerprint;
    j["label"] = r.label;
    j["order"] = r.order;
    j["units"] = mask_to_json(s.units);
    j["idempotents"] = mask_to_json(s.idempotents);
    j["tripotents"] = mask_to_json(s.tripotents);
    j["nilpotents"] = mask_to_json(s.nilpotents);
    j["jacobson"] = mask_to_json(s.jacobson);
    j["delta"] = mask_to_json(s.delta);
    Json nil = Json::object();
    for (const auto& [x, k] : s.nilpotency_index) nil[std::to_string(x)] = k;
    j["nilpotency_index"] = nil;

    static std::atomic<unsigned> tmp_counter{0};
    auto final_path = dir / (r.fingerprint + ".json");
    auto tmp_path =
        dir / (r.fingerprint + ".tmp" + std::to_string(tmp_counter.fetch_add(1)));
    {
        std::ofstream out(tmp_path);
        if (!out) return false;
        out << j.dump(2) << "\n";
        if (!out) return false;
    }
    std::filesystem::rename(tmp_path, final_path, ec);
    if (ec) {
        std::filesystem::remove(tmp_path, ec);
        return false;
    }
    return true;
}

std::optional<StructuralSets> cache_load(const std::filesystem::path& dir,
                                         const RingTable& r) {
    auto path = dir / (r.fingerprint + ".json");
    std::ifstream in(path);
    if (!in) return std::nullopt;  // plain miss
    try {
        Json j = Json::parse(in);
        if (j.at("schema_version").get<int>() != 1) throw Error("unknown schema version");
        if (j.at("fingerprint").get<std::string>() != r.fingerprint)
            throw Error("fingerprint mismatch");
        if (j.at("order").get<int>() != r.order) throw Error("order mismatch");
        StructuralSets s;
        s.units = mask_from_json(j.at("units"), r.order);
        s.idempotents = mask_from_json(j.at("idempotents"), r.order);
        s.tripotents = mask_from_json(j.at("tripotents"), r.order);
        s.nilpotents = mask_from_json(j.at("nilpotents"), r.order);
        s.jacobson = mask_from_json(j.at("jacobson"), r.order);
        s.delta = mask_from_json(j.at("delta"), r.order);
        for (const auto& [key, value] : j.at("nilpotency_index").items())
            s.nilpotency_index[std::stoi(key)] = value.get<int>();
        return s;
    } catch (const std::exception& e) {
        std::cerr << "warning: ignoring unreadable cache entry " << path.string() << ": "
                  << e.what() << "\n";
        return std::nullopt;
    }
}

const StructuralSets& CachedSetsProvider::get(const RingTable& r) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(r.fingerprint);
        if (it != memo_.end()) return *it->second;
    }
    std::unique_ptr<StructuralSets> computed;
    if (!dir_.empty()) {
        if (auto loaded = cache_load(dir_, r))
            computed = std::make_unique<StructuralSets>(std::move(*loaded));
    }
    if (!computed) {
        computed = std::make_unique<StructuralSets>(compute_structural_sets(r));
        if (!dir_.empty()) cache_store(dir_, r, *computed);
    }
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = memo_.emplace(r.fingerprint, std::move(computed));
    return *it->second;
}

}  // namespace ringlab
