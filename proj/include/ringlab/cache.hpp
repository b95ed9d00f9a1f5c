#pragma once

#include <filesystem>
#include <optional>

#include "ringlab/struct_sets.hpp"

namespace ringlab {

// Content-addressed structural-set cache: one JSON file per ring fingerprint
// (hash of label, order and table digests). Writes go through a temp file
// and an atomic rename; unreadable entries are ignored with a warning and
// recomputed.
bool cache_store(const std::filesystem::path& dir, const RingTable& r,
                 const StructuralSets& s);
std::optional<StructuralSets> cache_load(const std::filesystem::path& dir,
                                         const RingTable& r);

// Memoizing provider with an optional disk layer; thread-safe. Concurrent
// writers of the same fingerprint produce identical bytes, so the
// write-temp-then-rename contract keeps the directory consistent.
class CachedSetsProvider : public SetsProvider {
public:
    CachedSetsProvider() = default;
    explicit CachedSetsProvider(std::filesystem::path dir) : dir_(std::move(dir)) {}

    const StructuralSets& get(const RingTable& r) override;

private:
    std::filesystem::path dir_;
    std::mutex mu_;
    std::map<std::string, std::unique_ptr<StructuralSets>> memo_;
};

}  // namespace ringlab
