#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "ringlab/ring_table.hpp"

namespace ringlab {

// The named structural subsets of a finite ring, computed by exhaustive
// element scans.
struct StructuralSets {
    ElementSet units;
    ElementSet idempotents;
    ElementSet tripotents;
    ElementSet nilpotents;
    ElementSet jacobson;
    ElementSet delta;
    // nilpotent element -> least k with x^k = 0
    std::map<int, int> nilpotency_index;
};

ElementSet units(const RingTable& r);
ElementSet idempotents(const RingTable& r);
ElementSet tripotents(const RingTable& r);
ElementSet nilpotents(const RingTable& r, std::map<int, int>* index_out = nullptr);

// Quasi-regularity criterion: x with 1 - a*x a unit for every a. In a finite
// ring one-sided quasi-inverses are two-sided, so this is the full radical.
ElementSet jacobson(const RingTable& r, const ElementSet& unit_set);

// Computes all three defining forms of the delta set (x + u a unit for every
// unit u; 1 - x*u invertible; 1 - u*x invertible), asserts they coincide and
// returns the common set. A disagreement means a corrupt table and raises
// ConsistencyError.
ElementSet delta(const RingTable& r, const ElementSet& unit_set);

StructuralSets compute_structural_sets(const RingTable& r);

struct ClosureAudit {
    bool ok = true;
    std::string property;  // first violated closure law, empty when ok
    std::array<int, 2> witness{-1, -1};
};

// Verifies that delta is closed under addition and negation, absorbs unit
// multiples from both sides, and that 1 + delta consists of units.
ClosureAudit audit_delta_closure(const RingTable& r, const StructuralSets& s);

bool is_central(const RingTable& r, int x);

// Supplier of structural sets keyed by ring fingerprint. Implementations
// must keep returned references valid for their own lifetime.
class SetsProvider {
public:
    virtual ~SetsProvider() = default;
    virtual const StructuralSets& get(const RingTable& r) = 0;
};

// In-memory memoizing provider; thread-safe (entries are never evicted, so
// returned references stay stable).
class MemoSetsProvider : public SetsProvider {
public:
    const StructuralSets& get(const RingTable& r) override;

private:
    std::mutex mu_;
    std::map<std::string, std::unique_ptr<StructuralSets>> memo_;
};

}  // namespace ringlab
