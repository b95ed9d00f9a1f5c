#include "ringlab/struct_sets.hpp"

namespace ringlab {

ElementSet units(const RingTable& r) {
    ElementSet s(r.order);
    for (int x = 0; x < r.order; ++x) {
        for (int y = 0; y < r.order; ++y) {
            // Both products checked even though one-sided inverses are
            // two-sided in a finite ring.
            if (r.mul_of(x, y) == r.one && r.mul_of(y, x) == r.one) {
                s.insert(x);
                break;
            }
        }
    }
    return s;
}

ElementSet idempotents(const RingTable& r) {
    ElementSet s(r.order);
    for (int x = 0; x < r.order; ++x)
        if (r.mul_of(x, x) == x) s.insert(x);
    return s;
}

ElementSet tripotents(const RingTable& r) {
    ElementSet s(r.order);
    for (int x = 0; x < r.order; ++x)
        if (r.mul_of(r.mul_of(x, x), x) == x) s.insert(x);
    return s;
}

ElementSet nilpotents(const RingTable& r, std::map<int, int>* index_out) {
    ElementSet s(r.order);
    for (int x = 0; x < r.order; ++x) {
        // The nilpotency index cannot exceed the ring order: powers below the
        // index are pairwise distinct.
        int p = x;
        for (int k = 1; k <= r.order; ++k) {
            if (p == r.zero) {
                s.insert(x);
                if (index_out) (*index_out)[x] = k;
                break;
            }
            p = r.mul_of(p, x);
        }
    }
    return s;
}

ElementSet jacobson(const RingTable& r, const ElementSet& unit_set) {
    ElementSet s(r.order);
    for (int x = 0; x < r.order; ++x) {
        bool in = true;
        for (int a = 0; a < r.order && in; ++a)
            if (!unit_set.contains(r.sub_of(r.one, r.mul_of(a, x)))) in = false;
        if (in) s.insert(x);
    }
    return s;
}

ElementSet delta(const RingTable& r, const ElementSet& unit_set) {
    auto us = unit_set.indices();
    ElementSet sum_form(r.order), left_form(r.order), right_form(r.order);
    for (int x = 0; x < r.order; ++x) {
        bool a = true, b = true, c = true;
        for (int u : us) {
            if (a && !unit_set.contains(r.add_of(x, u))) a = false;
            if (b && !unit_set.contains(r.sub_of(r.one, r.mul_of(x, u)))) b = false;
            if (c && !unit_set.contains(r.sub_of(r.one, r.mul_of(u, x)))) c = false;
            if (!a && !b && !c) break;
        }
        if (a) sum_form.insert(x);
        if (b) left_form.insert(x);
        if (c) right_form.insert(x);
    }
    if (!(sum_form == left_form && left_form == right_form)) {
        for (int x = 0; x < r.order; ++x) {
            if (sum_form.contains(x) != left_form.contains(x) ||
                left_form.contains(x) != right_form.contains(x))
                throw ConsistencyError("delta: defining forms disagree at element " +
                                       std::to_string(x) + " of " + r.label);
        }
    }
    return sum_form;
}

StructuralSets compute_structural_sets(const RingTable& r) {
    StructuralSets s;
    s.units = units(r);
    s.idempotents = idempotents(r);
    s.tripotents = tripotents(r);
    s.nilpotents = nilpotents(r, &s.nilpotency_index);
    s.jacobson = jacobson(r, s.units);
    s.delta = delta(r, s.units);
    return s;
}

ClosureAudit audit_delta_closure(const RingTable& r, const StructuralSets& s) {
    ClosureAudit a;
    auto fail = [&](const std::string& property, int x, int y) {
        a.ok = false;
        a.property = property;
        a.witness = {x, y};
        return a;
    };
    auto ds = s.delta.indices();
    auto us = s.units.indices();
    for (int d : ds) {
        if (!s.delta.contains(r.neg_of(d))) return fail("closed-under-negation", d, -1);
        if (!s.units.contains(r.add_of(r.one, d))) return fail("one-plus-delta-unit", d, -1);
        for (int e : ds)
            if (!s.delta.contains(r.add_of(d, e))) return fail("closed-under-addition", d, e);
        for (int u : us) {
            if (!s.delta.contains(r.mul_of(d, u))) return fail("unit-multiple-right", d, u);
            if (!s.delta.contains(r.mul_of(u, d))) return fail("unit-multiple-left", d, u);
        }
    }
    return a;
}

bool is_central(const RingTable& r, int x) {
    for (int a = 0; a < r.order; ++a)
        if (r.mul_of(x, a) != r.mul_of(a, x)) return false;
    return true;
}

const StructuralSets& MemoSetsProvider::get(const RingTable& r) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(r.fingerprint);
        if (it != memo_.end()) return *it->second;
    }
    auto computed = std::make_unique<StructuralSets>(compute_structural_sets(r));
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = memo_.emplace(r.fingerprint, std::move(computed));
    return *it->second;
}

}  // namespace ringlab
