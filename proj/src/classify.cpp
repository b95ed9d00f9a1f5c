#include "ringlab/classify.hpp"

namespace ringlab {

const char* to_string(DecompositionKind k) {
    switch (k) {
        case DecompositionKind::TripotentDelta: return "TripotentDelta";
        case DecompositionKind::SumIdem: return "SumIdem";
        case DecompositionKind::DiffIdemCommuting: return "DiffIdemCommuting";
        case DecompositionKind::DiffIdemOrth: return "DiffIdemOrth";
        case DecompositionKind::SquareIdem: return "SquareIdem";
        case DecompositionKind::IdemInvolution: return "IdemInvolution";
    }
    return "?";
}

std::optional<DecompositionKind> decomposition_kind_from_string(std::string_view s) {
    using K = DecompositionKind;
    for (K k : {K::TripotentDelta, K::SumIdem, K::DiffIdemCommuting, K::DiffIdemOrth,
                K::SquareIdem, K::IdemInvolution})
        if (s == to_string(k)) return k;
    return std::nullopt;
}

namespace {

std::vector<int> involutions(const RingTable& r) {
    std::vector<int> vs;
    for (int v = 0; v < r.order; ++v)
        if (r.mul_of(v, v) == r.one) vs.push_back(v);
    return vs;
}

}  // namespace

std::optional<Decomposition> decompose(const RingTable& r, const StructuralSets& s,
                                       int a, DecompositionKind kind) {
    if (a < 0 || a >= r.order)
        throw UsageError("decompose: element index " + std::to_string(a) +
                         " out of range for " + r.label);
    auto ids = s.idempotents.indices();
    switch (kind) {
        case DecompositionKind::TripotentDelta:
            for (int t : s.tripotents.indices()) {
                int d = r.sub_of(a, t);
                if (s.delta.contains(d))
                    return Decomposition{kind, {t, d}, a};
            }
            return std::nullopt;
        case DecompositionKind::SumIdem:
            for (int e : ids)
                for (int f : ids) {
                    if (r.mul_of(e, f) != r.mul_of(f, e)) continue;
                    int j = r.sub_of(r.sub_of(a, e), f);
                    if (s.jacobson.contains(j)) return Decomposition{kind, {e, f, j}, a};
                }
            return std::nullopt;
        case DecompositionKind::DiffIdemCommuting:
            for (int e : ids)
                for (int f : ids) {
                    if (r.mul_of(e, f) != r.mul_of(f, e)) continue;
                    int j = r.add_of(r.sub_of(a, e), f);
                    if (s.jacobson.contains(j)) return Decomposition{kind, {e, f, j}, a};
                }
            return std::nullopt;
        case DecompositionKind::DiffIdemOrth:
            for (int e : ids)
                for (int f : ids) {
                    if (r.mul_of(e, f) != r.zero || r.mul_of(f, e) != r.zero) continue;
                    int j = r.add_of(r.sub_of(a, e), f);
                    if (s.jacobson.contains(j)) return Decomposition{kind, {e, f, j}, a};
                }
            return std::nullopt;
        case DecompositionKind::SquareIdem: {
            int a2 = r.mul_of(a, a);
            for (int e : ids) {
                int j = r.sub_of(a2, e);
                if (s.jacobson.contains(j)) return Decomposition{kind, {e, j}, a};
            }
            return std::nullopt;
        }
        case DecompositionKind::IdemInvolution:
            for (int e : ids)
                for (int v : involutions(r)) {
                    if (r.mul_of(e, v) != r.mul_of(v, e)) continue;
                    int j = r.sub_of(r.sub_of(a, e), v);
                    if (s.jacobson.contains(j)) return Decomposition{kind, {e, v, j}, a};
                }
            return std::nullopt;
    }
    throw UsageError("decompose: unknown decomposition kind");
}

bool verify_decomposition(const RingTable& r, const StructuralSets& s,
                          const Decomposition& d) {
    auto idem = [&](int e) { return r.mul_of(e, e) == e; };
    switch (d.kind) {
        case DecompositionKind::TripotentDelta: {
            if (d.parts.size() != 2) return false;
            auto [e, dd] = std::pair{d.parts[0], d.parts[1]};
            return r.mul_of(r.mul_of(e, e), e) == e && s.delta.contains(dd) &&
                   r.add_of(e, dd) == d.target;
        }
        case DecompositionKind::SumIdem: {
            if (d.parts.size() != 3) return false;
            int e = d.parts[0], f = d.parts[1], j = d.parts[2];
            return idem(e) && idem(f) && r.mul_of(e, f) == r.mul_of(f, e) &&
                   s.jacobson.contains(j) && r.add_of(r.add_of(e, f), j) == d.target;
        }
        case DecompositionKind::DiffIdemCommuting: {
            if (d.parts.size() != 3) return false;
            int e = d.parts[0], f = d.parts[1], j = d.parts[2];
            return idem(e) && idem(f) && r.mul_of(e, f) == r.mul_of(f, e) &&
                   s.jacobson.contains(j) && r.add_of(r.sub_of(e, f), j) == d.target;
        }
        case DecompositionKind::DiffIdemOrth: {
            if (d.parts.size() != 3) return false;
            int e = d.parts[0], f = d.parts[1], j = d.parts[2];
            return idem(e) && idem(f) && r.mul_of(e, f) == r.zero &&
                   r.mul_of(f, e) == r.zero && s.jacobson.contains(j) &&
                   r.add_of(r.sub_of(e, f), j) == d.target;
        }
        case DecompositionKind::SquareIdem: {
            if (d.parts.size() != 2) return false;
            int e = d.parts[0], j = d.parts[1];
            return idem(e) && s.jacobson.contains(j) &&
                   r.add_of(e, j) == r.mul_of(d.target, d.target);
        }
        case DecompositionKind::IdemInvolution: {
            if (d.parts.size() != 3) return false;
            int e = d.parts[0], v = d.parts[1], j = d.parts[2];
            return idem(e) && r.mul_of(v, v) == r.one &&
                   r.mul_of(e, v) == r.mul_of(v, e) && s.jacobson.contains(j) &&
                   r.add_of(r.add_of(e, v), j) == d.target;
        }
    }
    return false;
}

DtVerdict is_dt(const RingTable& r, const StructuralSets& s) {
    DtVerdict v;
    v.certificates.reserve(static_cast<std::size_t>(r.order));
    auto tr = s.tripotents.indices();
    for (int a = 0; a < r.order; ++a) {
        bool found = false;
        for (int t : tr) {
            int d = r.sub_of(a, t);
            if (s.delta.contains(d)) {
                v.certificates.push_back({DecompositionKind::TripotentDelta, {t, d}, a});
                found = true;
                break;
            }
        }
        if (!found) {
            v.ok = false;
            v.witness = a;
            v.certificates.clear();
            return v;
        }
    }
    return v;
}

CoverVerdict is_semi_tripotent(const RingTable& r, const StructuralSets& s) {
    auto tr = s.tripotents.indices();
    for (int a = 0; a < r.order; ++a) {
        bool found = false;
        for (int t : tr)
            if (s.jacobson.contains(r.sub_of(a, t))) {
                found = true;
                break;
            }
        if (!found) return {false, a};
    }
    return {};
}

CoverVerdict is_clean(const RingTable& r, const StructuralSets& s) {
    auto ids = s.idempotents.indices();
    for (int a = 0; a < r.order; ++a) {
        bool found = false;
        for (int e : ids)
            if (s.units.contains(r.sub_of(a, e))) {
                found = true;
                break;
            }
        if (!found) return {false, a};
    }
    return {};
}

CoverVerdict is_uniquely_clean(const RingTable& r, const StructuralSets& s) {
    std::vector<int> count(static_cast<std::size_t>(r.order), 0);
    for (int e : s.idempotents.indices())
        for (int u : s.units.indices())
            ++count[static_cast<std::size_t>(r.add_of(e, u))];
    for (int a = 0; a < r.order; ++a)
        if (count[static_cast<std::size_t>(a)] != 1) return {false, a};
    return {};
}

CoverVerdict is_delta_u(const RingTable& r, const StructuralSets& s) {
    ElementSet one_plus_delta(r.order);
    for (int d : s.delta.indices()) one_plus_delta.insert(r.add_of(r.one, d));
    bool equal = one_plus_delta == s.units;

    ElementSet unit_sums(r.order);
    for (int u : s.units.indices())
        for (int v : s.units.indices()) unit_sums.insert(r.add_of(u, v));
    bool contained = unit_sums.subset_of(s.delta);
    bool same = unit_sums == s.delta;
    if (equal != contained || contained != same)
        throw ConsistencyError("is_delta_u: unit-sum characterizations disagree for " +
                               r.label);
    if (equal) return {};
    for (int x = 0; x < r.order; ++x)
        if (one_plus_delta.contains(x) != s.units.contains(x)) return {false, x};
    return {false, -1};
}

CoverVerdict is_di(const RingTable& r, const StructuralSets& s) {
    auto ids = s.idempotents.indices();
    for (int a = 0; a < r.order; ++a) {
        bool found = false;
        for (int e : ids)
            if (s.delta.contains(r.sub_of(a, e))) {
                found = true;
                break;
            }
        if (!found) return {false, a};
    }
    return {};
}

CoverVerdict is_boolean(const RingTable& r) {
    for (int a = 0; a < r.order; ++a)
        if (r.mul_of(a, a) != a) return {false, a};
    return {};
}

CoverVerdict is_yaqub(const RingTable& r) {
    for (int a = 0; a < r.order; ++a)
        if (r.pow_of(a, 3) != a) return {false, a};
    int three = r.int_embed(3);
    int p = three;
    for (int k = 1; k <= r.order; ++k) {
        if (p == r.zero) return {};
        p = r.mul_of(p, three);
    }
    return {false, three};
}

CoverVerdict is_two_uj(const RingTable& r, const StructuralSets& s) {
    for (int u : s.units.indices()) {
        int u2 = r.mul_of(u, u);
        bool found = false;
        for (int e : s.idempotents.indices())
            if (s.jacobson.contains(r.sub_of(u2, e))) {
                found = true;
                break;
            }
        if (!found) return {false, u};
    }
    return {};
}

CoverVerdict is_reduced(const RingTable& r) {
    for (int a = 0; a < r.order; ++a)
        if (a != r.zero && r.mul_of(a, a) == r.zero) return {false, a};
    return {};
}

ClassVerdict classify_ring(const RingTable& r, const StructuralSets& s) {
    ClassVerdict v;
    v.ring = r.label;
    auto note = [&](const char* cls, const CoverVerdict& c) {
        if (!c.ok && c.witness >= 0)
            v.witnesses[cls] = {c.witness, r.names[static_cast<std::size_t>(c.witness)]};
        return c.ok;
    };
    auto dt = is_dt(r, s);
    v.dt = dt.ok;
    if (!dt.ok)
        v.witnesses["dt"] = {dt.witness, r.names[static_cast<std::size_t>(dt.witness)]};
    v.semi_tripotent = note("semi_tripotent", is_semi_tripotent(r, s));
    v.clean = note("clean", is_clean(r, s));
    v.uniquely_clean = note("uniquely_clean", is_uniquely_clean(r, s));
    v.delta_u = note("delta_u", is_delta_u(r, s));
    v.di = note("di", is_di(r, s));
    v.boolean_ring = note("boolean", is_boolean(r));
    v.yaqub = note("yaqub", is_yaqub(r));
    v.two_uj = note("two_uj", is_two_uj(r, s));

    auto q = make_quotient(r, s.jacobson);
    auto reduced = is_reduced(q);
    v.reduced_mod_j = reduced.ok;
    if (!reduced.ok && reduced.witness >= 0)
        v.witnesses["reduced_mod_j"] = {reduced.witness,
                                        q.names[static_cast<std::size_t>(reduced.witness)]};
    return v;
}

RjFactorization rj_factorization(const RingTable& r, const StructuralSets& s) {
    RjFactorization out;
    out.hypothesis_dt = is_dt(r, s).ok;
    auto qr = make_quotient_with_projection(r, s.jacobson);
    out.rbar = std::move(qr.ring);
    const RingTable& rbar = out.rbar;

    auto two_ideal = ideal_generated(rbar, {rbar.int_embed(2)});
    auto three_ideal = ideal_generated(rbar, {rbar.int_embed(3)});
    auto q1 = make_quotient_with_projection(rbar, two_ideal);
    auto q2 = make_quotient_with_projection(rbar, three_ideal);
    out.r1 = std::move(q1.ring);
    out.r2 = std::move(q2.ring);

    // Natural map rbar -> r1 x r2 (componentwise cosets). Bijectivity plus
    // operation preservation makes it a ring isomorphism.
    out.iso_ok = rbar.order == out.r1.order * out.r2.order;
    if (out.iso_ok) {
        auto pair_index = [&](int x) {
            return q1.projection[static_cast<std::size_t>(x)] * out.r2.order +
                   q2.projection[static_cast<std::size_t>(x)];
        };
        std::vector<bool> hit(static_cast<std::size_t>(rbar.order), false);
        for (int x = 0; x < rbar.order && out.iso_ok; ++x) {
            int p = pair_index(x);
            if (hit[static_cast<std::size_t>(p)]) out.iso_ok = false;
            hit[static_cast<std::size_t>(p)] = true;
        }
        auto prod_of = [&](int pa, int pb, bool multiply) {
            int a1 = pa / out.r2.order, a2 = pa % out.r2.order;
            int b1 = pb / out.r2.order, b2 = pb % out.r2.order;
            if (multiply)
                return out.r1.mul_of(a1, b1) * out.r2.order + out.r2.mul_of(a2, b2);
            return out.r1.add_of(a1, b1) * out.r2.order + out.r2.add_of(a2, b2);
        };
        for (int x = 0; x < rbar.order && out.iso_ok; ++x) {
            for (int y = 0; y < rbar.order && out.iso_ok; ++y) {
                if (pair_index(rbar.add_of(x, y)) != prod_of(pair_index(x), pair_index(y), false))
                    out.iso_ok = false;
                if (pair_index(rbar.mul_of(x, y)) != prod_of(pair_index(x), pair_index(y), true))
                    out.iso_ok = false;
            }
        }
    }

    out.r1_ok = out.r1.order == 1 || is_boolean(out.r1).ok;
    out.r2_ok = out.r2.order == 1 || is_yaqub(out.r2).ok;
    out.note = "R/J order " + std::to_string(rbar.order) + "; R1 order " +
               std::to_string(out.r1.order) +
               (out.r1.order == 1 ? " (zero)" : out.r1_ok ? " (Boolean)" : " (not Boolean)") +
               "; R2 order " + std::to_string(out.r2.order) +
               (out.r2.order == 1 ? " (zero)" : out.r2_ok ? " (Yaqub)" : " (not Yaqub)");
    if (!out.hypothesis_dt) out.note += "; input not DT, hypothesis violated";
    return out;
}

}  // namespace ringlab
