#include "ringlab/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <set>
#include <thread>

namespace ringlab {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::HypothesisNotMet: return "hypothesis-not-met";
        case Verdict::SkippedSize: return "skipped-size";
    }
    return "?";
}

namespace {

void attach_witness(TheoremReport& rep, const RingTable& r, const std::vector<int>& ws) {
    rep.witness = ws;
    rep.witness_names.clear();
    for (int w : ws)
        rep.witness_names.push_back(
            w >= 0 && w < r.order ? r.names[static_cast<std::size_t>(w)] : "?");
}

void fail_with(TheoremReport& rep, const RingTable& r, const std::vector<int>& ws,
               const std::string& note) {
    rep.verdict = Verdict::Fail;
    rep.note = note;
    attach_witness(rep, r, ws);
}

void hypothesis_not_met(TheoremReport& rep, const std::string& why) {
    rep.verdict = Verdict::HypothesisNotMet;
    rep.note = why;
}

bool ring_dt(SetsProvider& sets, const RingTable& r) { return is_dt(r, sets.get(r)).ok; }

// true when every element carries a certificate of the given kind; otherwise
// stores the first uncoverable element.
bool covered_by(const RingTable& r, const StructuralSets& s, DecompositionKind kind,
                int* witness) {
    for (int a = 0; a < r.order; ++a) {
        if (!decompose(r, s, a, kind)) {
            if (witness) *witness = a;
            return false;
        }
    }
    return true;
}

bool group_prime(const GroupTable& g, int* p_out) {
    // A finite group has prime-power order exactly when it is a p-group.
    int n = g.order;
    std::vector<int> primes;
    for (int p = 2; p <= n; ++p) {
        if (!is_prime(p) || n % p != 0) continue;
        primes.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (primes.size() != 1) return false;
    if (p_out) *p_out = primes[0];
    return true;
}

// ---- section 2 checks ----------------------------------------------------

void check_lem_2_2(TheoremReport& rep, const CorpusItem& item, SetsProvider& sets) {
    const RingTable& R = *item.ring;
    const auto& s = sets.get(R);
    bool dt_r = is_dt(R, s).ok;
    bool applicable = false;
    std::string parts;
    if (item.factors.size() == 2) {
        applicable = true;
        parts += "product-equivalence";
        bool f1 = ring_dt(sets, *item.factors[0]);
        bool f2 = ring_dt(sets, *item.factors[1]);
        if (dt_r != (f1 && f2)) {
            fail_with(rep, R, {}, "product cover equivalence broken: product " +
                                       std::string(dt_r ? "DT" : "not DT") + ", factors " +
                                       (f1 ? "DT" : "not DT") + "/" + (f2 ? "DT" : "not DT"));
            return;
        }
    }
    if (dt_r) {
        applicable = true;
        if (!parts.empty()) parts += "+";
        parts += "radical-quotients";
        std::set<std::vector<int>> seen;
        std::vector<ElementSet> ideals;
        for (int j : s.jacobson.indices()) {
            auto ideal = ideal_generated(R, {j});
            if (seen.insert(ideal.indices()).second) ideals.push_back(std::move(ideal));
        }
        if (seen.insert(s.jacobson.indices()).second) ideals.push_back(s.jacobson);
        for (const auto& ideal : ideals) {
            auto q = make_quotient(R, ideal);
            auto verdict = is_dt(q, sets.get(q));
            if (!verdict.ok) {
                fail_with(rep, q, {verdict.witness},
                          "quotient " + q.label + " lost the cover");
                return;
            }
        }
    }
    if (!applicable) {
        hypothesis_not_met(rep, "not a product entry and not DT");
        return;
    }
    rep.note = "checked: " + parts;
}

void check_lem_2_3(TheoremReport& rep, const CorpusItem& item, SetsProvider& sets) {
    const RingTable& R = *item.ring;
    const auto& s = sets.get(R);
    auto ds = s.delta.indices();
    for (int f : s.tripotents.indices()) {
        int f2 = R.mul_of(f, f);
        int fp = R.add_of(f, f2);
        int fm = R.sub_of(f, f2);
        for (int d : ds) {
            for (int x : {R.mul_of(fp, d), R.mul_of(fm, d), R.mul_of(d, fp), R.mul_of(d, fm)})
                if (!s.delta.contains(x)) {
                    fail_with(rep, R, {f, d}, "(f±f²)·d escaped delta");
                    return;
                }
            int fd = R.mul_of(f, d), df = R.mul_of(d, f);
            if (!s.delta.contains(R.add_of(fd, fd)) || !s.delta.contains(R.add_of(df, df))) {
                fail_with(rep, R, {f, d}, "doubled tripotent multiple escaped delta");
                return;
            }
        }
    }
    for (int e : s.idempotents.indices()) {
        for (int d : ds) {
            int ed = R.mul_of(e, d), de = R.mul_of(d, e);
            if (!s.delta.contains(R.add_of(ed, ed)) || !s.delta.contains(R.add_of(de, de))) {
                fail_with(rep, R, {e, d}, "doubled idempotent multiple escaped delta");
                return;
            }
        }
    }
}

void check_lem_2_4(TheoremReport& rep, const CorpusItem& item, SetsProvider& sets) {
    const RingTable& R = *item.ring;
    const auto& s = sets.get(R);
    if (!is_dt(R, s).ok) return hypothesis_not_met(rep, "ring is not DT");
    for (int a = 0; a < R.order; ++a)
        if (s.delta.contains(R.mul_of(a, a)) && !s.delta.contains(a))
            return fail_with(rep, R, {a}, "a² in delta but a outside");
}

void check_cor_nil(TheoremReport& rep, const CorpusItem& item, SetsProvider& sets) {
    const RingTable& R = *item.ring;
    const auto& s = sets.get(R);
    if (!is_dt(R, s).ok) return hypothesis_not_met(rep, "ring is not DT");
    for (int x : s.nilpotents.indices())
        if (!s.delta.contains(x))
            return fail_with(rep, R, {x}, "nilpotent element outside delta");
}

void check_lem_2_6(TheoremReport& rep, const CorpusItem& item, SetsProvider& sets) {
    const RingTable& R = *item.ring;
    const auto& s = sets.get(R);
    if (!is_dt(R, s).ok) return hypothesis_not_met(rep, "ring is not DT");
    for (int e : s.idempotents.indices())
        for (int a = 0; a < R.order; ++a)
            if (!s.delta.contains(R.sub_of(R.mul_of(e, a), R.mul_of(a, e))))
                return fail_with(rep, R, {e, a}, "idempotent commutator escaped delta");
    for (int f : s.tripotents.indices())
        for (int d : s.delta.indices()) {
            int fd = R.mul_of(f, d), df = R.mul_of(d, f);
            if (!s.delta.contains(R.add_of(fd, df)) || !s.delta.contains(R.sub_of(fd, df)))
                return fail_with(rep, R, {f, d}, "fd ± df escaped delta");
        }
}

void check_prop_2_7(TheoremReport& rep, const CorpusItem& item, SetsProvider& sets) {
    const RingTable& R = *item.ring;
    const auto& s = sets.get(R);
    if (!is_dt(R, s).ok) return hypothesis_not_met(rep, "ring is not DT");
    int six = R.int_embed(6);
    if (!s.delta.contains(six)) return fail_with(rep, R, {six}, "6·1 outside delta");
}

void check_cor_2_8(TheoremReport& rep, const CorpusItem& item, SetsProvider& sets) {
    const RingTable& R = *item.ring;
    const auto& s = sets.get(R);
    if (!is_dt(R, s).ok) return hypothesis_not_met(rep, "ring is not DT");
    int six = R.int_embed(6);
    if (!s.jacobson.contains(six)) return fail_with(rep, R, {six}, "6·1 outside the radical");
}

void check_cor_2_9(TheoremReport& rep, const CorpusItem& item, SetsProvider& sets) {
    const RingTable& R = *item.ring;
    const auto& s = sets.get(R);
    if (!is_dt(R, s).ok) return hypothesis_not_met(rep, "ring is not DT");
    int two = R.int_embed(2), three = R.int_embed(3);
    if (s.units.contains(two) != s.jacobson.contains(three))
        return fail_with(rep, R, {two, three}, "2 unit does not match 3 radical");
    if (s.units.contains(three) != s.jacobson.contains(two))
        return fail_with(rep, R, {three, two}, "3 unit does not match 2 radical");
}

void check_cor_2_10(TheoremReport& rep, const CorpusItem& item, SetsProvider& sets) {
    const RingTable& R = *item.ring;
    const auto& s = sets.get(R);
    if (!is_dt(R, s).ok) return hypothesis_not_met(rep, "ring is not DT");
    // p·1 cycles with the additive order of 1, so primes up to the ring
    // order exhaust the residues.
    for (int p : primes_upto(R.order))
        if (p != 2 && p != 3 && s.delta.contains(R.int_embed(p)))
            return fail_with(rep, R, {R.int_embed(p)},
                             "prime " + std::to_string(p) + " landed in delta");
}

// ---- section 3 checks (group rings) ---------------------------------------

bool require_group_ring(TheoremReport& rep, const CorpusItem& item) {
    if (item.base_ring && item.group) return true;
    hypothesis_not_met(rep, "not a group-ring entry");
    return false;
}

void check_thm_3_1(TheoremReport& rep, const CorpusItem& item, SetsProvider& sets) {
    if (!require_group_ring(rep, item)) return;
    const RingTable& RG = *item.ring;
    const RingTable& R = *item.base_ring;
    const GroupTable& G = *item.group;
    const auto& sg = sets.get(RG);
    if (G.order == 1) {
        rep.note = "trivial group; hypothesis range empty";
        return;
    }
    for (int gi = 0; gi < G.order; ++gi) {
        if (gi == G.identity) continue;
        if (!sg.delta.contains(RG.sub_of(RG.one, basis_element(R, G, gi))))
            return hypothesis_not_met(rep, "1-g outside delta(RG) at group element " +
                                               G.names[static_cast<std::size_t>(gi)]);
    }
    int p = 0;
    if (!group_prime(G, &p))
        return fail_with(rep, RG, {}, "group order is not a prime power");
    if (!is_p_group(G, p))
        return fail_with(rep, RG, {}, "group is not a " + std::to_string(p) + "-group");
    const auto& sr = sets.get(R);
    int pe = R.int_embed(p);
    if (!sr.delta.contains(pe))
        return fail_with(rep, R, {pe},
                         "p·1 outside delta of the base ring for p = " + std::to_string(p));
    rep.note = "p = " + std::to_string(p);
}

void check_lem_3_2(TheoremReport& rep, const CorpusItem& item, SetsProvider& sets) {
    if (!require_group_ring(rep, item)) return;
    const RingTable& RG = *item.ring;
    const RingTable& R = *item.base_ring;
    const GroupTable& G = *item.group;
    const auto& sg = sets.get(RG);
    const auto& sr = sets.get(R);
    for (int d : sg.delta.indices())
        if (!sr.delta.contains(augmentation(R, G, d)))
            return fail_with(rep, RG, {d}, "coefficient sum escaped delta of the base ring");
}

void check_lem_3_3(TheoremReport& rep, const CorpusItem& item, SetsProvider& sets) {
    if (!require_group_ring(rep, item)) return;
    const RingTable& RG = *item.ring;
    const RingTable& R = *item.base_ring;
    const GroupTable& G = *item.group;
    const auto& sg = sets.get(RG);
    std::set<std::vector<int>> seen;
    for (int x = 0; x < G.order; ++x) {
        auto sub = cyclic_subgroup(G, x);
        if (!seen.insert(sub).second) continue;
        auto emb = embed_subgroup_ring(R, G, sub, static_cast<std::size_t>(RG.order));
        const auto& sh = sets.get(emb.rh);
        for (int d : sg.delta.indices())
            if (emb.support.contains(d) &&
                !sh.delta.contains(emb.to_sub[static_cast<std::size_t>(d)]))
                return fail_with(rep, RG, {d}, "delta element supported on subgroup <" +
                                                   G.names[static_cast<std::size_t>(x)] +
                                                   "> escaped delta of the subgroup ring");
    }
    rep.note = std::to_string(seen.size()) + " cyclic subgroup(s) checked";
}

void check_lem_3_4(TheoremReport& rep, const CorpusItem& item, SetsProvider& sets) {
    if (!require_group_ring(rep, item)) return;
    const RingTable& RG = *item.ring;
    const RingTable& R = *item.base_ring;
    const GroupTable& G = *item.group;
    const auto& sg = sets.get(RG);
    const auto& sr = sets.get(R);
    auto aug = augmentation_ideal(RG, R, G);
    if (!aug.subset_of(sg.jacobson))
        return hypothesis_not_met(rep, "augmentation ideal not inside the radical");
    for (int x = 0; x < RG.order; ++x)
        if (sr.units.contains(augmentation(R, G, x)) && !sg.units.contains(x))
            return fail_with(rep, RG, {x}, "unit coefficient sum but not a unit");
}

void check_lem_3_5(TheoremReport& rep, const CorpusItem& item, SetsProvider& sets) {
    if (!require_group_ring(rep, item)) return;
    const RingTable& RG = *item.ring;
    const RingTable& R = *item.base_ring;
    const GroupTable& G = *item.group;
    const auto& sr = sets.get(R);
    int p = 0;
    if (G.order == 1) {
        for (int q : primes_upto(R.order))
            if (sr.jacobson.contains(R.int_embed(q))) {
                p = q;
                break;
            }
        if (p == 0) return hypothesis_not_met(rep, "no prime lands in the radical");
    } else {
        if (!group_prime(G, &p))
            return hypothesis_not_met(rep, "group is not a p-group");
        if (!sr.jacobson.contains(R.int_embed(p)))
            return hypothesis_not_met(rep, "p·1 outside the radical for p = " +
                                               std::to_string(p));
    }
    const auto& sg = sets.get(RG);
    auto dr = sr.delta.indices();
    // Odometer over all coefficient vectors drawn from delta(R).
    std::vector<std::size_t> choice(static_cast<std::size_t>(G.order), 0);
    std::vector<int> coeffs(static_cast<std::size_t>(G.order));
    while (true) {
        for (int i = 0; i < G.order; ++i)
            coeffs[static_cast<std::size_t>(i)] = dr[choice[static_cast<std::size_t>(i)]];
        int x = group_ring_element(R, G, coeffs);
        if (!sg.delta.contains(x))
            return fail_with(rep, RG, {x}, "delta-coefficient vector escaped delta(RG)");
        int i = 0;
        while (i < G.order && ++choice[static_cast<std::size_t>(i)] == dr.size()) {
            choice[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == G.order) break;
    }
    rep.note = "p = " + std::to_string(p) + ", " +
               std::to_string(checked_pow(dr.size(), static_cast<unsigned>(G.order))) +
               " vectors checked";
}

void check_lem_3_6(TheoremReport& rep, const CorpusItem& item, SetsProvider& sets) {
    if (!require_group_ring(rep, item)) return;
    const RingTable& RG = *item.ring;
    const RingTable& R = *item.base_ring;
    if (!ring_dt(sets, RG)) return hypothesis_not_met(rep, "group ring is not DT");
    auto verdict = is_dt(R, sets.get(R));
    if (!verdict.ok)
        return fail_with(rep, R, {verdict.witness}, "base ring lost the cover");
}

void check_lem_3_8(TheoremReport& rep, const CorpusItem& item, SetsProvider& sets) {
    if (!require_group_ring(rep, item)) return;
    const RingTable& RG = *item.ring;
    const RingTable& R = *item.base_ring;
    const GroupTable& G = *item.group;
    const auto& sg = sets.get(RG);
    if (!is_dt(RG, sg).ok) return hypothesis_not_met(rep, "group ring is not DT");
    for (int gi = 0; gi < G.order; ++gi) {
        int g2 = G.op_of(gi, gi);
        int x = RG.sub_of(RG.one, basis_element(R, G, g2));
        if (!sg.delta.contains(x))
            return fail_with(rep, RG, {x}, "1-g² escaped delta at group element " +
                                               G.names[static_cast<std::size_t>(gi)]);
    }
}

void check_thm_3_10(TheoremReport& rep, const CorpusItem& item, SetsProvider& sets) {
    if (!require_group_ring(rep, item)) return;
    const RingTable& RG = *item.ring;
    const RingTable& R = *item.base_ring;
    const GroupTable& G = *item.group;
    if (!ring_dt(sets, RG)) return hypothesis_not_met(rep, "group ring is not DT");
    const auto& sr = sets.get(R);
    if (sr.delta.contains(R.int_embed(2)))
        return hypothesis_not_met(rep, "2·1 lies in delta of the base ring");
    if (sr.delta.contains(R.int_embed(3)))
        return hypothesis_not_met(rep, "3·1 lies in delta of the base ring");
    if (!is_elementary_2group(G))
        return fail_with(rep, RG, {}, "group is not an elementary 2-group");
}

void check_thm_3_11(TheoremReport& rep, const CorpusItem& item, SetsProvider& sets) {
    if (!require_group_ring(rep, item)) return;
    const RingTable& RG = *item.ring;
    const RingTable& R = *item.base_ring;
    const GroupTable& G = *item.group;
    if (!ring_dt(sets, RG)) return hypothesis_not_met(rep, "group ring is not DT");
    if (!sets.get(R).delta.contains(R.int_embed(2)))
        return hypothesis_not_met(rep, "2·1 outside delta of the base ring");
    if (!is_p_group(G, 2)) return fail_with(rep, RG, {}, "group is not a 2-group");
}

void check_thm_3_12(TheoremReport& rep, const CorpusItem& item, SetsProvider& sets) {
    if (!require_group_ring(rep, item)) return;
    const RingTable& RG = *item.ring;
    const RingTable& R = *item.base_ring;
    const GroupTable& G = *item.group;
    if (!ring_dt(sets, RG)) return hypothesis_not_met(rep, "group ring is not DT");
    if (!sets.get(R).delta.contains(R.int_embed(3)))
        return hypothesis_not_met(rep, "3·1 outside delta of the base ring");
    int p = 0;
    if (G.order != 1 && !group_prime(G, &p))
        return hypothesis_not_met(rep, "group is not a p-group");
    if (!is_p_group(G, 3) && !is_elementary_2group(G))
        return fail_with(rep, RG, {}, "group is neither a 3-group nor an elementary 2-group");
}

void check_thm_3_13(TheoremReport& rep, const CorpusItem& item, SetsProvider& sets) {
    if (!require_group_ring(rep, item)) return;
    const RingTable& RG = *item.ring;
    const RingTable& R = *item.base_ring;
    const GroupTable& G = *item.group;
    if (!ring_dt(sets, R)) return hypothesis_not_met(rep, "base ring is not DT");
    if (!sets.get(R).delta.contains(R.int_embed(2)))
        return hypothesis_not_met(rep, "2·1 outside delta of the base ring");
    if (!is_p_group(G, 2)) return hypothesis_not_met(rep, "group is not a 2-group");
    auto verdict = is_dt(RG, sets.get(RG));
    if (!verdict.ok)
        return fail_with(rep, RG, {verdict.witness}, "group ring lost the cover");
}

void check_cor_3_14(TheoremReport& rep, const CorpusItem& item, SetsProvider& sets) {
    if (!require_group_ring(rep, item)) return;
    const RingTable& RG = *item.ring;
    const RingTable& R = *item.base_ring;
    const GroupTable& G = *item.group;
    if (!ring_dt(sets, R)) return hypothesis_not_met(rep, "base ring is not DT");
    if (!sets.get(R).delta.contains(R.int_embed(3)))
        return hypothesis_not_met(rep, "3·1 outside delta of the base ring");
    if (!is_p_group(G, 3)) return hypothesis_not_met(rep, "group is not a 3-group");
    auto verdict = is_dt(RG, sets.get(RG));
    if (!verdict.ok)
        return fail_with(rep, RG, {verdict.witness}, "group ring lost the cover");
}

// ---- section 4 checks ------------------------------------------------------

void check_lem_4_1(TheoremReport& rep, const CorpusItem& item, SetsProvider& sets) {
    const RingTable& R = *item.ring;
    const auto& s = sets.get(R);
    if (!is_dt(R, s).ok) return hypothesis_not_met(rep, "ring is not DT");
    auto clean = is_clean(R, s);
    if (!clean.ok) return fail_with(rep, R, {clean.witness}, "no idempotent+unit cover");
}

void check_lem_4_2(TheoremReport& rep, const CorpusItem& item, SetsProvider& sets) {
    const RingTable& R = *item.ring;
    const auto& s = sets.get(R);
    if (!is_dt(R, s).ok) return hypothesis_not_met(rep, "ring is not DT");
    auto q = make_quotient(R, s.jacobson);
    auto reduced = is_reduced(q);
    if (!reduced.ok)
        return fail_with(rep, q, {reduced.witness}, "square-zero element in R/J");
}

void check_prop_4_3(TheoremReport& rep, const CorpusItem& item, SetsProvider& sets) {
    const RingTable& R = *item.ring;
    const auto& s = sets.get(R);
    if (!is_dt(R, s).ok) return hypothesis_not_met(rep, "ring is not DT");
    if (!s.units.contains(R.int_embed(2)))
        return hypothesis_not_met(rep, "2·1 is not a unit");
    for (int d : s.delta.indices())
        for (int a = 0; a < R.order; ++a)
            if (!s.delta.contains(R.mul_of(a, d)) || !s.delta.contains(R.mul_of(d, a)))
                return fail_with(rep, R, {d, a}, "delta not absorbing, so not an ideal");
    if (!(s.delta == s.jacobson)) {
        for (int x = 0; x < R.order; ++x)
            if (s.delta.contains(x) != s.jacobson.contains(x))
                return fail_with(rep, R, {x}, "delta and the radical disagree");
    }
}

void check_prop_4_4(TheoremReport& rep, const CorpusItem& item, SetsProvider& sets) {
    const RingTable& R = *item.ring;
    const auto& s = sets.get(R);
    if (!is_dt(R, s).ok) return hypothesis_not_met(rep, "ring is not DT");
    if (!s.units.contains(R.int_embed(3)))
        return hypothesis_not_met(rep, "3·1 is not a unit");
    auto di = is_di(R, s);
    if (!di.ok) return fail_with(rep, R, {di.witness}, "no idempotent+delta cover");
}

void check_lem_4_5(TheoremReport& rep, const CorpusItem& item, SetsProvider& sets) {
    const RingTable& R = *item.ring;
    const auto& s = sets.get(R);
    if (!is_di(R, s).ok) return hypothesis_not_met(rep, "ring is not DI");
    auto du = is_delta_u(R, s);
    if (!du.ok) return fail_with(rep, R, {du.witness}, "1+delta differs from the units");
}

void check_lem_4_6(TheoremReport& rep, const CorpusItem& item, SetsProvider& sets) {
    const RingTable& R = *item.ring;
    const auto& s = sets.get(R);
    ElementSet one_plus_delta(R.order);
    for (int d : s.delta.indices()) one_plus_delta.insert(R.add_of(R.one, d));
    bool du = one_plus_delta == s.units;
    ElementSet sums(R.order);
    for (int u : s.units.indices())
        for (int v : s.units.indices()) sums.insert(R.add_of(u, v));
    bool contained = sums.subset_of(s.delta);
    bool equal = sums == s.delta;
    if (du != contained || contained != equal)
        return fail_with(rep, R, {},
                         std::string("characterizations disagree: delta-U=") +
                             (du ? "T" : "F") + " U+U⊆delta=" + (contained ? "T" : "F") +
                             " U+U=delta=" + (equal ? "T" : "F"));
}

void check_cor_4_7(TheoremReport& rep, const CorpusItem& item, SetsProvider& sets) {
    const RingTable& R = *item.ring;
    const auto& s = sets.get(R);
    bool uc = is_uniquely_clean(R, s).ok;
    bool di = is_di(R, s).ok;
    bool central = true;
    int bad = -1;
    for (int e : s.idempotents.indices())
        if (!is_central(R, e)) {
            central = false;
            bad = e;
            break;
        }
    if (uc != (di && central)) {
        std::vector<int> ws;
        if (bad >= 0) ws.push_back(bad);
        fail_with(rep, R, ws,
                  std::string("uniquely-clean=") + (uc ? "T" : "F") + " but DI=" +
                      (di ? "T" : "F") + ", central-idempotents=" + (central ? "T" : "F"));
    }
}

void check_thm_4_8(TheoremReport& rep, const CorpusItem& item, SetsProvider& sets) {
    const RingTable& R = *item.ring;
    const auto& s = sets.get(R);
    if (!is_dt(R, s).ok) return hypothesis_not_met(rep, "ring is not DT");
    auto rj = rj_factorization(R, s);
    rep.note = rj.note;
    if (!rj.ok()) return fail_with(rep, R, {}, "factorization failed: " + rj.note);
}

void check_cor_4_9(TheoremReport& rep, const CorpusItem& item, SetsProvider& sets) {
    const RingTable& R = *item.ring;
    const auto& s = sets.get(R);
    auto dt = is_dt(R, s);
    auto semi = is_semi_tripotent(R, s);
    if (dt.ok != semi.ok) {
        int w = dt.ok ? semi.witness : dt.witness;
        fail_with(rep, R, {w},
                  std::string("DT=") + (dt.ok ? "T" : "F") + " but semi-tripotent=" +
                      (semi.ok ? "T" : "F"));
    }
}

void check_equivalence(TheoremReport& rep, const CorpusItem& item, SetsProvider& sets,
                       const std::vector<DecompositionKind>& kinds) {
    const RingTable& R = *item.ring;
    const auto& s = sets.get(R);
    bool dt = is_dt(R, s).ok;
    bool semi = is_semi_tripotent(R, s).ok;
    std::vector<std::pair<std::string, bool>> conditions{{"dt", dt}, {"semi", semi}};
    for (auto kind : kinds) {
        int w = -1;
        conditions.emplace_back(to_string(kind), covered_by(R, s, kind, &w));
    }
    for (const auto& [name, value] : conditions) {
        if (value != conditions.front().second) {
            std::string detail;
            for (const auto& [n, v] : conditions) detail += n + "=" + (v ? "T " : "F ");
            return fail_with(rep, R, {}, "conditions disagree: " + detail);
        }
    }
}

void check_thm_4_10(TheoremReport& rep, const CorpusItem& item, SetsProvider& sets) {
    check_equivalence(rep, item, sets,
                      {DecompositionKind::SumIdem, DecompositionKind::DiffIdemCommuting,
                       DecompositionKind::DiffIdemOrth});
}

void check_thm_4_11(TheoremReport& rep, const CorpusItem& item, SetsProvider& sets) {
    check_equivalence(rep, item, sets, {DecompositionKind::SquareIdem});
}

void check_thm_4_12(TheoremReport& rep, const CorpusItem& item, SetsProvider& sets) {
    check_equivalence(rep, item, sets, {DecompositionKind::IdemInvolution});
}

void check_remark_4(TheoremReport& rep, const CorpusItem& item, SetsProvider& sets) {
    const RingTable& R = *item.ring;
    const auto& s = sets.get(R);
    bool dt = is_dt(R, s).ok;

    bool tripotent_premise = true;
    for (int a = 0; a < R.order && tripotent_premise; ++a) {
        bool found = false;
        int a3 = R.pow_of(a, 3);
        for (int e : s.tripotents.indices())
            if (s.jacobson.contains(R.sub_of(a3, e))) {
                found = true;
                break;
            }
        tripotent_premise = found;
    }
    bool idempotent_premise = true;
    for (int a = 0; a < R.order && idempotent_premise; ++a) {
        bool found = false;
        int a4 = R.pow_of(a, 4);
        for (int e : s.idempotents.indices())
            if (s.jacobson.contains(R.sub_of(a4, e))) {
                found = true;
                break;
            }
        idempotent_premise = found;
    }

    if (dt) return hypothesis_not_met(rep, "ring is DT; it cannot witness the gap");
    if (!tripotent_premise && !idempotent_premise)
        return hypothesis_not_met(rep, "neither congruence premise holds");
    rep.note = std::string("not DT although ") +
               (tripotent_premise ? "a³ is tripotent mod J" : "") +
               (tripotent_premise && idempotent_premise ? " and " : "") +
               (idempotent_premise ? "a⁴ is idempotent mod J" : "");
}

struct RegistryEntry {
    TheoremInfo info;
    void (*fn)(TheoremReport&, const CorpusItem&, SetsProvider&);
};

const std::vector<RegistryEntry>& registry_entries() {
    static const std::vector<RegistryEntry> entries = {
        {{"lem-2.2", "products and radical quotients preserve the tripotent+delta cover"},
         check_lem_2_2},
        {{"lem-2.3", "(f±f²)d, d(f±f²) and doubled idempotent/tripotent multiples stay in delta"},
         check_lem_2_3},
        {{"lem-2.4", "a² in delta forces a in delta (DT)"}, check_lem_2_4},
        {{"cor-nil", "nilpotent elements lie in delta (DT)"}, check_cor_nil},
        {{"lem-2.6", "idempotent commutators and fd±df stay in delta (DT)"}, check_lem_2_6},
        {{"prop-2.7", "6·1 lies in delta (DT)"}, check_prop_2_7},
        {{"cor-2.8", "6·1 lies in the radical (DT)"}, check_cor_2_8},
        {{"cor-2.9", "2 unit iff 3 radical, and 3 unit iff 2 radical (DT)"}, check_cor_2_9},
        {{"cor-2.10", "only 2 and 3 can land in delta among primes (DT)"}, check_cor_2_10},
        {{"thm-3.1", "1-g in delta(RG) for all g forces a p-group with p·1 in delta(R)"},
         check_thm_3_1},
        {{"lem-3.2", "coefficient sums of delta(RG) land in delta(R)"}, check_lem_3_2},
        {{"lem-3.3", "delta(RG) restricted to a subgroup ring lands in its delta"},
         check_lem_3_3},
        {{"lem-3.4", "radical augmentation ideal lifts unit coefficient sums to units"},
         check_lem_3_4},
        {{"lem-3.5", "delta(R)-coefficient vectors lie in delta(RG) for radical p"},
         check_lem_3_5},
        {{"lem-3.6", "RG DT forces the base ring DT"}, check_lem_3_6},
        {{"lem-3.8", "1-g² lies in delta(RG) when RG is DT"}, check_lem_3_8},
        {{"thm-3.10", "RG DT with 2,3 outside delta(R) forces an elementary 2-group"},
         check_thm_3_10},
        {{"thm-3.11", "RG DT with 2·1 in delta(R) forces a 2-group"}, check_thm_3_11},
        {{"thm-3.12", "RG DT with 3·1 in delta(R), G a p-group: 3-group or elementary 2-group"},
         check_thm_3_12},
        {{"thm-3.13", "base DT with 2·1 in delta and a 2-group makes RG DT"}, check_thm_3_13},
        {{"cor-3.14", "base DT with 3·1 in delta and a 3-group makes RG DT"}, check_cor_3_14},
        {{"lem-4.1", "DT rings are clean"}, check_lem_4_1},
        {{"lem-4.2", "R/J is reduced for DT rings"}, check_lem_4_2},
        {{"prop-4.3", "delta is an ideal equal to the radical when 2 is a unit (DT)"},
         check_prop_4_3},
        {{"prop-4.4", "idempotent+delta cover when 3 is a unit (DT)"}, check_prop_4_4},
        {{"lem-4.5", "DI rings satisfy 1+delta = units"}, check_lem_4_5},
        {{"lem-4.6", "delta-U iff unit sums land in delta iff unit sums fill delta"},
         check_lem_4_6},
        {{"cor-4.7", "uniquely clean iff DI with central idempotents"}, check_cor_4_7},
        {{"thm-4.8", "R/J splits as (zero-or-Boolean) x (zero-or-Yaqub) for DT rings"},
         check_thm_4_8},
        {{"cor-4.9", "DT iff semi-tripotent"}, check_cor_4_9},
        {{"thm-4.10", "the five cover conditions agree"}, check_thm_4_10},
        {{"thm-4.11", "DT iff every square splits as idempotent plus radical"},
         check_thm_4_11},
        {{"thm-4.12", "DT iff idempotent+involution+radical covers"}, check_thm_4_12},
        {{"remark-4", "the a³/a⁴ congruence premises do not force DT"}, check_remark_4},
    };
    return entries;
}

TheoremReport run_check(const RegistryEntry& entry, const CorpusItem& item,
                        SetsProvider& sets) {
    TheoremReport rep;
    rep.theorem_id = entry.info.id;
    rep.subject = item.expr;
    auto t0 = std::chrono::steady_clock::now();
    if (!item.ring) {
        rep.verdict = Verdict::SkippedSize;
        rep.note = item.skip_reason;
    } else {
        entry.fn(rep, item, sets);
    }
    rep.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - t0);
    return rep;
}

void parallel_over_items(std::size_t n, int jobs,
                         const std::function<void(std::size_t)>& fn) {
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(n)));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mu;
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) {
        workers.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < n;) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    }
    for (auto& w : workers) w.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

const std::vector<TheoremInfo>& theorem_registry() {
    static const std::vector<TheoremInfo> infos = [] {
        std::vector<TheoremInfo> out;
        for (const auto& e : registry_entries()) out.push_back(e.info);
        return out;
    }();
    return infos;
}

bool is_known_theorem(const std::string& id) {
    for (const auto& e : registry_entries())
        if (e.info.id == id) return true;
    return false;
}

std::vector<TheoremReport> verify(const std::string& theorem_id,
                                  const std::vector<CorpusItem>& corpus,
                                  SetsProvider& sets, int jobs) {
    const RegistryEntry* entry = nullptr;
    for (const auto& e : registry_entries())
        if (e.info.id == theorem_id) entry = &e;
    if (!entry) throw UsageError("verify: unknown theorem id '" + theorem_id + "'");
    std::vector<TheoremReport> reports(corpus.size());
    parallel_over_items(corpus.size(), jobs, [&](std::size_t i) {
        reports[i] = run_check(*entry, corpus[i], sets);
    });
    return reports;
}

std::vector<TheoremReport> verify_all(const std::vector<CorpusItem>& corpus,
                                      SetsProvider& sets, int jobs) {
    const auto& entries = registry_entries();
    std::vector<std::vector<TheoremReport>> per_item(corpus.size());
    parallel_over_items(corpus.size(), jobs, [&](std::size_t i) {
        per_item[i].reserve(entries.size());
        for (const auto& entry : entries) per_item[i].push_back(run_check(entry, corpus[i], sets));
    });
    std::vector<TheoremReport> reports;
    reports.reserve(corpus.size() * entries.size());
    for (std::size_t t = 0; t < entries.size(); ++t)
        for (std::size_t i = 0; i < corpus.size(); ++i)
            reports.push_back(std::move(per_item[i][t]));
    return reports;
}

VerifySummary summarize(const std::vector<TheoremReport>& reports) {
    VerifySummary s;
    for (const auto& r : reports) {
        switch (r.verdict) {
            case Verdict::Pass: ++s.pass; break;
            case Verdict::Fail: ++s.fail; break;
            case Verdict::HypothesisNotMet: ++s.hypothesis_not_met; break;
            case Verdict::SkippedSize: ++s.skipped; break;
        }
    }
    return s;
}

}  // namespace ringlab
