#include "ringlab/group_ring.hpp"

namespace ringlab {

namespace {

std::size_t cell(int order, int a, int b) {
    return static_cast<std::size_t>(a) * order + b;
}

std::string element_name(const RingTable& r, const GroupTable& g,
                         const std::vector<int>& coeffs) {
    std::string s;
    for (int gi = 0; gi < g.order; ++gi) {
        int c = coeffs[static_cast<std::size_t>(gi)];
        if (c == r.zero) continue;
        std::string term;
        if (gi == g.identity)
            term = r.names[static_cast<std::size_t>(c)];
        else if (c == r.one)
            term = g.names[static_cast<std::size_t>(gi)];
        else
            term = r.names[static_cast<std::size_t>(c)] + "·" +
                   g.names[static_cast<std::size_t>(gi)];
        if (!s.empty()) s += " + ";
        s += term;
    }
    return s.empty() ? r.names[static_cast<std::size_t>(r.zero)] : s;
}

}  // namespace

RingTable make_group_ring(const RingTable& r, const GroupTable& g, std::size_t cap) {
    unsigned long long n = checked_pow(static_cast<unsigned long long>(r.order),
                                       static_cast<unsigned>(g.order));
    if (n > cap)
        throw SizeCapError("make_group_ring: order " + std::to_string(n) + " for " +
                           r.label + "[" + g.label + "] exceeds size cap " +
                           std::to_string(cap));
    int order = static_cast<int>(n);

    std::vector<std::vector<int>> digs(order);
    for (int x = 0; x < order; ++x) digs[x] = mixed_radix_decode(x, r.order, g.order);

    RingTable t;
    t.order = order;
    t.label = "GR(" + r.label + "," + g.label + ")";
    t.add.resize(static_cast<std::size_t>(order) * order);
    t.mul.resize(static_cast<std::size_t>(order) * order);
    t.neg.resize(order);
    t.names.resize(order);
    std::vector<int> acc(g.order);
    for (int x = 0; x < order; ++x) {
        const auto& xd = digs[x];
        for (int i = 0; i < g.order; ++i) acc[i] = r.neg_of(xd[i]);
        t.neg[x] = mixed_radix_encode(acc, r.order);
        t.names[x] = element_name(r, g, xd);
        for (int y = 0; y < order; ++y) {
            const auto& yd = digs[y];
            for (int i = 0; i < g.order; ++i) acc[i] = r.add_of(xd[i], yd[i]);
            t.add[cell(order, x, y)] = mixed_radix_encode(acc, r.order);
            for (int i = 0; i < g.order; ++i) acc[i] = r.zero;
            for (int i = 0; i < g.order; ++i) {
                if (xd[i] == r.zero) continue;
                for (int j = 0; j < g.order; ++j) {
                    if (yd[j] == r.zero) continue;
                    int k = g.op_of(i, j);
                    acc[k] = r.add_of(acc[k], r.mul_of(xd[i], yd[j]));
                }
            }
            t.mul[cell(order, x, y)] = mixed_radix_encode(acc, r.order);
        }
    }
    std::vector<int> e(g.order, r.zero);
    t.zero = mixed_radix_encode(e, r.order);
    e[static_cast<std::size_t>(g.identity)] = r.one;
    t.one = mixed_radix_encode(e, r.order);
    t.fingerprint = ring_fingerprint_hex(t);
    return t;
}

std::vector<int> group_ring_coeffs(const RingTable& r, const GroupTable& g, int x) {
    return mixed_radix_decode(x, r.order, g.order);
}

int group_ring_element(const RingTable& r, const GroupTable& g,
                       const std::vector<int>& coeffs) {
    if (static_cast<int>(coeffs.size()) != g.order)
        throw UsageError("group_ring_element: expected " + std::to_string(g.order) +
                         " coefficients");
    (void)r;
    return mixed_radix_encode(coeffs, r.order);
}

int basis_element(const RingTable& r, const GroupTable& g, int gi) {
    std::vector<int> c(g.order, r.zero);
    c[static_cast<std::size_t>(gi)] = r.one;
    return mixed_radix_encode(c, r.order);
}

int embed_scalar(const RingTable& r, const GroupTable& g, int a) {
    std::vector<int> c(g.order, r.zero);
    c[static_cast<std::size_t>(g.identity)] = a;
    return mixed_radix_encode(c, r.order);
}

int augmentation(const RingTable& r, const GroupTable& g, int x) {
    auto c = group_ring_coeffs(r, g, x);
    int s = r.zero;
    for (int v : c) s = r.add_of(s, v);
    return s;
}

ElementSet augmentation_ideal(const RingTable& rg, const RingTable& r,
                              const GroupTable& g) {
    ElementSet kernel(rg.order);
    for (int x = 0; x < rg.order; ++x)
        if (augmentation(r, g, x) == r.zero) kernel.insert(x);

    // Additive span of a*(1 - h) over all a in R and non-identity h.
    std::vector<int> gens;
    for (int gi = 0; gi < g.order; ++gi) {
        if (gi == g.identity) continue;
        for (int a = 0; a < r.order; ++a) {
            std::vector<int> c(g.order, r.zero);
            c[static_cast<std::size_t>(g.identity)] = a;
            c[static_cast<std::size_t>(gi)] = r.add_of(c[static_cast<std::size_t>(gi)],
                                                       r.neg_of(a));
            gens.push_back(mixed_radix_encode(c, r.order));
        }
    }
    ElementSet span(rg.order);
    std::vector<int> queue;
    auto push = [&](int x) {
        if (!span.bits[static_cast<std::size_t>(x)]) {
            span.bits[static_cast<std::size_t>(x)] = true;
            queue.push_back(x);
        }
    };
    push(rg.zero);
    for (int gen : gens) push(gen);
    while (!queue.empty()) {
        int x = queue.back();
        queue.pop_back();
        for (int gen : gens) push(rg.add_of(x, gen));
    }

    if (!(span == kernel))
        throw ConsistencyError("augmentation_ideal: kernel and span forms disagree for " +
                               rg.label);
    return kernel;
}

SubgroupRingEmbedding embed_subgroup_ring(const RingTable& r, const GroupTable& g,
                                          const std::vector<int>& subgroup_elements,
                                          std::size_t cap) {
    SubgroupRingEmbedding out;
    out.subgroup = subgroup_elements;
    out.h = subgroup_table(g, subgroup_elements);
    out.rh = make_group_ring(r, out.h, cap);

    unsigned long long n = checked_pow(static_cast<unsigned long long>(r.order),
                                       static_cast<unsigned>(g.order));
    if (n > cap)
        throw SizeCapError("embed_subgroup_ring: ambient order exceeds size cap");
    int order = static_cast<int>(n);
    out.support = ElementSet(order);
    out.to_sub.assign(order, -1);
    std::vector<int> pos_in_sub(g.order, -1);
    for (std::size_t i = 0; i < subgroup_elements.size(); ++i)
        pos_in_sub[static_cast<std::size_t>(subgroup_elements[i])] = static_cast<int>(i);
    std::vector<int> sub_coeffs(subgroup_elements.size());
    for (int x = 0; x < order; ++x) {
        auto c = group_ring_coeffs(r, g, x);
        bool supported = true;
        for (int gi = 0; gi < g.order && supported; ++gi)
            if (c[static_cast<std::size_t>(gi)] != r.zero && pos_in_sub[gi] < 0)
                supported = false;
        if (!supported) continue;
        for (std::size_t i = 0; i < subgroup_elements.size(); ++i)
            sub_coeffs[i] = c[static_cast<std::size_t>(subgroup_elements[i])];
        out.support.insert(x);
        out.to_sub[static_cast<std::size_t>(x)] =
            mixed_radix_encode(sub_coeffs, r.order);
    }
    return out;
}

}  // namespace ringlab
