#include "ringlab/group_table.hpp"

#include <algorithm>

namespace ringlab {

namespace {

std::size_t cell(int order, int a, int b) {
    return static_cast<std::size_t>(a) * order + b;
}

}  // namespace

GroupTable make_cyclic(int n) {
    if (n < 1)
        throw InvalidOrderError("make_cyclic: order must be >= 1, got " + std::to_string(n));
    GroupTable g;
    g.order = n;
    g.label = "C(" + std::to_string(n) + ")";
    g.op.resize(static_cast<std::size_t>(n) * n);
    g.inv.resize(n);
    g.names.resize(n);
    g.identity = 0;
    for (int i = 0; i < n; ++i) {
        g.inv[i] = (n - i) % n;
        g.names[i] = i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i));
        for (int j = 0; j < n; ++j) g.op[cell(n, i, j)] = (i + j) % n;
    }
    return g;
}

GroupTable make_elementary_abelian(int p, int k, std::size_t cap) {
    if (!is_prime(p))
        throw InvalidOrderError("make_elementary_abelian: p must be prime, got " +
                                std::to_string(p));
    if (k < 1)
        throw InvalidOrderError("make_elementary_abelian: rank must be >= 1, got " +
                                std::to_string(k));
    unsigned long long n = checked_pow(static_cast<unsigned long long>(p),
                                       static_cast<unsigned>(k));
    if (n > cap)
        throw SizeCapError("make_elementary_abelian: order " + std::to_string(n) +
                           " exceeds size cap " + std::to_string(cap));
    int order = static_cast<int>(n);
    GroupTable g;
    g.order = order;
    g.label = "E(" + std::to_string(p) + "," + std::to_string(k) + ")";
    g.op.resize(static_cast<std::size_t>(order) * order);
    g.inv.resize(order);
    g.names.resize(order);
    g.identity = 0;
    std::vector<int> acc(k);
    for (int x = 0; x < order; ++x) {
        auto xd = mixed_radix_decode(x, p, k);
        for (int i = 0; i < k; ++i) acc[i] = (p - xd[i]) % p;
        g.inv[x] = mixed_radix_encode(acc, p);
        std::string nm = "(";
        for (int i = 0; i < k; ++i) {
            if (i) nm += ",";
            nm += std::to_string(xd[i]);
        }
        g.names[x] = nm + ")";
        for (int y = 0; y < order; ++y) {
            auto yd = mixed_radix_decode(y, p, k);
            for (int i = 0; i < k; ++i) acc[i] = (xd[i] + yd[i]) % p;
            g.op[cell(order, x, y)] = mixed_radix_encode(acc, p);
        }
    }
    return g;
}

GroupTable make_group_product(const GroupTable& a, const GroupTable& b, std::size_t cap) {
    unsigned long long n = static_cast<unsigned long long>(a.order) * b.order;
    if (n > cap)
        throw SizeCapError("make_group_product: order " + std::to_string(n) +
                           " exceeds size cap " + std::to_string(cap));
    GroupTable g;
    g.order = static_cast<int>(n);
    g.label = "GProd(" + a.label + "," + b.label + ")";
    g.op.resize(n * n);
    g.inv.resize(n);
    g.names.resize(n);
    auto idx = [&](int xa, int xb) { return xa * b.order + xb; };
    g.identity = idx(a.identity, b.identity);
    for (int xa = 0; xa < a.order; ++xa) {
        for (int xb = 0; xb < b.order; ++xb) {
            int x = idx(xa, xb);
            g.inv[x] = idx(a.inv_of(xa), b.inv_of(xb));
            g.names[x] = "(" + a.names[xa] + "," + b.names[xb] + ")";
            for (int ya = 0; ya < a.order; ++ya)
                for (int yb = 0; yb < b.order; ++yb)
                    g.op[cell(g.order, x, idx(ya, yb))] =
                        idx(a.op_of(xa, ya), b.op_of(xb, yb));
        }
    }
    return g;
}

GroupAxiomReport verify_group_axioms(const GroupTable& g) {
    GroupAxiomReport rep;
    auto fail = [&](const std::string& axiom, int a, int b, int c) {
        rep.ok = false;
        rep.axiom = axiom;
        rep.witness = {a, b, c};
        return rep;
    };
    int n = g.order;
    if (n < 1 || g.op.size() != static_cast<std::size_t>(n) * n ||
        g.inv.size() != static_cast<std::size_t>(n) || g.identity < 0 || g.identity >= n)
        return fail("table-shape", -1, -1, -1);
    for (std::size_t i = 0; i < g.op.size(); ++i)
        if (g.op[i] < 0 || g.op[i] >= n)
            return fail("table-range", static_cast<int>(i / n), static_cast<int>(i % n), -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.op_of(g.op_of(a, b), c) != g.op_of(a, g.op_of(b, c)))
                    return fail("associativity", a, b, c);
    for (int a = 0; a < n; ++a)
        if (g.op_of(a, g.identity) != a || g.op_of(g.identity, a) != a)
            return fail("identity", a, -1, -1);
    for (int a = 0; a < n; ++a)
        if (g.op_of(a, g.inv_of(a)) != g.identity || g.op_of(g.inv_of(a), a) != g.identity)
            return fail("inverse", a, -1, -1);
    return rep;
}

int element_order(const GroupTable& g, int x) {
    int k = 1;
    int y = x;
    while (y != g.identity) {
        y = g.op_of(y, x);
        ++k;
    }
    return k;
}

bool is_p_group(const GroupTable& g, int p) {
    for (int x = 0; x < g.order; ++x) {
        int k = element_order(g, x);
        while (k % p == 0) k /= p;
        if (k != 1) return false;
    }
    return true;
}

bool is_elementary_2group(const GroupTable& g) {
    for (int x = 0; x < g.order; ++x)
        if (x != g.identity && element_order(g, x) != 2) return false;
    return true;
}

std::vector<int> cyclic_subgroup(const GroupTable& g, int x) {
    std::vector<int> members{g.identity};
    int y = x;
    while (y != g.identity) {
        members.push_back(y);
        y = g.op_of(y, x);
    }
    std::sort(members.begin(), members.end());
    return members;
}

GroupTable subgroup_table(const GroupTable& g, const std::vector<int>& elements) {
    if (elements.empty())
        throw NotASubgroupError("subgroup_table: empty subset of " + g.label);
    std::vector<int> newindex(g.order, -1);
    for (std::size_t i = 0; i < elements.size(); ++i) {
        int x = elements[i];
        if (x < 0 || x >= g.order)
            throw NotASubgroupError("subgroup_table: index " + std::to_string(x) +
                                    " out of range for " + g.label);
        newindex[x] = static_cast<int>(i);
    }
    if (newindex[g.identity] < 0)
        throw NotASubgroupError("subgroup_table: subset of " + g.label +
                                " does not contain the identity");
    for (int x : elements)
        for (int y : elements)
            if (newindex[g.op_of(x, y)] < 0)
                throw NotASubgroupError("subgroup_table: subset of " + g.label +
                                        " is not closed (" + std::to_string(x) + "*" +
                                        std::to_string(y) + " escapes)");

    int m = static_cast<int>(elements.size());
    GroupTable h;
    h.order = m;
    std::string desc = "[";
    for (int i = 0; i < m; ++i) {
        if (i) desc += ",";
        desc += std::to_string(elements[i]);
    }
    h.label = "Sub(" + g.label + "," + desc + "])";
    h.op.resize(static_cast<std::size_t>(m) * m);
    h.inv.resize(m);
    h.names.resize(m);
    h.identity = newindex[g.identity];
    for (int i = 0; i < m; ++i) {
        h.inv[i] = newindex[g.inv_of(elements[i])];
        h.names[i] = g.names[static_cast<std::size_t>(elements[i])];
        for (int j = 0; j < m; ++j)
            h.op[cell(m, i, j)] = newindex[g.op_of(elements[i], elements[j])];
    }
    return h;
}

GroupTable subgroup_generated(const GroupTable& g, int x) {
    return subgroup_table(g, cyclic_subgroup(g, x));
}

}  // namespace ringlab
