#include "ringlab/ring_table.hpp"

#include <algorithm>
#include <utility>

namespace ringlab {

namespace {

std::size_t cell(int order, int a, int b) {
    return static_cast<std::size_t>(a) * order + b;
}

void check_cap(unsigned long long order, std::size_t cap, const std::string& what) {
    if (order > cap)
        throw SizeCapError(what + ": order " + std::to_string(order) +
                           " exceeds size cap " + std::to_string(cap));
}

}  // namespace

std::string ring_fingerprint_hex(const RingTable& r) {
    Fnv1a h;
    h.feed_str(r.label);
    h.feed_i32(r.order);
    h.feed_i32(r.zero);
    h.feed_i32(r.one);
    h.feed_i32s(r.add);
    h.feed_i32s(r.mul);
    h.feed_i32s(r.neg);
    return h.hex();
}

int RingTable::pow_of(int a, int k) const {
    int acc = a;
    for (int i = 1; i < k; ++i) acc = mul_of(acc, a);
    return acc;
}

int RingTable::int_embed(long long k) const {
    bool negative = k < 0;
    if (negative) k = -k;
    // k * 1 cycles with the additive order of 1, so reduce the loop count.
    k %= 2LL * order;
    int acc = zero;
    for (long long i = 0; i < k; ++i) acc = add_of(acc, one);
    return negative ? neg_of(acc) : acc;
}

RingTable make_zn(int n) {
    if (n < 2)
        throw InvalidOrderError("make_zn: order must be >= 2, got " + std::to_string(n));
    RingTable r;
    r.order = n;
    r.label = "Z(" + std::to_string(n) + ")";
    r.add.resize(static_cast<std::size_t>(n) * n);
    r.mul.resize(static_cast<std::size_t>(n) * n);
    r.neg.resize(n);
    r.names.resize(n);
    r.zero = 0;
    r.one = 1;
    for (int i = 0; i < n; ++i) {
        r.neg[i] = (n - i) % n;
        r.names[i] = std::to_string(i);
        for (int j = 0; j < n; ++j) {
            r.add[cell(n, i, j)] = (i + j) % n;
            r.mul[cell(n, i, j)] = static_cast<int32_t>(static_cast<long long>(i) * j % n);
        }
    }
    r.fingerprint = ring_fingerprint_hex(r);
    return r;
}

RingTable make_product(const RingTable& a, const RingTable& b, std::size_t cap) {
    unsigned long long n = static_cast<unsigned long long>(a.order) * b.order;
    check_cap(n, cap, "make_product");
    RingTable r;
    r.order = static_cast<int>(n);
    r.label = "Prod(" + a.label + "," + b.label + ")";
    r.add.resize(n * n);
    r.mul.resize(n * n);
    r.neg.resize(n);
    r.names.resize(n);
    auto idx = [&](int xa, int xb) { return xa * b.order + xb; };
    r.zero = idx(a.zero, b.zero);
    r.one = idx(a.one, b.one);
    for (int xa = 0; xa < a.order; ++xa) {
        for (int xb = 0; xb < b.order; ++xb) {
            int x = idx(xa, xb);
            r.neg[x] = idx(a.neg_of(xa), b.neg_of(xb));
            r.names[x] = "(" + a.names[xa] + "," + b.names[xb] + ")";
            for (int ya = 0; ya < a.order; ++ya) {
                for (int yb = 0; yb < b.order; ++yb) {
                    int y = idx(ya, yb);
                    r.add[cell(r.order, x, y)] = idx(a.add_of(xa, ya), b.add_of(xb, yb));
                    r.mul[cell(r.order, x, y)] = idx(a.mul_of(xa, ya), b.mul_of(xb, yb));
                }
            }
        }
    }
    r.fingerprint = ring_fingerprint_hex(r);
    return r;
}

namespace {

std::string entries_name(const RingTable& base, const std::vector<int>& entries) {
    std::string s = "[";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) s += ",";
        s += base.names[static_cast<std::size_t>(entries[i])];
    }
    s += "]";
    return s;
}

}  // namespace

RingTable make_matrix(int k, const RingTable& base, std::size_t cap) {
    if (k < 1)
        throw InvalidOrderError("make_matrix: dimension must be >= 1, got " + std::to_string(k));
    int m = k * k;
    unsigned long long n = checked_pow(static_cast<unsigned long long>(base.order),
                                       static_cast<unsigned>(m));
    check_cap(n, cap, "make_matrix");
    int order = static_cast<int>(n);

    // Digit p of the index is the entry at row p/k, column p%k.
    std::vector<std::vector<int>> digs(order);
    for (int x = 0; x < order; ++x) digs[x] = mixed_radix_decode(x, base.order, m);

    RingTable r;
    r.order = order;
    r.label = "M(" + std::to_string(k) + "," + base.label + ")";
    r.add.resize(static_cast<std::size_t>(order) * order);
    r.mul.resize(static_cast<std::size_t>(order) * order);
    r.neg.resize(order);
    r.names.resize(order);
    std::vector<int> acc(m);
    for (int x = 0; x < order; ++x) {
        const auto& xd = digs[x];
        for (int p = 0; p < m; ++p) acc[p] = base.neg_of(xd[p]);
        r.neg[x] = mixed_radix_encode(acc, base.order);
        r.names[x] = entries_name(base, xd);
        for (int y = 0; y < order; ++y) {
            const auto& yd = digs[y];
            for (int p = 0; p < m; ++p) acc[p] = base.add_of(xd[p], yd[p]);
            r.add[cell(order, x, y)] = mixed_radix_encode(acc, base.order);
            for (int i = 0; i < k; ++i) {
                for (int j = 0; j < k; ++j) {
                    int s = base.zero;
                    for (int l = 0; l < k; ++l)
                        s = base.add_of(s, base.mul_of(xd[i * k + l], yd[l * k + j]));
                    acc[i * k + j] = s;
                }
            }
            r.mul[cell(order, x, y)] = mixed_radix_encode(acc, base.order);
        }
    }
    std::vector<int> e(m, base.zero);
    r.zero = mixed_radix_encode(e, base.order);
    for (int i = 0; i < k; ++i) e[i * k + i] = base.one;
    r.one = mixed_radix_encode(e, base.order);
    r.fingerprint = ring_fingerprint_hex(r);
    return r;
}

RingTable make_upper_triangular(int k, const RingTable& base, std::size_t cap) {
    if (k < 1)
        throw InvalidOrderError("make_upper_triangular: dimension must be >= 1, got " +
                                std::to_string(k));
    // Stored positions: the upper triangle row-major.
    std::vector<std::pair<int, int>> pos;
    std::vector<std::vector<int>> pidx(k, std::vector<int>(k, -1));
    for (int i = 0; i < k; ++i) {
        for (int j = i; j < k; ++j) {
            pidx[i][j] = static_cast<int>(pos.size());
            pos.emplace_back(i, j);
        }
    }
    int m = static_cast<int>(pos.size());
    unsigned long long n = checked_pow(static_cast<unsigned long long>(base.order),
                                       static_cast<unsigned>(m));
    check_cap(n, cap, "make_upper_triangular");
    int order = static_cast<int>(n);

    std::vector<std::vector<int>> digs(order);
    for (int x = 0; x < order; ++x) digs[x] = mixed_radix_decode(x, base.order, m);

    auto full_entries = [&](const std::vector<int>& d) {
        std::vector<int> entries(static_cast<std::size_t>(k) * k, base.zero);
        for (int p = 0; p < m; ++p)
            entries[static_cast<std::size_t>(pos[p].first) * k + pos[p].second] = d[p];
        return entries;
    };

    RingTable r;
    r.order = order;
    r.label = "UT(" + std::to_string(k) + "," + base.label + ")";
    r.add.resize(static_cast<std::size_t>(order) * order);
    r.mul.resize(static_cast<std::size_t>(order) * order);
    r.neg.resize(order);
    r.names.resize(order);
    std::vector<int> acc(m);
    for (int x = 0; x < order; ++x) {
        const auto& xd = digs[x];
        for (int p = 0; p < m; ++p) acc[p] = base.neg_of(xd[p]);
        r.neg[x] = mixed_radix_encode(acc, base.order);
        r.names[x] = entries_name(base, full_entries(xd));
        for (int y = 0; y < order; ++y) {
            const auto& yd = digs[y];
            for (int p = 0; p < m; ++p) acc[p] = base.add_of(xd[p], yd[p]);
            r.add[cell(order, x, y)] = mixed_radix_encode(acc, base.order);
            for (int p = 0; p < m; ++p) {
                auto [i, j] = pos[p];
                int s = base.zero;
                for (int l = i; l <= j; ++l)
                    s = base.add_of(s, base.mul_of(xd[pidx[i][l]], yd[pidx[l][j]]));
                acc[p] = s;
            }
            r.mul[cell(order, x, y)] = mixed_radix_encode(acc, base.order);
        }
    }
    std::vector<int> e(m, base.zero);
    r.zero = mixed_radix_encode(e, base.order);
    for (int i = 0; i < k; ++i) e[pidx[i][i]] = base.one;
    r.one = mixed_radix_encode(e, base.order);
    r.fingerprint = ring_fingerprint_hex(r);
    return r;
}

ElementSet ideal_generated(const RingTable& r, const std::vector<int>& gens) {
    ElementSet s(r.order);
    std::vector<int> queue;
    auto push = [&](int x) {
        if (!s.bits[static_cast<std::size_t>(x)]) {
            s.bits[static_cast<std::size_t>(x)] = true;
            queue.push_back(x);
        }
    };
    push(r.zero);
    for (int g : gens) {
        if (g < 0 || g >= r.order)
            throw UsageError("ideal_generated: generator index " + std::to_string(g) +
                             " out of range for " + r.label);
        push(g);
    }
    std::vector<int> members;
    while (!queue.empty()) {
        int x = queue.back();
        queue.pop_back();
        members.push_back(x);
        push(r.neg_of(x));
        for (int a = 0; a < r.order; ++a) {
            push(r.mul_of(a, x));
            push(r.mul_of(x, a));
        }
        // Pairwise sums: any pair (x, y) gets combined when the later of the
        // two is popped, so one sweep over current members suffices.
        for (int y : members) push(r.add_of(x, y));
    }
    return s;
}

bool is_two_sided_ideal(const RingTable& r, const ElementSet& s) {
    if (s.universe() != r.order) return false;
    if (!s.contains(r.zero)) return false;
    for (int x : s.indices()) {
        if (!s.contains(r.neg_of(x))) return false;
        for (int y : s.indices())
            if (!s.contains(r.add_of(x, y))) return false;
        for (int a = 0; a < r.order; ++a)
            if (!s.contains(r.mul_of(a, x)) || !s.contains(r.mul_of(x, a))) return false;
    }
    return true;
}

QuotientResult make_quotient_with_projection(const RingTable& r, const ElementSet& ideal) {
    if (!is_two_sided_ideal(r, ideal))
        throw NotAnIdealError("make_quotient: set is not a two-sided ideal of " + r.label);

    auto members = ideal.indices();
    std::vector<int> rep(r.order);
    for (int x = 0; x < r.order; ++x) {
        int m = x;
        for (int i : members) m = std::min(m, r.add_of(x, i));
        rep[x] = m;
    }
    std::vector<int> reps;
    std::vector<int> newindex(r.order, -1);
    for (int x = 0; x < r.order; ++x) {
        if (rep[x] == x) {
            newindex[x] = static_cast<int>(reps.size());
            reps.push_back(x);
        }
    }
    int q = static_cast<int>(reps.size());

    QuotientResult out;
    RingTable& t = out.ring;
    t.order = q;
    if (members.size() <= 8) {
        std::string desc = "{";
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (i) desc += ",";
            desc += std::to_string(members[i]);
        }
        desc += "}";
        t.label = r.label + "/" + desc;
    } else {
        Fnv1a h;
        for (int i : members) h.feed_i32(i);
        t.label = r.label + "/I(" + std::to_string(members.size()) + ";" +
                  h.hex().substr(0, 8) + ")";
    }
    t.add.resize(static_cast<std::size_t>(q) * q);
    t.mul.resize(static_cast<std::size_t>(q) * q);
    t.neg.resize(q);
    t.names.resize(q);
    t.zero = newindex[rep[r.zero]];
    t.one = newindex[rep[r.one]];
    for (int i = 0; i < q; ++i) {
        t.neg[i] = newindex[rep[r.neg_of(reps[i])]];
        t.names[i] = "[" + r.names[static_cast<std::size_t>(reps[i])] + "]";
        for (int j = 0; j < q; ++j) {
            t.add[cell(q, i, j)] = newindex[rep[r.add_of(reps[i], reps[j])]];
            t.mul[cell(q, i, j)] = newindex[rep[r.mul_of(reps[i], reps[j])]];
        }
    }
    t.fingerprint = ring_fingerprint_hex(t);
    out.projection.resize(r.order);
    for (int x = 0; x < r.order; ++x) out.projection[x] = newindex[rep[x]];
    return out;
}

RingTable make_quotient(const RingTable& r, const ElementSet& ideal) {
    return make_quotient_with_projection(r, ideal).ring;
}

AxiomReport verify_ring_axioms(const RingTable& r) {
    AxiomReport rep;
    auto fail = [&](const std::string& axiom, int a, int b, int c) {
        rep.ok = false;
        rep.axiom = axiom;
        rep.witness = {a, b, c};
        return rep;
    };

    int n = r.order;
    if (n < 1 || r.add.size() != static_cast<std::size_t>(n) * n ||
        r.mul.size() != static_cast<std::size_t>(n) * n ||
        r.neg.size() != static_cast<std::size_t>(n) || r.zero < 0 || r.zero >= n ||
        r.one < 0 || r.one >= n)
        return fail("table-shape", -1, -1, -1);
    for (std::size_t i = 0; i < r.add.size(); ++i)
        if (r.add[i] < 0 || r.add[i] >= n || r.mul[i] < 0 || r.mul[i] >= n)
            return fail("table-range", static_cast<int>(i / n), static_cast<int>(i % n), -1);
    for (int a = 0; a < n; ++a)
        if (r.neg[a] < 0 || r.neg[a] >= n) return fail("table-range", a, -1, -1);

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (r.add_of(a, b) != r.add_of(b, a)) return fail("add-commutativity", a, b, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (r.add_of(r.add_of(a, b), c) != r.add_of(a, r.add_of(b, c)))
                    return fail("add-associativity", a, b, c);
    for (int a = 0; a < n; ++a)
        if (r.add_of(a, r.zero) != a) return fail("zero-identity", a, -1, -1);
    for (int a = 0; a < n; ++a)
        if (r.add_of(a, r.neg_of(a)) != r.zero) return fail("additive-inverse", a, -1, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (r.mul_of(r.mul_of(a, b), c) != r.mul_of(a, r.mul_of(b, c)))
                    return fail("mul-associativity", a, b, c);
    for (int a = 0; a < n; ++a)
        if (r.mul_of(a, r.one) != a || r.mul_of(r.one, a) != a)
            return fail("one-identity", a, -1, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (r.mul_of(a, r.add_of(b, c)) != r.add_of(r.mul_of(a, b), r.mul_of(a, c)))
                    return fail("left-distributivity", a, b, c);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (r.mul_of(r.add_of(a, b), c) != r.add_of(r.mul_of(a, c), r.mul_of(b, c)))
                    return fail("right-distributivity", a, b, c);
    if (n >= 2 && r.zero == r.one) return fail("unital-distinct", r.zero, -1, -1);
    return rep;
}

}  // namespace ringlab
