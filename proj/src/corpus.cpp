#include "ringlab/corpus.hpp"

#include <algorithm>

namespace ringlab {

namespace {

// Character-level recursive-descent parser with line/column tracking.
class Parser {
public:
    Parser(const std::string& text, int line) : text_(text), line_(line) {}

    std::shared_ptr<RingExpr> parse_ring_to_end() {
        auto e = parse_ring();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input after expression");
        return e;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
    int line_;

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg, line_, static_cast<int>(pos_) + 1);
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r'))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_) fail("expected a constructor name");
        return text_.substr(start, pos_ - start);
    }

    int integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_) fail("expected an integer");
        long long v = 0;
        for (std::size_t i = start; i < pos_; ++i) {
            v = v * 10 + (text_[i] - '0');
            if (v > 1'000'000'000LL) fail("integer too large");
        }
        return static_cast<int>(v);
    }

    std::vector<int> int_list() {
        expect('[');
        std::vector<int> out;
        if (peek() != ']') {
            out.push_back(integer());
            while (peek() == ',') {
                expect(',');
                out.push_back(integer());
            }
        }
        expect(']');
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    std::shared_ptr<GroupExpr> parse_group() {
        auto e = std::make_shared<GroupExpr>();
        std::string name = ident();
        if (name == "C") {
            e->kind = GroupExpr::Kind::Cyclic;
            expect('(');
            e->n = integer();
            expect(')');
            e->text = "C(" + std::to_string(e->n) + ")";
        } else if (name == "E") {
            e->kind = GroupExpr::Kind::ElementaryAbelian;
            expect('(');
            e->p = integer();
            expect(',');
            e->k = integer();
            expect(')');
            if (!is_prime(e->p)) fail("E(p,k) requires a prime p");
            e->text = "E(" + std::to_string(e->p) + "," + std::to_string(e->k) + ")";
        } else if (name == "GProd") {
            e->kind = GroupExpr::Kind::Product;
            expect('(');
            e->left = parse_group();
            expect(',');
            e->right = parse_group();
            expect(')');
            e->text = "GProd(" + e->left->text + "," + e->right->text + ")";
        } else {
            fail("unknown group constructor '" + name + "'");
        }
        return e;
    }

    std::shared_ptr<RingExpr> parse_ring() {
        auto e = std::make_shared<RingExpr>();
        std::string name = ident();
        if (name == "Z") {
            e->kind = RingExpr::Kind::Zn;
            expect('(');
            e->n = integer();
            expect(')');
            e->text = "Z(" + std::to_string(e->n) + ")";
        } else if (name == "Prod") {
            e->kind = RingExpr::Kind::Product;
            expect('(');
            e->left = parse_ring();
            expect(',');
            e->right = parse_ring();
            expect(')');
            e->text = "Prod(" + e->left->text + "," + e->right->text + ")";
        } else if (name == "M" || name == "UT") {
            e->kind = name == "M" ? RingExpr::Kind::Matrix : RingExpr::Kind::UpperTriangular;
            expect('(');
            e->k = integer();
            expect(',');
            e->left = parse_ring();
            expect(')');
            e->text = name + "(" + std::to_string(e->k) + "," + e->left->text + ")";
        } else if (name == "GR") {
            e->kind = RingExpr::Kind::GroupRing;
            expect('(');
            e->left = parse_ring();
            expect(',');
            e->group = parse_group();
            expect(')');
            e->text = "GR(" + e->left->text + "," + e->group->text + ")";
        } else if (name == "Quot") {
            e->kind = RingExpr::Kind::Quotient;
            expect('(');
            e->left = parse_ring();
            expect(',');
            e->gens = int_list();
            expect(')');
            std::string gl;
            for (std::size_t i = 0; i < e->gens.size(); ++i) {
                if (i) gl += ",";
                gl += std::to_string(e->gens[i]);
            }
            e->text = "Quot(" + e->left->text + ",[" + gl + "])";
        } else {
            fail("unknown ring constructor '" + name + "'");
        }
        return e;
    }
};

unsigned long long sat_mul(unsigned long long a, unsigned long long b) {
    if (a != 0 && b > ~0ull / a) return ~0ull;
    return a * b;
}

}  // namespace

unsigned long long static_group_order(const GroupExpr& e) {
    switch (e.kind) {
        case GroupExpr::Kind::Cyclic:
            return static_cast<unsigned long long>(e.n);
        case GroupExpr::Kind::ElementaryAbelian:
            return checked_pow(static_cast<unsigned long long>(e.p),
                               static_cast<unsigned>(e.k));
        case GroupExpr::Kind::Product:
            return sat_mul(static_group_order(*e.left), static_group_order(*e.right));
    }
    return 0;
}

unsigned long long static_ring_order(const RingExpr& e) {
    switch (e.kind) {
        case RingExpr::Kind::Zn:
            return static_cast<unsigned long long>(e.n);
        case RingExpr::Kind::Product:
            return sat_mul(static_ring_order(*e.left), static_ring_order(*e.right));
        case RingExpr::Kind::Matrix:
            return checked_pow(static_ring_order(*e.left),
                               static_cast<unsigned>(e.k) * static_cast<unsigned>(e.k));
        case RingExpr::Kind::UpperTriangular:
            return checked_pow(static_ring_order(*e.left),
                               static_cast<unsigned>(e.k * (e.k + 1) / 2));
        case RingExpr::Kind::GroupRing: {
            unsigned long long g = static_group_order(*e.group);
            if (g > 64) return ~0ull;  // exponent alone is already absurd
            return checked_pow(static_ring_order(*e.left), static_cast<unsigned>(g));
        }
        case RingExpr::Kind::Quotient:
            return static_ring_order(*e.left);
    }
    return 0;
}

std::shared_ptr<RingExpr> parse_ring_expr(const std::string& text) {
    return Parser(text, 1).parse_ring_to_end();
}

CorpusSpec parse_corpus_spec(const std::string& text, std::size_t size_cap) {
    CorpusSpec spec;
    spec.size_cap = size_cap;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string line = text.substr(pos, nl == std::string::npos ? std::string::npos
                                                                    : nl - pos);
        ++line_no;
        pos = nl == std::string::npos ? text.size() + 1 : nl + 1;

        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;

        CorpusEntry entry;
        entry.line = line_no;
        entry.expr = Parser(line, line_no).parse_ring_to_end();
        entry.text = entry.expr->text;
        entry.static_order = static_ring_order(*entry.expr);
        entry.over_cap = entry.static_order > size_cap;
        spec.entries.push_back(std::move(entry));
    }
    return spec;
}

GroupTable build_group(const GroupExpr& e, std::size_t cap) {
    switch (e.kind) {
        case GroupExpr::Kind::Cyclic:
            return make_cyclic(e.n);
        case GroupExpr::Kind::ElementaryAbelian:
            return make_elementary_abelian(e.p, e.k, cap);
        case GroupExpr::Kind::Product:
            return make_group_product(build_group(*e.left, cap), build_group(*e.right, cap),
                                      cap);
    }
    throw UsageError("build_group: unreachable");
}

RingTable build_ring(const RingExpr& e, std::size_t cap) {
    switch (e.kind) {
        case RingExpr::Kind::Zn:
            return make_zn(e.n);
        case RingExpr::Kind::Product:
            return make_product(build_ring(*e.left, cap), build_ring(*e.right, cap), cap);
        case RingExpr::Kind::Matrix:
            return make_matrix(e.k, build_ring(*e.left, cap), cap);
        case RingExpr::Kind::UpperTriangular:
            return make_upper_triangular(e.k, build_ring(*e.left, cap), cap);
        case RingExpr::Kind::GroupRing:
            return make_group_ring(build_ring(*e.left, cap), build_group(*e.group, cap),
                                   cap);
        case RingExpr::Kind::Quotient: {
            auto parent = build_ring(*e.left, cap);
            auto ideal = ideal_generated(parent, e.gens);
            auto q = make_quotient(parent, ideal);
            // Re-label with the grammar form so fingerprints follow the
            // expression, not the internal coset description.
            q.label = e.text;
            q.fingerprint = ring_fingerprint_hex(q);
            return q;
        }
    }
    throw UsageError("build_ring: unreachable");
}

CorpusItem build_corpus_item(const CorpusEntry& entry, std::size_t cap) {
    CorpusItem item;
    item.expr = entry.text;
    if (entry.over_cap) {
        item.skip_reason = "static order " + std::to_string(entry.static_order) +
                           " exceeds size cap " + std::to_string(cap);
        return item;
    }
    const RingExpr& e = *entry.expr;
    item.ring = std::make_shared<RingTable>(build_ring(e, cap));
    if (e.kind == RingExpr::Kind::GroupRing) {
        item.base_ring = std::make_shared<RingTable>(build_ring(*e.left, cap));
        item.group = std::make_shared<GroupTable>(build_group(*e.group, cap));
    } else if (e.kind == RingExpr::Kind::Product) {
        item.factors.push_back(std::make_shared<RingTable>(build_ring(*e.left, cap)));
        item.factors.push_back(std::make_shared<RingTable>(build_ring(*e.right, cap)));
    }
    return item;
}

std::vector<CorpusItem> build_corpus(const CorpusSpec& spec) {
    std::vector<CorpusItem> items;
    items.reserve(spec.entries.size());
    for (const auto& entry : spec.entries) items.push_back(build_corpus_item(entry, spec.size_cap));
    return items;
}

const std::string& default_corpus_text() {
    static const std::string text = R"(# Default verification corpus.
# Cyclic rings
Z(2)
Z(3)
Z(4)
Z(5)
Z(6)
Z(7)
Z(8)
Z(9)
Z(12)
Z(16)
# Products
Prod(Z(2),Z(2))
Prod(Z(2),Z(7))
# Triangular and full matrix rings
UT(2,Z(2))
UT(2,Z(3))
M(2,Z(2))
# Quotients
Quot(Z(9),[3])
# Group rings
GR(Z(2),C(2))
GR(Z(2),C(4))
GR(Z(2),E(2,2))
GR(Z(3),C(3))
GR(Z(4),C(2))
GR(Z(2),C(3))
GR(Z(6),C(2))
GR(Z(4),C(4))
GR(Z(9),C(3))
)";
    return text;
}

}  // namespace ringlab
