#pragma once

#include <memory>
#include <optional>

#include "ringlab/group_ring.hpp"

namespace ringlab {

// Construction-expression grammar:
//   Ring  := "Z(" int ")" | "Prod(" Ring "," Ring ")" | "M(" int "," Ring ")"
//          | "UT(" int "," Ring ")" | "GR(" Ring "," Group ")"
//          | "Quot(" Ring ",[" ints "])"
//   Group := "C(" int ")" | "E(" prime "," int ")" | "GProd(" Group "," Group ")"
// Whitespace-insensitive; in corpus files one entry per line, "#" comments.

struct GroupExpr {
    enum class Kind { Cyclic, ElementaryAbelian, Product } kind = Kind::Cyclic;
    int n = 0;  // Cyclic order
    int p = 0, k = 0;  // ElementaryAbelian parameters
    std::shared_ptr<GroupExpr> left, right;
    std::string text;  // normalized rendering
};

struct RingExpr {
    enum class Kind { Zn, Product, Matrix, UpperTriangular, GroupRing, Quotient } kind =
        Kind::Zn;
    int n = 0;  // Zn order
    int k = 0;  // matrix / triangular dimension
    std::shared_ptr<RingExpr> left, right;
    std::shared_ptr<GroupExpr> group;
    std::vector<int> gens;  // quotient ideal generators, sorted unique
    std::string text;
};

// Upper bound on the constructed order, saturating; quotients report the
// parent order since the coset count is not static.
unsigned long long static_ring_order(const RingExpr& e);
unsigned long long static_group_order(const GroupExpr& e);

std::shared_ptr<RingExpr> parse_ring_expr(const std::string& text);

struct CorpusEntry {
    std::string text;
    int line = 0;
    std::shared_ptr<RingExpr> expr;
    unsigned long long static_order = 0;
    bool over_cap = false;  // flagged at parse time, skipped at build time
};

struct CorpusSpec {
    std::vector<CorpusEntry> entries;
    std::size_t size_cap = kDefaultSizeCap;
    std::string output_path;
};

CorpusSpec parse_corpus_spec(const std::string& text,
                             std::size_t size_cap = kDefaultSizeCap);

// One constructed corpus member. Group-ring entries retain the base ring and
// group; product entries retain their factors. A nonempty skip_reason marks
// an entry that exceeded the size cap and has no tables.
struct CorpusItem {
    std::string expr;
    std::shared_ptr<const RingTable> ring;
    std::shared_ptr<const RingTable> base_ring;
    std::shared_ptr<const GroupTable> group;
    std::vector<std::shared_ptr<const RingTable>> factors;
    std::string skip_reason;
};

RingTable build_ring(const RingExpr& e, std::size_t cap = kDefaultSizeCap);
GroupTable build_group(const GroupExpr& e, std::size_t cap = kDefaultSizeCap);

CorpusItem build_corpus_item(const CorpusEntry& entry, std::size_t cap);
std::vector<CorpusItem> build_corpus(const CorpusSpec& spec);

// The corpus shipped with the tool: the cyclic rings Z2..Z16 used throughout,
// product/matrix/triangular negatives, and group rings covering each
// hypothesis combination of the verification registry.
const std::string& default_corpus_text();

}  // namespace ringlab
