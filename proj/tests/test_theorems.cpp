#include <doctest.h>

#include "ringlab/theorems.hpp"

using namespace ringlab;

namespace {

CorpusItem item_of(const std::string& expr, std::size_t cap = kDefaultSizeCap) {
    CorpusEntry entry;
    entry.expr = parse_ring_expr(expr);
    entry.text = entry.expr->text;
    entry.static_order = static_ring_order(*entry.expr);
    entry.over_cap = entry.static_order > cap;
    return build_corpus_item(entry, cap);
}

std::vector<CorpusItem> items_of(const std::vector<std::string>& exprs) {
    std::vector<CorpusItem> out;
    for (const auto& e : exprs) out.push_back(item_of(e));
    return out;
}

int count_verdict(const std::vector<TheoremReport>& reports, Verdict v) {
    int n = 0;
    for (const auto& r : reports) n += r.verdict == v ? 1 : 0;
    return n;
}

}  // namespace

TEST_CASE("registry knows its ids") {
    CHECK(is_known_theorem("cor-4.9"));
    CHECK(is_known_theorem("thm-3.10"));
    CHECK_FALSE(is_known_theorem("thm-9.9"));
    CHECK(theorem_registry().size() == 34);
    MemoSetsProvider sets;
    CHECK_THROWS_AS(verify("thm-9.9", {}, sets), UsageError);
}

TEST_CASE("radical membership of six holds across DT corpus members") {
    MemoSetsProvider sets;
    auto corpus = items_of({"Z(4)", "Z(9)", "Z(6)", "UT(2,Z(2))"});
    auto reports = verify("cor-2.8", corpus, sets);
    REQUIRE(reports.size() == 4);
    for (const auto& rep : reports) CHECK(rep.verdict == Verdict::Pass);
}

TEST_CASE("negative witnesses for the congruence premises") {
    MemoSetsProvider sets;
    auto z7 = verify("remark-4", items_of({"Z(7)"}), sets);
    REQUIRE(z7.size() == 1);
    CHECK(z7[0].verdict == Verdict::Pass);
    CHECK(z7[0].note.find("a³") != std::string::npos);

    auto z5 = verify("remark-4", items_of({"Z(5)"}), sets);
    CHECK(z5[0].verdict == Verdict::Pass);
    CHECK(z5[0].note.find("a⁴") != std::string::npos);

    // a DT ring cannot witness the gap
    auto z4 = verify("remark-4", items_of({"Z(4)"}), sets);
    CHECK(z4[0].verdict == Verdict::HypothesisNotMet);
}

TEST_CASE("two-group conclusion on the order-four base ring") {
    MemoSetsProvider sets;
    auto reports = verify("thm-3.11", items_of({"GR(Z(4),C(2))", "GR(Z(4),C(4))"}), sets);
    REQUIRE(reports.size() == 2);
    for (const auto& rep : reports) CHECK(rep.verdict == Verdict::Pass);
}

TEST_CASE("empty corpus yields an empty summary") {
    MemoSetsProvider sets;
    auto reports = verify_all({}, sets);
    CHECK(reports.empty());
    auto s = summarize(reports);
    CHECK(s.pass == 0);
    CHECK(s.fail == 0);
    CHECK(s.hypothesis_not_met == 0);
    CHECK(s.skipped == 0);
}

TEST_CASE("non-DT matrix ring reports hypothesis-not-met, never fail") {
    MemoSetsProvider sets;
    auto reports = verify_all(items_of({"M(2,Z(2))"}), sets);
    auto s = summarize(reports);
    CHECK(s.fail == 0);
    CHECK(s.hypothesis_not_met > 0);
    for (const auto& rep : reports) {
        if (rep.theorem_id == "cor-2.8" || rep.theorem_id == "lem-4.1")
            CHECK(rep.verdict == Verdict::HypothesisNotMet);
        if (rep.theorem_id == "lem-2.3" || rep.theorem_id == "cor-4.9")
            CHECK(rep.verdict == Verdict::Pass);
    }
}

TEST_CASE("product transfer is evaluated in both directions") {
    MemoSetsProvider sets;
    auto reports = verify("lem-2.2", items_of({"Prod(Z(2),Z(7))", "Z(5)"}), sets);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].verdict == Verdict::Pass);  // non-DT product of a non-DT factor
    CHECK(reports[1].verdict == Verdict::HypothesisNotMet);
}

TEST_CASE("group-ring statements skip plain rings") {
    MemoSetsProvider sets;
    for (const char* id : {"thm-3.1", "lem-3.2", "lem-3.3", "lem-3.4", "lem-3.5",
                           "lem-3.6", "lem-3.8", "thm-3.10", "thm-3.11", "thm-3.12",
                           "thm-3.13", "cor-3.14"}) {
        auto reports = verify(id, items_of({"Z(4)"}), sets);
        CHECK(reports[0].verdict == Verdict::HypothesisNotMet);
    }
}

TEST_CASE("hypothesis coverage of the elementary-2-group conclusion") {
    MemoSetsProvider sets;
    // characteristic 2 puts 2·1 in delta, so the hypothesis fails
    auto r1 = verify("thm-3.10", items_of({"GR(Z(2),C(2))"}), sets);
    CHECK(r1[0].verdict == Verdict::HypothesisNotMet);
    // the order-6 base ring keeps both 2·1 and 3·1 outside delta
    auto r2 = verify("thm-3.10", items_of({"GR(Z(6),C(2))"}), sets);
    CHECK(r2[0].verdict == Verdict::Pass);
}

TEST_CASE("size-capped entries surface as skipped") {
    MemoSetsProvider sets;
    auto spec = parse_corpus_spec("GR(Z(3),C(9))\nZ(4)\n", 4096);
    auto items = build_corpus(spec);
    REQUIRE(items.size() == 2);
    CHECK_FALSE(items[0].skip_reason.empty());
    auto reports = verify("cor-4.9", items, sets);
    CHECK(reports[0].verdict == Verdict::SkippedSize);
    CHECK(reports[1].verdict == Verdict::Pass);
    auto s = summarize(reports);
    CHECK(s.skipped == 1);
}

TEST_CASE("verification is deterministic and parallel-stable") {
    auto corpus = items_of({"Z(4)", "Z(5)", "Z(6)", "GR(Z(2),C(2))", "M(2,Z(2))",
                            "Prod(Z(2),Z(7))"});
    MemoSetsProvider sets1, sets2, sets3;
    auto a = verify_all(corpus, sets1, 1);
    auto b = verify_all(corpus, sets2, 1);
    auto c = verify_all(corpus, sets3, 4);
    REQUIRE(a.size() == b.size());
    REQUIRE(a.size() == c.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].theorem_id == b[i].theorem_id);
        CHECK(a[i].subject == b[i].subject);
        CHECK(a[i].verdict == b[i].verdict);
        CHECK(a[i].witness == b[i].witness);
        CHECK(a[i].note == b[i].note);
        CHECK(a[i].verdict == c[i].verdict);
        CHECK(a[i].witness == c[i].witness);
    }
    CHECK(summarize(a).fail == 0);
}

TEST_CASE("equivalence checks agree on negatives too") {
    MemoSetsProvider sets;
    for (const char* id : {"cor-4.9", "thm-4.10", "thm-4.11", "thm-4.12"}) {
        auto reports = verify(id, items_of({"Z(5)", "Z(7)", "M(2,Z(2))"}), sets);
        for (const auto& rep : reports) CHECK(rep.verdict == Verdict::Pass);
    }
}
