#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ringlab/cache.hpp"
#include "ringlab/corpus.hpp"

using namespace ringlab;

TEST_CASE("single expressions parse and normalize") {
    CHECK(parse_ring_expr("Z(4)")->text == "Z(4)");
    CHECK(parse_ring_expr("GR(Z(2),C(4))")->text == "GR(Z(2),C(4))");
    CHECK(parse_ring_expr(" Prod( Z(2) , Z(3) ) ")->text == "Prod(Z(2),Z(3))");
    CHECK(parse_ring_expr("UT( 2 , Z(3))")->text == "UT(2,Z(3))");
    CHECK(parse_ring_expr("GR(Z(2),GProd(C(2),C(2)))")->text ==
          "GR(Z(2),GProd(C(2),C(2)))");
    CHECK(parse_ring_expr("GR(Z(2),E(2,3))")->text == "GR(Z(2),E(2,3))");

    auto quot = parse_ring_expr("Quot(Z(6),[4, 2,2])");
    CHECK(quot->text == "Quot(Z(6),[2,4])");  // generators sorted, deduplicated
    CHECK(quot->gens == std::vector<int>{2, 4});
}

TEST_CASE("static orders") {
    CHECK(static_ring_order(*parse_ring_expr("Z(9)")) == 9);
    CHECK(static_ring_order(*parse_ring_expr("M(2,Z(3))")) == 81);
    CHECK(static_ring_order(*parse_ring_expr("UT(2,Z(3))")) == 27);
    CHECK(static_ring_order(*parse_ring_expr("GR(Z(3),C(3))")) == 27);
    CHECK(static_ring_order(*parse_ring_expr("Quot(Z(9),[3])")) == 9);  // upper bound
    CHECK(static_ring_order(*parse_ring_expr("GR(Z(2),C(64))")) > 4096ull);
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_ring_expr("Z(x)");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.col >= 3);
    }
    CHECK_THROWS_AS(parse_ring_expr("Foo(3)"), ParseError);
    CHECK_THROWS_AS(parse_ring_expr("Z(4"), ParseError);
    CHECK_THROWS_AS(parse_ring_expr("Z(4) Z(5)"), ParseError);
    CHECK_THROWS_AS(parse_ring_expr("GR(Z(2),E(6,2))"), ParseError);  // non-prime p

    try {
        parse_corpus_spec("Z(4)\nProd(Z(2), badger)\n", 4096);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.col > 1);
    }
}

TEST_CASE("corpus files: comments, blanks and per-line entries") {
    auto spec = parse_corpus_spec(
        "# heading comment\n"
        "Z(4)\n"
        "\n"
        "GR(Z(2),C(2))  # trailing comment\n",
        4096);
    REQUIRE(spec.entries.size() == 2);
    CHECK(spec.entries[0].text == "Z(4)");
    CHECK(spec.entries[0].line == 2);
    CHECK(spec.entries[1].text == "GR(Z(2),C(2))");
    CHECK(spec.entries[1].line == 4);
}

TEST_CASE("over-cap entries are flagged at parse time and skipped at build time") {
    auto spec = parse_corpus_spec("M(2,Z(9))\nZ(4)\n", 4096);
    REQUIRE(spec.entries.size() == 2);
    CHECK(spec.entries[0].over_cap);
    CHECK_FALSE(spec.entries[1].over_cap);
    auto items = build_corpus(spec);
    CHECK_FALSE(items[0].ring);
    CHECK(items[0].skip_reason.find("size cap") != std::string::npos);
    CHECK(items[1].ring);
}

TEST_CASE("corpus items retain their construction parts") {
    auto spec = parse_corpus_spec(default_corpus_text(), 4096);
    auto items = build_corpus(spec);
    CHECK(items.size() == spec.entries.size());
    for (const auto& item : items) {
        REQUIRE_MESSAGE(item.ring, item.expr);
        CHECK(item.ring->label == item.expr);
        if (item.expr.rfind("GR(", 0) == 0) {
            CHECK(item.base_ring);
            CHECK(item.group);
        }
        if (item.expr.rfind("Prod(", 0) == 0) CHECK(item.factors.size() == 2);
    }
}

TEST_CASE("quotient expressions build the coset ring") {
    auto item = build_corpus_item(
        [] {
            CorpusEntry e;
            e.expr = parse_ring_expr("Quot(Z(9),[3])");
            e.text = e.expr->text;
            e.static_order = static_ring_order(*e.expr);
            return e;
        }(),
        4096);
    REQUIRE(item.ring);
    CHECK(item.ring->order == 3);
    CHECK(item.ring->label == "Quot(Z(9),[3])");

    CorpusEntry bad;
    bad.expr = parse_ring_expr("Quot(Z(4),[7])");
    bad.text = bad.expr->text;
    CHECK_THROWS_AS(build_corpus_item(bad, 4096), UsageError);
}

TEST_CASE("fingerprints track label and tables") {
    auto a = make_zn(9);
    auto b = make_zn(9);
    CHECK(a.fingerprint == b.fingerprint);
    b.label = "Z(9)'";
    CHECK(ring_fingerprint_hex(b) != a.fingerprint);
    auto c = make_zn(9);
    c.mul[5] = (c.mul[5] + 1) % 9;
    CHECK(ring_fingerprint_hex(c) != a.fingerprint);
}

TEST_CASE("cache round-trips structural sets") {
    auto dir = std::filesystem::temp_directory_path() / "ringlab-cache-test";
    std::filesystem::remove_all(dir);
    auto z9 = make_zn(9);
    auto s = compute_structural_sets(z9);
    REQUIRE(cache_store(dir, z9, s));
    auto loaded = cache_load(dir, z9);
    REQUIRE(loaded.has_value());
    CHECK(loaded->units == s.units);
    CHECK(loaded->idempotents == s.idempotents);
    CHECK(loaded->tripotents == s.tripotents);
    CHECK(loaded->nilpotents == s.nilpotents);
    CHECK(loaded->jacobson == s.jacobson);
    CHECK(loaded->delta == s.delta);
    CHECK(loaded->nilpotency_index == s.nilpotency_index);

    // a different fingerprint misses
    auto z8 = make_zn(8);
    CHECK_FALSE(cache_load(dir, z8).has_value());
    std::filesystem::remove_all(dir);
}

TEST_CASE("corrupt cache entries are ignored and recomputed") {
    auto dir = std::filesystem::temp_directory_path() / "ringlab-cache-corrupt";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    auto z9 = make_zn(9);
    {
        std::ofstream out(dir / (z9.fingerprint + ".json"));
        out << "{ not json";
    }
    CHECK_FALSE(cache_load(dir, z9).has_value());

    CachedSetsProvider provider(dir);
    const auto& s = provider.get(z9);  // recomputes through the provider
    CHECK(s.jacobson.indices() == std::vector<int>{0, 3, 6});
    auto reloaded = cache_load(dir, z9);
    REQUIRE(reloaded.has_value());  // the recomputed entry replaced the garbage
    CHECK(reloaded->jacobson == s.jacobson);
    std::filesystem::remove_all(dir);
}

TEST_CASE("cold and warm providers agree") {
    auto dir = std::filesystem::temp_directory_path() / "ringlab-cache-warm";
    std::filesystem::remove_all(dir);
    auto rg = make_group_ring(make_zn(2), make_cyclic(4));
    StructuralSets cold, warm;
    {
        CachedSetsProvider provider(dir);
        cold = provider.get(rg);
    }
    {
        CachedSetsProvider provider(dir);
        warm = provider.get(rg);
    }
    CHECK(cold.units == warm.units);
    CHECK(cold.delta == warm.delta);
    CHECK(cold.jacobson == warm.jacobson);
    CHECK(cold.nilpotency_index == warm.nilpotency_index);
    std::filesystem::remove_all(dir);
}

TEST_CASE("default corpus parses clean and within cap") {
    auto spec = parse_corpus_spec(default_corpus_text(), 4096);
    CHECK(spec.entries.size() >= 20);
    for (const auto& e : spec.entries) CHECK_FALSE(e.over_cap);
}

#ifdef RINGLAB_SOURCE_DIR
TEST_CASE("the shipped corpus file matches the built-in default") {
    std::ifstream in(std::string(RINGLAB_SOURCE_DIR) + "/corpus/default.corpus");
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == default_corpus_text());
}
#endif
