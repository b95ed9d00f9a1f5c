#include <doctest.h>

#include "ringlab/struct_sets.hpp"
#include "test_support.hpp"

using namespace ringlab;

TEST_CASE("make_zn basic tables") {
    auto z2 = make_zn(2);
    CHECK(z2.order == 2);
    CHECK(z2.add_of(1, 1) == 0);
    CHECK(z2.mul_of(1, 1) == 1);

    auto z4 = make_zn(4);
    CHECK(z4.mul_of(2, 2) == 0);
    CHECK(z4.neg_of(1) == 3);
    CHECK(z4.neg_of(0) == 0);
    CHECK(z4.names[3] == "3");

    auto z6 = make_zn(6);
    for (int x = 0; x < 6; ++x) CHECK(z6.pow_of(x, 3) == x);
}

TEST_CASE("make_zn rejects degenerate orders") {
    CHECK_THROWS_AS(make_zn(1), InvalidOrderError);
    CHECK_THROWS_AS(make_zn(0), InvalidOrderError);
    CHECK_THROWS_AS(make_zn(-3), InvalidOrderError);
}

TEST_CASE("constructor outputs satisfy the ring laws") {
    for (const auto& r :
         {make_zn(5), make_product(make_zn(2), make_zn(3)), make_matrix(2, make_zn(2)),
          make_upper_triangular(2, make_zn(2)), make_upper_triangular(2, make_zn(3))}) {
        auto rep = verify_ring_axioms(r);
        CHECK_MESSAGE(rep.ok, r.label, " failed ", rep.axiom);
    }
}

TEST_CASE("product ring matches the cyclic ring of the same order") {
    auto p = make_product(make_zn(2), make_zn(3));
    auto z6 = make_zn(6);
    CHECK(p.order == 6);
    for (int x = 0; x < 6; ++x) CHECK(p.pow_of(x, 3) == x);
    CHECK(oracle::additive_order_profile(p) == oracle::additive_order_profile(z6));
}

TEST_CASE("product projections are homomorphisms") {
    auto a = make_zn(4);
    auto b = make_zn(3);
    auto p = make_product(a, b);
    auto pa = [&](int x) { return x / b.order; };
    auto pb = [&](int x) { return x % b.order; };
    for (int x = 0; x < p.order; ++x) {
        for (int y = 0; y < p.order; ++y) {
            CHECK(pa(p.add_of(x, y)) == a.add_of(pa(x), pa(y)));
            CHECK(pb(p.add_of(x, y)) == b.add_of(pb(x), pb(y)));
            CHECK(pa(p.mul_of(x, y)) == a.mul_of(pa(x), pa(y)));
            CHECK(pb(p.mul_of(x, y)) == b.mul_of(pb(x), pb(y)));
        }
    }
}

TEST_CASE("boolean product") {
    auto p = make_product(make_zn(2), make_zn(2));
    for (int x = 0; x < p.order; ++x) CHECK(p.mul_of(x, x) == x);
}

TEST_CASE("matrix ring essentials") {
    auto z2 = make_zn(2);
    auto m = make_matrix(2, z2);
    CHECK(m.order == 16);
    // entry digits are row-major, so e12 has index base^1
    int e12 = mixed_radix_encode({0, 1, 0, 0}, 2);
    CHECK(e12 == 2);
    CHECK(m.mul_of(e12, e12) == m.zero);
    CHECK(m.pow_of(e12, 3) != e12);
    CHECK(m.names[static_cast<std::size_t>(m.one)] == "[1,0,0,1]");

    auto m1 = make_matrix(1, make_zn(4));
    auto z4 = make_zn(4);
    CHECK(m1.order == 4);
    CHECK(m1.add == z4.add);
    CHECK(m1.mul == z4.mul);
}

TEST_CASE("size caps are enforced") {
    CHECK_THROWS_AS(make_matrix(2, make_zn(9), 4096), SizeCapError);
    CHECK_THROWS_AS(make_product(make_zn(100), make_zn(100), 4096), SizeCapError);
    CHECK_THROWS_AS(make_upper_triangular(3, make_zn(7), 4096), SizeCapError);
}

TEST_CASE("upper triangular ring") {
    auto ut = make_upper_triangular(2, make_zn(2));
    CHECK(ut.order == 8);
    CHECK(verify_ring_axioms(ut).ok);
    // strictly upper element (0 1; 0 0) squares to zero
    int e01 = mixed_radix_encode({0, 1, 0}, 2);
    CHECK(ut.mul_of(e01, e01) == ut.zero);
    CHECK(ut.names[static_cast<std::size_t>(e01)] == "[0,1,0,0]");
}

TEST_CASE("ideal_generated closures") {
    auto z6 = make_zn(6);
    CHECK(ideal_generated(z6, {2}).indices() == std::vector<int>{0, 2, 4});
    auto z4 = make_zn(4);
    CHECK(ideal_generated(z4, {}).indices() == std::vector<int>{0});

    auto m = make_matrix(2, make_zn(2));
    int e12 = mixed_radix_encode({0, 1, 0, 0}, 2);
    CHECK(ideal_generated(m, {e12}).count() == 16);  // the full simple ring

    CHECK_THROWS_AS(ideal_generated(z4, {9}), UsageError);
}

TEST_CASE("ideal closure is a fixpoint") {
    for (const auto& r : {make_zn(12), make_upper_triangular(2, make_zn(2))}) {
        for (int g = 0; g < r.order; ++g) {
            auto ideal = ideal_generated(r, {g});
            CHECK(is_two_sided_ideal(r, ideal));
            CHECK(ideal_generated(r, ideal.indices()) == ideal);
        }
    }
}

TEST_CASE("quotients") {
    auto z6 = make_zn(6);
    auto q = make_quotient(z6, ElementSet::of(6, {0, 2, 4}));
    auto z2 = make_zn(2);
    CHECK(q.order == 2);
    CHECK(q.add == z2.add);
    CHECK(q.mul == z2.mul);

    auto z4 = make_zn(4);
    auto q2 = make_quotient(z4, ElementSet::of(4, {0, 2}));
    CHECK(q2.order == 2);
    CHECK(q2.add == z2.add);
    CHECK(q2.mul == z2.mul);

    CHECK_THROWS_AS(make_quotient(z4, ElementSet::of(4, {0, 1})), NotAnIdealError);
}

TEST_CASE("quotient surjection preserves both operations") {
    auto ut = make_upper_triangular(2, make_zn(2));
    auto s = compute_structural_sets(ut);
    auto qr = make_quotient_with_projection(ut, s.jacobson);
    const auto& q = qr.ring;
    CHECK(q.order == ut.order / s.jacobson.count());
    for (int x = 0; x < ut.order; ++x) {
        for (int y = 0; y < ut.order; ++y) {
            CHECK(qr.projection[static_cast<std::size_t>(ut.add_of(x, y))] ==
                  q.add_of(qr.projection[static_cast<std::size_t>(x)],
                           qr.projection[static_cast<std::size_t>(y)]));
            CHECK(qr.projection[static_cast<std::size_t>(ut.mul_of(x, y))] ==
                  q.mul_of(qr.projection[static_cast<std::size_t>(x)],
                           qr.projection[static_cast<std::size_t>(y)]));
        }
    }
    // order-4 quotient of the triangular ring by its radical is Boolean
    CHECK(q.order == 4);
    for (int x = 0; x < q.order; ++x) CHECK(q.mul_of(x, x) == x);
}

TEST_CASE("quotient by the whole ring degenerates to one element") {
    auto z4 = make_zn(4);
    auto q = make_quotient(z4, ideal_generated(z4, {1}));
    CHECK(q.order == 1);
    CHECK(q.zero == q.one);
    CHECK(verify_ring_axioms(q).ok);
}

TEST_CASE("axiom verdict carries a reproducible witness") {
    auto bad = make_zn(5);
    bad.mul[static_cast<std::size_t>(2) * 5 + 3] = 0;  // corrupt one product cell
    auto rep = verify_ring_axioms(bad);
    REQUIRE_FALSE(rep.ok);
    CHECK_FALSE(rep.axiom.empty());
    auto [a, b, c] = rep.witness;
    if (rep.axiom == "mul-associativity") {
        CHECK(bad.mul_of(bad.mul_of(a, b), c) != bad.mul_of(a, bad.mul_of(b, c)));
    } else if (rep.axiom == "one-identity") {
        CHECK((bad.mul_of(a, bad.one) != a || bad.mul_of(bad.one, a) != a));
    } else if (rep.axiom == "left-distributivity") {
        CHECK(bad.mul_of(a, bad.add_of(b, c)) !=
              bad.add_of(bad.mul_of(a, b), bad.mul_of(a, c)));
    }
}

TEST_CASE("int_embed walks multiples of one") {
    auto z6 = make_zn(6);
    CHECK(z6.int_embed(0) == 0);
    CHECK(z6.int_embed(6) == 0);
    CHECK(z6.int_embed(7) == 1);
    CHECK(z6.int_embed(-1) == 5);
    CHECK(z6.int_embed(15) == 3);
}
