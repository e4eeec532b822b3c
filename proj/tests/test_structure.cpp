#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>

#include "ringforge/errors.hpp"
#include "ringforge/structure.hpp"
#include "test_helpers.hpp"

using namespace ringforge;
using namespace rf_test;

TEST_CASE("jacobson radical of the basic examples") {
    Subgroup j4 = jacobson_radical(zmod(4));
    CHECK(j4.size() == 2);
    CHECK(j4.contains({2}));

    CHECK(jacobson_radical(zmod(6)).size() == 1);

    FiniteRing t = t2f2();
    Subgroup jt = jacobson_radical(t);
    CHECK(jt.size() == 2);
    CHECK(jt.contains(e12()));
    // defining property, verified literally: 1 - r*E12 is a unit for every r
    for (const Elem& r : all_elements(t))
        CHECK(t.is_unit(t.sub(t.one(), t.mul(r, e12()))));
}

TEST_CASE("radical is a two-sided ideal with semisimple quotient") {
    for (const FiniteRing& r :
         {zmod(8), zmod(12), t2f2(), m2f2(), group_algebra(2, cyclic_group(4))}) {
        Subgroup j = jacobson_radical(r);
        for (const Elem& g : j.generators())
            for (int i = 0; i < r.dim(); ++i) {
                CHECK(j.contains(r.mul(g, r.basis(i))));
                CHECK(j.contains(r.mul(r.basis(i), g)));
            }
        QuotientMap q = quotient_ring(r, j);
        CHECK(jacobson_radical(q.quotient()).size() == 1);
    }
}

TEST_CASE("radical is left-right symmetric") {
    for (const FiniteRing& r : {zmod(8), t2f2(), m2f2(), upper_triangular(zmod(3), 2)})
        CHECK(jacobson_radical(r).canonical() ==
              jacobson_radical(opposite_ring(r)).canonical());
}

TEST_CASE("radical filtrations") {
    RadicalFiltration f4 = radical_filtration(zmod(4));
    CHECK(f4.nilpotency_index == 2);
    std::vector<Int> sizes4;
    for (const auto& p : f4.powers) sizes4.push_back(p.size());
    CHECK(sizes4 == std::vector<Int>{4, 2, 1});

    RadicalFiltration f8 = radical_filtration(zmod(8));
    CHECK(f8.nilpotency_index == 3);
    std::vector<Int> sizes8;
    for (const auto& p : f8.powers) sizes8.push_back(p.size());
    CHECK(sizes8 == std::vector<Int>{8, 4, 2, 1});
    // J^3 = 0 double-checked by an element-product scan
    Subgroup j = f8.powers[1];
    FiniteRing z8 = zmod(8);
    j.for_each([&](const Elem& a) {
        j.for_each([&](const Elem& b) {
            j.for_each([&](const Elem& c) {
                CHECK(z8.is_zero(z8.mul(z8.mul(a, b), c)));
            });
        });
    });

    CHECK(radical_filtration(m2f2()).nilpotency_index == 1);
}

TEST_CASE("center via linear conditions matches a commutation scan") {
    FiniteRing m = m2f2();
    Subgroup zm = center(m);
    CHECK(zm.size() == 2);

    CHECK(center(zmod(6)).size() == 6);

    FiniteRing t = t2f2();
    Subgroup zt = center(t);
    CHECK(zt.size() == 2);

    for (const FiniteRing& r : {m, t, upper_triangular(zmod(3), 2)}) {
        Subgroup z = center(r);
        Int scan_count = 0;
        for (const Elem& x : all_elements(r)) {
            bool commutes = true;
            for (int i = 0; i < r.dim() && commutes; ++i)
                commutes = r.mul(x, r.basis(i)) == r.mul(r.basis(i), x);
            if (commutes) {
                ++scan_count;
                CHECK(z.contains(x));
            }
        }
        CHECK(scan_count == z.size());
        // the center is a subring
        CHECK(z.contains(r.one()));
        for (const Elem& a : z.generators())
            for (const Elem& b : z.generators()) CHECK(z.contains(r.mul(a, b)));
    }
}

TEST_CASE("central idempotents and primitivity") {
    FiniteRing z6 = zmod(6);
    auto cents = central_idempotents(z6, center(z6));
    std::vector<Elem> all, prim;
    for (const auto& c : cents) {
        all.push_back(c.value);
        if (c.primitive) prim.push_back(c.value);
    }
    CHECK(all == std::vector<Elem>{{0}, {1}, {3}, {4}});
    CHECK(prim == std::vector<Elem>{{3}, {4}});
    CHECK(z6.is_zero(z6.mul({3}, {4})));

    auto c4 = central_idempotents(zmod(4), center(zmod(4)));
    REQUIRE(c4.size() == 2);
    CHECK(c4[1].value == Elem{1});
    CHECK(c4[1].primitive);

    FiniteRing m = m2f2();
    auto cm = central_idempotents(m, center(m));
    REQUIRE(cm.size() == 2);
    CHECK(cm[1].value == m.one());
    CHECK(cm[1].primitive);
}

TEST_CASE("semisimple quotients") {
    CHECK(semisimple_quotient(zmod(4)).quotient().size() == 2);

    QuotientMap qt = semisimple_quotient(t2f2());
    CHECK(qt.quotient().size() == 4);
    auto cents = central_idempotents(qt.quotient(), center(qt.quotient()));
    int prim = 0;
    for (const auto& c : cents) prim += c.primitive ? 1 : 0;
    CHECK(prim == 2);

    CHECK(semisimple_quotient(m2f2()).quotient().size() == 16);
}

TEST_CASE("wedderburn data on the worked examples") {
    FiniteRing z6 = zmod(6);
    WedderburnData w6 = wedderburn_data(z6, semisimple_quotient(z6));
    REQUIRE(w6.blocks.size() == 2);
    std::vector<std::array<Int, 5>> rows;
    for (const auto& b : w6.blocks)
        rows.push_back({b.block_size, b.simple_size, b.multiplicity, b.endo_order,
                        b.characteristic});
    std::sort(rows.begin(), rows.end());
    CHECK(rows[0] == std::array<Int, 5>{2, 2, 1, 2, 2});
    CHECK(rows[1] == std::array<Int, 5>{3, 3, 1, 3, 3});

    FiniteRing m = m2f2();
    WedderburnData wm = wedderburn_data(m, semisimple_quotient(m));
    REQUIRE(wm.blocks.size() == 1);
    CHECK(wm.blocks[0].block_size == 16);
    CHECK(wm.blocks[0].simple_size == 4);
    CHECK(wm.blocks[0].multiplicity == 2);
    CHECK(wm.blocks[0].endo_order == 2);
    CHECK(wm.blocks[0].characteristic == 2);

    FiniteRing t = t2f2();
    WedderburnData wt = wedderburn_data(t, semisimple_quotient(t));
    REQUIRE(wt.blocks.size() == 2);
    for (const auto& b : wt.blocks) {
        CHECK(b.block_size == 2);
        CHECK(b.simple_size == 2);
        CHECK(b.multiplicity == 1);
        CHECK(b.endo_order == 2);
        CHECK(b.characteristic == 2);
    }
}

TEST_CASE("wedderburn integrality invariants across a small corpus") {
    for (const FiniteRing& r : {zmod(8), zmod(12), zmod(27), t2f2(), m2f2(),
                                matrix_ring(zmod(4), 2), group_algebra(3, cyclic_group(3))}) {
        WedderburnData w = wedderburn_data(r, semisimple_quotient(r));
        Subgroup j = jacobson_radical(r);
        Int prod = 1;
        for (const auto& b : w.blocks) {
            CHECK(b.multiplicity >= 1);
            Int s = 1;
            for (Int i = 0; i < b.multiplicity; ++i) s *= b.endo_order;
            CHECK(s == b.simple_size);
            Int bs = 1;
            for (Int i = 0; i < b.multiplicity; ++i) bs *= b.simple_size;
            CHECK(bs == b.block_size);
            prod *= b.block_size;
        }
        CHECK(prod * j.size() == r.size());
    }
}

TEST_CASE("idempotent lifting") {
    FiniteRing z4 = zmod(4);
    RadicalFiltration f4 = radical_filtration(z4);
    CHECK(idempotent_lift(z4, {1}, f4) == Elem{1});
    // 3 is idempotent mod J = {0,2}; its lift is the exact idempotent 1
    CHECK(idempotent_lift(z4, {3}, f4) == Elem{1});
    // 2 is idempotent mod J and lifts to 0
    CHECK(idempotent_lift(z4, {2}, f4) == Elem{0});

    FiniteRing z12 = zmod(12);
    RadicalFiltration f12 = radical_filtration(z12);
    CHECK(idempotent_lift(z12, {4}, f12) == Elem{4});

    FiniteRing t = t2f2();
    RadicalFiltration ft = radical_filtration(t);
    Elem x = t.add(e11(), e12());
    CHECK(t.mul(x, x) == x);
    CHECK(idempotent_lift(t, x, ft) == x);

    FiniteRing z6 = zmod(6);
    RadicalFiltration f6 = radical_filtration(z6);
    CHECK_THROWS_AS(idempotent_lift(z6, {2}, f6), NotIdempotentModJ);

    // a case that needs an actual iteration: Z16, x = 9; x^2 - x = 72 = 8 in J
    FiniteRing z16 = zmod(16);
    RadicalFiltration f16 = radical_filtration(z16);
    Elem lifted = idempotent_lift(z16, {9}, f16);
    CHECK(z16.mul(lifted, lifted) == lifted);
    CHECK(f16.power(1).contains(z16.sub(lifted, {9})));
}

TEST_CASE("primitive orthogonal decomposition") {
    auto decompose = [](const FiniteRing& r) {
        Subgroup j = jacobson_radical(r);
        WedderburnData w = wedderburn_data(r, quotient_ring(r, j));
        return primitive_orthogonal_decomposition(r, j, w);
    };

    LocalIdempotentSet d6 = decompose(zmod(6));
    std::vector<Elem> e6 = d6.idempotents;
    std::sort(e6.begin(), e6.end());
    CHECK(e6 == std::vector<Elem>{{3}, {4}});

    LocalIdempotentSet dm = decompose(m2f2());
    std::vector<Elem> em = dm.idempotents;
    std::sort(em.begin(), em.end());
    CHECK(em == std::vector<Elem>{{0, 0, 0, 1}, {1, 0, 0, 0}});  // E22, E11
    CHECK(dm.block_of[0] == dm.block_of[1]);

    LocalIdempotentSet d4 = decompose(zmod(4));
    CHECK(d4.idempotents == std::vector<Elem>{{1}});

    // locality double-check: e R e has exactly two idempotents
    FiniteRing m = m2f2();
    for (const Elem& e : dm.idempotents) {
        std::vector<Elem> gens;
        for (int i = 0; i < m.dim(); ++i) gens.push_back(m.mul(m.mul(e, m.basis(i)), e));
        Subgroup corner = Subgroup::span(m, gens);
        int idems = 0;
        corner.for_each([&](const Elem& y) {
            if (m.mul(y, y) == y) ++idems;
        });
        CHECK(idems == 2);
    }
}

TEST_CASE("projective covers") {
    FiniteRing z4 = zmod(4);
    CHECK(projective_cover(z4, {1}).size() == 4);

    FiniteRing t = t2f2();
    Subgroup p1 = projective_cover(t, e11());
    CHECK(p1.size() == 4);
    CHECK(p1.contains(e11()));
    CHECK(p1.contains(e12()));
    Subgroup p2 = projective_cover(t, e22());
    CHECK(p2.size() == 2);
    CHECK(p2.contains(e22()));
    // right closure
    for (const Elem& g : p1.generators())
        for (int i = 0; i < t.dim(); ++i) CHECK(p1.contains(t.mul(g, t.basis(i))));
}
