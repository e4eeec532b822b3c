#include <doctest.h>

#include <algorithm>

#include "ringforge/blocks.hpp"
#include "ringforge/errors.hpp"
#include "test_helpers.hpp"

using namespace ringforge;
using namespace rf_test;

TEST_CASE("block decomposition of the worked examples") {
    BlockContext c6 = analyze_blocks(zmod(6));
    REQUIRE(c6.blocks.idempotents.size() == 2);
    std::vector<Elem> idems = c6.blocks.idempotents;
    std::sort(idems.begin(), idems.end());
    CHECK(idems == std::vector<Elem>{{3}, {4}});

    BlockContext cp = analyze_blocks(direct_product(zmod(4), m2f2()));
    REQUIRE(cp.blocks.block_sizes.size() == 2);
    std::vector<Int> sizes = cp.blocks.block_sizes;
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<Int>{4, 16});

    BlockContext ct = analyze_blocks(t2f2());
    CHECK(ct.blocks.idempotents.size() == 1);
}

TEST_CASE("block rings carry the block identity and multiply up to |R|") {
    BlockContext ctx = analyze_blocks(direct_product(zmod(4), t2f2()));
    REQUIRE(ctx.blocks.idempotents.size() == 2);
    Int prod = 1;
    for (size_t l = 0; l < ctx.blocks.idempotents.size(); ++l) {
        FiniteRing b = block_ring(ctx.data, ctx.blocks, static_cast<int>(l));
        CHECK(b.size() == ctx.blocks.block_sizes[l]);
        prod *= b.size();
    }
    CHECK(prod == ctx.data.ring.size());
}

TEST_CASE("block count is additive over direct products") {
    std::vector<FiniteRing> rings{zmod(4), zmod(6), t2f2(), m2f2()};
    auto block_count = [](const FiniteRing& r) {
        return analyze_blocks(r).blocks.idempotents.size();
    };
    for (const auto& a : rings)
        for (const auto& b : rings) {
            size_t expect = block_count(a) + block_count(b);
            BlockContext ctx = analyze_blocks(direct_product(a, b));
            CHECK(ctx.blocks.idempotents.size() == expect);
        }
}

TEST_CASE("class-to-block assignment agrees with the annihilator route") {
    for (const FiniteRing& r : {zmod(12), t2f2(), direct_product(zmod(4), t2f2()),
                                direct_product(zmod(6), m2f2())}) {
        BlockContext ctx = analyze_blocks(r);
        const int n = static_cast<int>(ctx.data.classes.size());
        for (int j = 0; j < n; ++j)
            for (size_t l = 0; l < ctx.blocks.idempotents.size(); ++l) {
                // S_j is an epimorphic image of c_l R iff c_l does not
                // annihilate S_j.
                bool epi = !ctx.data.classes[j].annihilator.contains(ctx.blocks.idempotents[l]);
                CHECK(epi == (ctx.blocks.block_of_class[j] == static_cast<int>(l)));
            }
    }
}

TEST_CASE("ext components") {
    BlockContext ct = analyze_blocks(t2f2());
    CHECK(ext_components(ct.right_quiver) == Partition{{0, 1}});

    BlockContext c6 = analyze_blocks(zmod(6));
    CHECK(ext_components(c6.right_quiver) == Partition{{0}, {1}});

    BlockContext cp = analyze_blocks(direct_product(zmod(4), t2f2()));
    Partition comps = ext_components(cp.right_quiver);
    REQUIRE(comps.size() == 2);
    // one singleton (the Z4 class) and one pair (the T2F2 classes)
    CHECK((comps[0].size() == 1) != (comps[1].size() == 1));
}

TEST_CASE("theorem main holds on the worked examples") {
    CHECK(verify_theorem_main(analyze_blocks(zmod(6))).pass);
    CHECK(verify_theorem_main(analyze_blocks(t2f2())).pass);
    CHECK(verify_theorem_main(analyze_blocks(direct_product(zmod(4), t2f2()))).pass);
}

TEST_CASE("lemma equivalences, including the quotient by J^2") {
    CHECK(verify_lemma_equivalences(analyze_blocks(t2f2())).pass);
    CHECK(verify_lemma_equivalences(analyze_blocks(zmod(8))).pass);
    CHECK(verify_lemma_equivalences(analyze_blocks(zmod(6))).pass);
    CHECK(verify_lemma_equivalences(analyze_blocks(matrix_ring(zmod(4), 2))).pass);
}

TEST_CASE("lemma equivalences exercise the class correspondence on multi-class rings with J^2 != 0") {
    for (const FiniteRing& r : {upper_triangular(zmod(2), 3),
                                direct_product(zmod(8), zmod(4)),
                                direct_product(zmod(8), t2f2())}) {
        BlockContext ctx = analyze_blocks(r);
        REQUIRE(ctx.data.classes.size() >= 2);
        REQUIRE(ctx.data.filtration.power(2).size() > 1);
        CHECK(verify_lemma_equivalences(ctx).pass);
        CHECK(verify_theorem_main(ctx).pass);
    }
}

TEST_CASE("characteristic uniformity and coprime contrapositive") {
    CHECK(verify_char_uniformity(analyze_blocks(t2f2())).pass);
    CHECK(verify_char_uniformity(analyze_blocks(zmod(6))).pass);
    CHECK(verify_char_uniformity(analyze_blocks(group_algebra(2, cyclic_group(2)))).pass);
    CHECK(verify_coprime_char(analyze_blocks(zmod(6))).pass);
    CHECK(verify_coprime_char(analyze_blocks(zmod(12))).pass);
}

TEST_CASE("cardinality-basic equivalence") {
    CHECK(verify_cardinality_basic(analyze_blocks(m2f2())).pass);
    CHECK(verify_cardinality_basic(analyze_blocks(t2f2())).pass);
    for (int n = 2; n <= 64; ++n)
        CHECK(verify_cardinality_basic(analyze_blocks(zmod(n))).pass);
}

TEST_CASE("annihilator lemma on rings with arrows") {
    BlockContext ct = analyze_blocks(t2f2());
    CHECK(verify_annihilator_lemma(ct).pass);
    CHECK(verify_annihilator_lemma(analyze_blocks(zmod(6))).pass);

    QuiverSpec cyc;
    cyc.vertex_count = 2;
    cyc.arrows = {{0, 1}, {1, 0}};
    cyc.field_order = 2;
    CHECK(verify_annihilator_lemma(analyze_blocks(path_algebra_mod(cyc))).pass);
}

TEST_CASE("a failing verdict would carry a witness") {
    // Verdicts built by hand: the formatting contract for counterexamples.
    Verdict v{false, "arrow 1->2 joins characteristics 2 and 3"};
    CHECK(!v.pass);
    CHECK(!v.witness.empty());
}

TEST_CASE("path algebra A2 and T2(F2) produce identical analysis invariants") {
    QuiverSpec a2;
    a2.vertex_count = 2;
    a2.arrows = {{0, 1}};
    a2.field_order = 2;
    BlockContext ca = analyze_blocks(path_algebra_mod(a2));
    BlockContext ct = analyze_blocks(t2f2());

    CHECK(ca.data.ring.size() == ct.data.ring.size());
    CHECK(ca.blocks.idempotents.size() == ct.blocks.idempotents.size());
    auto sorted_rows = [](const BlockContext& c) {
        std::vector<std::vector<Int>> rows;
        for (const auto& cls : c.data.classes)
            rows.push_back({cls.simple_size, cls.multiplicity, cls.endo_order,
                            cls.characteristic});
        std::sort(rows.begin(), rows.end());
        return rows;
    };
    CHECK(sorted_rows(ca) == sorted_rows(ct));
    auto arrow_multiset = [](const BlockContext& c) {
        std::vector<Int> out;
        for (const auto& row : c.right_quiver.multiplicity)
            for (Int v : row)
                if (v > 0) out.push_back(v);
        std::sort(out.begin(), out.end());
        return out;
    };
    CHECK(arrow_multiset(ca) == arrow_multiset(ct));
}
