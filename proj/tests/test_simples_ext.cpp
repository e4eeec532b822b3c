#include <doctest.h>

#include <algorithm>

#include "ringforge/errors.hpp"
#include "ringforge/simples.hpp"
#include "test_helpers.hpp"

using namespace ringforge;
using namespace rf_test;

namespace {

// The class whose annihilator has the given index (unique in these tests).
int class_with_block_size(const SimplesData& d, Int bs) {
    for (const auto& c : d.classes)
        if (c.block_size == bs) return c.id;
    REQUIRE(false);
    return -1;
}

// T2(F2) classes: the E11 class has |P| = 4, the E22 class has |P| = 2.
int t2_class_of(const SimplesData& d, const Elem& idem) {
    const FiniteRing& r = d.ring;
    for (const auto& c : d.classes)
        if (!d.radical().contains(r.mul(idem, c.f_lift))) return c.id;
    REQUIRE(false);
    return -1;
}

}  // namespace

TEST_CASE("simple classes of the worked examples") {
    SimplesData d6 = simple_classes(zmod(6));
    REQUIRE(d6.classes.size() == 2);
    int c2 = class_with_block_size(d6, 2);
    int c3 = class_with_block_size(d6, 3);
    CHECK(d6.classes[c2].simple_size == 2);
    CHECK(d6.classes[c2].characteristic == 2);
    CHECK(d6.classes[c3].simple_size == 3);
    CHECK(d6.classes[c3].characteristic == 3);
    // annihilator of the size-2 class is {0,2,4}
    CHECK(d6.classes[c2].annihilator.size() == 3);
    CHECK(d6.classes[c2].annihilator.contains({2}));
    CHECK(d6.classes[c3].annihilator.size() == 2);
    CHECK(d6.classes[c3].annihilator.contains({3}));
    // action scan: a annihilates S iff f_lift * a falls into J
    FiniteRing z6 = zmod(6);
    for (const Elem& a : all_elements(z6)) {
        bool kills = d6.radical().contains(z6.mul(d6.classes[c2].f_lift, a));
        CHECK(kills == d6.classes[c2].annihilator.contains(a));
    }

    SimplesData d4 = simple_classes(zmod(4));
    REQUIRE(d4.classes.size() == 1);
    CHECK(d4.classes[0].simple_size == 2);
    CHECK(d4.classes[0].multiplicity == 1);
    CHECK(d4.classes[0].annihilator.size() == 2);

    SimplesData dm = simple_classes(m2f2());
    REQUIRE(dm.classes.size() == 1);
    CHECK(dm.classes[0].simple_size == 4);
    CHECK(dm.classes[0].multiplicity == 2);
    CHECK(dm.classes[0].annihilator.size() == 1);
    // the annihilator is the kernel of the action on the row module eR
    FiniteRing m = m2f2();
    Subgroup row = projective_cover(m, dm.classes[0].e);
    for (const Elem& a : all_elements(m)) {
        bool kills = true;
        row.for_each([&](const Elem& x) {
            if (!m.is_zero(m.mul(x, a))) kills = false;
        });
        CHECK(kills == dm.classes[0].annihilator.contains(a));
    }
}

TEST_CASE("ext nonvanishing on the worked examples") {
    SimplesData d4 = simple_classes(zmod(4));
    CHECK(ext_nonzero(d4, 0, 0));  // Z4 is a non-split self-extension of F2

    SimplesData d6 = simple_classes(zmod(6));
    CHECK(!ext_nonzero(d6, 0, 0));
    CHECK(!ext_nonzero(d6, 0, 1));
    CHECK(!ext_nonzero(d6, 1, 0));
    CHECK(!ext_nonzero(d6, 1, 1));

    SimplesData dt = simple_classes(t2f2());
    int c1 = t2_class_of(dt, e11());
    int c2 = t2_class_of(dt, e22());
    CHECK(ext_nonzero(dt, c1, c2));
    CHECK(!ext_nonzero(dt, c2, c1));
    CHECK(!ext_nonzero(dt, c1, c1));
    CHECK(!ext_nonzero(dt, c2, c2));
}

TEST_CASE("ext multiplicities") {
    QuiverSpec kron;
    kron.vertex_count = 2;
    kron.arrows = {{0, 1}, {0, 1}};
    kron.field_order = 2;
    SimplesData dk = simple_classes(path_algebra_mod(kron));
    REQUIRE(dk.classes.size() == 2);
    ExtQuiver q = ext_quiver(dk, QuiverSide::right);
    // one arrow of multiplicity two, nothing else
    Int total = 0, max_mult = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            total += q.multiplicity[i][j];
            max_mult = std::max(max_mult, q.multiplicity[i][j]);
        }
    CHECK(total == 2);
    CHECK(max_mult == 2);

    SimplesData dt = simple_classes(t2f2());
    int c1 = t2_class_of(dt, e11());
    int c2 = t2_class_of(dt, e22());
    CHECK(ext_multiplicity(dt, c1, c2) == 1);

    SimplesData dm = simple_classes(m2f2());
    CHECK(ext_multiplicity(dm, 0, 0) == 0);  // semisimple
}

TEST_CASE("right and left quivers of T2(F2) flip direction") {
    SimplesData dt = simple_classes(t2f2());
    int c1 = t2_class_of(dt, e11());
    int c2 = t2_class_of(dt, e22());
    ExtQuiver right = ext_quiver(dt, QuiverSide::right);
    ExtQuiver left = ext_quiver(dt, QuiverSide::left);
    CHECK(right.multiplicity[c1][c2] == 1);
    CHECK(right.multiplicity[c2][c1] == 0);
    CHECK(left.multiplicity[c2][c1] == 1);
    CHECK(left.multiplicity[c1][c2] == 0);
}

TEST_CASE("cyclic two-vertex quiver has arrows both ways") {
    QuiverSpec cyc;
    cyc.vertex_count = 2;
    cyc.arrows = {{0, 1}, {1, 0}};
    cyc.field_order = 2;
    SimplesData d = simple_classes(path_algebra_mod(cyc));
    ExtQuiver q = ext_quiver(d, QuiverSide::right);
    CHECK(q.multiplicity[0][1] == 1);
    CHECK(q.multiplicity[1][0] == 1);
    CHECK(q.multiplicity[0][0] == 0);
    CHECK(q.multiplicity[1][1] == 0);
}

TEST_CASE("ext results are independent of the lift and the representative") {
    for (const FiniteRing& r : {zmod(4), zmod(8), t2f2(), m2f2(),
                                group_algebra(2, cyclic_group(4))}) {
        SimplesData d = simple_classes(r);
        const int n = static_cast<int>(d.classes.size());
        std::vector<Elem> j_elems = d.radical().elements();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                bool base = ext_nonzero(d, i, j);
                Int base_mult = ext_multiplicity(d, i, j);
                // perturb the lift by every radical element
                for (const Elem& z : j_elems) {
                    Elem perturbed = r.add(d.classes[j].f_lift, z);
                    CHECK(ext_nonzero(d, d.classes[i].e, perturbed) == base);
                    CHECK(ext_multiplicity(d, d.classes[i].e, perturbed,
                                           d.classes[j].simple_size) == base_mult);
                }
                // every representative idempotent of class i agrees
                for (size_t t = 0; t < d.idempotents.idempotents.size(); ++t)
                    if (d.idempotents.block_of[t] == i)
                        CHECK(ext_nonzero(d, d.idempotents.idempotents[t],
                                          d.classes[j].f_lift) == base);
            }
    }
}

TEST_CASE("composition tables of the worked examples") {
    SimplesData d4 = simple_classes(zmod(4));
    CompositionTable t4 = composition_table(d4);
    REQUIRE(t4.layers_per_class.size() == 1);
    CHECK(t4.layers_per_class[0] ==
          std::vector<std::vector<Int>>{{1}, {1}});  // uniserial of length 2

    SimplesData dt = simple_classes(t2f2());
    CompositionTable tt = composition_table(dt);
    int c1 = t2_class_of(dt, e11());
    int c2 = t2_class_of(dt, e22());
    // P(S1) has layers [S1], [S2]; P(S2) just [S2]
    REQUIRE(tt.layers_per_class[c1].size() == 2);
    CHECK(tt.layers_per_class[c1][0][c1] == 1);
    CHECK(tt.layers_per_class[c1][0][c2] == 0);
    CHECK(tt.layers_per_class[c1][1][c2] == 1);
    REQUIRE(tt.layers_per_class[c2].size() == 1);
    CHECK(tt.layers_per_class[c2][0][c2] == 1);

    SimplesData dm = simple_classes(m2f2());
    CompositionTable tm = composition_table(dm);
    CHECK(tm.layers_per_class[0] == std::vector<std::vector<Int>>{{1}});
}

TEST_CASE("composition layers account for the full projective") {
    for (const FiniteRing& r : {zmod(8), zmod(12), t2f2(), m2f2(),
                                matrix_ring(zmod(4), 2), group_algebra(2, cyclic_group(4))}) {
        SimplesData d = simple_classes(r);
        CompositionTable table = composition_table(d);
        for (size_t i = 0; i < d.classes.size(); ++i) {
            Int expected = projective_cover(r, d.classes[i].e).size();
            Int got = 1;
            for (const auto& layer : table.layers_per_class[i])
                for (size_t j = 0; j < layer.size(); ++j)
                    for (Int c = 0; c < layer[j]; ++c) got *= d.classes[j].simple_size;
            CHECK(got == expected);
            // top layer is the class itself, multiplicity 1
            REQUIRE(!table.layers_per_class[i].empty());
            for (size_t j = 0; j < d.classes.size(); ++j)
                CHECK(table.layers_per_class[i][0][j] == (static_cast<int>(j) == d.classes[i].id ? 1 : 0));
        }
    }
}

TEST_CASE("J^2 = 0 rings have at most two composition layers") {
    QuiverSpec kron;
    kron.vertex_count = 2;
    kron.arrows = {{0, 1}, {0, 1}};
    kron.field_order = 2;
    for (const FiniteRing& r : {t2f2(), path_algebra_mod(kron),
                                group_algebra(2, cyclic_group(2))}) {
        SimplesData d = simple_classes(r);
        REQUIRE(product(d.radical(), d.radical()).size() == 1);
        CompositionTable table = composition_table(d);
        for (const auto& layers : table.layers_per_class)
            CHECK(layers.size() <= 2);
    }
}

TEST_CASE("linkage graph joins classes sharing a composition factor") {
    SimplesData dt = simple_classes(t2f2());
    LinkageGraph g = linkage_graph(dt, composition_table(dt));
    CHECK(g.adjacent[0][1]);
    CHECK(g.adjacent[1][0]);

    SimplesData d6 = simple_classes(zmod(6));
    LinkageGraph g6 = linkage_graph(d6, composition_table(d6));
    CHECK(!g6.adjacent[0][1]);

    SimplesData dp = simple_classes(direct_product(zmod(4), t2f2()));
    REQUIRE(dp.classes.size() == 3);
    LinkageGraph gp = linkage_graph(dp, composition_table(dp));
    int linked_pairs = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            if (gp.adjacent[a][b]) ++linked_pairs;
    CHECK(linked_pairs == 1);  // only the two T2(F2) classes touch
}

TEST_CASE("ext arrows between distinct classes have equal characteristic and strict annihilator products") {
    for (const FiniteRing& r : {zmod(12), t2f2(), upper_triangular(zmod(3), 2),
                                direct_product(zmod(4), t2f2())}) {
        SimplesData d = simple_classes(r);
        const int n = static_cast<int>(d.classes.size());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j || !ext_nonzero(d, i, j)) continue;
                CHECK(d.classes[i].characteristic == d.classes[j].characteristic);
                Subgroup prod = product(d.classes[i].annihilator, d.classes[j].annihilator);
                Subgroup inter = intersect(d.classes[i].annihilator, d.classes[j].annihilator);
                CHECK(prod.subset_of(inter));
                CHECK(prod.size() < inter.size());
            }
    }
}

TEST_CASE("annihilator product strictness, the T2(F2) witness in coordinates") {
    SimplesData dt = simple_classes(t2f2());
    int c1 = t2_class_of(dt, e11());
    int c2 = t2_class_of(dt, e22());
    const Subgroup& i1 = dt.classes[c1].annihilator;
    const Subgroup& i2 = dt.classes[c2].annihilator;
    // I1 = span(E12, E22), I2 = span(E11, E12)
    CHECK(i1.size() == 4);
    CHECK(i1.contains(e12()));
    CHECK(i1.contains(e22()));
    CHECK(i2.size() == 4);
    CHECK(i2.contains(e11()));
    CHECK(i2.contains(e12()));
    CHECK(intersect(i1, i2).size() == 2);
    CHECK(product(i1, i2).size() == 1);
}
