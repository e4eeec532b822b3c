#pragma once

#include <vector>

#include "ringforge/structure.hpp"

namespace ringforge {

/**
 * One isomorphism class of simple right modules: the Wedderburn invariants of
 * its block in R/J, a representative local idempotent e in R, the recorded
 * lift f_lift of the block idempotent, and the annihilator ideal
 * { a : f_lift * a in J } (a maximal two-sided ideal).
 */
struct SimpleClass {
    int id = 0;
    Elem f;       // centrally primitive idempotent of R/J (quotient coords)
    Elem f_lift;  // section into R
    Elem e;       // representative local idempotent
    Int block_size = 0;
    Int simple_size = 0;
    Int multiplicity = 0;
    Int endo_order = 0;
    Int characteristic = 0;
    Subgroup annihilator;
};

/**
 * Everything the Ext computations need about one ring, computed once:
 * radical filtration, semisimple quotient, Wedderburn data, the full local
 * idempotent decomposition and the simple classes.
 */
struct SimplesData {
    FiniteRing ring{nullptr};
    RadicalFiltration filtration;
    QuotientMap to_semisimple;
    WedderburnData wedderburn;
    LocalIdempotentSet idempotents;
    std::vector<SimpleClass> classes;

    const Subgroup& radical() const { return filtration.power(1); }
};

SimplesData simple_classes(const FiniteRing& r, const Caps& caps = {});

// Ext^1(S_i, S_j) != 0 iff e_i J f_j reaches outside e_i J^2, with a chosen
// representative e_i and lift f_j; the result is lift-independent.
bool ext_nonzero(const SimplesData& data, int i, int j);
bool ext_nonzero(const SimplesData& data, const Elem& e_i, const Elem& f_lift_j);

// Arrow multiplicity: log_{s_j} |(e_i J f_j + e_i J^2) / e_i J^2|.
Int ext_multiplicity(const SimplesData& data, int i, int j);
Int ext_multiplicity(const SimplesData& data, const Elem& e_i, const Elem& f_lift_j, Int s_j);

enum class QuiverSide { right, left };

struct ExtQuiver {
    QuiverSide side = QuiverSide::right;
    int vertex_count = 0;
    std::vector<std::vector<Int>> multiplicity;  // [i][j] > 0 means an arrow i -> j
    bool has_arrow(int i, int j) const { return multiplicity[i][j] > 0; }
};

// side == left is computed on the opposite ring with classes matched through
// the shared primitive central idempotents of R/J.
ExtQuiver ext_quiver(const SimplesData& data, QuiverSide side, const Caps& caps = {});

// Left quiver from an already-computed analysis of the opposite ring.
ExtQuiver ext_quiver_left(const SimplesData& data, const SimplesData& op_data);

// Maps class ids of `other` (an analysis of the opposite ring) onto class ids
// of `data` by matching the block idempotents. Throws InvariantViolation if
// the match is not a bijection.
std::vector<int> match_classes_via_blocks(const SimplesData& data, const SimplesData& other);

/**
 * Radical-layer composition multiplicities of each projective cover:
 * layer[t][j] = multiplicity of S_j in e_i J^t / e_i J^{t+1}. Trailing empty
 * layers are trimmed.
 */
struct CompositionTable {
    std::vector<std::vector<std::vector<Int>>> layers_per_class;  // [class][layer][j]
};

CompositionTable composition_table(const SimplesData& data);

// Undirected linkage: {i, i'} joined when some class occurs in both
// composition tables.
struct LinkageGraph {
    int vertex_count = 0;
    std::vector<std::vector<bool>> adjacent;
};

LinkageGraph linkage_graph(const SimplesData& data, const CompositionTable& table);

}  // namespace ringforge
