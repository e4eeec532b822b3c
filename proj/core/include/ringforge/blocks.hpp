#pragma once

#include <string>
#include <vector>

#include "ringforge/simples.hpp"

namespace ringforge {

/**
 * Block decomposition of R from its centrally primitive idempotents, with the
 * assignment of each simple class to the unique block not annihilating it.
 */
struct BlockDecomposition {
    std::vector<Elem> idempotents;    // c_1..c_m, lexicographically sorted
    std::vector<Int> block_sizes;     // |c_l R|
    std::vector<int> block_of_class;  // class id -> block index
};

BlockDecomposition block_decomposition(const SimplesData& data, const Caps& caps = {});

// The ring c_l R with identity c_l.
FiniteRing block_ring(const SimplesData& data, const BlockDecomposition& blocks, int l);

// Partition of class ids into connected components of the symmetrized arrow
// relation, in canonical form (sorted members, sorted by least member).
using Partition = std::vector<std::vector<int>>;
Partition ext_components(const ExtQuiver& quiver);
Partition partition_from_assignment(const std::vector<int>& block_of, int count);
Partition linkage_components(const LinkageGraph& graph);

struct Verdict {
    bool pass = true;
    std::string witness;  // empty when passing
};

/**
 * Theorem checks run on one ring. Every verdict carries a concrete witness on
 * failure; an all-pass TheoremReport is the expected outcome on any input.
 */
struct TheoremReport {
    Verdict theorem_main;        // block partition == Ext components, right and left
    Verdict lemma_equivalences;  // linkage == Ext == blocks, stable under R/J^2
    Verdict char_uniformity;     // one characteristic per block
    Verdict cardinality_basic;   // (all s = q) <=> (all mu = 1), per block
    Verdict annihilator_lemma;   // |I J| < |I cap J| for arrows between distinct classes
    Verdict coprime_char;        // arrows join equal characteristics
};

struct BlockContext {
    SimplesData data;
    SimplesData op_data;
    BlockDecomposition blocks;
    ExtQuiver right_quiver;
    ExtQuiver left_quiver;
    CompositionTable composition;
    LinkageGraph linkage;
};

BlockContext analyze_blocks(const FiniteRing& r, const Caps& caps = {});

Verdict verify_theorem_main(const BlockContext& ctx);
Verdict verify_lemma_equivalences(const BlockContext& ctx, const Caps& caps = {});
Verdict verify_char_uniformity(const BlockContext& ctx);
Verdict verify_cardinality_basic(const BlockContext& ctx);
Verdict verify_annihilator_lemma(const BlockContext& ctx);
Verdict verify_coprime_char(const BlockContext& ctx);

TheoremReport run_theorem_checks(const BlockContext& ctx, const Caps& caps = {});

std::string partition_to_string(const Partition& p);

}  // namespace ringforge
