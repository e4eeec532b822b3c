#pragma once

#include <vector>

#include "ringforge/simples.hpp"

namespace ringforge::oracle {

// Full element scan for x^2 = x commuting with every basis element.
// Independent of the center/kernel machinery on the main path.
std::vector<Elem> brute_central_idempotents(const FiniteRing& r, const Caps& caps = {});

// Intersection of all maximal right ideals, enumerated by upward closure over
// element-index sets (no subgroup normal forms involved until the final
// conversion). Throws TooLarge beyond caps.oracle_module.
Subgroup brute_radical(const FiniteRing& r, const Caps& caps = {});

// Sum of all minimal right submodules of m, found by right-closing every
// nonzero element and keeping the inclusion-minimal results.
Subgroup brute_socle(const FiniteRing& r, const Subgroup& m, const Caps& caps = {});

/**
 * Direct search for a non-split extension 0 -> S_j -> K -> S_i -> 0.
 *
 * S_i and S_j are realized as explicit small modules eR/eJ. Candidate
 * extensions K live on the set S_j x S_i with the group structure twisted by
 * a Bockstein matrix (so additively non-split K, like Z4 over Z4, are
 * covered) and the action twisted by per-basis maps phi constrained by the
 * module axioms; every axiom is checked exhaustively and a complement to
 * S_j is searched over all lift tuples. Returns true iff some valid K admits
 * no complement.
 */
bool brute_ext_nonsplit(const SimplesData& data, int i, int j, const Caps& caps = {});

}  // namespace ringforge::oracle
