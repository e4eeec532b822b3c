#pragma once

#include <vector>

#include "ringforge/caps.hpp"
#include "ringforge/ring.hpp"
#include "ringforge/subgroup.hpp"

namespace ringforge {

// The Jacobson radical { x : 1 - r*x is a unit for every r }, computed by a
// full scan over x with the inner quantifier factored exactly through the
// left ideal Rx. Throws TooLarge above caps.structure_scan.
Subgroup jacobson_radical(const FiniteRing& r, const Caps& caps = {});

// J^0 = R > J > J^2 > ... > J^n = 0; strictly decreasing, n = nilpotency index.
struct RadicalFiltration {
    std::vector<Subgroup> powers;
    int nilpotency_index = 0;
    const Subgroup& power(int t) const;  // clamps to the zero subgroup
};
RadicalFiltration radical_filtration(const FiniteRing& r, const Subgroup& radical);
RadicalFiltration radical_filtration(const FiniteRing& r, const Caps& caps = {});

// { z : z b_i = b_i z for all i } via an integer kernel computation.
Subgroup center(const FiniteRing& r);

struct FlaggedIdempotent {
    Elem value;
    bool primitive;  // not a sum of two nonzero orthogonal central idempotents
};

// All x in `within` with x^2 = x, lexicographically sorted, with primitivity
// decided by a pairwise scan. `within` must sit inside the center.
std::vector<FlaggedIdempotent> central_idempotents(const FiniteRing& r, const Subgroup& within,
                                                   const Caps& caps = {});

// Quotient by the radical; the result is verified to have zero radical.
QuotientMap semisimple_quotient(const FiniteRing& r, const Caps& caps = {});

/**
 * Per-block invariants of R/J(R) = prod M_mu(F_q): block size, simple module
 * size s = q^mu, multiplicity mu, endomorphism field order q, characteristic
 * p, the centrally primitive idempotent f of the quotient and its recorded
 * (not necessarily idempotent) lift into R.
 */
struct WedderburnBlock {
    Elem f;           // in quotient coordinates
    Elem f_lift;      // normal-form section in R
    Int block_size = 0;
    Int simple_size = 0;
    Int multiplicity = 0;
    Int endo_order = 0;
    Int characteristic = 0;
};

struct WedderburnData {
    std::vector<WedderburnBlock> blocks;  // sorted by f, lexicographically
};

WedderburnData wedderburn_data(const FiniteRing& r, const QuotientMap& to_semisimple,
                               const Caps& caps = {});

// Newton-style lift e <- 3e^2 - 2e^3 of an idempotent-mod-J element to an
// exact idempotent congruent to it. Throws NotIdempotentModJ.
Elem idempotent_lift(const FiniteRing& r, const Elem& x, const RadicalFiltration& filtration);

struct LocalIdempotentSet {
    std::vector<Elem> idempotents;  // pairwise orthogonal, sum to 1, each local
    std::vector<int> block_of;      // Wedderburn block index per idempotent
};

// Peels lexicographically least local idempotents off shrinking corner rings
// and classifies each against the Wedderburn blocks. Cross-checks the class
// counts against the multiplicities.
LocalIdempotentSet primitive_orthogonal_decomposition(const FiniteRing& r,
                                                      const Subgroup& radical,
                                                      const WedderburnData& wd,
                                                      const Caps& caps = {});

// The right ideal eR for a local idempotent e: the projective cover of the
// simple top eR/eJ.
Subgroup projective_cover(const FiniteRing& r, const Elem& e);

}  // namespace ringforge
