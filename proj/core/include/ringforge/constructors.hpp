#pragma once

#include <utility>
#include <vector>

#include "ringforge/ring.hpp"

namespace ringforge {

// Z/nZ as a one-dimensional ring.
FiniteRing zmod(Int n);

// n x n matrices over `base`, basis = matrix units tensor base basis.
FiniteRing matrix_ring(const FiniteRing& base, int n);

// Upper-triangular n x n matrices over `base`.
FiniteRing upper_triangular(const FiniteRing& base, int n);

/**
 * A finite group given by its Cayley table. Validated on use: Latin square,
 * associativity, identity row/column.
 */
struct GroupTable {
    int order = 0;
    std::vector<std::vector<int>> table;  // table[g][h] = g*h
    int identity = 0;
};

GroupTable cyclic_group(int n);

// Group algebra F_q[G]; q must be a prime power (fields come from a fixed
// built-in irreducible-polynomial table, so structure constants are
// reproducible bit for bit). Throws InvalidGroupTable on a bad table.
FiniteRing group_algebra(Int q, const GroupTable& g);

/**
 * A quiver with relations over F_q. Arrows compose left to right: the path
 * "p then q" is written pq, matching right-module conventions. Relations are
 * either rad_square_zero (every length-2 path) or an explicit list of linear
 * combinations of parallel equal-length paths of length >= 2.
 */
struct QuiverSpec {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> arrows;  // 0-based (source, target); parallels allowed

    struct RelationTerm {
        Int coeff;                // interpreted in F_q
        std::vector<int> path;    // arrow indices, composed left to right
    };
    bool rad_square_zero = true;
    std::vector<std::vector<RelationTerm>> relations;  // used when !rad_square_zero

    Int field_order = 2;
};

// Quotient of the path algebra F_q Q by the relation ideal. Basis = standard
// path monomials surviving reduction. Throws NotAdmissible when a relation
// has a path of length < 2, NotFiniteDimensional when paths survive past the
// cutoff 2 * (vertices + arrows).
FiniteRing path_algebra_mod(const QuiverSpec& spec);

// Componentwise product ring on concatenated coordinates.
FiniteRing direct_product(const FiniteRing& a, const FiniteRing& b);

/**
 * Arithmetic in GF(p^e) = F_p[x]/(poly) with elements packed as base-p digit
 * strings in [0, q). poly comes from the built-in table keyed by (p, e).
 */
class GaloisField {
public:
    explicit GaloisField(Int q);  // throws ParseError if q is not a supported prime power
    Int q() const { return q_; }
    Int p() const { return p_; }
    int degree() const { return e_; }
    Int add(Int a, Int b) const;
    Int mul(Int a, Int b) const;
    Int power_of_x(int s) const;  // the element x^s, s < degree
    std::vector<Int> digits(Int a) const;

private:
    Int q_, p_;
    int e_;
    std::vector<Int> poly_;  // monic, ascending, length e+1
};

bool is_prime(Int n);

}  // namespace ringforge
