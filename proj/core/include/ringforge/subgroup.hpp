#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ringforge/linalg.hpp"
#include "ringforge/ring.hpp"

namespace ringforge {

/**
 * An additive subgroup of a ring's underlying abelian group, stored as the
 * Hermite normal form of the integer lattice spanned by its generators
 * together with the coordinate-order rows d_i*e_i. The canonical matrix gives
 * O(k^2) membership tests and exact equality; it doubles as an ideal carrier
 * when the generators happen to be multiplication-closed.
 */
class Subgroup {
public:
    static Subgroup span(const FiniteRing& r, const std::vector<Elem>& gens);
    static Subgroup zero(const FiniteRing& r);
    static Subgroup whole(const FiniteRing& r);

    const FiniteRing& ring() const { return ring_; }
    const linalg::Mat& canonical() const { return hnf_; }
    Int size() const { return size_; }
    bool contains(const Elem& x) const;
    bool subset_of(const Subgroup& other) const;
    bool operator==(const Subgroup& other) const;
    bool operator!=(const Subgroup& other) const { return !(*this == other); }

    // Canonical generators: the HNF rows that carry a nontrivial cyclic
    // factor, reduced into the ambient group. Spans the subgroup.
    std::vector<Elem> generators() const;

    // Visits every element exactly once (transversal of the HNF rows).
    void for_each(const std::function<void(const Elem&)>& fn) const;
    std::vector<Elem> elements() const;

    // Coordinates of a member in the canonical transversal basis.
    std::vector<Int> transversal_coords(const Elem& x) const;

    // Reinterprets a multiplication-closed subgroup as a ring with the given
    // identity. Validated via make_ring.
    FiniteRing as_ring(const Elem& unit, std::string name) const;

private:
    Subgroup(FiniteRing ring, linalg::Mat hnf, Int size);
    FiniteRing ring_{nullptr};
    linalg::Mat hnf_;
    Int size_ = 0;
    std::vector<Int> cofactors_;  // d_i / h_ii, the transversal ranges
};

Subgroup sum(const Subgroup& a, const Subgroup& b);
Subgroup intersect(const Subgroup& a, const Subgroup& b);

// Additive span of pairwise products of generators; for two-sided ideals this
// is the ideal product IJ.
Subgroup product(const Subgroup& a, const Subgroup& b);

enum class Side { left, right, two_sided };

// Smallest additive subgroup containing gens and closed under the requested
// basis multiplications.
Subgroup ideal_closure(const FiniteRing& r, const std::vector<Elem>& gens, Side side);

// Incrementally grown span; keeps the HNF small while absorbing many
// candidate elements (used by scans that collect subgroup members).
class SubgroupBuilder {
public:
    explicit SubgroupBuilder(const FiniteRing& r);
    bool contains(const Elem& x) const;
    void add(const Elem& x);  // no-op when already contained
    Subgroup build() const;

private:
    FiniteRing ring_;
    std::vector<Elem> gens_;
    std::unique_ptr<Subgroup> current_;
};

// Kernel of the additive map A_dom -> Z^n / target_lattice given by the images
// of the domain basis (rows of `images`, width n). `target_rows` must span a
// full-rank lattice in Z^n (callers include the codomain moduli rows).
Subgroup additive_kernel(const FiniteRing& dom, const linalg::Mat& images,
                         const linalg::Mat& target_rows, int n);

}  // namespace ringforge
