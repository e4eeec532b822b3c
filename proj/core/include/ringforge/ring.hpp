#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ringforge/caps.hpp"
#include "ringforge/linalg.hpp"

namespace ringforge {

using Int = std::int64_t;

// A ring element: one coordinate per basis element, reduced mod that
// coordinate's additive order.
using Elem = std::vector<Int>;

/**
 * A finite associative unital ring presented by structure constants over the
 * abelian group Z_{d_1} x ... x Z_{d_k}: basis elements b_1..b_k of additive
 * order d_i, a multiplication table mul[i][j] = coordinates of b_i * b_j, and
 * the coordinates of 1. make_ring validates every ring axiom eagerly, so a
 * FiniteRing value is trusted downstream.
 *
 * Immutable after construction; handles share the underlying table and are
 * safe to copy across threads.
 */
class FiniteRing {
public:
    int dim() const;                        // number of basis elements k
    const std::vector<Int>& orders() const; // d_1..d_k
    Int size() const;                       // |R| = prod d_i
    const std::string& name() const;
    FiniteRing with_name(std::string name) const;

    const Elem& one() const;
    Elem zero() const;
    Elem basis(int i) const;
    const Elem& table(int i, int j) const;  // b_i * b_j

    Elem reduce(Elem x) const;              // coordinatewise mod d_i
    Elem add(const Elem& x, const Elem& y) const;
    Elem neg(const Elem& x) const;
    Elem sub(const Elem& x, const Elem& y) const;
    Elem scale(Int c, const Elem& x) const;
    Elem mul(const Elem& x, const Elem& y) const;
    bool is_zero(const Elem& x) const;
    Int additive_order(const Elem& x) const;

    // True iff x has a two-sided inverse: both xR and Rx must be all of R.
    bool is_unit(const Elem& x) const;

    Int index_of(const Elem& x) const;      // rank in lexicographic order
    Elem element_at(Int index) const;

    bool same_ring(const FiniteRing& other) const;

    struct Data;
    const std::shared_ptr<const Data>& data() const { return d_; }
    explicit FiniteRing(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

private:
    std::shared_ptr<const Data> d_;
};

struct FiniteRing::Data {
    std::vector<Int> orders;
    Elem one;
    std::vector<std::vector<Elem>> mul;
    std::string name;
    std::vector<Int> strides;  // lexicographic index strides
    Int size = 1;
};

// Validates and builds a ring. Throws DimensionMismatch, OrderMismatch,
// NotAssociative or NoIdentity with a witness.
FiniteRing make_ring(std::vector<Int> orders, Elem one,
                     std::vector<std::vector<Elem>> mul, std::string name = "");

// Same additive data with the transposed multiplication table. Involution:
// opposite_ring(opposite_ring(r)) has identical data.
FiniteRing opposite_ring(const FiniteRing& r);

// Streams every element exactly once in lexicographic order.
// Throws TooLarge when |R| exceeds the cap.
class ElementRange {
public:
    ElementRange(FiniteRing ring, Int cap);

    class iterator {
    public:
        using value_type = Elem;
        const Elem& operator*() const { return current_; }
        iterator& operator++();
        bool operator!=(const iterator& o) const { return done_ != o.done_; }

    private:
        friend class ElementRange;
        iterator(const FiniteRing* r, bool done);
        const FiniteRing* ring_;
        Elem current_;
        bool done_;
    };

    iterator begin() const;
    iterator end() const;

private:
    FiniteRing ring_;
};

ElementRange enumerate_elements(const FiniteRing& r, Int cap = default_element_cap());
std::vector<Elem> all_elements(const FiniteRing& r, Int cap = default_element_cap());

class Subgroup;  // subgroup.hpp

/**
 * Quotient of a ring by a two-sided ideal, with the projection and a
 * deterministic section (the normal-form coset representative).
 */
class QuotientMap {
public:
    const FiniteRing& quotient() const { return quotient_; }
    const FiniteRing& source() const { return source_; }
    Elem project(const Elem& x) const;
    Elem section(const Elem& q) const;

private:
    friend QuotientMap quotient_ring(const FiniteRing&, const Subgroup&);
    FiniteRing source_{nullptr};
    FiniteRing quotient_{nullptr};
    linalg::Mat v_;             // coordinate change: quotient coords of x from x*v
    std::vector<Int> diag_;     // diagonal orders before dropping trivial ones
    std::vector<int> kept_;     // indices with diag >= 2
    std::vector<Elem> reps_;    // section images of the quotient basis
};

// Throws NotAnIdeal when `ideal` is not two-sided. The projection is a
// surjective ring homomorphism; the quotient is revalidated via make_ring.
QuotientMap quotient_ring(const FiniteRing& r, const Subgroup& ideal);

}  // namespace ringforge
