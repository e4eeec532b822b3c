#include "ringforge/structure.hpp"

#include <algorithm>
#include <map>

#include "ringforge/constructors.hpp"
#include "ringforge/errors.hpp"

namespace ringforge {

Subgroup jacobson_radical(const FiniteRing& r, const Caps& caps) {
    if (r.size() > caps.structure_scan)
        throw TooLarge("structure_scan", r.size(), caps.structure_scan);
    const int k = r.dim();

    // Unit bitmap over element indices.
    std::vector<bool> unit(static_cast<size_t>(r.size()), false);
    {
        Int idx = 0;
        for (const Elem& x : enumerate_elements(r, caps.structure_scan)) {
            unit[idx++] = r.is_unit(x);
        }
    }

    SubgroupBuilder members(r);
    for (const Elem& x : enumerate_elements(r, caps.structure_scan)) {
        std::vector<Elem> gens;
        gens.reserve(k);
        for (int i = 0; i < k; ++i) gens.push_back(r.mul(r.basis(i), x));
        Subgroup rx = Subgroup::span(r, gens);  // { r*x : r in R }
        if (rx.contains(r.one())) continue;     // w = 1 gives the non-unit 0
        bool in_radical = true;
        rx.for_each([&](const Elem& w) {
            if (!in_radical) return;
            if (!unit[r.index_of(r.sub(r.one(), w))]) in_radical = false;
        });
        if (in_radical) members.add(x);
    }
    Subgroup radical = members.build();

    // The set scanned above is a two-sided ideal; a failure here is a bug.
    for (const Elem& g : radical.generators())
        for (int i = 0; i < k; ++i)
            if (!radical.contains(r.mul(g, r.basis(i))) ||
                !radical.contains(r.mul(r.basis(i), g)))
                throw InvariantViolation("radical scan did not produce a two-sided ideal");
    return radical;
}

const Subgroup& RadicalFiltration::power(int t) const {
    if (t >= static_cast<int>(powers.size())) return powers.back();
    return powers[t];
}

RadicalFiltration radical_filtration(const FiniteRing& r, const Subgroup& radical) {
    RadicalFiltration out;
    out.powers.push_back(Subgroup::whole(r));
    out.powers.push_back(radical);
    while (out.powers.back().size() > 1) {
        Subgroup next = product(out.powers.back(), radical);
        if (next.size() >= out.powers.back().size())
            throw InvariantViolation("radical powers do not strictly decrease");
        out.powers.push_back(std::move(next));
    }
    out.nilpotency_index = static_cast<int>(out.powers.size()) - 1;
    return out;
}

RadicalFiltration radical_filtration(const FiniteRing& r, const Caps& caps) {
    return radical_filtration(r, jacobson_radical(r, caps));
}

Subgroup center(const FiniteRing& r) {
    const int k = r.dim();
    const int n = k * k;  // codomain: one copy of A per basis element
    linalg::Mat images(k, linalg::Row(n, 0));
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i) {
            Elem diff = r.sub(r.mul(r.basis(j), r.basis(i)), r.mul(r.basis(i), r.basis(j)));
            for (int c = 0; c < k; ++c) images[j][i * k + c] = diff[c];
        }
    linalg::Mat target(n, linalg::Row(n, 0));
    for (int i = 0; i < k; ++i)
        for (int c = 0; c < k; ++c) target[i * k + c][i * k + c] = r.orders()[c];
    return additive_kernel(r, images, target, n);
}

std::vector<FlaggedIdempotent> central_idempotents(const FiniteRing& r, const Subgroup& within,
                                                   const Caps& caps) {
    if (!within.ring().same_ring(r)) throw AmbientMismatch();
    if (within.size() > caps.elements) throw TooLarge("elements", within.size(), caps.elements);
    std::vector<Elem> idems;
    within.for_each([&](const Elem& x) {
        if (r.mul(x, x) == x) idems.push_back(x);
    });
    std::sort(idems.begin(), idems.end());

    std::vector<FlaggedIdempotent> out;
    for (const Elem& e : idems) {
        bool primitive = !r.is_zero(e);
        if (primitive)
            for (const Elem& y : idems) {
                if (r.is_zero(y) || y == e) continue;
                Elem z = r.sub(e, y);
                if (r.is_zero(z)) continue;
                if (!std::binary_search(idems.begin(), idems.end(), z)) continue;
                if (r.is_zero(r.mul(y, z)) && r.is_zero(r.mul(z, y))) {
                    primitive = false;
                    break;
                }
            }
        out.push_back({e, primitive});
    }
    return out;
}

QuotientMap semisimple_quotient(const FiniteRing& r, const Caps& caps) {
    Subgroup j = jacobson_radical(r, caps);
    QuotientMap qm = quotient_ring(r, j);
    if (jacobson_radical(qm.quotient(), caps).size() != 1)
        throw InvariantViolation("semisimple quotient has a nonzero radical");
    return qm;
}

namespace {

// Least mu >= 1 with s^mu = target, or 0 when none exists.
Int exact_log(Int target, Int s) {
    if (s < 2) return 0;
    Int acc = 1, mu = 0;
    while (acc < target) {
        acc = linalg::checked_mul(acc, s);
        ++mu;
    }
    return acc == target ? mu : 0;
}

// Integer q with q^mu = s, or 0.
Int exact_root(Int s, Int mu) {
    for (Int q = 2; ; ++q) {
        Int acc = 1;
        for (Int i = 0; i < mu; ++i) {
            acc = linalg::checked_mul(acc, q);
            if (acc > s) return 0;
        }
        if (acc == s) return q;
    }
}

bool is_power_of(Int q, Int p) {
    while (q % p == 0) q /= p;
    return q == 1;
}

}  // namespace

WedderburnData wedderburn_data(const FiniteRing& r, const QuotientMap& to_semisimple,
                               const Caps& caps) {
    if (!to_semisimple.source().same_ring(r)) throw AmbientMismatch();
    const FiniteRing& q = to_semisimple.quotient();
    Subgroup zq = center(q);
    auto cents = central_idempotents(q, zq, caps);

    WedderburnData out;
    Elem sum_check = q.zero();
    for (const auto& fi : cents) {
        if (!fi.primitive || q.is_zero(fi.value)) continue;
        WedderburnBlock blk;
        blk.f = fi.value;
        blk.f_lift = to_semisimple.section(fi.value);
        std::vector<Elem> bgens;
        for (int i = 0; i < q.dim(); ++i) bgens.push_back(q.mul(blk.f, q.basis(i)));
        Subgroup block = Subgroup::span(q, bgens);
        blk.block_size = block.size();
        blk.characteristic = q.additive_order(blk.f);
        if (!is_prime(blk.characteristic))
            throw InvariantViolation("block characteristic is not prime");

        // Minimal right ideal size: right-close every nonzero element, keep
        // the smallest, stop early at the theoretical minimum p.
        Int best = block.size();
        block.for_each([&](const Elem& x) {
            if (q.is_zero(x) || best == blk.characteristic) return;
            std::vector<Elem> gens;
            for (int i = 0; i < q.dim(); ++i) gens.push_back(q.mul(x, q.basis(i)));
            Int sz = Subgroup::span(q, gens).size();
            if (sz < best) best = sz;
        });
        blk.simple_size = best;

        blk.multiplicity = exact_log(blk.block_size, blk.simple_size);
        if (blk.multiplicity == 0)
            throw InvariantViolation("|B| is not a power of the simple module size");
        blk.endo_order = blk.multiplicity == 1 ? blk.simple_size
                                               : exact_root(blk.simple_size, blk.multiplicity);
        if (blk.endo_order == 0 || !is_power_of(blk.endo_order, blk.characteristic))
            throw InvariantViolation("endomorphism field order is not a power of p");

        sum_check = q.add(sum_check, blk.f);
        out.blocks.push_back(std::move(blk));
    }
    if (sum_check != q.one())
        throw InvariantViolation("primitive central idempotents do not sum to 1");
    for (size_t i = 0; i < out.blocks.size(); ++i)
        for (size_t j = i + 1; j < out.blocks.size(); ++j)
            if (!q.is_zero(q.mul(out.blocks[i].f, out.blocks[j].f)))
                throw InvariantViolation("primitive central idempotents are not orthogonal");
    Int product_check = 1;
    for (const auto& blk : out.blocks)
        product_check = linalg::checked_mul(product_check, blk.block_size);
    if (product_check != q.size())
        throw InvariantViolation("block sizes do not multiply to |R/J|");
    return out;
}

Elem idempotent_lift(const FiniteRing& r, const Elem& x, const RadicalFiltration& filtration) {
    const Subgroup& j = filtration.power(1);
    if (!j.contains(r.sub(r.mul(x, x), x))) throw NotIdempotentModJ();
    Elem e = x;
    for (int iter = 0; iter <= filtration.nilpotency_index + 1; ++iter) {
        Elem e2 = r.mul(e, e);
        if (e2 == e) return e;
        Elem e3 = r.mul(e2, e);
        e = r.sub(r.scale(3, e2), r.scale(2, e3));
    }
    throw InvariantViolation("idempotent lift did not converge");
}

namespace {

Subgroup corner_subgroup(const FiniteRing& r, const Elem& f) {
    std::vector<Elem> gens;
    for (int i = 0; i < r.dim(); ++i) gens.push_back(r.mul(r.mul(f, r.basis(i)), f));
    return Subgroup::span(r, gens);
}

// e is local iff the corner ring eRe has no idempotents besides 0 and e.
bool is_local_idempotent(const FiniteRing& r, const Elem& e) {
    Subgroup corner = corner_subgroup(r, e);
    bool local = true;
    corner.for_each([&](const Elem& y) {
        if (!local) return;
        if (r.mul(y, y) == y && !r.is_zero(y) && y != e) local = false;
    });
    return local;
}

}  // namespace

LocalIdempotentSet primitive_orthogonal_decomposition(const FiniteRing& r,
                                                      const Subgroup& radical,
                                                      const WedderburnData& wd,
                                                      const Caps& caps) {
    if (r.size() > caps.structure_scan)
        throw TooLarge("structure_scan", r.size(), caps.structure_scan);

    LocalIdempotentSet out;
    Elem f = r.one();
    while (!r.is_zero(f)) {
        Subgroup corner = corner_subgroup(r, f);
        bool found = false;
        Elem pick;
        // Subgroup enumeration is not lexicographic; collect idempotents and
        // take the least so reports stay reproducible.
        std::vector<Elem> candidates;
        corner.for_each([&](const Elem& x) {
            if (!r.is_zero(x) && r.mul(x, x) == x) candidates.push_back(x);
        });
        std::sort(candidates.begin(), candidates.end());
        for (const Elem& x : candidates)
            if (is_local_idempotent(r, x)) {
                pick = x;
                found = true;
                break;
            }
        if (!found)
            throw InvariantViolation("nonzero corner ring has no local idempotent");
        out.idempotents.push_back(pick);
        f = r.sub(f, pick);
    }

    // Orthogonality and the sum are structural; verify anyway.
    Elem total = r.zero();
    for (const Elem& e : out.idempotents) total = r.add(total, e);
    if (total != r.one())
        throw InvariantViolation("local idempotents do not sum to 1");
    for (size_t i = 0; i < out.idempotents.size(); ++i)
        for (size_t j = 0; j < out.idempotents.size(); ++j)
            if (i != j &&
                !r.is_zero(r.mul(out.idempotents[i], out.idempotents[j])))
                throw InvariantViolation("local idempotents are not orthogonal");

    // Classify by the unique block with e * f_lift outside J.
    std::vector<Int> per_class(wd.blocks.size(), 0);
    for (const Elem& e : out.idempotents) {
        int found_class = -1;
        for (size_t jx = 0; jx < wd.blocks.size(); ++jx)
            if (!radical.contains(r.mul(e, wd.blocks[jx].f_lift))) {
                if (found_class >= 0)
                    throw ClassificationAmbiguous("idempotent meets two Wedderburn blocks");
                found_class = static_cast<int>(jx);
            }
        if (found_class < 0)
            throw ClassificationAmbiguous("idempotent vanishes in every Wedderburn block");
        out.block_of.push_back(found_class);
        ++per_class[found_class];
    }
    for (size_t jx = 0; jx < wd.blocks.size(); ++jx)
        if (per_class[jx] != wd.blocks[jx].multiplicity)
            throw InvariantViolation("class counts disagree with Wedderburn multiplicities");
    return out;
}

Subgroup projective_cover(const FiniteRing& r, const Elem& e) {
    std::vector<Elem> gens;
    for (int i = 0; i < r.dim(); ++i) gens.push_back(r.mul(e, r.basis(i)));
    return Subgroup::span(r, gens);
}

}  // namespace ringforge
