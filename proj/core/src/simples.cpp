#include "ringforge/simples.hpp"

#include <algorithm>

#include "ringforge/errors.hpp"

namespace ringforge {

namespace {

// Least m >= 0 with s^m = target; throws when target is not an exact power.
Int isotypic_log(Int target, Int s, const char* what) {
    Int m = 0, acc = 1;
    while (acc < target) {
        acc = linalg::checked_mul(acc, s);
        ++m;
    }
    if (acc != target) throw InvariantViolation(std::string(what) + ": size is not a power of s");
    return m;
}

// Additive span of { e * g : g in gens(sub) } = e * sub for a subgroup.
Subgroup left_multiply(const FiniteRing& r, const Elem& e, const Subgroup& sub) {
    std::vector<Elem> gens;
    for (const Elem& g : sub.generators()) gens.push_back(r.mul(e, g));
    return Subgroup::span(r, gens);
}

}  // namespace

SimplesData simple_classes(const FiniteRing& r, const Caps& caps) {
    SimplesData data;
    data.ring = r;
    Subgroup radical = jacobson_radical(r, caps);
    data.filtration = radical_filtration(r, radical);
    data.to_semisimple = quotient_ring(r, radical);
    if (jacobson_radical(data.to_semisimple.quotient(), caps).size() != 1)
        throw InvariantViolation("semisimple quotient has a nonzero radical");
    data.wedderburn = wedderburn_data(r, data.to_semisimple, caps);
    data.idempotents = primitive_orthogonal_decomposition(r, radical, data.wedderburn, caps);

    const int n = static_cast<int>(data.wedderburn.blocks.size());
    const int k = r.dim();
    for (int j = 0; j < n; ++j) {
        const auto& blk = data.wedderburn.blocks[j];

        // Representative local idempotent: the first decomposition member of
        // this block.
        int rep = -1;
        for (size_t t = 0; t < data.idempotents.idempotents.size(); ++t)
            if (data.idempotents.block_of[t] == j) {
                rep = static_cast<int>(t);
                break;
            }
        if (rep < 0) throw InvariantViolation("block has no local idempotent");

        // Annihilator { a : f_lift * a in J }, the kernel of a |-> f_lift a
        // into R/J.
        linalg::Mat images(k);
        for (int i = 0; i < k; ++i) images[i] = r.mul(blk.f_lift, r.basis(i));
        Subgroup annihilator = additive_kernel(r, images, data.radical().canonical(), k);
        if (linalg::checked_mul(annihilator.size(), blk.block_size) != r.size())
            throw InvariantViolation("annihilator index disagrees with the block size");

        data.classes.push_back({j, blk.f, blk.f_lift, data.idempotents.idempotents[rep],
                                blk.block_size, blk.simple_size, blk.multiplicity,
                                blk.endo_order, blk.characteristic, std::move(annihilator)});
    }
    return data;
}

bool ext_nonzero(const SimplesData& data, const Elem& e_i, const Elem& f_lift_j) {
    const FiniteRing& r = data.ring;
    const Subgroup& j1 = data.filtration.power(1);
    const Subgroup& j2 = data.filtration.power(2);
    Subgroup ei_j2 = left_multiply(r, e_i, j2);
    for (const Elem& g : j1.generators()) {
        Elem v = r.mul(r.mul(e_i, g), f_lift_j);
        if (!ei_j2.contains(v)) return true;
    }
    return false;
}

bool ext_nonzero(const SimplesData& data, int i, int j) {
    return ext_nonzero(data, data.classes[i].e, data.classes[j].f_lift);
}

Int ext_multiplicity(const SimplesData& data, const Elem& e_i, const Elem& f_lift_j, Int s_j) {
    const FiniteRing& r = data.ring;
    const Subgroup& j1 = data.filtration.power(1);
    const Subgroup& j2 = data.filtration.power(2);
    Subgroup ei_j2 = left_multiply(r, e_i, j2);
    std::vector<Elem> gens;
    for (const Elem& g : j1.generators()) gens.push_back(r.mul(r.mul(e_i, g), f_lift_j));
    for (const Elem& g : ei_j2.generators()) gens.push_back(g);
    Subgroup total = Subgroup::span(r, gens);
    if (total.size() % ei_j2.size() != 0)
        throw InvariantViolation("ext multiplicity: layer sizes do not divide");
    return isotypic_log(total.size() / ei_j2.size(), s_j, "ext multiplicity");
}

Int ext_multiplicity(const SimplesData& data, int i, int j) {
    return ext_multiplicity(data, data.classes[i].e, data.classes[j].f_lift,
                            data.classes[j].simple_size);
}

std::vector<int> match_classes_via_blocks(const SimplesData& data, const SimplesData& other) {
    const int n = static_cast<int>(data.classes.size());
    if (static_cast<int>(other.classes.size()) != n)
        throw InvariantViolation("class match: different class counts");
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (used[b]) continue;
            if (other.classes[a].f == data.classes[b].f) {
                map[a] = b;
                used[b] = true;
                break;
            }
        }
        if (map[a] < 0)
            throw InvariantViolation("class match: no block correspondence");
    }
    return map;
}

ExtQuiver ext_quiver(const SimplesData& data, QuiverSide side, const Caps& caps) {
    const int n = static_cast<int>(data.classes.size());
    ExtQuiver q;
    q.side = side;
    q.vertex_count = n;
    q.multiplicity.assign(n, std::vector<Int>(n, 0));
    if (side == QuiverSide::right) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) q.multiplicity[i][j] = ext_multiplicity(data, i, j);
        return q;
    }
    // Left quiver: compute the right quiver of the opposite ring and carry
    // vertices across the shared R/J blocks.
    SimplesData op = simple_classes(opposite_ring(data.ring), caps);
    return ext_quiver_left(data, op);
}

ExtQuiver ext_quiver_left(const SimplesData& data, const SimplesData& op_data) {
    const int n = static_cast<int>(data.classes.size());
    ExtQuiver q;
    q.side = QuiverSide::left;
    q.vertex_count = n;
    q.multiplicity.assign(n, std::vector<Int>(n, 0));
    std::vector<int> to_ours = match_classes_via_blocks(data, op_data);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            q.multiplicity[to_ours[a]][to_ours[b]] = ext_multiplicity(op_data, a, b);
    return q;
}

CompositionTable composition_table(const SimplesData& data) {
    const FiniteRing& r = data.ring;
    const int n = static_cast<int>(data.classes.size());
    CompositionTable out;
    for (int i = 0; i < n; ++i) {
        const Elem& e = data.classes[i].e;
        std::vector<std::vector<Int>> layers;
        for (int t = 0; t < data.filtration.nilpotency_index; ++t) {
            Subgroup upper = left_multiply(r, e, data.filtration.power(t));
            Subgroup lower = left_multiply(r, e, data.filtration.power(t + 1));
            if (upper.size() == 1) break;  // e J^t vanished: no more layers
            std::vector<Int> mults(n, 0);
            Int layer_size = upper.size() / lower.size();
            Int accounted = 1;
            for (int j = 0; j < n; ++j) {
                // isotypic piece (e J^t f_j + e J^{t+1}) / e J^{t+1}
                std::vector<Elem> gens;
                for (const Elem& g : upper.generators())
                    gens.push_back(r.mul(g, data.classes[j].f_lift));
                for (const Elem& g : lower.generators()) gens.push_back(g);
                Subgroup piece = Subgroup::span(r, gens);
                if (piece.size() % lower.size() != 0)
                    throw InvariantViolation("composition layer: sizes do not divide");
                Int m = isotypic_log(piece.size() / lower.size(),
                                     data.classes[j].simple_size, "composition layer");
                mults[j] = m;
                for (Int c = 0; c < m; ++c)
                    accounted = linalg::checked_mul(accounted, data.classes[j].simple_size);
            }
            if (accounted != layer_size)
                throw InvariantViolation("composition layer: isotypic pieces do not fill the layer");
            layers.push_back(std::move(mults));
        }
        out.layers_per_class.push_back(std::move(layers));
    }
    return out;
}

LinkageGraph linkage_graph(const SimplesData& data, const CompositionTable& table) {
    const int n = static_cast<int>(data.classes.size());
    std::vector<std::vector<bool>> occurs(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (const auto& layer : table.layers_per_class[i])
            for (int j = 0; j < n; ++j)
                if (layer[j] > 0) occurs[i][j] = true;
    LinkageGraph g;
    g.vertex_count = n;
    g.adjacent.assign(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int j = 0; j < n; ++j)
                if (occurs[a][j] && occurs[b][j]) g.adjacent[a][b] = true;
    return g;
}

}  // namespace ringforge
