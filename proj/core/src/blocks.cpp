#include "ringforge/blocks.hpp"

#include <algorithm>
#include <numeric>

#include "ringforge/errors.hpp"

namespace ringforge {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

Partition canonical_partition(Dsu& dsu, int n) {
    std::vector<std::vector<int>> groups(n);
    for (int i = 0; i < n; ++i) groups[dsu.find(i)].push_back(i);
    Partition out;
    for (auto& g : groups)
        if (!g.empty()) {
            std::sort(g.begin(), g.end());
            out.push_back(std::move(g));
        }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

}  // namespace

std::string partition_to_string(const Partition& p) {
    std::string out = "{";
    for (size_t g = 0; g < p.size(); ++g) {
        out += g ? " {" : "{";
        for (size_t i = 0; i < p[g].size(); ++i)
            out += (i ? "," : "") + std::to_string(p[g][i] + 1);
        out += "}";
    }
    return out + "}";
}

BlockDecomposition block_decomposition(const SimplesData& data, const Caps& caps) {
    const FiniteRing& r = data.ring;
    Subgroup z = center(r);
    auto cents = central_idempotents(r, z, caps);

    BlockDecomposition out;
    Elem total = r.zero();
    for (const auto& c : cents)
        if (c.primitive && !r.is_zero(c.value)) {
            out.idempotents.push_back(c.value);
            total = r.add(total, c.value);
        }
    if (total != r.one())
        throw InvariantViolation("centrally primitive idempotents do not sum to 1");
    for (size_t a = 0; a < out.idempotents.size(); ++a)
        for (size_t b = a + 1; b < out.idempotents.size(); ++b)
            if (!r.is_zero(r.mul(out.idempotents[a], out.idempotents[b])))
                throw InvariantViolation("centrally primitive idempotents are not orthogonal");

    Int size_product = 1;
    for (const Elem& c : out.idempotents) {
        std::vector<Elem> gens;
        for (int i = 0; i < r.dim(); ++i) gens.push_back(r.mul(c, r.basis(i)));
        Int sz = Subgroup::span(r, gens).size();
        out.block_sizes.push_back(sz);
        size_product = linalg::checked_mul(size_product, sz);
    }
    if (size_product != r.size())
        throw InvariantViolation("block sizes do not multiply to |R|");

    // Assign each class to the unique block with f_lift * c_l outside J.
    const Subgroup& radical = data.radical();
    for (const auto& cls : data.classes) {
        int found = -1;
        for (size_t l = 0; l < out.idempotents.size(); ++l)
            if (!radical.contains(r.mul(cls.f_lift, out.idempotents[l]))) {
                if (found >= 0)
                    throw ClassificationAmbiguous("class meets two blocks");
                found = static_cast<int>(l);
            }
        if (found < 0) throw ClassificationAmbiguous("class vanishes in every block");
        out.block_of_class.push_back(found);
    }
    return out;
}

FiniteRing block_ring(const SimplesData& data, const BlockDecomposition& blocks, int l) {
    const FiniteRing& r = data.ring;
    const Elem& c = blocks.idempotents[l];
    std::vector<Elem> gens;
    for (int i = 0; i < r.dim(); ++i) gens.push_back(r.mul(c, r.basis(i)));
    Subgroup sub = Subgroup::span(r, gens);
    std::string name = (r.name().empty() ? std::string("R") : r.name()) + ".block" +
                       std::to_string(l + 1);
    return sub.as_ring(c, name);
}

Partition ext_components(const ExtQuiver& quiver) {
    Dsu dsu(quiver.vertex_count);
    for (int i = 0; i < quiver.vertex_count; ++i)
        for (int j = 0; j < quiver.vertex_count; ++j)
            if (quiver.multiplicity[i][j] > 0) dsu.unite(i, j);
    return canonical_partition(dsu, quiver.vertex_count);
}

Partition partition_from_assignment(const std::vector<int>& block_of, int count) {
    Dsu dsu(count);
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j)
            if (block_of[i] == block_of[j]) dsu.unite(i, j);
    return canonical_partition(dsu, count);
}

Partition linkage_components(const LinkageGraph& graph) {
    Dsu dsu(graph.vertex_count);
    for (int a = 0; a < graph.vertex_count; ++a)
        for (int b = 0; b < graph.vertex_count; ++b)
            if (a != b && graph.adjacent[a][b]) dsu.unite(a, b);
    return canonical_partition(dsu, graph.vertex_count);
}

BlockContext analyze_blocks(const FiniteRing& r, const Caps& caps) {
    BlockContext ctx;
    ctx.data = simple_classes(r, caps);
    ctx.op_data = simple_classes(opposite_ring(r), caps);
    ctx.blocks = block_decomposition(ctx.data, caps);
    ctx.right_quiver = ext_quiver(ctx.data, QuiverSide::right, caps);
    ctx.left_quiver = ext_quiver_left(ctx.data, ctx.op_data);
    ctx.composition = composition_table(ctx.data);
    ctx.linkage = linkage_graph(ctx.data, ctx.composition);
    return ctx;
}

Verdict verify_theorem_main(const BlockContext& ctx) {
    const int n = static_cast<int>(ctx.data.classes.size());
    Partition by_blocks = partition_from_assignment(ctx.blocks.block_of_class, n);
    Partition by_right = ext_components(ctx.right_quiver);
    Partition by_left = ext_components(ctx.left_quiver);
    if (by_blocks != by_right)
        return {false, "blocks " + partition_to_string(by_blocks) + " != right Ext components " +
                           partition_to_string(by_right)};
    if (by_blocks != by_left)
        return {false, "blocks " + partition_to_string(by_blocks) + " != left Ext components " +
                           partition_to_string(by_left)};
    return {};
}

Verdict verify_lemma_equivalences(const BlockContext& ctx, const Caps& caps) {
    const int n = static_cast<int>(ctx.data.classes.size());
    Partition by_blocks = partition_from_assignment(ctx.blocks.block_of_class, n);
    Partition by_ext = ext_components(ctx.right_quiver);
    Partition by_linkage = linkage_components(ctx.linkage);
    if (by_linkage != by_ext)
        return {false, "linkage components " + partition_to_string(by_linkage) +
                           " != Ext components " + partition_to_string(by_ext)};
    if (by_ext != by_blocks)
        return {false, "Ext components " + partition_to_string(by_ext) + " != blocks " +
                           partition_to_string(by_blocks)};

    const Subgroup j2 = ctx.data.filtration.power(2);
    if (j2.size() > 1) {
        // Extensions of simples are identified across R -> R/J^2; all three
        // partitions must survive the quotient under the class correspondence.
        QuotientMap qm = quotient_ring(ctx.data.ring, j2);
        BlockContext qctx = analyze_blocks(qm.quotient(), caps);
        const int qn = static_cast<int>(qctx.data.classes.size());
        if (qn != n)
            return {false, "R/J^2 has " + std::to_string(qn) + " classes, R has " +
                               std::to_string(n)};
        // Match class j of R to the class of R/J^2 with the same primitive
        // central idempotent under the composite projection.
        std::vector<int> to_q(n, -1);
        for (int j = 0; j < n; ++j) {
            Elem image = qctx.data.to_semisimple.project(qm.project(ctx.data.classes[j].f_lift));
            for (int b = 0; b < qn; ++b)
                if (qctx.data.classes[b].f == image) {
                    to_q[j] = b;
                    break;
                }
            if (to_q[j] < 0)
                return {false, "class " + std::to_string(j + 1) +
                                   " has no counterpart over R/J^2"};
        }
        auto relabel = [&](Partition p) {
            for (auto& grp : p)
                for (auto& v : grp) v = to_q[v];
            for (auto& grp : p) std::sort(grp.begin(), grp.end());
            std::sort(p.begin(), p.end(),
                      [](const auto& a, const auto& b) { return a.front() < b.front(); });
            return p;
        };
        Partition q_blocks = partition_from_assignment(qctx.blocks.block_of_class, qn);
        Partition q_ext = ext_components(qctx.right_quiver);
        Partition q_linkage = linkage_components(qctx.linkage);
        if (relabel(by_blocks) != q_blocks)
            return {false, "block partition changes over R/J^2"};
        if (relabel(by_ext) != q_ext)
            return {false, "Ext partition changes over R/J^2"};
        if (relabel(by_linkage) != q_linkage)
            return {false, "linkage partition changes over R/J^2"};
    }
    return {};
}

Verdict verify_char_uniformity(const BlockContext& ctx) {
    const int n = static_cast<int>(ctx.data.classes.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (ctx.blocks.block_of_class[a] == ctx.blocks.block_of_class[b] &&
                ctx.data.classes[a].characteristic != ctx.data.classes[b].characteristic)
                return {false, "classes " + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                                   " share a block but have characteristics " +
                                   std::to_string(ctx.data.classes[a].characteristic) + "," +
                                   std::to_string(ctx.data.classes[b].characteristic)};
    return {};
}

Verdict verify_cardinality_basic(const BlockContext& ctx) {
    const int n = static_cast<int>(ctx.data.classes.size());
    const int m = static_cast<int>(ctx.blocks.idempotents.size());
    for (int l = 0; l < m; ++l) {
        bool all_s_eq_q = true, all_mu_one = true;
        for (int j = 0; j < n; ++j) {
            if (ctx.blocks.block_of_class[j] != l) continue;
            all_s_eq_q = all_s_eq_q &&
                         ctx.data.classes[j].simple_size == ctx.data.classes[j].endo_order;
            all_mu_one = all_mu_one && ctx.data.classes[j].multiplicity == 1;
        }
        if (all_s_eq_q != all_mu_one)
            return {false, "block " + std::to_string(l + 1) + ": (all s = q) is " +
                               (all_s_eq_q ? "true" : "false") + " but (all mu = 1) is " +
                               (all_mu_one ? "true" : "false")};
    }
    return {};
}

Verdict verify_annihilator_lemma(const BlockContext& ctx) {
    const int n = static_cast<int>(ctx.data.classes.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || ctx.right_quiver.multiplicity[i][j] == 0) continue;
            const Subgroup& ann_i = ctx.data.classes[i].annihilator;
            const Subgroup& ann_j = ctx.data.classes[j].annihilator;
            Subgroup prod = product(ann_i, ann_j);
            Subgroup inter = intersect(ann_i, ann_j);
            if (!(prod.size() < inter.size() && prod.subset_of(inter)))
                return {false, "arrow " + std::to_string(i + 1) + "->" + std::to_string(j + 1) +
                                   ": |I J| = " + std::to_string(prod.size()) +
                                   " not strictly below |I cap J| = " +
                                   std::to_string(inter.size())};
        }
    return {};
}

Verdict verify_coprime_char(const BlockContext& ctx) {
    const int n = static_cast<int>(ctx.data.classes.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (ctx.right_quiver.multiplicity[i][j] == 0) continue;
            Int pi = ctx.data.classes[i].characteristic;
            Int pj = ctx.data.classes[j].characteristic;
            if (pi != pj)
                return {false, "arrow " + std::to_string(i + 1) + "->" + std::to_string(j + 1) +
                                   " joins characteristics " + std::to_string(pi) + " and " +
                                   std::to_string(pj)};
        }
    return {};
}

TheoremReport run_theorem_checks(const BlockContext& ctx, const Caps& caps) {
    TheoremReport report;
    report.theorem_main = verify_theorem_main(ctx);
    report.lemma_equivalences = verify_lemma_equivalences(ctx, caps);
    report.char_uniformity = verify_char_uniformity(ctx);
    report.cardinality_basic = verify_cardinality_basic(ctx);
    report.annihilator_lemma = verify_annihilator_lemma(ctx);
    report.coprime_char = verify_coprime_char(ctx);
    return report;
}

}  // namespace ringforge
