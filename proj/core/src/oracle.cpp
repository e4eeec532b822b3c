#include "ringforge/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "ringforge/errors.hpp"

namespace ringforge::oracle {

std::vector<Elem> brute_central_idempotents(const FiniteRing& r, const Caps& caps) {
    if (r.size() > caps.oracle_module)
        throw TooLarge("oracle_module", r.size(), caps.oracle_module);
    std::vector<Elem> out;
    for (const Elem& x : enumerate_elements(r, caps.oracle_module)) {
        if (r.mul(x, x) != x) continue;
        bool central = true;
        for (int i = 0; i < r.dim() && central; ++i)
            central = r.mul(x, r.basis(i)) == r.mul(r.basis(i), x);
        if (central) out.push_back(x);
    }
    return out;
}

namespace {

// Element-index sets with additive/right-multiplicative closure, kept apart
// from the HNF subgroup calculus on purpose.
struct IndexSet {
    std::vector<bool> bits;
    std::vector<Int> members;

    explicit IndexSet(Int universe) : bits(static_cast<size_t>(universe), false) {}
    bool has(Int i) const { return bits[static_cast<size_t>(i)]; }
    void insert(Int i) {
        if (!bits[static_cast<size_t>(i)]) {
            bits[static_cast<size_t>(i)] = true;
            members.push_back(i);
        }
    }
    size_t size() const { return members.size(); }
};

// Expands the set by the cyclic group generated by g: S <- union of S + c*g.
void expand_by_generator(const FiniteRing& r, IndexSet& s, Int g) {
    if (s.has(g)) return;
    std::vector<Int> base = s.members;
    Elem step = r.element_at(g);
    Elem cur = step;
    while (!s.has(r.index_of(cur))) {
        for (Int m : base) s.insert(r.index_of(r.add(r.element_at(m), cur)));
        cur = r.add(cur, step);
    }
}

// Right-ideal closure of seed plus extra generators.
IndexSet right_close(const FiniteRing& r, const IndexSet* seed, std::vector<Int> queue) {
    IndexSet s(r.size());
    s.insert(r.index_of(r.zero()));
    if (seed)
        for (Int m : seed->members) s.insert(m);
    std::deque<Int> work(queue.begin(), queue.end());
    while (!work.empty()) {
        Int g = work.front();
        work.pop_front();
        if (!s.has(g)) expand_by_generator(r, s, g);
        Elem ge = r.element_at(g);
        for (int t = 0; t < r.dim(); ++t) {
            Int p = r.index_of(r.mul(ge, r.basis(t)));
            if (!s.has(p)) {
                expand_by_generator(r, s, p);
                work.push_back(p);
            }
        }
    }
    return s;
}

Subgroup to_subgroup(const FiniteRing& r, const IndexSet& s) {
    std::vector<Elem> gens;
    gens.reserve(s.members.size());
    for (Int m : s.members) gens.push_back(r.element_at(m));
    return Subgroup::span(r, gens);
}

}  // namespace

Subgroup brute_radical(const FiniteRing& r, const Caps& caps) {
    if (r.size() > caps.oracle_module)
        throw TooLarge("oracle_module", r.size(), caps.oracle_module);
    const Int n = r.size();

    // Walk the poset of proper right ideals upward from 0; the states without
    // proper extensions are exactly the maximal right ideals.
    std::set<std::vector<bool>> visited;
    std::vector<std::vector<bool>> maximal;
    std::deque<IndexSet> stack;
    {
        IndexSet zero(n);
        zero.insert(r.index_of(r.zero()));
        stack.push_back(std::move(zero));
    }
    while (!stack.empty()) {
        IndexSet ideal = std::move(stack.back());
        stack.pop_back();
        if (!visited.insert(ideal.bits).second) continue;
        if (visited.size() > 100000)
            throw TooLarge("oracle_module (right ideal lattice)",
                           static_cast<Int>(visited.size()), 100000);
        bool has_proper_extension = false;
        for (Int x = 0; x < n; ++x) {
            if (ideal.has(x)) continue;
            IndexSet bigger = right_close(r, &ideal, {x});
            if (static_cast<Int>(bigger.size()) == n) continue;
            has_proper_extension = true;
            if (!visited.count(bigger.bits)) stack.push_back(std::move(bigger));
        }
        if (!has_proper_extension) maximal.push_back(ideal.bits);
    }
    if (maximal.empty()) throw InvariantViolation("no maximal right ideal found");

    IndexSet inter(n);
    for (Int x = 0; x < n; ++x) {
        bool in_all = true;
        for (const auto& m : maximal)
            if (!m[static_cast<size_t>(x)]) {
                in_all = false;
                break;
            }
        if (in_all) inter.insert(x);
    }
    return to_subgroup(r, inter);
}

Subgroup brute_socle(const FiniteRing& r, const Subgroup& m, const Caps& caps) {
    if (m.size() > caps.oracle_module)
        throw TooLarge("oracle_module", m.size(), caps.oracle_module);
    const Int n = r.size();

    std::set<std::vector<bool>> cyclic;
    m.for_each([&](const Elem& x) {
        if (r.is_zero(x)) return;
        IndexSet sub = right_close(r, nullptr, {r.index_of(x)});
        for (Int mem : sub.members)
            if (!m.contains(r.element_at(mem)))
                throw InvariantViolation("brute_socle: input is not a right module");
        cyclic.insert(sub.bits);
    });

    std::vector<std::vector<bool>> minimal;
    for (const auto& a : cyclic) {
        bool is_min = true;
        for (const auto& b : cyclic) {
            if (a == b) continue;
            bool b_inside_a = true;
            for (Int x = 0; x < n && b_inside_a; ++x)
                if (b[static_cast<size_t>(x)] && !a[static_cast<size_t>(x)]) b_inside_a = false;
            if (b_inside_a) {
                is_min = false;
                break;
            }
        }
        if (is_min) minimal.push_back(a);
    }

    IndexSet socle(n);
    socle.insert(r.index_of(r.zero()));
    for (const auto& sub : minimal)
        for (Int x = 0; x < n; ++x)
            if (sub[static_cast<size_t>(x)]) expand_by_generator(r, socle, x);
    return to_subgroup(r, socle);
}

namespace {

// A simple module eR/eJ as an explicit table module: elements are coset
// indices with an addition table, per-ring-basis action tables, and base-p
// digit coordinates against a chosen group basis.
struct SmallModule {
    Int p = 0;
    int dim = 0;
    Int size = 0;
    std::vector<std::vector<int>> add;     // [a][b]
    std::vector<int> neg;                  // additive inverse
    std::vector<std::vector<int>> act;     // [ring basis][a]
    std::vector<std::vector<int>> coords;  // [a] -> digits, length dim
    std::vector<int> basis;                // element index per digit position
};

SmallModule realize_simple(const SimplesData& data, int cls_id) {
    const FiniteRing& r = data.ring;
    const SimpleClass& cls = data.classes[cls_id];
    Subgroup cover = projective_cover(r, cls.e);
    std::vector<Elem> top_kill;
    for (const Elem& g : data.radical().generators()) top_kill.push_back(r.mul(cls.e, g));
    Subgroup ej = Subgroup::span(r, top_kill);

    std::vector<Elem> cover_elems = cover.elements();
    std::sort(cover_elems.begin(), cover_elems.end());
    std::vector<Elem> reps;
    for (const Elem& x : cover_elems) {
        bool fresh = true;
        for (const Elem& y : reps)
            if (ej.contains(r.sub(x, y))) {
                fresh = false;
                break;
            }
        if (fresh) reps.push_back(x);
    }

    SmallModule s;
    s.size = static_cast<Int>(reps.size());
    if (s.size != cls.simple_size)
        throw InvariantViolation("top of the projective cover has unexpected size");
    s.p = cls.characteristic;

    auto coset_index = [&](const Elem& x) {
        for (size_t a = 0; a < reps.size(); ++a)
            if (ej.contains(r.sub(x, reps[a]))) return static_cast<int>(a);
        throw InvariantViolation("coset representative lookup failed");
    };

    const int count = static_cast<int>(reps.size());
    s.add.assign(count, std::vector<int>(count));
    for (int a = 0; a < count; ++a)
        for (int b = 0; b < count; ++b) s.add[a][b] = coset_index(r.add(reps[a], reps[b]));
    s.neg.assign(count, 0);
    for (int a = 0; a < count; ++a)
        for (int b = 0; b < count; ++b)
            if (s.add[a][b] == 0) s.neg[a] = b;

    s.act.assign(r.dim(), std::vector<int>(count));
    for (int t = 0; t < r.dim(); ++t)
        for (int a = 0; a < count; ++a) s.act[t][a] = coset_index(r.mul(reps[a], r.basis(t)));

    // Elementary abelian check: p * a = 0 for every a.
    for (int a = 0; a < count; ++a) {
        int acc = 0;
        for (Int c = 0; c < s.p; ++c) acc = s.add[acc][a];
        if (acc != 0) throw InvariantViolation("simple module is not elementary abelian");
    }

    // Greedy group basis; every element gets base-p digits over it.
    s.coords.assign(count, {});
    std::vector<bool> spanned(count, false);
    std::vector<int> members{0};
    spanned[0] = true;
    for (int idx = 1; idx < count; ++idx) {
        if (spanned[idx]) continue;
        s.basis.push_back(idx);
        for (int el : members) s.coords[el].push_back(0);
        std::vector<int> old = members;
        int offset = 0;
        for (Int c = 1; c < s.p; ++c) {
            offset = s.add[offset][idx];
            for (int el : old) {
                int ne = s.add[el][offset];
                if (spanned[ne])
                    throw InvariantViolation("module basis construction hit a collision");
                spanned[ne] = true;
                members.push_back(ne);
                s.coords[ne] = s.coords[el];
                s.coords[ne].back() = static_cast<int>(c);
            }
        }
    }
    s.dim = static_cast<int>(s.basis.size());
    if (static_cast<int>(members.size()) != count)
        throw InvariantViolation("module basis does not span");
    return s;
}

}  // namespace

bool brute_ext_nonsplit(const SimplesData& data, int i, int j, const Caps& caps) {
    const FiniteRing& r = data.ring;
    if (r.size() > caps.oracle_ring) throw TooLarge("oracle_ring", r.size(), caps.oracle_ring);
    const SimpleClass& ci = data.classes[i];
    const SimpleClass& cj = data.classes[j];
    if (ci.simple_size * cj.simple_size > caps.oracle_pair)
        throw TooLarge("oracle_pair", ci.simple_size * cj.simple_size, caps.oracle_pair);

    SmallModule S = realize_simple(data, i);  // quotient side
    SmallModule T = realize_simple(data, j);  // submodule side
    const int k = r.dim();
    const int si = static_cast<int>(S.size), sj = static_cast<int>(T.size);
    const int kk = si * sj;

    // |T|^{dim S} Bockstein tuples times |T|^{dim S * k} phi tuples.
    double combos = 1.0;
    for (int t = 0; t < S.dim * (k + 1); ++t) combos *= static_cast<double>(sj);
    if (combos > static_cast<double>(caps.oracle_budget))
        throw TooLarge("oracle_budget", static_cast<Int>(combos), caps.oracle_budget);

    // K = pairs (t, s), index t * si + s; T embeds as s = 0.
    auto kidx = [&](int t, int s) { return t * si + s; };
    const Int scalar_mod = S.p * T.p;  // kills every element of K

    // Peeling order: s = e_m + s_rest with m the least nonzero digit.
    std::vector<int> peel_m(si, -1), peel_rest(si, 0), peel_order;
    {
        std::vector<int> idx(si);
        for (int s = 0; s < si; ++s) idx[s] = s;
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            int sa = 0, sb = 0;
            for (int m = 0; m < S.dim; ++m) {
                sa += S.coords[a][m];
                sb += S.coords[b][m];
            }
            return sa != sb ? sa < sb : a < b;
        });
        for (int s : idx) {
            if (s == 0) continue;
            int m = 0;
            while (S.coords[s][m] == 0) ++m;
            peel_m[s] = m;
            peel_rest[s] = S.add[s][S.neg[S.basis[m]]];
            peel_order.push_back(s);
        }
    }

    std::vector<int> bock(S.dim, 0);  // Bockstein tuple, entries in T
    std::vector<int> beta_tab(static_cast<size_t>(si) * si);
    std::vector<int> addK(static_cast<size_t>(kk) * kk);
    std::vector<int> defect(static_cast<size_t>(k) * si);  // per (b, s)
    std::vector<int> phi_vals(static_cast<size_t>(k) * S.dim, 0);
    std::vector<std::vector<int>> phi(k, std::vector<int>(si));
    std::vector<std::vector<int>> actK(k, std::vector<int>(kk));

    for (;;) {  // over Bockstein tuples
        for (int s1 = 0; s1 < si; ++s1)
            for (int s2 = 0; s2 < si; ++s2) {
                int out = 0;
                for (int m = 0; m < S.dim; ++m) {
                    if (bock[m] == 0) continue;
                    if (S.coords[s1][m] + S.coords[s2][m] >= S.p) out = T.add[out][bock[m]];
                }
                beta_tab[static_cast<size_t>(s1) * si + s2] = out;
            }
        auto beta = [&](int s1, int s2) { return beta_tab[static_cast<size_t>(s1) * si + s2]; };

        for (int t1 = 0; t1 < sj; ++t1)
            for (int s1 = 0; s1 < si; ++s1)
                for (int t2 = 0; t2 < sj; ++t2)
                    for (int s2 = 0; s2 < si; ++s2)
                        addK[static_cast<size_t>(kidx(t1, s1)) * kk + kidx(t2, s2)] =
                            kidx(T.add[T.add[t1][t2]][beta(s1, s2)], S.add[s1][s2]);
        auto kadd = [&](int a, int b) { return addK[static_cast<size_t>(a) * kk + b]; };
        auto kscale = [&](Int c, int a) {
            c %= scalar_mod;
            int out = 0;
            for (Int t = 0; t < c; ++t) out = kadd(out, a);
            return out;
        };

        // defect_b(s) = beta(e_m b, s_rest b) - beta(e_m, s_rest) * b, the
        // additivity correction when peeling s = e_m + s_rest.
        for (int b = 0; b < k; ++b)
            for (int s : peel_order) {
                int em = S.basis[peel_m[s]];
                int sp = peel_rest[s];
                int d1 = beta(S.act[b][em], S.act[b][sp]);
                int d2 = T.act[b][beta(em, sp)];
                defect[static_cast<size_t>(b) * si + s] = T.add[d1][T.neg[d2]];
            }

        std::fill(phi_vals.begin(), phi_vals.end(), 0);
        for (;;) {  // over phi tuples
            for (int b = 0; b < k; ++b) {
                auto& table = phi[b];
                table[0] = 0;
                for (int s : peel_order) {
                    int base = phi_vals[static_cast<size_t>(b) * S.dim + peel_m[s]];
                    table[s] = T.add[T.add[base][table[peel_rest[s]]]]
                                    [defect[static_cast<size_t>(b) * si + s]];
                }
            }
            for (int b = 0; b < k; ++b)
                for (int t = 0; t < sj; ++t)
                    for (int s = 0; s < si; ++s)
                        actK[b][kidx(t, s)] = kidx(T.add[T.act[b][t]][phi[b][s]], S.act[b][s]);

            // Module axioms, cheapest first.
            bool valid = true;
            for (int x = 0; x < kk && valid; ++x) {
                int acc = 0;
                for (int t = 0; t < k; ++t) acc = kadd(acc, kscale(r.one()[t], actK[t][x]));
                valid = acc == x;
            }
            for (int t = 0; t < k && valid; ++t)
                for (int x = 0; x < kk && valid; ++x)
                    valid = kscale(r.orders()[t], actK[t][x]) == 0;
            if (valid) {
                std::vector<int> gens;
                for (int m = 0; m < S.dim; ++m) gens.push_back(kidx(0, S.basis[m]));
                for (int m = 0; m < T.dim; ++m) gens.push_back(kidx(T.basis[m], 0));
                for (int b = 0; b < k && valid; ++b)
                    for (size_t g = 0; g < gens.size() && valid; ++g)
                        for (int x = 0; x < kk && valid; ++x)
                            valid = actK[b][kadd(x, gens[g])] ==
                                    kadd(actK[b][x], actK[b][gens[g]]);
            }
            for (int t = 0; t < k && valid; ++t)
                for (int u = 0; u < k && valid; ++u) {
                    const Elem& w = r.table(t, u);
                    for (int x = 0; x < kk && valid; ++x) {
                        int lhs = actK[u][actK[t][x]];
                        int rhs = 0;
                        for (int v = 0; v < k; ++v)
                            if (w[v] != 0) rhs = kadd(rhs, kscale(w[v], actK[v][x]));
                        valid = lhs == rhs;
                    }
                }

            if (valid) {
                // Split iff some additive complement of T x {0} is act-closed.
                bool split = false;
                std::vector<int> lift(S.dim, 0);
                for (;;) {
                    std::vector<bool> inY(kk, false);
                    std::vector<int> membersY{0};
                    inY[0] = true;
                    for (int m = 0; m < S.dim; ++m) {
                        int g = kidx(lift[m], S.basis[m]);
                        if (inY[g]) continue;
                        std::vector<int> base = membersY;
                        int cur = g;
                        while (!inY[cur]) {
                            for (int mb : base) {
                                int nx = kadd(mb, cur);
                                if (!inY[nx]) {
                                    inY[nx] = true;
                                    membersY.push_back(nx);
                                }
                            }
                            cur = kadd(cur, g);
                        }
                    }
                    bool ok = static_cast<int>(membersY.size()) == si;
                    for (size_t yi = 0; ok && yi < membersY.size(); ++yi) {
                        int y = membersY[yi];
                        if (y != 0 && y % si == 0) ok = false;  // nonzero member of T x {0}
                        for (int b = 0; b < k && ok; ++b) ok = inY[actK[b][y]];
                    }
                    if (ok) {
                        split = true;
                        break;
                    }
                    int m = 0;
                    for (; m < S.dim; ++m) {
                        if (++lift[m] < sj) break;
                        lift[m] = 0;
                    }
                    if (m == S.dim) break;
                }
                if (!split) return true;
            }

            int pos = 0;
            for (; pos < k * S.dim; ++pos) {
                if (++phi_vals[pos] < sj) break;
                phi_vals[pos] = 0;
            }
            if (pos == k * S.dim) break;
        }

        int m = 0;
        for (; m < S.dim; ++m) {
            if (++bock[m] < sj) break;
            bock[m] = 0;
        }
        if (m == S.dim) break;
    }
    return false;
}

}  // namespace ringforge::oracle
