#include "ringforge/constructors.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "ringforge/errors.hpp"

namespace ringforge {

bool is_prime(Int n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Fixed irreducible polynomials over F_p, ascending coefficients, monic.
const std::map<std::pair<Int, int>, std::vector<Int>>& irreducible_table() {
    static const std::map<std::pair<Int, int>, std::vector<Int>> table = {
        {{2, 2}, {1, 1, 1}},        // x^2 + x + 1
        {{2, 3}, {1, 1, 0, 1}},     // x^3 + x + 1
        {{2, 4}, {1, 1, 0, 0, 1}},  // x^4 + x + 1
        {{3, 2}, {1, 0, 1}},        // x^2 + 1
        {{3, 3}, {1, 2, 0, 1}},     // x^3 + 2x + 1
        {{5, 2}, {2, 0, 1}},        // x^2 + 2
        {{5, 3}, {1, 1, 0, 1}},     // x^3 + x + 1
        {{7, 2}, {1, 0, 1}},        // x^2 + 1
    };
    return table;
}

std::pair<Int, int> factor_prime_power(Int q) {
    if (q < 2) throw ParseError("field order must be >= 2");
    for (Int p = 2; p <= q; ++p) {
        if (!is_prime(p)) continue;
        if (q % p != 0) continue;
        Int v = q;
        int e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        if (v != 1) throw ParseError("field order " + std::to_string(q) + " is not a prime power");
        return {p, e};
    }
    throw ParseError("field order " + std::to_string(q) + " is not a prime power");
}

}  // namespace

GaloisField::GaloisField(Int q) : q_(q) {
    auto [p, e] = factor_prime_power(q);
    p_ = p;
    e_ = e;
    if (e_ == 1) {
        poly_ = {0, 1};
        return;
    }
    auto it = irreducible_table().find({p, e});
    if (it == irreducible_table().end())
        throw ParseError("no built-in irreducible polynomial for GF(" + std::to_string(q) + ")");
    poly_ = it->second;
}

std::vector<Int> GaloisField::digits(Int a) const {
    std::vector<Int> d(e_);
    for (int i = 0; i < e_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

Int GaloisField::add(Int a, Int b) const {
    auto da = digits(a), db = digits(b);
    Int out = 0, scale = 1;
    for (int i = 0; i < e_; ++i) {
        out += ((da[i] + db[i]) % p_) * scale;
        scale *= p_;
    }
    return out;
}

Int GaloisField::mul(Int a, Int b) const {
    auto da = digits(a), db = digits(b);
    std::vector<Int> prod(2 * e_ - 1, 0);
    for (int i = 0; i < e_; ++i)
        for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    // Reduce modulo the monic polynomial.
    for (int d = 2 * e_ - 2; d >= e_; --d) {
        Int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < e_; ++i)
            prod[d - e_ + i] = ((prod[d - e_ + i] - c * poly_[i]) % p_ + p_) % p_;
    }
    Int out = 0, scale = 1;
    for (int i = 0; i < e_; ++i) {
        out += prod[i] * scale;
        scale *= p_;
    }
    return out;
}

Int GaloisField::power_of_x(int s) const {
    Int out = 1;
    for (int i = 0; i < s; ++i) out *= p_;
    return out;
}

FiniteRing zmod(Int n) {
    if (n < 2) throw DimensionMismatch("zmod needs n >= 2");
    return make_ring({n}, {1}, {{{1}}}, "Z" + std::to_string(n));
}

FiniteRing matrix_ring(const FiniteRing& base, int n) {
    if (n < 1) throw DimensionMismatch("matrix_ring needs n >= 1");
    const int k = base.dim();
    const int kk = n * n * k;
    auto pos = [&](int a, int b, int u) { return (a * n + b) * k + u; };

    std::vector<Int> orders(kk);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int u = 0; u < k; ++u) orders[pos(a, b, u)] = base.orders()[u];

    Elem one(kk, 0);
    for (int a = 0; a < n; ++a)
        for (int u = 0; u < k; ++u) one[pos(a, a, u)] = base.one()[u];

    std::vector<std::vector<Elem>> mul(kk, std::vector<Elem>(kk, Elem(kk, 0)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int u = 0; u < k; ++u)
                for (int c = 0; c < n; ++c)
                    for (int d = 0; d < n; ++d)
                        for (int v = 0; v < k; ++v) {
                            if (b != c) continue;  // E_ab * E_cd = 0 unless b == c
                            const Elem& t = base.table(u, v);
                            Elem& entry = mul[pos(a, b, u)][pos(c, d, v)];
                            for (int w = 0; w < k; ++w) entry[pos(a, d, w)] = t[w];
                        }

    std::string name = "M" + std::to_string(n) + "(" +
                       (base.name().empty() ? "?" : base.name()) + ")";
    return make_ring(std::move(orders), std::move(one), std::move(mul), std::move(name));
}

FiniteRing upper_triangular(const FiniteRing& base, int n) {
    if (n < 1) throw DimensionMismatch("upper_triangular needs n >= 1");
    const int k = base.dim();
    std::vector<std::pair<int, int>> cells;
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) cells.emplace_back(a, b);
    const int kk = static_cast<int>(cells.size()) * k;
    auto cell_index = [&](int a, int b) {
        for (size_t i = 0; i < cells.size(); ++i)
            if (cells[i].first == a && cells[i].second == b) return static_cast<int>(i);
        return -1;
    };
    auto pos = [&](int cell, int u) { return cell * k + u; };

    std::vector<Int> orders(kk);
    for (size_t i = 0; i < cells.size(); ++i)
        for (int u = 0; u < k; ++u) orders[pos(static_cast<int>(i), u)] = base.orders()[u];

    Elem one(kk, 0);
    for (int a = 0; a < n; ++a)
        for (int u = 0; u < k; ++u) one[pos(cell_index(a, a), u)] = base.one()[u];

    std::vector<std::vector<Elem>> mul(kk, std::vector<Elem>(kk, Elem(kk, 0)));
    for (size_t i = 0; i < cells.size(); ++i)
        for (size_t j = 0; j < cells.size(); ++j) {
            auto [a, b] = cells[i];
            auto [c, d] = cells[j];
            if (b != c) continue;
            int target = cell_index(a, d);  // a <= b = c <= d, always a cell
            for (int u = 0; u < k; ++u)
                for (int v = 0; v < k; ++v) {
                    const Elem& t = base.table(u, v);
                    Elem& entry = mul[pos(static_cast<int>(i), u)][pos(static_cast<int>(j), v)];
                    for (int w = 0; w < k; ++w) entry[pos(target, w)] = t[w];
                }
        }

    std::string name = "T" + std::to_string(n) + "(" +
                       (base.name().empty() ? "?" : base.name()) + ")";
    return make_ring(std::move(orders), std::move(one), std::move(mul), std::move(name));
}

GroupTable cyclic_group(int n) {
    GroupTable g;
    g.order = n;
    g.identity = 0;
    g.table.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
    return g;
}

namespace {

void validate_group_table(const GroupTable& g) {
    const int n = g.order;
    if (n < 1 || static_cast<int>(g.table.size()) != n)
        throw InvalidGroupTable("table size does not match the declared order");
    for (const auto& row : g.table) {
        if (static_cast<int>(row.size()) != n)
            throw InvalidGroupTable("table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw InvalidGroupTable("table entry out of range");
    }
    if (g.identity < 0 || g.identity >= n) throw InvalidGroupTable("identity index out of range");
    for (int i = 0; i < n; ++i) {
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        for (int j = 0; j < n; ++j) {
            if (seen_row[g.table[i][j]]) throw InvalidGroupTable("row is not a permutation");
            if (seen_col[g.table[j][i]]) throw InvalidGroupTable("column is not a permutation");
            seen_row[g.table[i][j]] = true;
            seen_col[g.table[j][i]] = true;
        }
        if (g.table[g.identity][i] != i || g.table[i][g.identity] != i)
            throw InvalidGroupTable("identity row/column is not trivial");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]])
                    throw InvalidGroupTable("table is not associative");
}

}  // namespace

FiniteRing group_algebra(Int q, const GroupTable& g) {
    validate_group_table(g);
    GaloisField f(q);
    const int e = f.degree();
    const int n = g.order;
    const int kk = n * e;
    auto pos = [&](int gi, int u) { return gi * e + u; };

    std::vector<Int> orders(kk, f.p());
    Elem one(kk, 0);
    one[pos(g.identity, 0)] = 1;

    std::vector<std::vector<Elem>> mul(kk, std::vector<Elem>(kk, Elem(kk, 0)));
    for (int gi = 0; gi < n; ++gi)
        for (int u = 0; u < e; ++u)
            for (int hi = 0; hi < n; ++hi)
                for (int v = 0; v < e; ++v) {
                    Int prod = f.mul(f.power_of_x(u), f.power_of_x(v));
                    auto dig = f.digits(prod);
                    Elem& entry = mul[pos(gi, u)][pos(hi, v)];
                    for (int w = 0; w < e; ++w) entry[pos(g.table[gi][hi], w)] = dig[w];
                }

    std::string name = "F" + std::to_string(q) + "[G" + std::to_string(n) + "]";
    return make_ring(std::move(orders), std::move(one), std::move(mul), std::move(name));
}

namespace {

struct Path {
    int source, target;
    std::vector<int> arrows;
    bool operator<(const Path& o) const {
        if (source != o.source) return source < o.source;
        if (target != o.target) return target < o.target;
        return arrows < o.arrows;
    }
    bool operator==(const Path& o) const {
        return source == o.source && target == o.target && arrows == o.arrows;
    }
};

// A vector over F_q indexed by the paths of one length layer.
using FqRow = std::vector<Int>;

void row_reduce(std::vector<FqRow>& rows, std::vector<int>& pivots, const GaloisField& f) {
    pivots.clear();
    size_t rank = 0;
    const size_t width = rows.empty() ? 0 : rows[0].size();
    for (size_t col = 0; col < width && rank < rows.size(); ++col) {
        size_t sel = rank;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        // normalize pivot to 1
        Int piv = rows[rank][col];
        Int inv = 1;
        for (Int cand = 1; cand < f.q(); ++cand)
            if (f.mul(piv, cand) == 1) {
                inv = cand;
                break;
            }
        for (auto& v : rows[rank]) v = f.mul(v, inv);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            Int c = rows[i][col];
            for (size_t j = 0; j < width; ++j) {
                Int minus = f.mul(c, rows[rank][j]);
                // subtract: a - b = a + (p-1 scalars...) use repeated add of negation
                Int neg = minus;
                if (neg != 0) {
                    // negation in F_q: find additive inverse by digits
                    auto d = f.digits(neg);
                    Int out = 0, scale = 1;
                    for (int t = 0; t < f.degree(); ++t) {
                        out += ((f.p() - d[t]) % f.p()) * scale;
                        scale *= f.p();
                    }
                    neg = out;
                }
                rows[i][j] = f.add(rows[i][j], neg);
            }
        }
        pivots.push_back(static_cast<int>(col));
        ++rank;
    }
    rows.resize(rank);
}

}  // namespace

FiniteRing path_algebra_mod(const QuiverSpec& spec) {
    const int nv = spec.vertex_count;
    if (nv < 1) throw DimensionMismatch("quiver needs at least one vertex");
    for (auto [s, t] : spec.arrows)
        if (s < 0 || s >= nv || t < 0 || t >= nv)
            throw DimensionMismatch("arrow endpoint out of range");
    GaloisField f(spec.field_order);

    const int cutoff = 2 * (nv + static_cast<int>(spec.arrows.size()));

    // Relations, normalized per layer. rad_square_zero = every length-2 path.
    std::vector<std::vector<QuiverSpec::RelationTerm>> relations;
    if (spec.rad_square_zero) {
        for (int a = 0; a < static_cast<int>(spec.arrows.size()); ++a)
            for (int b = 0; b < static_cast<int>(spec.arrows.size()); ++b)
                if (spec.arrows[a].second == spec.arrows[b].first)
                    relations.push_back({{1, {a, b}}});
    } else {
        relations = spec.relations;
        for (const auto& rel : relations) {
            if (rel.empty()) throw NotAdmissible("empty relation");
            int len = static_cast<int>(rel.front().path.size());
            int src = -1, tgt = -1;
            for (const auto& term : rel) {
                if (static_cast<int>(term.path.size()) < 2)
                    throw NotAdmissible("relation path of length < 2 breaks admissibility");
                if (static_cast<int>(term.path.size()) != len)
                    throw NotAdmissible("relation mixes path lengths (unsupported)");
                for (size_t i = 0; i < term.path.size(); ++i) {
                    int a = term.path[i];
                    if (a < 0 || a >= static_cast<int>(spec.arrows.size()))
                        throw NotAdmissible("relation refers to a missing arrow");
                    if (i > 0 && spec.arrows[term.path[i - 1]].second != spec.arrows[a].first)
                        throw NotAdmissible("relation path is not composable");
                }
                int s = spec.arrows[term.path.front()].first;
                int t = spec.arrows[term.path.back()].second;
                if (src < 0) {
                    src = s;
                    tgt = t;
                } else if (s != src || t != tgt) {
                    throw NotAdmissible("relation mixes non-parallel paths (unsupported)");
                }
            }
        }
    }

    // Layered standard-monomial computation.
    std::vector<std::vector<Path>> layers;      // surviving + eliminated paths per length
    std::vector<std::vector<FqRow>> ideal_rows; // reduced ideal layer
    std::vector<std::vector<int>> ideal_pivots;

    std::vector<Path> layer0;
    for (int v = 0; v < nv; ++v) layer0.push_back({v, v, {}});
    layers.push_back(layer0);
    ideal_rows.push_back({});
    ideal_pivots.push_back({});

    std::vector<Path> standard = layer0;  // all trivial paths survive

    for (int len = 1; len <= cutoff; ++len) {
        std::vector<Path> layer;
        for (const Path& p : layers[len - 1])
            for (int a = 0; a < static_cast<int>(spec.arrows.size()); ++a)
                if (p.target == spec.arrows[a].first) {
                    Path np = p;
                    np.arrows.push_back(a);
                    np.target = spec.arrows[a].second;
                    layer.push_back(np);
                }
        std::sort(layer.begin(), layer.end());
        if (layer.empty()) {
            layers.push_back(layer);
            ideal_rows.push_back({});
            ideal_pivots.push_back({});
            break;
        }

        auto path_index = [&](const Path& p) {
            auto it = std::lower_bound(layer.begin(), layer.end(), p);
            if (it == layer.end() || !(*it == p)) return -1;
            return static_cast<int>(it - layer.begin());
        };

        // Ideal layer: u * rel * w over all composable path paddings.
        std::vector<FqRow> rows;
        for (const auto& rel : relations) {
            int rel_len = static_cast<int>(rel.front().path.size());
            if (rel_len > len) continue;
            int rel_src = spec.arrows[rel.front().path.front()].first;
            int rel_tgt = spec.arrows[rel.front().path.back()].second;
            for (int ulen = 0; ulen + rel_len <= len; ++ulen) {
                int wlen = len - rel_len - ulen;
                for (const Path& u : layers[ulen]) {
                    if (u.target != rel_src) continue;
                    for (const Path& w : layers[wlen]) {
                        if (w.source != rel_tgt) continue;
                        FqRow row(layer.size(), 0);
                        bool any = false;
                        for (const auto& term : rel) {
                            Path full = u;
                            for (int a : term.path) full.arrows.push_back(a);
                            for (int a : w.arrows) full.arrows.push_back(a);
                            full.target = w.target;
                            int idx = path_index(full);
                            if (idx < 0)
                                throw InvariantViolation("padded relation path missing from layer");
                            Int c = ((term.coeff % f.q()) + f.q()) % f.q();
                            row[idx] = f.add(row[idx], c);
                            any = any || row[idx] != 0;
                        }
                        if (any) rows.push_back(std::move(row));
                    }
                }
            }
        }
        std::vector<int> pivots;
        row_reduce(rows, pivots, f);

        std::vector<bool> is_pivot(layer.size(), false);
        for (int pcol : pivots) is_pivot[pcol] = true;
        bool survivor_here = false;
        for (size_t i = 0; i < layer.size(); ++i)
            if (!is_pivot[i]) {
                standard.push_back(layer[i]);
                survivor_here = true;
            }

        layers.push_back(layer);
        ideal_rows.push_back(std::move(rows));
        ideal_pivots.push_back(std::move(pivots));

        if (survivor_here && len == cutoff)
            throw NotFiniteDimensional("paths survive past length " + std::to_string(cutoff));
        if (!survivor_here) break;  // longer layers are generated by pivots only
    }

    std::sort(standard.begin(), standard.end(), [](const Path& a, const Path& b) {
        if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
        return a < b;
    });

    // Rewrites a path of any length into standard-monomial coordinates.
    // Returns coefficients over the standard basis.
    auto standard_index = [&](const Path& p) {
        for (size_t i = 0; i < standard.size(); ++i)
            if (standard[i] == p) return static_cast<int>(i);
        return -1;
    };
    auto reduce_path = [&](const Path& p) {
        std::map<int, Int> out;  // standard index -> coeff in F_q
        int len = static_cast<int>(p.arrows.size());
        if (len >= static_cast<int>(layers.size())) return out;  // beyond all layers: zero
        const auto& layer = layers[len];
        const auto& rows = ideal_rows[len];
        const auto& pivots = ideal_pivots[len];
        FqRow vec(layer.size(), 0);
        auto it = std::lower_bound(layer.begin(), layer.end(), p);
        if (it == layer.end() || !(*it == p)) return out;  // non-composable or absent: zero
        vec[it - layer.begin()] = 1;
        // eliminate pivot coordinates
        for (size_t rix = 0; rix < rows.size(); ++rix) {
            int pcol = pivots[rix];
            Int c = vec[pcol];
            if (c == 0) continue;
            for (size_t j = 0; j < vec.size(); ++j) {
                Int minus = f.mul(c, rows[rix][j]);
                auto d = f.digits(minus);
                Int neg = 0, scale = 1;
                for (int t = 0; t < f.degree(); ++t) {
                    neg += ((f.p() - d[t]) % f.p()) * scale;
                    scale *= f.p();
                }
                vec[j] = f.add(vec[j], neg);
            }
        }
        for (size_t j = 0; j < vec.size(); ++j)
            if (vec[j] != 0) {
                int six = standard_index(layer[j]);
                if (six < 0) throw InvariantViolation("non-pivot path missing from basis");
                out[six] = vec[j];
            }
        return out;
    };

    // Ring basis = standard monomial x field power.
    const int e = f.degree();
    const int kk = static_cast<int>(standard.size()) * e;
    auto pos = [&](int m, int u) { return m * e + u; };

    std::vector<Int> orders(kk, f.p());
    Elem one(kk, 0);
    for (size_t m = 0; m < standard.size(); ++m)
        if (standard[m].arrows.empty()) one[pos(static_cast<int>(m), 0)] = 1;

    std::vector<std::vector<Elem>> mul(kk, std::vector<Elem>(kk, Elem(kk, 0)));
    for (size_t m1 = 0; m1 < standard.size(); ++m1)
        for (size_t m2 = 0; m2 < standard.size(); ++m2) {
            const Path& a = standard[m1];
            const Path& b = standard[m2];
            if (a.target != b.source) continue;
            Path concat = a;
            for (int arrow : b.arrows) concat.arrows.push_back(arrow);
            concat.target = b.target;
            auto reduced = reduce_path(concat);
            if (reduced.empty()) continue;
            for (int u = 0; u < e; ++u)
                for (int v = 0; v < e; ++v) {
                    Int fp = f.mul(f.power_of_x(u), f.power_of_x(v));
                    Elem& entry = mul[pos(static_cast<int>(m1), u)][pos(static_cast<int>(m2), v)];
                    for (auto [six, coeff] : reduced) {
                        Int total = f.mul(fp, coeff);
                        auto dig = f.digits(total);
                        for (int w = 0; w < e; ++w)
                            entry[pos(six, w)] = (entry[pos(six, w)] + dig[w]) % f.p();
                    }
                }
        }

    std::string name = "kQ(q=" + std::to_string(spec.field_order) + ",v=" +
                       std::to_string(nv) + ",a=" + std::to_string(spec.arrows.size()) + ")";
    return make_ring(std::move(orders), std::move(one), std::move(mul), std::move(name));
}

FiniteRing direct_product(const FiniteRing& a, const FiniteRing& b) {
    const int ka = a.dim(), kb = b.dim();
    const int kk = ka + kb;
    std::vector<Int> orders(kk);
    for (int i = 0; i < ka; ++i) orders[i] = a.orders()[i];
    for (int i = 0; i < kb; ++i) orders[ka + i] = b.orders()[i];
    Elem one(kk, 0);
    for (int i = 0; i < ka; ++i) one[i] = a.one()[i];
    for (int i = 0; i < kb; ++i) one[ka + i] = b.one()[i];
    std::vector<std::vector<Elem>> mul(kk, std::vector<Elem>(kk, Elem(kk, 0)));
    for (int i = 0; i < ka; ++i)
        for (int j = 0; j < ka; ++j) {
            const Elem& t = a.table(i, j);
            for (int c = 0; c < ka; ++c) mul[i][j][c] = t[c];
        }
    for (int i = 0; i < kb; ++i)
        for (int j = 0; j < kb; ++j) {
            const Elem& t = b.table(i, j);
            for (int c = 0; c < kb; ++c) mul[ka + i][ka + j][ka + c] = t[c];
        }
    std::string name = "(" + (a.name().empty() ? "?" : a.name()) + ")x(" +
                       (b.name().empty() ? "?" : b.name()) + ")";
    return make_ring(std::move(orders), std::move(one), std::move(mul), std::move(name));
}

}  // namespace ringforge
