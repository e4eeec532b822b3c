#include "ringforge/subgroup.hpp"

#include <algorithm>
#include <deque>

#include "ringforge/errors.hpp"

namespace ringforge {

namespace {

linalg::Mat moduli_rows(const FiniteRing& r) {
    const int k = r.dim();
    linalg::Mat rows(k, linalg::Row(k, 0));
    for (int i = 0; i < k; ++i) rows[i][i] = r.orders()[i];
    return rows;
}

}  // namespace

Subgroup::Subgroup(FiniteRing ring, linalg::Mat hnf, Int size)
    : ring_(std::move(ring)), hnf_(std::move(hnf)), size_(size) {
    const int k = ring_.dim();
    cofactors_.resize(k);
    for (int i = 0; i < k; ++i) cofactors_[i] = ring_.orders()[i] / hnf_[i][i];
}

Subgroup Subgroup::span(const FiniteRing& r, const std::vector<Elem>& gens) {
    linalg::Mat rows;
    rows.reserve(gens.size() + r.dim());
    for (const Elem& g : gens) {
        if (static_cast<int>(g.size()) != r.dim())
            throw DimensionMismatch("generator has wrong coordinate length");
        rows.push_back(g);
    }
    for (auto& row : moduli_rows(r)) rows.push_back(std::move(row));
    linalg::Mat h = linalg::hnf(std::move(rows), r.dim());
    Int size = 1;
    for (int i = 0; i < r.dim(); ++i)
        size = linalg::checked_mul(size, r.orders()[i] / h[i][i]);
    return Subgroup(r, std::move(h), size);
}

Subgroup Subgroup::zero(const FiniteRing& r) { return span(r, {}); }

Subgroup Subgroup::whole(const FiniteRing& r) {
    std::vector<Elem> gens;
    for (int i = 0; i < r.dim(); ++i) gens.push_back(r.basis(i));
    return span(r, gens);
}

bool Subgroup::contains(const Elem& x) const { return linalg::lattice_contains(hnf_, x); }

bool Subgroup::subset_of(const Subgroup& other) const {
    if (!ring_.same_ring(other.ring_)) throw AmbientMismatch();
    if (size_ > other.size_) return false;
    for (const auto& row : hnf_)
        if (!other.contains(ring_.reduce(row))) return false;
    return true;
}

bool Subgroup::operator==(const Subgroup& other) const {
    if (!ring_.same_ring(other.ring_)) throw AmbientMismatch();
    return hnf_ == other.hnf_;
}

std::vector<Elem> Subgroup::generators() const {
    std::vector<Elem> out;
    for (int i = 0; i < ring_.dim(); ++i)
        if (cofactors_[i] > 1) out.push_back(ring_.reduce(hnf_[i]));
    return out;
}

void Subgroup::for_each(const std::function<void(const Elem&)>& fn) const {
    const int k = ring_.dim();
    std::vector<Int> t(k, 0);
    Elem current = ring_.zero();
    // Odometer over transversal coefficients; current = sum t_i * row_i.
    std::vector<Elem> rows(k);
    for (int i = 0; i < k; ++i) rows[i] = ring_.reduce(hnf_[i]);
    for (;;) {
        fn(current);
        int c = k - 1;
        for (; c >= 0; --c) {
            if (t[c] + 1 < cofactors_[c]) {
                ++t[c];
                current = ring_.add(current, rows[c]);
                break;
            }
            // roll over: subtract (cofactor-1) copies of row c
            current = ring_.sub(current, ring_.scale(t[c], rows[c]));
            t[c] = 0;
        }
        if (c < 0) return;
    }
}

std::vector<Elem> Subgroup::elements() const {
    std::vector<Elem> out;
    out.reserve(static_cast<size_t>(size_));
    for_each([&](const Elem& x) { out.push_back(x); });
    return out;
}

std::vector<Int> Subgroup::transversal_coords(const Elem& x) const {
    auto y = linalg::lattice_coords(hnf_, x);
    if (!y) throw InvariantViolation("transversal_coords: element is not a member");
    std::vector<Int> t(ring_.dim());
    for (int i = 0; i < ring_.dim(); ++i) {
        Int n = cofactors_[i];
        t[i] = n == 1 ? 0 : ((*y)[i] % n + n) % n;
    }
    return t;
}

FiniteRing Subgroup::as_ring(const Elem& unit, std::string name) const {
    if (!contains(unit)) throw InvariantViolation("as_ring: unit is not a member");
    std::vector<int> keep;
    std::vector<Elem> rows;
    std::vector<Int> orders;
    for (int i = 0; i < ring_.dim(); ++i)
        if (cofactors_[i] > 1) {
            keep.push_back(i);
            rows.push_back(ring_.reduce(hnf_[i]));
            orders.push_back(cofactors_[i]);
        }
    if (keep.empty()) throw DimensionMismatch("zero subgroup cannot carry a unital ring");
    const int kq = static_cast<int>(keep.size());
    auto project = [&](const Elem& x) {
        auto t = transversal_coords(x);
        Elem out(kq);
        for (int a = 0; a < kq; ++a) out[a] = t[keep[a]];
        return out;
    };
    std::vector<std::vector<Elem>> mul(kq, std::vector<Elem>(kq));
    for (int a = 0; a < kq; ++a)
        for (int b = 0; b < kq; ++b) {
            Elem p = ring_.mul(rows[a], rows[b]);
            if (!contains(p))
                throw InvariantViolation("as_ring: subgroup is not multiplication-closed");
            mul[a][b] = project(p);
        }
    return make_ring(std::move(orders), project(unit), std::move(mul), std::move(name));
}

Subgroup sum(const Subgroup& a, const Subgroup& b) {
    if (!a.ring().same_ring(b.ring())) throw AmbientMismatch();
    std::vector<Elem> gens = a.generators();
    for (auto& g : b.generators()) gens.push_back(std::move(g));
    return Subgroup::span(a.ring(), gens);
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    if (!a.ring().same_ring(b.ring())) throw AmbientMismatch();
    if (a == b) return a;
    const Subgroup& small = a.size() <= b.size() ? a : b;
    const Subgroup& large = a.size() <= b.size() ? b : a;
    SubgroupBuilder builder(a.ring());
    small.for_each([&](const Elem& x) {
        if (large.contains(x)) builder.add(x);
    });
    return builder.build();
}

Subgroup product(const Subgroup& a, const Subgroup& b) {
    if (!a.ring().same_ring(b.ring())) throw AmbientMismatch();
    const FiniteRing& r = a.ring();
    std::vector<Elem> gens;
    for (const Elem& x : a.generators())
        for (const Elem& y : b.generators()) gens.push_back(r.mul(x, y));
    return Subgroup::span(r, gens);
}

Subgroup ideal_closure(const FiniteRing& r, const std::vector<Elem>& gens, Side side) {
    SubgroupBuilder builder(r);
    std::deque<Elem> queue;
    for (const Elem& g : gens) {
        Elem x = r.reduce(g);
        if (!builder.contains(x)) {
            builder.add(x);
            queue.push_back(std::move(x));
        }
    }
    while (!queue.empty()) {
        Elem g = std::move(queue.front());
        queue.pop_front();
        for (int i = 0; i < r.dim(); ++i) {
            std::vector<Elem> next;
            if (side == Side::right || side == Side::two_sided)
                next.push_back(r.mul(g, r.basis(i)));
            if (side == Side::left || side == Side::two_sided)
                next.push_back(r.mul(r.basis(i), g));
            for (auto& x : next)
                if (!builder.contains(x)) {
                    builder.add(x);
                    queue.push_back(std::move(x));
                }
        }
    }
    return builder.build();
}

SubgroupBuilder::SubgroupBuilder(const FiniteRing& r)
    : ring_(r), current_(std::make_unique<Subgroup>(Subgroup::zero(r))) {}

bool SubgroupBuilder::contains(const Elem& x) const { return current_->contains(x); }

void SubgroupBuilder::add(const Elem& x) {
    if (current_->contains(x)) return;
    gens_.push_back(x);
    *current_ = Subgroup::span(ring_, gens_);
}

Subgroup SubgroupBuilder::build() const { return *current_; }

Subgroup additive_kernel(const FiniteRing& dom, const linalg::Mat& images,
                         const linalg::Mat& target_rows, int n) {
    const int k = dom.dim();
    if (static_cast<int>(images.size()) != k)
        throw DimensionMismatch("additive_kernel: one image row per domain basis element");
    linalg::Mat stacked;
    stacked.reserve(images.size() + target_rows.size());
    for (const auto& row : images) stacked.push_back(row);
    for (const auto& row : target_rows) stacked.push_back(row);
    auto ht = linalg::hnf_transform(std::move(stacked), n);
    std::vector<Elem> gens;
    for (size_t i = ht.rank; i < ht.u.size(); ++i) {
        Elem g(k);
        for (int c = 0; c < k; ++c) g[c] = ht.u[i][c];
        gens.push_back(dom.reduce(g));
    }
    return Subgroup::span(dom, gens);
}

}  // namespace ringforge
