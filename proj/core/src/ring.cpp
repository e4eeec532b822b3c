#include "ringforge/ring.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "ringforge/errors.hpp"
#include "ringforge/subgroup.hpp"

namespace ringforge {

Int default_element_cap() {
    static const Int cap = [] {
        if (const char* env = std::getenv("RINGFORGE_CAP_ELEMENTS")) {
            char* end = nullptr;
            long long v = std::strtoll(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<Int>(v);
        }
        return static_cast<Int>(1) << 20;
    }();
    return cap;
}

namespace {

Int mod_reduce(Int v, Int d) {
    v %= d;
    return v < 0 ? v + d : v;
}

}  // namespace

int FiniteRing::dim() const { return static_cast<int>(d_->orders.size()); }
const std::vector<Int>& FiniteRing::orders() const { return d_->orders; }
Int FiniteRing::size() const { return d_->size; }
const std::string& FiniteRing::name() const { return d_->name; }
const Elem& FiniteRing::one() const { return d_->one; }
Elem FiniteRing::zero() const { return Elem(d_->orders.size(), 0); }

FiniteRing FiniteRing::with_name(std::string name) const {
    auto copy = std::make_shared<Data>(*d_);
    copy->name = std::move(name);
    return FiniteRing(copy);
}

Elem FiniteRing::basis(int i) const {
    Elem e = zero();
    e[i] = 1;
    return e;
}

const Elem& FiniteRing::table(int i, int j) const { return d_->mul[i][j]; }

Elem FiniteRing::reduce(Elem x) const {
    for (size_t c = 0; c < x.size(); ++c) x[c] = mod_reduce(x[c], d_->orders[c]);
    return x;
}

Elem FiniteRing::add(const Elem& x, const Elem& y) const {
    Elem out(x.size());
    for (size_t c = 0; c < x.size(); ++c) {
        out[c] = x[c] + y[c];
        if (out[c] >= d_->orders[c]) out[c] -= d_->orders[c];
    }
    return out;
}

Elem FiniteRing::neg(const Elem& x) const {
    Elem out(x.size());
    for (size_t c = 0; c < x.size(); ++c) out[c] = x[c] == 0 ? 0 : d_->orders[c] - x[c];
    return out;
}

Elem FiniteRing::sub(const Elem& x, const Elem& y) const { return add(x, neg(y)); }

Elem FiniteRing::scale(Int c, const Elem& x) const {
    Elem out(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        Int d = d_->orders[i];
        out[i] = mod_reduce(mod_reduce(c, d) * x[i], d);
    }
    return out;
}

Elem FiniteRing::mul(const Elem& x, const Elem& y) const {
    const int k = dim();
    Elem out = zero();
    for (int i = 0; i < k; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < k; ++j) {
            if (y[j] == 0) continue;
            const Elem& t = d_->mul[i][j];
            for (int c = 0; c < k; ++c) {
                if (t[c] == 0) continue;
                Int d = d_->orders[c];
                out[c] = (out[c] + ((x[i] * y[j]) % d) * t[c]) % d;
            }
        }
    }
    return out;
}

bool FiniteRing::is_zero(const Elem& x) const {
    return std::all_of(x.begin(), x.end(), [](Int v) { return v == 0; });
}

Int FiniteRing::additive_order(const Elem& x) const {
    Int ord = 1;
    for (size_t c = 0; c < x.size(); ++c) {
        Int d = d_->orders[c];
        Int o = d / std::gcd(d, x[c] == 0 ? d : x[c]);
        ord = std::lcm(ord, o);
    }
    return ord;
}

bool FiniteRing::is_unit(const Elem& x) const {
    // x y = 1 is solvable iff the additive span of {x b_j} is all of R; the
    // mirror span settles y x = 1.
    const int k = dim();
    std::vector<Elem> right, left;
    right.reserve(k);
    left.reserve(k);
    for (int j = 0; j < k; ++j) {
        right.push_back(mul(x, basis(j)));
        left.push_back(mul(basis(j), x));
    }
    return Subgroup::span(*this, right).size() == size() &&
           Subgroup::span(*this, left).size() == size();
}

Int FiniteRing::index_of(const Elem& x) const {
    Int idx = 0;
    for (int c = 0; c < dim(); ++c) idx += x[c] * d_->strides[c];
    return idx;
}

Elem FiniteRing::element_at(Int index) const {
    Elem x(dim());
    for (int c = 0; c < dim(); ++c) {
        x[c] = index / d_->strides[c];
        index %= d_->strides[c];
    }
    return x;
}

bool FiniteRing::same_ring(const FiniteRing& other) const {
    if (d_ == other.d_) return true;
    return d_->orders == other.d_->orders && d_->one == other.d_->one &&
           d_->mul == other.d_->mul;
}

FiniteRing make_ring(std::vector<Int> orders, Elem one,
                     std::vector<std::vector<Elem>> mul, std::string name) {
    const int k = static_cast<int>(orders.size());
    if (k == 0) throw DimensionMismatch("ring needs at least one basis element");
    for (Int d : orders)
        if (d < 2) throw DimensionMismatch("coordinate orders must be >= 2");
    if (static_cast<int>(one.size()) != k)
        throw DimensionMismatch("identity vector has wrong length");
    if (static_cast<int>(mul.size()) != k)
        throw DimensionMismatch("multiplication table has wrong row count");
    for (auto& row : mul) {
        if (static_cast<int>(row.size()) != k)
            throw DimensionMismatch("multiplication table has wrong column count");
        for (auto& entry : row)
            if (static_cast<int>(entry.size()) != k)
                throw DimensionMismatch("multiplication table entry has wrong length");
    }

    auto data = std::make_shared<FiniteRing::Data>();
    data->orders = std::move(orders);
    data->name = std::move(name);
    data->strides.assign(k, 1);
    for (int c = k - 2; c >= 0; --c)
        data->strides[c] = linalg::checked_mul(data->strides[c + 1], data->orders[c + 1]);
    data->size = linalg::checked_mul(data->strides[0], data->orders[0]);

    auto reduce_into = [&](Elem& e) {
        for (int c = 0; c < k; ++c) e[c] = mod_reduce(e[c], data->orders[c]);
    };
    reduce_into(one);
    data->one = one;
    for (auto& row : mul)
        for (auto& entry : row) reduce_into(entry);
    data->mul = std::move(mul);

    FiniteRing r(data);

    // Structure constants must respect both factors' additive orders:
    // d_i (b_i b_j) = (d_i b_i) b_j = 0 and symmetrically for d_j.
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const Elem& t = data->mul[i][j];
            for (int c = 0; c < k; ++c) {
                if ((data->orders[i] * t[c]) % data->orders[c] != 0)
                    throw OrderMismatch(i, j, "left factor order does not kill the product");
                if ((data->orders[j] * t[c]) % data->orders[c] != 0)
                    throw OrderMismatch(i, j, "right factor order does not kill the product");
            }
        }

    for (int j = 0; j < k; ++j) {
        Elem b = r.basis(j);
        if (r.mul(data->one, b) != b || r.mul(b, data->one) != b) throw NoIdentity(j);
    }

    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l)
                if (r.mul(data->mul[i][j], r.basis(l)) != r.mul(r.basis(i), data->mul[j][l]))
                    throw NotAssociative(i, j, l);

    return r;
}

FiniteRing opposite_ring(const FiniteRing& r) {
    const auto& d = *r.data();
    const int k = r.dim();
    std::vector<std::vector<Elem>> t(k, std::vector<Elem>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) t[i][j] = d.mul[j][i];
    std::string name = d.name;
    if (name.size() >= 3 && name.ends_with("^op"))
        name.resize(name.size() - 3);
    else if (!name.empty())
        name += "^op";
    return make_ring(d.orders, d.one, std::move(t), std::move(name));
}

ElementRange::ElementRange(FiniteRing ring, Int cap) : ring_(std::move(ring)) {
    if (ring_.size() > cap) throw TooLarge("elements", ring_.size(), cap);
}

ElementRange::iterator::iterator(const FiniteRing* r, bool done)
    : ring_(r), current_(r->zero()), done_(done) {}

ElementRange::iterator& ElementRange::iterator::operator++() {
    const auto& orders = ring_->orders();
    int c = static_cast<int>(orders.size()) - 1;
    for (; c >= 0; --c) {
        if (++current_[c] < orders[c]) break;
        current_[c] = 0;
    }
    if (c < 0) done_ = true;
    return *this;
}

ElementRange::iterator ElementRange::begin() const { return iterator(&ring_, false); }
ElementRange::iterator ElementRange::end() const { return iterator(&ring_, true); }

ElementRange enumerate_elements(const FiniteRing& r, Int cap) { return ElementRange(r, cap); }

std::vector<Elem> all_elements(const FiniteRing& r, Int cap) {
    std::vector<Elem> out;
    out.reserve(static_cast<size_t>(r.size()));
    for (const Elem& x : enumerate_elements(r, cap)) out.push_back(x);
    return out;
}

Elem QuotientMap::project(const Elem& x) const {
    const int k = source_.dim();
    Elem out;
    out.reserve(kept_.size());
    for (int j : kept_) {
        Int acc = 0;
        Int d = diag_[j];
        for (int c = 0; c < k; ++c) {
            Int term = ((x[c] % d) * (v_[c][j] % d)) % d;
            acc = (acc + term + d) % d;
        }
        out.push_back(acc);
    }
    return out;
}

Elem QuotientMap::section(const Elem& q) const {
    Elem out = source_.zero();
    for (size_t j = 0; j < kept_.size(); ++j)
        out = source_.add(out, source_.scale(q[j], reps_[j]));
    return out;
}

QuotientMap quotient_ring(const FiniteRing& r, const Subgroup& ideal) {
    if (!ideal.ring().same_ring(r)) throw AmbientMismatch();
    const int k = r.dim();

    // Two-sidedness check with witness.
    for (const Elem& g : ideal.generators())
        for (int i = 0; i < k; ++i) {
            if (!ideal.contains(r.mul(r.basis(i), g)))
                throw NotAnIdeal("b" + std::to_string(i) + " * generator leaves the subgroup");
            if (!ideal.contains(r.mul(g, r.basis(i))))
                throw NotAnIdeal("generator * b" + std::to_string(i) + " leaves the subgroup");
        }

    auto snf = linalg::smith(ideal.canonical());

    QuotientMap qm;
    qm.source_ = r;
    qm.v_ = snf.v;
    qm.diag_ = snf.diag;
    for (int j = 0; j < k; ++j) {
        if (snf.diag[j] < 1) throw InvariantViolation("quotient lattice is rank deficient");
        if (snf.diag[j] >= 2) qm.kept_.push_back(j);
    }
    if (qm.kept_.empty())
        throw DimensionMismatch("quotient by the whole ring is the zero ring");

    std::vector<Int> qorders;
    for (int j : qm.kept_) {
        qorders.push_back(snf.diag[j]);
        qm.reps_.push_back(r.reduce(snf.vinv[j]));
    }

    const int kq = static_cast<int>(qm.kept_.size());
    std::vector<std::vector<Elem>> qmul(kq, std::vector<Elem>(kq));
    for (int a = 0; a < kq; ++a)
        for (int b = 0; b < kq; ++b)
            qmul[a][b] = qm.project(r.mul(qm.reps_[a], qm.reps_[b]));
    Elem qone = qm.project(r.one());

    std::string qname = r.name().empty() ? "" : r.name() + "/I";
    qm.quotient_ = make_ring(std::move(qorders), std::move(qone), std::move(qmul),
                             std::move(qname));
    return qm;
}

}  // namespace ringforge
