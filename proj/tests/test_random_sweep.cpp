#include <doctest.h>

#include <random>

#include "ringforge/report.hpp"
#include "test_helpers.hpp"

using namespace ringforge;
using namespace rf_test;

namespace {

// Random small building blocks. Quotients by random two-sided ideals produce
// rings no constructor emits directly, which is the point of the sweep.
FiniteRing random_base(std::mt19937& rng) {
    switch (rng() % 5) {
        case 0: {
            Int n = 2 + static_cast<Int>(rng() % 31);
            return zmod(n);
        }
        case 1: {
            Int p = (rng() % 2) ? 2 : 3;
            return upper_triangular(zmod(p), 2);
        }
        case 2: {
            Int q = (rng() % 2) ? 2 : 3;
            int n = 2 + static_cast<int>(rng() % 3);
            return group_algebra(q, cyclic_group(n));
        }
        case 3: {
            QuiverSpec spec;
            spec.vertex_count = 2 + static_cast<int>(rng() % 2);
            spec.field_order = (rng() % 2) ? 2 : 3;
            int arrows = 1 + static_cast<int>(rng() % 3);
            for (int a = 0; a < arrows; ++a)
                spec.arrows.emplace_back(static_cast<int>(rng()) % spec.vertex_count,
                                         static_cast<int>(rng()) % spec.vertex_count);
            return path_algebra_mod(spec);
        }
        default:
            return matrix_ring(zmod((rng() % 2) ? 2 : 3), 2);
    }
}

FiniteRing random_ring(std::mt19937& rng) {
    FiniteRing r = random_base(rng);
    if (rng() % 3 == 0) r = direct_product(r, random_base(rng));
    if (rng() % 2 == 0) {
        // quotient by the two-sided ideal closure of a random element
        Elem seed(r.dim());
        for (int c = 0; c < r.dim(); ++c)
            seed[c] = static_cast<Int>(rng() % r.orders()[c]);
        Subgroup ideal = ideal_closure(r, {seed}, Side::two_sided);
        if (ideal.size() > 1 && ideal.size() < r.size())
            r = quotient_ring(r, ideal).quotient();
    }
    return r;
}

}  // namespace

TEST_CASE("randomized sweep: every derived ring passes all verifiers and oracles") {
    std::mt19937 rng(20240811);
    int analyzed = 0;
    while (analyzed < 25) {
        FiniteRing r = random_ring(rng);
        if (r.size() > 256) continue;
        CAPTURE(r.name());
        CAPTURE(r.size());
        CheckResult res = check_ring(r);
        for (const auto& item : res.items) {
            CAPTURE(item.name);
            CAPTURE(item.witness);
            CHECK(item.pass);
        }
        ++analyzed;
    }
}
