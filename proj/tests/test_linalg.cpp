#include <doctest.h>

#include <random>

#include "ringforge/linalg.hpp"

using namespace ringforge::linalg;

namespace {

Mat with_moduli(Mat rows, const std::vector<Int>& moduli) {
    for (size_t i = 0; i < moduli.size(); ++i) {
        Row r(moduli.size(), 0);
        r[i] = moduli[i];
        rows.push_back(r);
    }
    return rows;
}

}  // namespace

TEST_CASE("hnf is upper triangular with reduced entries and contains its input") {
    std::mt19937 rng(7);
    std::vector<Int> moduli{4, 6, 8, 9};
    for (int trial = 0; trial < 50; ++trial) {
        Mat gens;
        int count = static_cast<int>(rng() % 4);
        for (int g = 0; g < count; ++g) {
            Row row(4);
            for (size_t c = 0; c < 4; ++c)
                row[c] = static_cast<Int>(rng() % moduli[c]);
            gens.push_back(row);
        }
        Mat h = hnf(with_moduli(gens, moduli), 4);
        REQUIRE(h.size() == 4);
        for (int i = 0; i < 4; ++i) {
            CHECK(h[i][i] > 0);
            CHECK(moduli[i] % h[i][i] == 0);  // pivots divide the moduli
            for (int j = 0; j < i; ++j) {
                CHECK(h[i][j] == 0);
                CHECK(h[j][i] >= 0);
                CHECK(h[j][i] < h[i][i]);
            }
        }
        for (const Row& g : gens) CHECK(lattice_contains(h, g));
        for (size_t i = 0; i < moduli.size(); ++i) {
            Row m(4, 0);
            m[i] = moduli[i];
            CHECK(lattice_contains(h, m));
        }
    }
}

TEST_CASE("lattice_coords reconstructs members and rejects non-members") {
    Mat h = hnf(with_moduli({{2, 1, 0}, {0, 0, 4}}, {4, 2, 8}), 3);
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        Row y{static_cast<Int>(rng() % 7) - 3, static_cast<Int>(rng() % 7) - 3,
              static_cast<Int>(rng() % 7) - 3};
        Row x(3, 0);
        for (int i = 0; i < 3; ++i)
            for (int c = 0; c < 3; ++c) x[c] += y[i] * h[i][c];
        auto coords = lattice_coords(h, x);
        REQUIRE(coords.has_value());
        CHECK(*coords == y);
    }
    CHECK(!lattice_contains(h, {1, 0, 0}));
    CHECK(!lattice_contains(h, {0, 1, 0}));
    CHECK(lattice_contains(h, {2, 1, 0}));
}

TEST_CASE("hnf_transform tracks row operations and exposes the left kernel") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        int m = 3 + static_cast<int>(rng() % 4), n = 2 + static_cast<int>(rng() % 3);
        Mat a(m, Row(n));
        for (auto& row : a)
            for (auto& v : row) v = static_cast<Int>(rng() % 11) - 5;
        auto ht = hnf_transform(a, n);
        // u * a == h
        for (int i = 0; i < m; ++i)
            for (int c = 0; c < n; ++c) {
                Int acc = 0;
                for (int t = 0; t < m; ++t) acc += ht.u[i][t] * a[t][c];
                CHECK(acc == ht.h[i][c]);
            }
        // rows past the rank vanish: they are kernel combinations
        for (size_t i = ht.rank; i < ht.h.size(); ++i)
            for (Int v : ht.h[i]) CHECK(v == 0);
    }
}

TEST_CASE("smith diagonalizes with unimodular transforms and a tracked inverse") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        Mat a(n, Row(n));
        for (auto& row : a)
            for (auto& v : row) v = static_cast<Int>(rng() % 9) - 4;
        auto s = smith(a);
        // u * a * v = diag
        Mat ua(n, Row(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int t = 0; t < n; ++t) ua[i][j] += s.u[i][t] * a[t][j];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Int acc = 0;
                for (int t = 0; t < n; ++t) acc += ua[i][t] * s.v[t][j];
                CHECK(acc == (i == j ? s.diag[i] : 0));
            }
        // v * vinv = identity
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Int acc = 0;
                for (int t = 0; t < n; ++t) acc += s.v[i][t] * s.vinv[t][j];
                CHECK(acc == (i == j ? 1 : 0));
            }
    }
}
